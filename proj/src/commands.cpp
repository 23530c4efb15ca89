#include <algorithm>
#include <charconv>
#include <sstream>

#include "cli_util.hpp"
#include "e6geom/geometry.hpp"

namespace e6geom {

using nlohmann::json;
using detail::CheckRunner;
using detail::to_json;

namespace {

std::int64_t parse_int(std::string_view s, const std::string& spec) {
  std::int64_t v = 0;
  const char* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end)
    throw ConfigError("malformed coordinate '" + std::string(s) + "' in point spec '" + spec + "'");
  return v;
}

Scalar parse_scalar(const QuadExt& k, std::string_view s, const std::string& spec) {
  const std::size_t colon = s.find(':');
  if (colon == std::string_view::npos) return k.from_int(parse_int(s, spec));
  return k.from_int(parse_int(s.substr(0, colon), spec)) +
         k.from_int(parse_int(s.substr(colon + 1), spec)) * k.sqrt_d();
}

Point resolve_point(const QuadExt& k, const std::string& spec, std::mt19937_64& rng) {
  const std::optional<AlbertElement> e = parse_point_spec(k, spec);
  if (!e) return random_point(k, rng);
  try {
    return Point::from_generator(*e);
  } catch (const NotRankOne& err) {
    throw ConfigError("point spec '" + spec + "' is not a point: " + err.what());
  } catch (const IsotropicPair& err) {
    throw ConfigError("point spec '" + spec + "' is not a point: " + err.what());
  }
}

json certificate(const Point& p, const Line& l) {
  const std::optional<Vector> c = l.space().coordinates(p.e().coords());
  const std::optional<Vector> sc = l.sigma_space().coordinates(p.quaternion().sigma_e().coords());
  json out{{"incident", c.has_value() && sc.has_value()}};
  if (c) out["coefficients"] = to_json(*c);
  if (sc) out["conjugate_coefficients"] = to_json(*sc);
  return out;
}

}  // namespace

std::optional<AlbertElement> parse_point_spec(const QuadExt& k, const std::string& spec) {
  if (spec == "random") return std::nullopt;
  if (spec == "E1" || spec == "E2" || spec == "E3")
    return AlbertElement::idempotent(k, spec[1] - '0');
  Vector coords;
  std::stringstream in(spec);
  std::string item;
  while (std::getline(in, item, ',')) coords.push_back(parse_scalar(k, item, spec));
  if (coords.size() != AlbertElement::kDim || spec.back() == ',')
    throw ConfigError("point spec '" + spec + "' needs 27 comma-separated entries");
  return AlbertElement::from_coords(coords);
}

Report cmd_verify(const RunConfig& config) {
  validate(config);
  Report report("verify", config);
  if (config.suite == "all") {
    for (const std::string& s : suite_names()) report.append(run_suite(s, config));
  } else {
    const auto& names = suite_names();
    if (std::find(names.begin(), names.end(), config.suite) == names.end())
      throw ConfigError("unknown suite '" + config.suite + "'");
    report.append(run_suite(config.suite, config));
  }
  report.sort();
  return report;
}

Report cmd_chain(const RunConfig& config, const std::string& from, const std::string& to) {
  validate(config);
  const QuadExt k(config.p, config.d);
  Report report("chain", config);
  std::mt19937_64 rng = check_rng(config.seed, "chain");
  const Point start = resolve_point(k, from, rng);
  const Point end = resolve_point(k, to, rng);
  if (start == end) throw ConfigError("chain endpoints coincide");

  CheckRunner run(config, report);
  run.run("chain/construct", "points/chain", [&](Check& c) {
    c.witness = {{"start", to_json(start.e())}, {"end", to_json(end.e())}};
    try {
      const Chain ch = chain(start, end, rng, config.budget);
      c.samples = ch.trials;
      c.witness["middle"] = to_json(ch.middle.e());
      c.witness["first_line"] = to_json(ch.first.g());
      c.witness["second_line"] = to_json(ch.second.g());
      const std::pair<const Point*, const Line*> links[] = {
          {&ch.start, &ch.first}, {&ch.middle, &ch.first}, {&ch.middle, &ch.second},
          {&ch.end, &ch.second}};
      json certs = json::array();
      bool all = true;
      for (const auto& [p, l] : links) {
        certs.push_back(certificate(*p, *l));
        all = all && certs.back()["incident"].get<bool>();
      }
      c.witness["certificates"] = certs;
      c.witness["length"] = 4;
      const bool distinct =
          !(ch.start == ch.middle) && !(ch.middle == ch.end) && !(ch.first == ch.second);
      c.status = all && distinct ? Status::Pass : Status::Fail;
    } catch (const BudgetExhausted& e) {
      c.samples = config.budget;
      c.witness["transcript"] = e.what();
      c.status = Status::Fail;
    }
  });
  report.sort();
  return report;
}

Report cmd_count(const RunConfig& config, const std::string& what) {
  validate(config);
  const QuadExt k(config.p, config.d);
  Report report("count", config);
  CheckRunner run(config, report);
  if (what == "special-intersection") {
    const std::uint64_t total = projective_four_space_size(k);
    if (total > kEnumerationGuard)
      throw TooLarge("|P^4(K)| = " + std::to_string(total) + " exceeds the guard of " +
                     std::to_string(kEnumerationGuard));
    run.run("count/special-intersection", "lines/special-P4-open", [&](Check& c) {
      std::mt19937_64 g = run.rng(c.name);
      c.samples = run.samples(1);
      json pairs = json::array();
      bool ok = true;
      for (std::uint64_t i = 0; i < c.samples; ++i) {
        const auto [a, b] = make_special_pair(k, g);
        const SpecialIntersection s = common_points_special(a, b);
        ok = ok && s.total_classes == total;
        pairs.push_back({{"total", s.total_classes},
                         {"h_zero", s.isotropic_classes},
                         {"points", s.point_classes},
                         {"common_dim", s.common.dim()}});
      }
      c.witness = {{"expected_total", total}, {"pairs", pairs}};
      c.status = ok ? Status::Pass : Status::Fail;
    });
  } else if (what == "line-quadric") {
    run.run("count/line-quadric", "lines/quadric", [&](Check& c) {
      std::mt19937_64 g = run.rng(c.name);
      c.samples = run.samples(10);
      json lines = json::array();
      for (std::uint64_t i = 0; i < c.samples; ++i) {
        const LineQuadric q = line_quadric(random_line(k, g));
        lines.push_back({{"rank", q.rank()},
                         {"radical", q.witt().radical_dim},
                         {"witt_index", q.witt().witt_index}});
      }
      c.witness = {{"lines", lines}};
    });
  } else {
    throw ConfigError("unknown count target '" + what + "'");
  }
  report.sort();
  return report;
}

int exit_code(const Report& report) { return report.passed() ? 0 : 1; }

}  // namespace e6geom
