#include "e6geom/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>

#include "e6geom/errors.hpp"
#include "e6geom/exactfield.hpp"

namespace e6geom {

using nlohmann::json;

void validate(const RunConfig& config) {
  if (config.p < 5 || config.p > PrimeField::kMaxModulus || !is_prime(config.p))
    throw ConfigError("p = " + std::to_string(config.p) + " is not a prime in [5, " +
                      std::to_string(PrimeField::kMaxModulus) + "]");
  const PrimeField f(config.p);
  const std::uint32_t d = config.d % config.p;
  if (d == 0 || f.is_square(d))
    throw ConfigError("d = " + std::to_string(config.d) + " is a square mod " +
                      std::to_string(config.p));
  if (config.budget == 0) throw ConfigError("budget must be positive");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Recorded: return "recorded";
    case Status::NotApplicable: return "not-applicable";
  }
  return "fail";
}

Status status_from_string(std::string_view s) {
  for (Status st : {Status::Pass, Status::Fail, Status::Recorded, Status::NotApplicable})
    if (to_string(st) == s) return st;
  throw ConfigError("unknown status '" + std::string(s) + "'");
}

void Report::append(const Report& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

void Report::sort() {
  std::stable_sort(checks_.begin(), checks_.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [s](const Check& c) { return c.status == s; }));
}

const Check* Report::find(std::string_view name) const {
  for (const Check& c : checks_)
    if (c.name == name) return &c;
  return nullptr;
}

json Report::to_json() const {
  json checks = json::array();
  for (const Check& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"claim", c.claim},
                      {"status", std::string(to_string(c.status))},
                      {"samples", c.samples},
                      {"witness", c.witness}});
  }
  return {{"schema_version", kSchemaVersion},
          {"command", command_},
          {"config",
           {{"p", config_.p},
            {"d", config_.d},
            {"seed", config_.seed},
            {"trials", config_.trials},
            {"suite", config_.suite},
            {"budget", config_.budget}}},
          {"summary",
           {{"pass", count(Status::Pass)},
            {"fail", count(Status::Fail)},
            {"recorded", count(Status::Recorded)},
            {"not-applicable", count(Status::NotApplicable)}}},
          {"checks", std::move(checks)}};
}

Report Report::from_json(const json& j) {
  try {
    if (j.at("schema_version").get<int>() != kSchemaVersion)
      throw ConfigError("unsupported report schema version");
    RunConfig cfg;
    const json& c = j.at("config");
    cfg.p = c.at("p").get<std::uint32_t>();
    cfg.d = c.at("d").get<std::uint32_t>();
    cfg.seed = c.at("seed").get<std::uint64_t>();
    cfg.trials = c.at("trials").get<std::uint64_t>();
    cfg.suite = c.at("suite").get<std::string>();
    cfg.budget = c.at("budget").get<std::uint64_t>();
    Report r(j.at("command").get<std::string>(), cfg);
    for (const json& e : j.at("checks")) {
      Check ch;
      ch.name = e.at("name").get<std::string>();
      ch.claim = e.at("claim").get<std::string>();
      ch.status = status_from_string(e.at("status").get<std::string>());
      ch.samples = e.at("samples").get<std::uint64_t>();
      ch.witness = e.at("witness");
      r.add(std::move(ch));
    }
    return r;
  } catch (const json::exception& e) {
    throw ConfigError(std::string("malformed report: ") + e.what());
  }
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

void Report::print_table(std::ostream& out) const {
  std::size_t width = 4;
  for (const Check& c : checks_) width = std::max(width, c.name.size());
  for (const Check& c : checks_) {
    out << std::left << std::setw(15) << to_string(c.status) << std::setw(static_cast<int>(width) + 2)
        << c.name << std::right << std::setw(8) << c.samples << std::setw(12) << std::fixed
        << std::setprecision(1) << c.wall_ms << " ms\n";
  }
  out << count(Status::Pass) << " pass, " << count(Status::Fail) << " fail, "
      << count(Status::Recorded) << " recorded, " << count(Status::NotApplicable)
      << " not-applicable\n";
}

}  // namespace e6geom
