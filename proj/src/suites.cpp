#include <algorithm>
#include <map>

#include "cli_util.hpp"
#include "e6geom/brown.hpp"
#include "e6geom/geometry.hpp"
#include "e6geom/weylcomb.hpp"

namespace e6geom {

using nlohmann::json;
using detail::CheckRunner;
using detail::to_json;

namespace {

using Counterexample = std::optional<json>;

std::string field_tag(const QuadExt& k, Domain dom) { return "F" + std::to_string(k.size(dom)); }

BrownElement random_brown(const QuadExt& k, std::mt19937_64& rng) {
  return {random_element(k, rng), random_albert(k, rng), random_albert(k, rng),
          random_element(k, rng)};
}

Point distinct_point(const QuadExt& k, std::mt19937_64& rng, const Point& other) {
  while (true) {
    Point p = random_point(k, rng);
    if (!(p == other)) return p;
  }
}

// Null classes in P^{n-1}(F_{q^2}) of a Hermitian form of rank r on F_{q^2}^n.
std::uint64_t hermitian_null_classes(std::uint64_t q, unsigned n, unsigned r) {
  auto ipow = [](std::int64_t b, unsigned e) {
    std::int64_t x = 1;
    while (e--) x *= b;
    return x;
  };
  const std::int64_t q2 = ipow(q, 2);
  // Null vectors, zero included, of a nondegenerate form on F_{q^2}^r.
  std::int64_t zeros = 1;
  if (r > 0) {
    const std::int64_t sign = r % 2 ? 1 : -1;
    zeros += (ipow(q, r) + sign) * (ipow(q, r - 1) - sign);
  }
  return static_cast<std::uint64_t>((ipow(q2, n - r) * zeros - 1) / (q2 - 1));
}

// -- octonion ---------------------------------------------------------------

void octonion_suite(CheckRunner& run, const QuadExt& k) {
  for (Domain dom : {Domain::Base, Domain::Extension}) {
    run.property("octonion/norm-multiplicative/" + field_tag(k, dom), "algebra/identities",
                 run.samples(1000), [&](std::mt19937_64& g) -> Counterexample {
                   const Octonion x = random_octonion(k, g, dom), y = random_octonion(k, g, dom);
                   if (norm(x * y) == norm(x) * norm(y)) return std::nullopt;
                   Vector cx(8), cy(8);
                   x.write_coords(cx.data());
                   y.write_coords(cy.data());
                   return json{{"x", to_json(cx)}, {"y", to_json(cy)}};
                 });
  }
  run.property("octonion/alternative", "octonion/composition", run.samples(1000),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Octonion x = random_octonion(k, g), y = random_octonion(k, g);
                 if ((x * x) * y == x * (x * y) && (y * x) * x == y * (x * x)) return std::nullopt;
                 return json{{"law", "alternativity"}};
               });
  run.property("octonion/conjugation-reverses-products", "octonion/composition", run.samples(1000),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Octonion x = random_octonion(k, g), y = random_octonion(k, g);
                 if (conj(x * y) == conj(y) * conj(x)) return std::nullopt;
                 return json{{"law", "conj(xy) = conj(y) conj(x)"}};
               });
  run.run("octonion/non-associative", "octonion/composition", [&](Check& c) {
    std::mt19937_64 g = run.rng(c.name);
    for (c.samples = 1; c.samples <= 1000; ++c.samples) {
      const Octonion x = random_octonion(k, g), y = random_octonion(k, g),
                     z = random_octonion(k, g);
      if (!((x * y) * z == x * (y * z))) return;
    }
    c.status = Status::Fail;
  });
  run.run("octonion/norm-form-split", "octonion/composition", [&](Check& c) {
    const WittDecomposition w = witt_decompose(octonion_norm_form(k, Domain::Base));
    c.samples = 1;
    c.witness = {{"witt_index", w.witt_index}, {"radical_dim", w.radical_dim}};
    c.status = w.witt_index == 4 && w.radical_dim == 0 ? Status::Pass : Status::Fail;
  });
}

// -- albert -----------------------------------------------------------------

void albert_suite(CheckRunner& run, const QuadExt& k) {
  const Scalar two = k.from_int(2);
  for (Domain dom : {Domain::Base, Domain::Extension}) {
    const std::string tag = "/" + field_tag(k, dom);
    const std::uint64_t n = run.samples(1000);
    auto pair = [&](std::mt19937_64& g) {
      return std::make_pair(random_albert(k, g, dom), random_albert(k, g, dom));
    };
    run.property("albert/adjoint-is-norm-gradient" + tag, "algebra/identities", n,
                 [&](std::mt19937_64& g) -> Counterexample {
                   const auto [x, y] = pair(g);
                   if (trace_form(adjoint(x), y) == dnorm(x, y)) return std::nullopt;
                   return json{{"x", to_json(x)}, {"y", to_json(y)}};
                 });
    run.property("albert/adjoint-twice" + tag, "algebra/identities", n,
                 [&](std::mt19937_64& g) -> Counterexample {
                   const AlbertElement x = random_albert(k, g, dom);
                   if (adjoint(adjoint(x)) == norm(x) * x) return std::nullopt;
                   return json{{"x", to_json(x)}};
                 });
    run.property("albert/cross-diagonal" + tag, "algebra/identities", n,
                 [&](std::mt19937_64& g) -> Counterexample {
                   const AlbertElement x = random_albert(k, g, dom);
                   if (cross(x, x) == two * adjoint(x)) return std::nullopt;
                   return json{{"x", to_json(x)}};
                 });
    run.property("albert/cross-trace-symmetric" + tag, "algebra/identities", n,
                 [&](std::mt19937_64& g) -> Counterexample {
                   const auto [x, y] = pair(g);
                   const AlbertElement z = random_albert(k, g, dom);
                   const Scalar t = trace_form(cross(x, y), z);
                   if (cross(x, y) == cross(y, x) && t == trace_form(cross(y, z), x) &&
                       t == trace_form(cross(z, x), y))
                     return std::nullopt;
                   return json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}};
                 });
    run.property("albert/jordan-identity" + tag, "algebra/identities", n,
                 [&](std::mt19937_64& g) -> Counterexample {
                   const auto [x, y] = pair(g);
                   const AlbertElement x2 = jordan_mul(x, x);
                   if (jordan_mul(jordan_mul(x2, y), x) == jordan_mul(x2, jordan_mul(y, x)))
                     return std::nullopt;
                   return json{{"x", to_json(x)}, {"y", to_json(y)}};
                 });
  }

  run.property("albert/rank1-cross-space-dim", "rank1/constants", run.samples(100),
               [&](std::mt19937_64& g) -> Counterexample {
                 const AlbertElement e = sample_rank1(k, g);
                 const std::size_t d = cross_space(e).dim();
                 if (d == 10) return std::nullopt;
                 return json{{"e", to_json(e)}, {"dim", d}};
               });
  run.property("albert/rank1-cross-is-rank-one", "rank1/constants", run.samples(500),
               [&](std::mt19937_64& g) -> Counterexample {
                 const AlbertElement e = sample_rank1(k, g), f = sample_rank1(k, g);
                 if (adjoint(cross(e, f)).is_zero()) return std::nullopt;
                 return json{{"e", to_json(e)}, {"f", to_json(f)}};
               });
  run.property("albert/rank1-cross-space-products", "rank1/constants", run.samples(500),
               [&](std::mt19937_64& g) -> Counterexample {
                 const AlbertElement e = sample_rank1(k, g);
                 const AlbertElement a = random_albert(k, g), b = random_albert(k, g);
                 const AlbertElement c = cross(cross(e, a), cross(e, b));
                 if (Subspace::span(k, AlbertElement::kDim, {e.coords()}).contains(c.coords()))
                   return std::nullopt;
                 return json{{"e", to_json(e)}, {"a", to_json(a)}, {"b", to_json(b)}};
               });
}

// -- brown ------------------------------------------------------------------

void brown_suite(CheckRunner& run, const QuadExt& k) {
  run.property("brown/involution-reverses-products", "brown/structure", run.samples(500),
               [&](std::mt19937_64& g) -> Counterexample {
                 const BrownElement u = random_brown(k, g), v = random_brown(k, g);
                 if (involution(brown_mul(u, v)) == brown_mul(involution(v), involution(u)))
                   return std::nullopt;
                 return json{{"u", to_json(u.coords())}, {"v", to_json(v.coords())}};
               });
  run.property("brown/twist-multiplicative", "brown/structure", run.samples(500),
               [&](std::mt19937_64& g) -> Counterexample {
                 const BrownElement u = random_brown(k, g), v = random_brown(k, g);
                 if (galois_twist(brown_mul(u, v)) == brown_mul(galois_twist(u), galois_twist(v)) &&
                     galois_twist(galois_twist(u)) == u &&
                     galois_twist(involution(u)) == involution(galois_twist(u)))
                   return std::nullopt;
                 return json{{"u", to_json(u.coords())}, {"v", to_json(v.coords())}};
               });
  run.run("brown/skew-space-dimension", "brown/structure", [&](Check& c) {
    const Subspace s = skew_space(k);
    c.samples = 1;
    const bool has_s0 = s.contains(skew_generator(k).coords());
    c.witness = {{"dim", s.dim()}, {"contains_s0", has_s0}};
    c.status = s.dim() == 1 && has_s0 ? Status::Pass : Status::Fail;
  });
  run.run("brown/s0-squared-type", "brown/structure", [&](Check& c) {
    const BrownElement s0 = skew_generator(k);
    const BrownElement sq = brown_mul(s0, s0);
    const Scalar d = k.from_int(k.nonsquare());
    const BrownType t = classify_type(d, Domain::Base);
    c.samples = 1;
    c.witness = {{"s0_squared", d.to_string()}, {"type", t.type}};
    c.status = sq == d * BrownElement::one(k) && t.type == 2 && galois_twist(s0) == s0
                   ? Status::Pass
                   : Status::Fail;
  });
  run.run("brown/fixed-space-dimension", "brown/structure", [&](Check& c) {
    const std::size_t d = fixed_space(k).dim();
    c.samples = 1;
    c.witness = {{"dim", d}};
    c.status = d == BrownElement::kDim ? Status::Pass : Status::Fail;
  });
  run.property("brown/quaternion-subalgebra", "brown/structure", run.samples(100),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Point p = random_point(k, g);
                 Point::checked(p.e());
                 const WittDecomposition w = witt_decompose(quaternion_norm_form(p.quaternion()));
                 if (w.radical_dim == 0) return std::nullopt;
                 return json{{"e", to_json(p.e())}, {"norm_form_radical", w.radical_dim}};
               });
  run.property("brown/pi-block-dimension", "brown/structure", run.samples(50),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Point p = random_point(k, g);
                 const BlockSpace b = pi_block_space(p.quaternion());
                 if (b.rational.dim() == 22 && b.kspace.dim() == 22) return std::nullopt;
                 return json{{"e", to_json(p.e())}, {"dim", b.rational.dim()}};
               });
  run.run("brown/pi-block-closure", "brown/closure", [&](Check& c) {
    std::mt19937_64 g = run.rng(c.name);
    std::map<std::size_t, std::uint64_t> generated, pointwise;
    c.samples = run.samples(5);
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      const Point p = random_point(k, g);
      ++generated[closure_diagnostic(pi_block_space(p.quaternion()).rational).generated_dim];
      ++pointwise[pointwise_product_span(p.quaternion()).dim()];
    }
    json gen = json::object(), pw = json::object();
    for (const auto& [d, n] : generated) gen[std::to_string(d)] = n;
    for (const auto& [d, n] : pointwise) pw[std::to_string(d)] = n;
    c.witness = {{"input_dim", 22}, {"generated_dim_counts", gen}, {"pointwise_span_dim_counts", pw}};
    c.status = Status::Recorded;
  });
}

// -- geometry ---------------------------------------------------------------

void geometry_suite(CheckRunner& run, const QuadExt& k) {
  run.run("geometry/general-pairs", "lines/general-meet", [&](Check& c) {
    std::mt19937_64 g = run.rng(c.name);
    const std::uint64_t n = run.samples(500);
    std::uint64_t with_point = 0, without_point = 0, not_general = 0;
    while (with_point + without_point < n) {
      const Line a = random_line(k, g), b = random_line(k, g);
      if (line_position(a, b) != Position::General) {
        if (++not_general > n) throw StructureError("too many non-general random pairs");
        continue;
      }
      const Subspace w = intersect(a.space(), b.space());
      const std::optional<Point> m = meet(a, b);
      if (!m) {
        const AlbertElement e = AlbertElement::from_coords(w.basis_vector(0));
        if (!trace_form(e, galois(e)).is_zero())
          throw StructureError("meet returned nothing although h != 0");
        ++without_point;
        continue;
      }
      if (!incident(*m, a) || !incident(*m, b) || !w.contains(m->e().coords()))
        throw StructureError("meet is not the unique common point");
      ++with_point;
    }
    c.samples = n;
    c.witness = {{"point", with_point}, {"no_point", without_point}, {"non_general_draws", not_general}};
    c.status = with_point >= 10 && without_point >= 10 ? Status::Pass : Status::Fail;
  });

  run.run("geometry/special-pairs", "lines/special-P4-open", [&](Check& c) {
    std::mt19937_64 g = run.rng(c.name);
    c.samples = run.samples(20);
    const std::uint64_t expected = projective_four_space_size(k);
    if (expected > kEnumerationGuard) throw TooLarge("|P^4(K)| exceeds the enumeration guard");
    json splits = json::array();
    bool ok = true;
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      const auto [a, b] = make_special_pair(k, g);
      const SpecialIntersection s = common_points_special(a, b);
      for (const Vector& v : s.common.basis_vectors())
        ok = ok && adjoint(AlbertElement::from_coords(v)).is_zero();
      ok = ok && s.common.dim() == 5 && s.total_classes == expected &&
           s.isotropic_classes + s.point_classes == expected &&
           s.isotropic_classes == hermitian_null_classes(k.characteristic(), 5, s.hermitian_rank);
      splits.push_back({{"h_zero", s.isotropic_classes},
                        {"points", s.point_classes},
                        {"h_rank", s.hermitian_rank}});
    }
    c.witness = {{"classes", expected}, {"splits", splits}};
    c.status = ok ? Status::Pass : Status::Fail;
  });

  run.property("geometry/line-quadric", "lines/quadric", run.samples(50),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Line l = random_line(k, g);
                 const LineQuadric q = line_quadric(l);
                 const std::size_t dim = q.form().dim();
                 for (int i = 0; i < 100; ++i) {
                   const AlbertElement z = q.sample_isotropic(g);
                   if (z.is_zero() || rank(z) != 1)
                     return json{{"g", to_json(l.g())}, {"zero", to_json(z)}};
                   Vector cv(dim);
                   for (auto& s : cv) s = random_element(k, g);
                   const AlbertElement v = q.element(cv);
                   const Scalar lam = q.lambda(v);
                   if (!(lam == q.form().value_from_gram(cv)) ||
                       lam.is_zero() != (rank(v) <= 1))
                     return json{{"g", to_json(l.g())}, {"v", to_json(v)}};
                 }
                 return std::nullopt;
               });

  run.property("geometry/join-incidence", "lines/join", run.samples(100),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Point a = random_point(k, g), b = distinct_point(k, g, a);
                 if (point_position(a, b) == Position::Special) return std::nullopt;
                 const Line l = join(a, b);
                 if (incident(a, l) && incident(b, l) &&
                     point_line_position(a, l) == Position::Incident)
                   return std::nullopt;
                 return json{{"a", to_json(a.e())}, {"b", to_json(b.e())}};
               });

  run.property("geometry/symmetric-incidence", "lines/incidence", run.samples(200),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Line l = random_line(k, g);
                 const std::vector<Point> on = points_on_line(l, 1, g);
                 const Point p = on.empty() ? random_point(k, g) : on.front();
                 // Also a point that is generically off the line.
                 for (const Point& q : {p, random_point(k, g)}) {
                   if (trace_form(l.g(), galois(l.g())).is_zero()) break;
                   const Point gp = Point::from_generator(l.g());
                   const Line el = Line::from_generator(q.e());
                   if (incident(q, l) != incident(gp, el))
                     return json{{"e", to_json(q.e())}, {"g", to_json(l.g())}};
                 }
                 return std::nullopt;
               });

  run.property("geometry/pi-polarity", "lines/incidence", run.samples(100),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Point p = random_point(k, g);
                 if (!incident(p, Line::from_generator(p.quaternion().sigma_e())))
                   return std::nullopt;
                 return json{{"e", to_json(p.e())}};
               });

  run.property("geometry/point-line-special", "points/positions", run.samples(20),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Line l = random_line(k, g);
                 for (int tries = 0; tries < 10'000; ++tries) {
                   const Point p = random_point(k, g);
                   if (!trace_form(p.e(), l.g()).is_zero()) continue;
                   const Position want = incident(p, l) ? Position::Incident : Position::Special;
                   if (point_line_position(p, l) == want) return std::nullopt;
                   return json{{"e", to_json(p.e())}, {"g", to_json(l.g())}};
                 }
                 return json{{"error", "no point with T(e, g) = 0 found"}};
               });

  run.property("geometry/points-on-line", "lines/quadric", run.samples(10),
               [&](std::mt19937_64& g) -> Counterexample {
                 const Line l = random_line(k, g);
                 const std::vector<Point> pts = points_on_line(l, 50, g);
                 if (pts.size() != 50) return json{{"g", to_json(l.g())}, {"found", pts.size()}};
                 for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
                   const Position pos = point_position(pts[i], pts[i + 1]);
                   const bool special = cross(pts[i].e(), pts[i + 1].e()).is_zero();
                   if ((pos == Position::Special) != special)
                     return json{{"g", to_json(l.g())}, {"index", i}};
                 }
                 return std::nullopt;
               });

  run.run("geometry/chain", "points/chain", [&](Check& c) {
    std::mt19937_64 g = run.rng(c.name);
    c.samples = run.samples(100);
    std::uint64_t ok = 0;
    std::size_t max_trials = 0, total_trials = 0;
    json failures = json::array();
    for (std::uint64_t i = 0; i < c.samples; ++i) {
      const Point a = random_point(k, g), b = distinct_point(k, g, a);
      const std::uint64_t s = g();
      try {
        std::mt19937_64 r1(s), r2(s);
        const Chain ch = chain(a, b, r1, run.config().budget);
        const Chain again = chain(a, b, r2, run.config().budget);
        const bool deterministic = ch.middle == again.middle && ch.first == again.first &&
                                   ch.second == again.second && ch.trials == again.trials;
        const bool certified = incident(ch.start, ch.first) && incident(ch.middle, ch.first) &&
                               incident(ch.middle, ch.second) && incident(ch.end, ch.second);
        const bool distinct = !(ch.start == ch.middle) && !(ch.middle == ch.end) &&
                              !(ch.first == ch.second);
        if (deterministic && certified && distinct) {
          ++ok;
          max_trials = std::max(max_trials, ch.trials);
          total_trials += ch.trials;
        } else {
          failures.push_back({{"pair", i}, {"deterministic", deterministic},
                              {"certified", certified}, {"distinct", distinct}});
        }
      } catch (const BudgetExhausted& e) {
        failures.push_back({{"pair", i}, {"error", e.what()}});
      }
    }
    c.witness = {{"succeeded", ok}, {"max_trials", max_trials}, {"total_trials", total_trials}};
    if (!failures.empty()) c.witness["failures"] = failures;
    c.status = ok == c.samples ? Status::Pass : Status::Fail;
  });
}

// -- weyl -------------------------------------------------------------------

json coset_json(const std::vector<DoubleCoset>& cosets) {
  json out = json::array();
  for (const DoubleCoset& d : cosets)
    out.push_back({{"min_length", d.min_length}, {"size", d.size}, {"minimal_count", d.minimal_count}});
  return out;
}

void weyl_suite(CheckRunner& run) {
  const std::string claim = "weyl/stratification";
  const WeylGroup& w = weyl_e6();
  const RootSystemE6& rs = w.roots();
  run.run("weyl/root-system", claim, [&](Check& c) {
    std::size_t pos = 0;
    int top = 0;
    bool norms = true;
    for (std::size_t r = 0; r < rs.roots.size(); ++r) {
      pos += rs.positive[r];
      top = std::max(top, rs.height(r));
      int sq = 0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) sq += rs.roots[r][i] * rs.cartan[i][j] * rs.roots[r][j];
      norms = norms && sq == 2;
    }
    c.samples = rs.roots.size();
    c.witness = {{"roots", rs.roots.size()}, {"positive", pos}, {"highest_height", top}};
    c.status = rs.roots.size() == 72 && pos == 36 && top == 11 && norms ? Status::Pass : Status::Fail;
  });
  run.run("weyl/group-order", claim, [&](Check& c) {
    json orders = json::array();
    bool coxeter = true;
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) {
        const int m = w.coxeter_order(i, j);
        coxeter = coxeter && m == (rs.cartan[i - 1][j - 1] == -1 ? 3 : 2);
      }
    c.samples = w.order();
    c.witness = {{"order", w.order()}, {"longest_length", w.length(w.longest())}, {"coxeter", coxeter}};
    c.status = w.order() == 51840 && w.length(w.longest()) == 36 && w.length(w.identity()) == 0 &&
                       coxeter
                   ? Status::Pass
                   : Status::Fail;
  });
  const LabelSet p6 = levi_of({6}), p1 = levi_of({1});
  for (const auto& [name, right] : {std::pair{"P6-P6", p6}, std::pair{"P6-P1", p1}}) {
    run.run(std::string("weyl/double-cosets-") + name, claim, [&](Check& c) {
      const std::vector<DoubleCoset> d = double_cosets(w, p6, right);
      bool unique = true;
      std::size_t total = 0;
      for (const DoubleCoset& x : d) {
        unique = unique && x.minimal_count == 1;
        total += x.size;
      }
      c.samples = w.order();
      c.witness = {{"count", d.size()}, {"cosets", coset_json(d)}};
      c.status = d.size() == 3 && unique && total == w.order() ? Status::Pass : Status::Fail;
    });
  }
  const HasseDiagram h = hasse_v6(rs);
  for (int label : {6, 1}) {
    run.run("weyl/hasse-cut-" + std::to_string(label), claim, [&](Check& c) {
      const std::size_t comps = hasse_and_cut(h, label);
      c.samples = h.weights.size();
      c.witness = {{"nodes", h.weights.size()}, {"edges", h.edges.size()}, {"components", comps}};
      c.status = h.weights.size() == 27 && comps == 3 ? Status::Pass : Status::Fail;
    });
  }
  run.run("weyl/poincare-P6", claim, [&](Check& c) {
    const IntPolynomial poin = poincare_polynomial(w, p6);
    c.samples = 1;
    c.witness = {{"polynomial", poin.to_string()}, {"at_1", poin.eval(1)}};
    c.status = poin.degree() == 16 && poin.eval(1) == 27 ? Status::Pass : Status::Fail;
  });
  run.run("weyl/stratification", claim, [&](Check& c) {
    c.samples = 2;
    json ids = json::array();
    for (const IdentityCheck& id : verify_stratification(w)) {
      json cosets = json::array();
      for (const IntPolynomial& p : id.coset_polynomials) cosets.push_back(p.to_string());
      ids.push_back({{"name", id.name}, {"lhs", id.lhs.coeffs()}, {"rhs", id.rhs.coeffs()},
                     {"double_cosets", id.double_coset_count}, {"coset_polynomials", cosets},
                     {"at_1", id.lhs.eval(1)}});
    }
    c.witness = {{"identities", ids}};
  });
}

// -- scope ------------------------------------------------------------------

void scope_suite(CheckRunner& run) {
  const std::pair<const char*, const char*> items[] = {
      {"scope/anisotropic-complement",
       "statements that an open complement has no rational points need anisotropic forms, "
       "which do not exist over finite fields"},
      {"scope/twisted-form-identifications",
       "identifications of point and line moduli with twisted flag varieties are not "
       "modelled as varieties; only rational points are computed"},
      {"scope/torus-commutation",
       "commutation of the tori attached to points and lines is represented by incidence only"},
  };
  for (const auto& [name, reason] : items) {
    run.run(name, "out-of-scope", [&](Check& c) {
      c.status = Status::NotApplicable;
      c.witness = {{"reason", reason}};
    });
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"octonion", "albert", "brown",
                                              "geometry", "weyl",   "scope"};
  return names;
}

std::mt19937_64 check_rng(std::uint64_t seed, std::string_view name) {
  std::uint32_t h = 2166136261u;
  for (char ch : name) h = (h ^ static_cast<unsigned char>(ch)) * 16777619u;
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), h};
  return std::mt19937_64(seq);
}

std::uint64_t projective_four_space_size(const QuadExt& k) {
  const std::uint64_t q = k.size();
  std::uint64_t total = 0, term = 1;
  for (int i = 0; i < 5; ++i, term *= q) total += term;
  return total;
}

Report run_suite(const std::string& suite, const RunConfig& config) {
  Report report("verify", config);
  CheckRunner run(config, report);
  if (suite == "weyl") {
    weyl_suite(run);
  } else if (suite == "scope") {
    scope_suite(run);
  } else {
    validate(config);
    const QuadExt k(config.p, config.d);
    if (suite == "octonion") octonion_suite(run, k);
    else if (suite == "albert") albert_suite(run, k);
    else if (suite == "brown") brown_suite(run, k);
    else if (suite == "geometry") geometry_suite(run, k);
    else throw ConfigError("unknown suite '" + suite + "'");
  }
  return report;
}

}  // namespace e6geom
