#include <doctest.h>

#include <random>
#include <set>

#include "e6geom/errors.hpp"
#include "e6geom/geometry.hpp"

using namespace e6geom;

namespace {

Point pt(const QuadExt& k, int i) { return Point::from_generator(AlbertElement::idempotent(k, i)); }
Line ln(const QuadExt& k, int i) { return Line::from_generator(AlbertElement::idempotent(k, i)); }

// Off-diagonal rank-one element with the null octonion (1, 0; 0, 0) in slot x1.
AlbertElement null_offdiagonal(const QuadExt& k) {
  AlbertElement e = AlbertElement::zero(k);
  e.x[0].a = k.one();
  return e;
}

}  // namespace

TEST_CASE("incidence of the diagonal frame") {
  const QuadExt k(5, 2);
  CHECK(incident(pt(k, 1), ln(k, 2)));
  CHECK(incident(pt(k, 3), ln(k, 2)));
  CHECK_FALSE(incident(pt(k, 1), ln(k, 1)));
  CHECK(point_line_position(pt(k, 1), ln(k, 2)) == Position::Incident);
  CHECK(point_line_position(pt(k, 1), ln(k, 1)) == Position::General);
  CHECK(point_position(pt(k, 1), pt(k, 1)) == Position::Coincide);
  CHECK(point_position(pt(k, 1), pt(k, 2)) == Position::General);
  CHECK(line_position(ln(k, 1), ln(k, 1)) == Position::Coincide);
  CHECK(line_position(ln(k, 1), ln(k, 3)) == Position::General);
  CHECK_THROWS_AS(Line::from_generator(AlbertElement::identity(k)), NotRankOne);
  CHECK(to_string(Position::Special) == "special");
}

TEST_CASE("point and line in special position") {
  const QuadExt k(5, 2);
  // xi2 = 1 with a null x3: rank one, h = T(e)^2 = 1, T(e, E1) = 0.
  AlbertElement e = AlbertElement::idempotent(k, 2);
  e.x[2].a = k.one();
  REQUIRE(rank(e) == 1);
  const Point p = Point::from_generator(e);
  CHECK(p.h() == k.one());
  CHECK_FALSE(incident(p, ln(k, 1)));
  CHECK(point_line_position(p, ln(k, 1)) == Position::Special);
}

TEST_CASE("join and meet") {
  const QuadExt k(5, 2);
  CHECK(join(pt(k, 1), pt(k, 3)) == ln(k, 2));
  CHECK_THROWS_AS(join(pt(k, 1), pt(k, 1)), SpecialPosition);

  const std::optional<Point> m = meet(ln(k, 1), ln(k, 3));
  REQUIRE(m.has_value());
  CHECK(*m == pt(k, 2));
  CHECK(m->h() == k.one());

  const Line iso = Line::from_generator(null_offdiagonal(k));
  CHECK(line_position(ln(k, 1), iso) == Position::General);
  CHECK_FALSE(meet(ln(k, 1), iso).has_value());
  CHECK_THROWS_AS(meet(ln(k, 1), ln(k, 1)), NotGeneralPosition);

  std::mt19937_64 rng(1);
  int met = 0;
  for (int i = 0; i < 100; ++i) {
    const Point a = random_point(k, rng), b = random_point(k, rng);
    if (point_position(a, b) != Position::General) continue;
    const Line l = join(a, b);
    CHECK(incident(a, l));
    CHECK(incident(b, l));
    const Line l2 = random_line(k, rng);
    if (line_position(l, l2) != Position::General) continue;
    if (const std::optional<Point> q = meet(l, l2)) {
      CHECK(incident(*q, l));
      CHECK(incident(*q, l2));
      ++met;
    }
  }
  CHECK(met >= 50);
}

TEST_CASE("line quadric") {
  const QuadExt k(5, 2);
  const LineQuadric q = line_quadric(ln(k, 2));
  CHECK(q.rank() == 10);
  CHECK(q.witt().witt_index == 5);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    Vector c(10);
    for (auto& s : c) s = random_element(k, rng);
    const AlbertElement v = q.element(c);
    // E2 x A = span(E1, E3, x2) and v# = (xi1 xi3 - n(x2)) E2.
    CHECK(v.xi[1].is_zero());
    CHECK(v.x[0].is_zero());
    CHECK(v.x[2].is_zero());
    CHECK(q.lambda(v) == v.xi[0] * v.xi[2] - norm(v.x[1]));
    CHECK(q.form().value(c) == q.lambda(v));
  }
  for (int i = 0; i < 20; ++i) {
    const LineQuadric r = line_quadric(random_line(k, rng));
    CHECK(r.witt().radical_dim == 0);
    const AlbertElement z = r.sample_isotropic(rng);
    CHECK(!z.is_zero());
    CHECK(r.lambda(z).is_zero());
    CHECK(r.line().space().contains(z.coords()));
    CHECK(rank(z) == 1);
  }
  CHECK_THROWS_AS(q.lambda(AlbertElement::identity(k)), StructureError);
}

TEST_CASE("points on a line") {
  const QuadExt k(5, 2);
  std::mt19937_64 rng(3);
  const Line l = random_line(k, rng);
  const std::vector<Point> pts = points_on_line(l, 30, rng);
  CHECK(pts.size() == 30);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    CHECK(incident(pts[i], l));
    for (std::size_t j = i + 1; j < pts.size(); ++j) CHECK_FALSE(pts[i] == pts[j]);
  }
}

TEST_CASE("chains") {
  const QuadExt k(5, 2);
  std::mt19937_64 r1(4), r2(4);
  const Chain a = chain(pt(k, 1), pt(k, 3), r1, 100);
  const Chain b = chain(pt(k, 1), pt(k, 3), r2, 100);
  CHECK(a.middle == b.middle);
  CHECK(a.first == b.first);
  CHECK(a.second == b.second);
  CHECK(incident(a.start, a.first));
  CHECK(incident(a.middle, a.first));
  CHECK(incident(a.middle, a.second));
  CHECK(incident(a.end, a.second));
  CHECK_FALSE(a.first == a.second);
  CHECK_FALSE(a.middle == a.start);
  CHECK_FALSE(a.middle == a.end);
  CHECK_THROWS_AS(chain(pt(k, 1), pt(k, 3), r1, 0), BudgetExhausted);
  CHECK_THROWS_AS(chain(pt(k, 1), pt(k, 1), r1, 10), StructureError);
}

TEST_CASE("lines in special position") {
  const QuadExt k(5, 2);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 5; ++i) {
    const auto [a, b] = make_special_pair(k, rng);
    CHECK(line_position(a, b) == Position::Special);
    CHECK(cross(a.g(), b.g()).is_zero());
    CHECK(intersect(a.space(), b.space()).dim() == 5);
    CHECK_THROWS_AS(meet(a, b), NotGeneralPosition);
  }
  CHECK_THROWS_AS(common_points_special(ln(k, 1), ln(k, 3)), NotSpecialPosition);

  const auto [a, b] = make_special_pair(k, rng);
  std::uint64_t visited = 0, checked = 0;
  const SpecialIntersection s = common_points_special(a, b, [&](const Point& p) {
    if (visited++ % 997 == 0) {
      CHECK(incident(p, a));
      CHECK(incident(p, b));
      ++checked;
    }
  });
  CHECK(s.common.dim() == 5);
  // |P^4(F_25)| = (25^5 - 1) / 24.
  CHECK(s.total_classes == 406901);
  CHECK(s.point_classes + s.isotropic_classes == s.total_classes);
  CHECK(visited == s.point_classes);
  CHECK(s.point_classes > s.isotropic_classes);
  CHECK(checked > 0);
  // Null classes of h: the projectivised radical plus a cone over the null
  // points of a nondegenerate Hermitian form in P^{r-1}(F_25).
  const std::size_t r = s.hermitian_rank;
  REQUIRE(r >= 1);
  REQUIRE(r <= 5);
  const std::int64_t nondeg[] = {0, 0, 6, 126, 3276, 81276};  // (q^r +- 1)(q^{r-1} -+ 1)/(q^2 - 1)
  std::int64_t fibre = 1;
  for (std::size_t i = r; i < 5; ++i) fibre *= 25;
  CHECK(static_cast<std::int64_t>(s.isotropic_classes) == (fibre - 1) / 24 + fibre * nondeg[r]);
}

TEST_CASE("degenerate Hermitian forms on special intersections") {
  const QuadExt k(5, 2);
  // h has rank 5 on most special intersections and never drops below 3.
  std::mt19937_64 rng(5);
  std::set<std::size_t> ranks;
  for (int i = 0; i < 40; ++i) {
    const auto [a, b] = make_special_pair(k, rng);
    const Subspace w = intersect(a.space(), b.space());
    std::vector<Vector> rows;
    for (const Vector& u : w.basis_vectors()) {
      Vector row;
      for (const Vector& v : w.basis_vectors())
        row.push_back(trace_form(AlbertElement::from_coords(u), galois(AlbertElement::from_coords(v))));
      rows.push_back(row);
    }
    ranks.insert(rref_rank(Matrix::from_rows(k, rows, 5)).rank);
  }
  CHECK(ranks.count(5) == 1);
  CHECK(*ranks.begin() >= 3);
}
