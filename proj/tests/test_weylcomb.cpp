#include <doctest.h>

#include <set>
#include <vector>

#include "e6geom/errors.hpp"
#include "e6geom/weylcomb.hpp"

using namespace e6geom;

namespace {

// prod_i (1 + q + ... + q^{d_i - 1}) over the fundamental degrees d_i.
IntPolynomial from_degrees(const std::vector<int>& degrees) {
  IntPolynomial out = IntPolynomial::monomial(0);
  for (int d : degrees) out = out * IntPolynomial(std::vector<std::int64_t>(d, 1));
  return out;
}

const std::vector<int> kE6{2, 5, 6, 8, 9, 12};
const std::vector<int> kD5{2, 4, 5, 6, 8};
const std::vector<int> kD4{2, 4, 4, 6};
const std::vector<int> kA4{2, 3, 4, 5};

// |G/P|(q) = prod_G [d]_q / prod_L [d]_q, evaluated exactly at an integer q.
std::int64_t flag_count(const std::vector<int>& levi, std::int64_t q) {
  return from_degrees(kE6).eval(q) / from_degrees(levi).eval(q);
}

std::int64_t pow(std::int64_t q, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= q;
  return r;
}

}  // namespace

TEST_CASE("root system") {
  const RootSystemE6 rs = build_e6();
  CHECK(rs.roots.size() == 72);
  int top = 0, positive = 0;
  for (std::size_t r = 0; r < rs.roots.size(); ++r) {
    top = std::max(top, rs.height(r));
    positive += rs.positive[r];
  }
  CHECK(top == 11);
  CHECK(positive == 36);
  for (int i = 1; i <= 6; ++i) {
    const std::size_t s = rs.simple[i - 1];
    CHECK(rs.height(s) == 1);
    // s_i(alpha_i) = -alpha_i.
    Root neg = rs.roots[s];
    for (int& c : neg) c = -c;
    CHECK(rs.reflect(i, rs.roots[s]) == neg);
  }
  CHECK(levi_of({6}) == LabelSet{1, 2, 3, 4, 5});
  CHECK(levi_of({1, 6}) == LabelSet{2, 3, 4, 5});
}

TEST_CASE("Weyl group") {
  const WeylGroup& w = weyl_e6();
  CHECK(w.order() == 51840);
  CHECK(w.length(w.identity()) == 0);
  CHECK(w.length(w.longest()) == 36);
  CHECK(w.coxeter_order(3, 4) == 3);
  CHECK(w.coxeter_order(2, 4) == 3);
  CHECK(w.coxeter_order(1, 2) == 2);
  CHECK(w.coxeter_order(1, 6) == 2);

  // Length equals the number of positive roots sent to negative roots.
  const RootSystemE6& rs = w.roots();
  std::vector<int> hist(37, 0);
  for (std::size_t i = 0; i < w.order(); ++i) {
    const WeylElement& e = w.element(i);
    int inversions = 0;
    for (std::size_t r = 0; r < rs.roots.size(); ++r)
      inversions += rs.positive[r] && !rs.positive[e.perm[r]];
    REQUIRE(inversions == e.length);
    ++hist[e.length];
  }
  // Length distribution matches the product of [d_i]_q.
  const IntPolynomial poin = from_degrees(kE6);
  for (int l = 0; l <= 36; ++l) CHECK(hist[l] == poin.coeff(l));

  for (int s = 1; s <= 6; ++s)
    for (std::size_t i = 0; i < w.order(); i += 97) {
      CHECK(w.left(s, w.left(s, i)) == i);
      CHECK(w.right(s, w.right(s, i)) == i);
      CHECK(std::abs(w.length(w.left(s, i)) - w.length(i)) == 1);
    }
}

TEST_CASE("double cosets") {
  const WeylGroup& w = weyl_e6();
  const LabelSet p6 = levi_of({6}), p1 = levi_of({1});
  for (const LabelSet& right : {p6, p1}) {
    const std::vector<DoubleCoset> d = double_cosets(w, p6, right);
    CHECK(d.size() == 3);
    std::size_t total = 0;
    for (const DoubleCoset& c : d) {
      total += c.size;
      CHECK(c.minimal_count == 1);
      CHECK(w.length(c.representative) == c.min_length);
    }
    CHECK(total == w.order());
  }
  CHECK(double_cosets(w, {}, {}).size() == w.order());
  CHECK(double_cosets(w, levi_of({}), p6).size() == 1);
}

TEST_CASE("Hasse diagram of the 27-dimensional representation") {
  const HasseDiagram h = hasse_v6(build_e6());
  CHECK(h.weights.size() == 27);
  CHECK(std::set<Root>(h.weights.begin(), h.weights.end()).size() == 27);
  CHECK(h.weights.front() == Root{0, 0, 0, 0, 0, 1});
  for (const auto& e : h.edges) CHECK(h.weights[e.from][e.label - 1] > 0);
  CHECK(hasse_and_cut(h, 6) == 3);
  CHECK(hasse_and_cut(h, 1) == 3);
  CHECK(hasse_and_cut(6) == 3);
  CHECK_THROWS_AS(hasse_and_cut(h, 7), ConfigError);
  CHECK_THROWS_AS(hasse_and_cut(h, 0), ConfigError);
}

TEST_CASE("polynomials") {
  const IntPolynomial a({1, 1}), b({1, -1});
  CHECK(a * b == IntPolynomial({1, 0, -1}));
  CHECK((a - a).degree() < 1);
  CHECK(a.eval(3) == 4);
  CHECK((a + b) == IntPolynomial({2}));
  CHECK(IntPolynomial::monomial(3, 2).coeff(3) == 2);
}

TEST_CASE("Poincare polynomials of parabolic quotients") {
  const WeylGroup& w = weyl_e6();
  const IntPolynomial full = from_degrees(kE6);
  CHECK(poincare_polynomial(w, {}) == full);
  CHECK(poincare_polynomial(w, levi_of({})) == IntPolynomial::monomial(0));
  const IntPolynomial p6 = poincare_polynomial(w, levi_of({6}));
  CHECK(p6.degree() == 16);
  CHECK(p6.eval(1) == 27);
  CHECK(p6 * from_degrees(kD5) == full);
  CHECK(poincare_polynomial(w, levi_of({1})) == p6);
  CHECK(poincare_polynomial(w, levi_of({1, 6})) * from_degrees(kD4) == full);
  CHECK(poincare_polynomial(w, levi_of({5, 6})) * from_degrees(kA4) == full);
}

TEST_CASE("stratification identities") {
  const WeylGroup& w = weyl_e6();
  const std::vector<IdentityCheck> ids = verify_stratification(w);
  REQUIRE(ids.size() == 2);
  for (const IdentityCheck& id : ids) {
    CHECK(id.holds);
    CHECK(id.cosets_match);
    CHECK(id.double_coset_count == 3);
    CHECK(id.lhs.degree() == 32);
    CHECK(id.lhs.eval(1) == 729);
  }
  // Point counts at q = 2, 3 from the degrees alone.
  for (std::int64_t q : {2, 3}) {
    const std::int64_t f6 = flag_count(kD5, q);
    const std::int64_t f16 = flag_count(kD4, q), f56 = flag_count(kA4, q);
    CHECK(ids[0].lhs.eval(q) == f6 * f6);
    CHECK(ids[0].rhs.eval(q) == pow(q, 8) * f16 + q * f56 + f6);
    CHECK(ids[1].rhs.eval(q) == pow(q, 16) * f6 + pow(q, 5) * f56 + f16);
  }

  const IdentityCheck wrong = check_identity(w, "wrong", levi_of({6}), levi_of({6}),
                                             {{7, levi_of({1, 6})}, {1, levi_of({5, 6})},
                                              {0, levi_of({6})}});
  CHECK_FALSE(wrong.holds);
  CHECK_FALSE(wrong.cosets_match);
}
