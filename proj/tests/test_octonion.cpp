#include <doctest.h>

#include <random>

#include "e6geom/octonion.hpp"

using namespace e6geom;

namespace {

Octonion unit(const QuadExt& k, std::size_t i) {
  Vector c = unit_vector(k, 8, i);
  return Octonion::from_coords(c.data());
}

}  // namespace

TEST_CASE("unit, idempotents and the Zorn table") {
  const QuadExt k(5, 2);
  std::mt19937_64 rng(1);
  for (int i = 0; i < 100; ++i) {
    const Octonion x = random_octonion(k, rng);
    CHECK(Octonion::one(k) * x == x);
    CHECK(x * Octonion::one(k) == x);
  }
  const Octonion e = unit(k, 0);  // (1, 0; 0, 0)
  CHECK(e * e == e);
  CHECK(norm(e).is_zero());
  CHECK(norm(Octonion::one(k)) == k.one());
  CHECK(trace(Octonion::one(k)) == k.from_int(2));

  // v-part times w-part: (0, u_i; 0, 0)(0, 0; u_i, 0) = (1, 0; 0, 0) by the dot term.
  const Octonion vi = unit(k, 1), wi = unit(k, 4);
  CHECK(vi * wi == e);
  CHECK(wi * vi == unit(k, 7));
  // (0, u_1; 0, 0)(0, u_2; 0, 0) = (0, 0; u_1 x u_2, 0) = (0, 0; u_3, 0).
  CHECK(unit(k, 1) * unit(k, 2) == unit(k, 6));
  // (0, 0; u_1, 0)(0, 0; u_2, 0) = (0, -u_3; 0, 0).
  CHECK(unit(k, 4) * unit(k, 5) == -unit(k, 3));
}

TEST_CASE("composition identities") {
  const QuadExt k(5, 2);
  for (Domain dom : {Domain::Base, Domain::Extension}) {
    std::mt19937_64 rng(2);
    for (int i = 0; i < 1000; ++i) {
      const Octonion x = random_octonion(k, rng, dom), y = random_octonion(k, rng, dom);
      CHECK(norm(x * y) == norm(x) * norm(y));
      CHECK((x * x) * y == x * (x * y));
      CHECK(y * (x * x) == (y * x) * x);
      const NormTraceConj ntc = oct_norm_trace_conj(x);
      CHECK(x * x - ntc.trace * x + ntc.norm * Octonion::one(k) == Octonion::zero(k));
      CHECK(conj(ntc.conj) == x);
      CHECK(x + ntc.conj == ntc.trace * Octonion::one(k));
      CHECK(x * ntc.conj == ntc.norm * Octonion::one(k));
      CHECK(conj(x * y) == conj(y) * conj(x));
      CHECK(polar(x, y) == norm(x + y) - norm(x) - norm(y));
      CHECK(galois(x * y) == galois(x) * galois(y));
    }
  }
}

TEST_CASE("non-associativity witness") {
  const QuadExt k(5, 2);
  // (v1 v2) w2 versus v1 (v2 w2) on basis vectors.
  const Octonion a = unit(k, 1), b = unit(k, 2), c = unit(k, 5);
  CHECK_FALSE((a * b) * c == a * (b * c));
  std::mt19937_64 rng(3);
  bool found = false;
  for (int i = 0; i < 100 && !found; ++i) {
    const Octonion x = random_octonion(k, rng), y = random_octonion(k, rng),
                   z = random_octonion(k, rng);
    found = !((x * y) * z == x * (y * z));
  }
  CHECK(found);
}

TEST_CASE("norm form is split") {
  const QuadExt k(5, 2);
  for (Domain dom : {Domain::Base, Domain::Extension}) {
    const QuadraticForm q = octonion_norm_form(k, dom);
    CHECK(q.dim() == 8);
    const WittDecomposition w = witt_decompose(q);
    CHECK(w.witt_index == 4);
    CHECK(w.radical_dim == 0);
  }
  const QuadExt k7(7, 3);
  CHECK(witt_decompose(octonion_norm_form(k7)).witt_index == 4);
}
