#include <doctest.h>

#include <cmath>
#include <random>

#include "e6geom/exactfield.hpp"

using namespace e6geom;

TEST_CASE("prime field validation") {
  CHECK_THROWS_AS(PrimeField(4), FieldError);
  CHECK_THROWS_AS(PrimeField(3), FieldError);
  CHECK_THROWS_AS(PrimeField(2), FieldError);
  CHECK_THROWS_AS(PrimeField(65537), FieldError);
  CHECK_NOTHROW(PrimeField(65521));
  CHECK_THROWS_AS(QuadExt(5, 4), FieldError);
  CHECK_THROWS_AS(QuadExt(5, 0), FieldError);
  CHECK_NOTHROW(QuadExt(5, 3));
}

TEST_CASE("fastmod agrees with %") {
  for (std::uint32_t p : {5u, 7u, 101u, 65521u}) {
    const PrimeField f(p);
    std::mt19937 rng(p);
    for (int i = 0; i < 10000; ++i) {
      const std::uint32_t a = rng() % p, b = rng() % p;
      CHECK(f.mul(a, b) == static_cast<std::uint32_t>(std::uint64_t{a} * b % p));
    }
  }
}

TEST_CASE("basic arithmetic in F_5 and F_25") {
  const QuadExt k(5, 2);
  CHECK(field_arith(k.from_int(1), k.from_int(2), ArithOp::Div) == k.from_int(3));
  CHECK(k.sqrt_d() * k.sqrt_d() == k.from_int(2));
  CHECK(k.from_int(-1) == k.from_int(4));
  CHECK_THROWS_AS(field_arith(k.one(), k.zero(), ArithOp::Div), DivisionByZero);
  CHECK_THROWS_AS(k.zero().inverse(), DivisionByZero);
  CHECK(conjugate(k.sqrt_d()) == -k.sqrt_d());
  CHECK(k.make(3, 4).to_string() == "3:4");
  CHECK(k.make(3).to_string() == "3");
}

TEST_CASE("field axioms on random samples") {
  const QuadExt k(5, 2);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Scalar x = random_element(k, rng), y = random_element(k, rng), z = random_element(k, rng);
    CHECK((x + y) - y == x);
    CHECK(x * (y + z) == x * y + x * z);
    CHECK((x * y) * z == x * (y * z));
    // norm by expansion: a^2 - d b^2
    const std::int64_t a = x.re(), b = x.im();
    CHECK(x * x.conj() == k.from_int(a * a - 2 * b * b));
    CHECK((x * x.conj()).in_base());
    CHECK(conjugate(x * y) == conjugate(x) * conjugate(y));
    if (!y.is_zero()) CHECK(field_arith(x * y, y, ArithOp::Div) == x);
  }
}

TEST_CASE("Frobenius over all of F_25") {
  const QuadExt k(5, 2);
  for (std::uint64_t i = 0; i < k.size(); ++i) {
    const Scalar x = k.element(i);
    CHECK(x.pow(25) == x);
    CHECK(x.pow(5) == x.conj());
    CHECK((x.conj() == x) == x.in_base());
    CHECK(x.conj().conj() == x);
    if (!x.is_zero()) CHECK(x * x.inverse() == k.one());
  }
}

TEST_CASE("squares") {
  const QuadExt k(5, 2);
  CHECK(is_square(k.from_int(4)));
  CHECK(is_square(k.from_int(0)));
  CHECK_FALSE(is_square(k.from_int(2)));
  CHECK_THROWS(is_square(k.sqrt_d()));
  // Exhaustive oracle for squares in F_5 and in K.
  for (std::uint32_t a = 0; a < 5; ++a) {
    bool found = false;
    for (std::uint32_t y = 0; y < 5; ++y) found = found || (y * y) % 5 == a;
    CHECK(is_square(k.make(a)) == found);
  }
  for (std::uint64_t i = 0; i < k.size(); ++i) {
    bool found = false;
    for (std::uint64_t j = 0; j < k.size(); ++j) found = found || k.element(j) * k.element(j) == k.element(i);
    CHECK(is_square_in_extension(k.element(i)) == found);
  }
  CHECK(is_square_in_extension(k.from_int(2)));
}

TEST_CASE("random_element: determinism, uniformity, nonzero") {
  const QuadExt k(5, 2);
  std::mt19937_64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(random_element(k, a) == random_element(k, b));

  constexpr int kDraws = 100000;
  std::mt19937_64 rng(5);
  int counts[5] = {};
  for (int i = 0; i < kDraws; ++i) ++counts[random_element(k, rng, false, Domain::Base).re()];
  const double mean = kDraws / 5.0, sd = std::sqrt(kDraws * 0.2 * 0.8);
  for (int c : counts) CHECK(std::abs(c - mean) < 5 * sd);

  bool zero = false, ext = false;
  for (int i = 0; i < kDraws; ++i) {
    const Scalar x = random_element(k, rng, true);
    zero = zero || x.is_zero();
    ext = ext || !x.in_base();
  }
  CHECK_FALSE(zero);
  CHECK(ext);
}

TEST_CASE("a larger prime") {
  const QuadExt k(65519, 65518);  // -1 is a non-square since 65519 = 3 mod 4
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    const Scalar x = random_element(k, rng, true);
    CHECK(x * x.inverse() == k.one());
    CHECK(x.pow(65519) == x.conj());
  }
}
