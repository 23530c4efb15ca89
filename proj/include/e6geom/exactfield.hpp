#pragma once

// Exact arithmetic in F_p (p >= 5) and in the quadratic extension
// K = F_p(sqrt d), together with the Galois conjugation of K over F_p.

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>

#include "e6geom/errors.hpp"

namespace e6geom {

/// Which field a sampler or enumerator ranges over: the prime field F or K.
enum class Domain { Base, Extension };

class PrimeField {
 public:
  /// Largest accepted modulus; products of two residues must fit in 32 bits.
  static constexpr std::uint32_t kMaxModulus = 65521;

  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  /// x mod p for any 32-bit x (Lemire's fastmod).
  std::uint32_t reduce(std::uint32_t x) const noexcept {
    const std::uint64_t low = magic_ * x;
    return static_cast<std::uint32_t>((static_cast<__uint128_t>(low) * p_) >> 64);
  }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept {
    const std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept { return reduce(a * b); }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const noexcept;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const noexcept;

  /// Euler's criterion; 0 counts as a square.
  bool is_square(std::uint32_t a) const noexcept;

 private:
  std::uint32_t p_;
  std::uint64_t magic_;
};

bool is_prime(std::uint64_t n) noexcept;

class Scalar;

/// K = F_p[t]/(t^2 - d) with d a non-square in F_p.
///
/// Elements (Scalar) keep a pointer to their field, so a QuadExt must outlive
/// every value created from it; the type is therefore neither copyable nor
/// movable.
class QuadExt {
 public:
  QuadExt(std::uint32_t p, std::uint32_t d);
  QuadExt(const QuadExt&) = delete;
  QuadExt& operator=(const QuadExt&) = delete;

  const PrimeField& base() const noexcept { return base_; }
  std::uint32_t characteristic() const noexcept { return base_.modulus(); }
  std::uint32_t nonsquare() const noexcept { return d_; }
  /// |K| = p^2.
  std::uint64_t size() const noexcept {
    return std::uint64_t{base_.modulus()} * base_.modulus();
  }
  std::uint64_t size(Domain dom) const noexcept {
    return dom == Domain::Base ? base_.modulus() : size();
  }

  Scalar zero() const noexcept;
  Scalar one() const noexcept;
  Scalar sqrt_d() const noexcept;
  Scalar make(std::uint32_t a, std::uint32_t b = 0) const noexcept;
  Scalar from_int(std::int64_t v) const noexcept;
  /// Enumeration order: index = a + p*b for a + b sqrt(d).
  Scalar element(std::uint64_t index) const noexcept;

 private:
  PrimeField base_;
  std::uint32_t d_;
};

/// An element a + b sqrt(d) of K. A default-constructed Scalar is an unbound
/// zero: it acts as 0 in arithmetic with any field.
class Scalar {
 public:
  constexpr Scalar() noexcept = default;
  Scalar(const QuadExt& k, std::uint32_t a, std::uint32_t b) noexcept : k_(&k), a_(a), b_(b) {}

  const QuadExt* field() const noexcept { return k_; }
  std::uint32_t re() const noexcept { return a_; }
  std::uint32_t im() const noexcept { return b_; }
  bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }
  bool is_one() const noexcept { return a_ == 1 && b_ == 0; }
  /// True iff the value lies in F_p (is fixed by the conjugation).
  bool in_base() const noexcept { return b_ == 0; }

  friend bool operator==(const Scalar& x, const Scalar& y) noexcept {
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) noexcept {
    const QuadExt* k = x.k_ ? x.k_ : y.k_;
    if (!k) return {};
    const PrimeField& f = k->base();
    return Scalar(*k, f.add(x.a_, y.a_), f.add(x.b_, y.b_));
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) noexcept {
    const QuadExt* k = x.k_ ? x.k_ : y.k_;
    if (!k) return {};
    const PrimeField& f = k->base();
    return Scalar(*k, f.sub(x.a_, y.a_), f.sub(x.b_, y.b_));
  }
  Scalar operator-() const noexcept {
    if (!k_) return {};
    const PrimeField& f = k_->base();
    return Scalar(*k_, f.neg(a_), f.neg(b_));
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) noexcept {
    const QuadExt* k = x.k_ ? x.k_ : y.k_;
    if (!k) return {};
    const PrimeField& f = k->base();
    if (x.b_ == 0 && y.b_ == 0) return Scalar(*k, f.mul(x.a_, y.a_), 0);
    const std::uint32_t bb = f.mul(f.mul(x.b_, y.b_), k->nonsquare());
    return Scalar(*k, f.add(f.mul(x.a_, y.a_), bb),
                  f.add(f.mul(x.a_, y.b_), f.mul(x.b_, y.a_)));
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) { return x * y.inverse(); }

  Scalar& operator+=(const Scalar& y) noexcept { return *this = *this + y; }
  Scalar& operator-=(const Scalar& y) noexcept { return *this = *this - y; }
  Scalar& operator*=(const Scalar& y) noexcept { return *this = *this * y; }

  /// Galois conjugation a + b sqrt(d) -> a - b sqrt(d).
  Scalar conj() const noexcept {
    if (!k_) return {};
    return Scalar(*k_, a_, k_->base().neg(b_));
  }
  /// Field norm x * conj(x) = a^2 - d b^2, an element of F_p.
  Scalar norm() const noexcept;
  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  std::string to_string() const;

 private:
  const QuadExt* k_ = nullptr;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& x);

enum class ArithOp { Add, Sub, Mul, Div };

/// Dispatching form of the four field operations; Div throws DivisionByZero.
Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op);

/// The nontrivial automorphism of K over F_p.
inline Scalar conjugate(const Scalar& x) noexcept { return x.conj(); }

/// Squareness inside F_p (x must lie in the prime field).
bool is_square(const Scalar& x);
/// Squareness inside K.
bool is_square_in_extension(const Scalar& x);

/// Uniform draw from K (or F_p), optionally excluding zero.
Scalar random_element(const QuadExt& k, std::mt19937_64& rng, bool nonzero = false,
                      Domain dom = Domain::Extension);

}  // namespace e6geom
