#pragma once

// Split octonions in Zorn's vector-matrix model
//
//     x = [ a  v ]      a, b scalars, v, w vectors in K^3,
//         [ w  b ]
//
// with norm n(x) = ab - v.w, trace t(x) = a + b and conjugate (b, -v; -w, a).

#include <array>
#include <random>

#include "e6geom/exactfield.hpp"
#include "e6geom/linalg.hpp"

namespace e6geom {

using Vec3 = std::array<Scalar, 3>;

struct Octonion {
  Scalar a;
  Vec3 v{};
  Vec3 w{};
  Scalar b;

  static constexpr std::size_t kDim = 8;

  static Octonion zero(const QuadExt& k);
  static Octonion one(const QuadExt& k);
  /// The scalar c * 1.
  static Octonion scalar(const Scalar& c);
  /// Coordinate order: a, v0, v1, v2, w0, w1, w2, b.
  static Octonion from_coords(const Scalar* c);
  void write_coords(Scalar* out) const;
  Vector coords() const;

  bool is_zero() const;
  friend bool operator==(const Octonion& x, const Octonion& y) {
    return x.a == y.a && x.v == y.v && x.w == y.w && x.b == y.b;
  }
};

Octonion operator+(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x, const Octonion& y);
Octonion operator-(const Octonion& x);
Octonion operator*(const Scalar& c, const Octonion& x);
/// Zorn product.
Octonion operator*(const Octonion& x, const Octonion& y);
inline Octonion oct_mul(const Octonion& x, const Octonion& y) { return x * y; }

Scalar norm(const Octonion& x);
Scalar trace(const Octonion& x);
Octonion conj(const Octonion& x);
/// n(x + y) - n(x) - n(y) = t(x conj(y)).
Scalar polar(const Octonion& x, const Octonion& y);
/// Coefficientwise Galois conjugation of K.
Octonion galois(const Octonion& x);

struct NormTraceConj {
  Scalar norm;
  Scalar trace;
  Octonion conj;
};
NormTraceConj oct_norm_trace_conj(const Octonion& x);

Octonion random_octonion(const QuadExt& k, std::mt19937_64& rng, Domain dom = Domain::Extension);

/// The norm form on K^8 (or F^8) in the coordinates of Octonion::from_coords.
QuadraticForm octonion_norm_form(const QuadExt& k, Domain dom = Domain::Base);

}  // namespace e6geom
