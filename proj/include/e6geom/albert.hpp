#pragma once

// The split Albert algebra A = H_3(C) of 3x3 Hermitian matrices over the split
// octonions C. An element (xi1, xi2, xi3; x1, x2, x3) stands for
//
//     [ xi1      x3       conj(x2) ]
//     [ conj(x3) xi2      x1       ]
//     [ x2       conj(x1) xi3      ]
//
// Coordinates (27 of them) are ordered xi1, xi2, xi3, x1[8], x2[8], x3[8].

#include <array>
#include <random>

#include "e6geom/exactfield.hpp"
#include "e6geom/linalg.hpp"
#include "e6geom/octonion.hpp"

namespace e6geom {

struct AlbertElement {
  std::array<Scalar, 3> xi{};
  std::array<Octonion, 3> x{};

  static constexpr std::size_t kDim = 27;

  static AlbertElement zero(const QuadExt& k);
  static AlbertElement identity(const QuadExt& k);
  /// Diagonal idempotent E_i, i in {1, 2, 3}.
  static AlbertElement idempotent(const QuadExt& k, int i);
  static AlbertElement diagonal(const Scalar& a, const Scalar& b, const Scalar& c);
  static AlbertElement from_coords(const Vector& c);
  Vector coords() const;

  bool is_zero() const;
  friend bool operator==(const AlbertElement& p, const AlbertElement& q) {
    return p.xi == q.xi && p.x == q.x;
  }
};

AlbertElement operator+(const AlbertElement& p, const AlbertElement& q);
AlbertElement operator-(const AlbertElement& p, const AlbertElement& q);
AlbertElement operator-(const AlbertElement& p);
AlbertElement operator*(const Scalar& c, const AlbertElement& p);

/// Coefficientwise Galois conjugation (the sigma of K/F acting on A_K).
AlbertElement galois(const AlbertElement& p);

/// x o y = (xy + yx)/2 computed from the octonion matrix product.
AlbertElement jordan_mul(const AlbertElement& p, const AlbertElement& q);

/// T(x) = xi1 + xi2 + xi3.
Scalar trace(const AlbertElement& p);
/// T(x, y) = T(x o y).
Scalar trace_form(const AlbertElement& p, const AlbertElement& q);
/// N(x) = xi1 xi2 xi3 - sum xi_i n(x_i) + t((x1 x2) x3).
Scalar norm(const AlbertElement& p);
/// Coefficient of t in N(x + t y), recovered by interpolation at t = 0, +-1, +-2.
Scalar dnorm(const AlbertElement& p, const AlbertElement& q);
/// The quadratic adjoint x#, characterised by T(x#, y) = dnorm(x, y).
AlbertElement adjoint(const AlbertElement& p);
/// Freudenthal cross product x * y = (x+y)# - x# - y#.
AlbertElement cross(const AlbertElement& p, const AlbertElement& q);

/// 0 for x = 0, 1 if x# = 0, 2 if N(x) = 0, else 3.
int rank(const AlbertElement& p);

/// Scales so that the first nonzero coordinate equals 1; zero stays zero.
AlbertElement normalize_projective(const AlbertElement& p);

AlbertElement random_albert(const QuadExt& k, std::mt19937_64& rng,
                            Domain dom = Domain::Extension);

/// Draws from the cell xi1 != 0 of the rank-1 variety (where e# = 0 has a
/// closed-form solution) and then applies a random cyclic relabelling of the
/// diagonal. Every output is checked to have rank 1.
AlbertElement sample_rank1(const QuadExt& k, std::mt19937_64& rng,
                           Domain dom = Domain::Extension);

/// Cyclic relabelling (xi_i, x_i) -> (xi_{i+s}, x_{i+s}); an automorphism.
AlbertElement cyclic_shift(const AlbertElement& p, int shift);

/// Matrix of a -> e * a in the standard coordinates.
Matrix cross_operator(const AlbertElement& e);
/// e * A, the 10-dimensional image of the cross operator of a rank-1 e.
Subspace cross_space(const AlbertElement& e);
/// Gram matrix of the trace form in the standard coordinates.
Matrix trace_gram(const QuadExt& k);

}  // namespace e6geom
