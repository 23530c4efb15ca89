#pragma once

// The Brown algebra B = B(A, K x K) of 2x2 blocks
//
//     [ alpha  j     ]
//     [ j'     beta  ]      alpha, beta in K;  j, j' in A_K
//
// with the involution swapping alpha and beta, and its F-form cut out by the
// semilinear twist (alpha, j; j', beta) -> (s(beta), s(j'); s(j), s(alpha)),
// where s is the Galois conjugation of K/F.
//
// F-subspaces of B are stored in F^112: each of the 56 K-coordinates
// a + b sqrt(d) contributes the two entries a, b.

#include <cstddef>
#include <vector>

#include "e6geom/albert.hpp"
#include "e6geom/linalg.hpp"

namespace e6geom {

struct BrownElement {
  Scalar alpha;
  AlbertElement j;
  AlbertElement jp;
  Scalar beta;

  static constexpr std::size_t kDim = 56;
  static constexpr std::size_t kBaseDim = 2 * kDim;

  static BrownElement zero(const QuadExt& k);
  static BrownElement one(const QuadExt& k);
  /// Coordinates: alpha, j[27], j'[27], beta.
  static BrownElement from_coords(const Vector& c);
  Vector coords() const;

  bool is_zero() const;
  friend bool operator==(const BrownElement& u, const BrownElement& v) {
    return u.alpha == v.alpha && u.j == v.j && u.jp == v.jp && u.beta == v.beta;
  }
};

BrownElement operator+(const BrownElement& u, const BrownElement& v);
BrownElement operator-(const BrownElement& u, const BrownElement& v);
BrownElement operator*(const Scalar& c, const BrownElement& u);

/// (a1 a2 + T(j1, j2'),  a1 j2 + b2 j1 + j1' x j2';
///  a2 j1' + b1 j2' + j1 x j2,  b1 b2 + T(j2, j1')).
BrownElement brown_mul(const BrownElement& u, const BrownElement& v);
BrownElement involution(const BrownElement& u);
/// The sigma-semilinear twist defining the F-form.
BrownElement galois_twist(const BrownElement& u);

/// s0 = (sqrt d, 0; 0, -sqrt d), spanning the twist-fixed skew elements.
BrownElement skew_generator(const QuadExt& k);
/// Skew elements of B_K as a K-subspace of K^56.
Subspace skew_space(const QuadExt& k);

struct BrownType {
  int type;  // 1 or 2
  Scalar s0_squared;
};
/// Type 1 iff s0^2 is a square in the ground field (F, or K after extending).
BrownType classify_type(const Scalar& s0_squared, Domain ground);

// -- F-structure ------------------------------------------------------------

Vector to_base_coords(const BrownElement& u);
BrownElement from_base_coords(const QuadExt& k, const Vector& v);
/// The F-span of a K-subspace of K^56, inside F^112 (dimension doubles).
Subspace restrict_scalars(const Subspace& kspace);
/// The twist-fixed elements, an F-subspace of F^112 of dimension 56.
Subspace fixed_space(const QuadExt& k);
/// F-points of a twist-stable K-subspace.
Subspace rational_points(const Subspace& kspace);

// -- quaternion subalgebras -------------------------------------------------

/// H = F<1, s0, x, s0 x> for x = (0, e; s(e), 0), e rank 1 with
/// h(e) = T(e, s(e)) != 0. The generator is normalized projectively.
class QuaternionPoint {
 public:
  /// Checks rank 1 and h != 0 only (throws NotRankOne / IsotropicPair).
  static QuaternionPoint make(const AlbertElement& e);

  const AlbertElement& e() const noexcept { return e_; }
  const AlbertElement& sigma_e() const noexcept { return sigma_e_; }
  /// h(e) = T(e, s(e)), an element of F.
  const Scalar& h() const noexcept { return h_; }
  const QuadExt& field() const;

  BrownElement x() const;
  /// 1, s0, x, s0 x.
  std::vector<BrownElement> basis() const;
  /// H as an F-subspace of F^112.
  Subspace subalgebra() const;

  friend bool operator==(const QuaternionPoint& a, const QuaternionPoint& b) {
    return a.e_ == b.e_;
  }

 private:
  QuaternionPoint(AlbertElement e, AlbertElement sigma_e, Scalar h)
      : e_(std::move(e)), sigma_e_(std::move(sigma_e)), h_(h) {}

  AlbertElement e_;
  AlbertElement sigma_e_;
  Scalar h_;
};

/// Builds the point and verifies that H is a 4-dimensional F-subalgebra,
/// stable under the involution and the twist, with x^2 = h 1 and h in F*.
/// Failures of those checks raise StructureError.
QuaternionPoint quaternion_from(const AlbertElement& e);

struct BlockSpace {
  Subspace kspace;      // (K, u x A; v x A, K) inside K^56
  Subspace rational;    // its F-points inside F^112
  std::size_t upper_dim;
  std::size_t lower_dim;
};

/// (K, g x A; s(g) x A, K), the block space attached to a rank-1 generator.
BlockSpace line_block_space(const AlbertElement& g);
/// (K, s(e) x A; e x A, K) for the point [e]; dimension 22 over F.
BlockSpace pi_block_space(const QuaternionPoint& p);

struct ClosureReport {
  std::size_t input_dim;
  std::size_t generated_dim;
  bool closed;
};
/// Span of S and all products of pairs of basis elements of S (S an
/// F-subspace of F^112). Reports, never throws on non-closure.
ClosureReport closure_diagnostic(const Subspace& s);

/// F-span of K_H^perp . B for the point's H, where K_H^perp = F<x, s0 x>.
Subspace pointwise_product_span(const QuaternionPoint& p);

/// u -> coefficient of 1 in u bar(u), restricted to H, in the basis
/// 1, s0, x, s0 x.
QuadraticForm quaternion_norm_form(const QuaternionPoint& p);

}  // namespace e6geom
