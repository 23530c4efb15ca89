#pragma once

// Point/line incidence geometry on the Brown algebra.
//
// A point is a quaternion subalgebra, encoded by a projective rank-1 e with
// h(e) = T(e, s(e)) != 0. A line is encoded by a projective rank-1 generator
// g; its points are the points [e] with e in V = g x A (10-dimensional).

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "e6geom/albert.hpp"
#include "e6geom/brown.hpp"
#include "e6geom/linalg.hpp"

namespace e6geom {

class Point {
 public:
  /// Validates rank 1 and h(e) != 0 and normalizes projectively.
  static Point from_generator(const AlbertElement& e) {
    return Point(QuaternionPoint::make(e));
  }
  /// As from_generator, and additionally runs the full subalgebra checks.
  static Point checked(const AlbertElement& e) { return Point(quaternion_from(e)); }

  const QuaternionPoint& quaternion() const noexcept { return q_; }
  const AlbertElement& e() const noexcept { return q_.e(); }
  const Scalar& h() const noexcept { return q_.h(); }

  friend bool operator==(const Point& a, const Point& b) { return a.q_ == b.q_; }

 private:
  explicit Point(QuaternionPoint q) : q_(std::move(q)) {}
  QuaternionPoint q_;
};

class Line {
 public:
  /// Validates rank 1 (NotRankOne) and caches g x A and s(g) x A.
  static Line from_generator(const AlbertElement& g);

  const AlbertElement& g() const noexcept { return g_; }
  const AlbertElement& sigma_g() const noexcept { return sigma_g_; }
  /// g x A, dimension 10 over K.
  const Subspace& space() const noexcept { return space_; }
  /// s(g) x A.
  const Subspace& sigma_space() const noexcept { return sigma_space_; }
  /// The 22-dimensional F-form (K, g x A; s(g) x A, K).
  BlockSpace block_space() const { return line_block_space(g_); }

  friend bool operator==(const Line& a, const Line& b) { return a.g_ == b.g_; }

 private:
  Line(AlbertElement g, AlbertElement sg, Subspace v, Subspace sv)
      : g_(std::move(g)), sigma_g_(std::move(sg)), space_(std::move(v)), sigma_space_(std::move(sv)) {}

  AlbertElement g_;
  AlbertElement sigma_g_;
  Subspace space_;
  Subspace sigma_space_;
};

enum class Position { Coincide, Incident, Special, General };
std::string_view to_string(Position p);

/// e_P in g_L x A. The conjugate condition s(e_P) in s(g_L) x A is checked
/// as well; disagreement raises StructureError.
bool incident(const Point& p, const Line& l);

/// Coincide / Special (g1 x g2 = 0) / General, cross-checked against
/// dim(V1 n V2) = 10 / 5 / 1.
Position line_position(const Line& a, const Line& b);
/// Coincide / Special (e1 x e2 = 0) / General.
Position point_position(const Point& a, const Point& b);
/// Incident / Special (T(e, g) = 0) / General.
Position point_line_position(const Point& p, const Line& l);

/// The line with generator e1 x e2; throws SpecialPosition if e1 x e2 = 0.
Line join(const Point& a, const Point& b);
/// The point [g1 x g2] of two lines in general position, or nullopt when
/// h(g1 x g2) = 0. Throws NotGeneralPosition otherwise.
std::optional<Point> meet(const Line& a, const Line& b);

struct SpecialIntersection {
  Subspace common;                  // V1 n V2, dimension 5 over K
  std::uint64_t total_classes = 0;  // |P^4(K)|
  std::uint64_t isotropic_classes = 0;
  std::uint64_t point_classes = 0;
  /// Rank of the Hermitian form h on V1 n V2.
  std::size_t hermitian_rank = 0;
};

/// Enumerates the projective space of V1 n V2 for two lines in special
/// position and hands every class with h != 0 to `visit` as a point
/// incident to both lines. Throws NotSpecialPosition.
SpecialIntersection common_points_special(const Line& a, const Line& b,
                                          const std::function<void(const Point&)>& visit = {});
/// Collecting form of common_points_special (memory grows with |P^4(K)|).
std::vector<Point> common_points_special_list(const Line& a, const Line& b);

/// The quadratic form lambda on g x A defined by v# = lambda(v) g, written in
/// the coordinates of the echelon basis of g x A.
class LineQuadric {
 public:
  const Line& line() const noexcept { return line_; }
  const QuadraticForm& form() const noexcept { return form_; }
  const WittDecomposition& witt() const noexcept { return witt_; }
  std::size_t rank() const noexcept { return form_.dim() - witt_.radical_dim; }

  AlbertElement element(const Vector& coeffs) const;
  /// lambda(v) for v in g x A; StructureError if v# is not a multiple of g.
  Scalar lambda(const AlbertElement& v) const;
  /// A uniformly parametrized nonzero zero of lambda, as an element of A.
  AlbertElement sample_isotropic(std::mt19937_64& rng) const;

 private:
  friend LineQuadric line_quadric(const Line& l);
  LineQuadric(Line l, std::size_t pivot, QuadraticForm form)
      : line_(std::move(l)), pivot_(pivot), form_(std::move(form)) {}

  Line line_;
  std::size_t pivot_;
  QuadraticForm form_;
  WittDecomposition witt_;
};

/// Builds lambda and asserts rank 10, radical 0 and Witt index 5 over K.
LineQuadric line_quadric(const Line& l);

/// Up to `budget` distinct points on l, drawn from the zero locus of lambda
/// with at most 10 * budget draws.
std::vector<Point> points_on_line(const Line& l, std::size_t budget, std::mt19937_64& rng);

struct Chain {
  Point start;
  Line first;
  Point middle;
  Line second;
  Point end;
  std::size_t trials;
};

/// A chain start - first - middle - second - end of alternately incident
/// points and lines with first != second and middle distinct from both ends.
/// Throws BudgetExhausted after `budget` rejected middle points.
Chain chain(const Point& start, const Point& end, std::mt19937_64& rng, std::size_t budget);

/// Random rank-1 e with h(e) != 0.
Point random_point(const QuadExt& k, std::mt19937_64& rng);
Line random_line(const QuadExt& k, std::mt19937_64& rng);
/// Two distinct lines in special position: zeros u, w of some line quadric
/// with vanishing polar pairing, so that u x w = 0.
std::pair<Line, Line> make_special_pair(const QuadExt& k, std::mt19937_64& rng);

}  // namespace e6geom
