#pragma once

// Exact linear algebra over K (or its prime subfield): row reduction,
// canonical subspaces, and quadratic forms with Witt decomposition.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "e6geom/exactfield.hpp"

namespace e6geom {

using Vector = std::vector<Scalar>;

Vector zero_vector(const QuadExt& k, std::size_t n);
Vector unit_vector(const QuadExt& k, std::size_t n, std::size_t i);
Scalar dot(const Vector& u, const Vector& v);
Vector operator+(const Vector& u, const Vector& v);
Vector operator-(const Vector& u, const Vector& v);
Vector operator*(const Scalar& c, const Vector& v);
bool is_zero(const Vector& v);

class Matrix {
 public:
  Matrix(const QuadExt& k, std::size_t rows, std::size_t cols);
  static Matrix identity(const QuadExt& k, std::size_t n);
  /// Rows must all have length `cols`.
  static Matrix from_rows(const QuadExt& k, const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const QuadExt& k, const std::vector<Vector>& cols, std::size_t rows);

  const QuadExt& field() const noexcept { return *k_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  /// m * v.
  Vector apply(const Vector& v) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& other) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  const QuadExt* k_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;  // same shape as the input; rows past `rank` are zero
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

RrefResult rref_rank(Matrix m);

/// A subspace of K^n stored by its reduced row-echelon basis, so equal
/// subspaces compare equal coefficient by coefficient.
class Subspace {
 public:
  Subspace(const QuadExt& k, std::size_t ambient_dim);  // the zero subspace
  static Subspace span(const QuadExt& k, std::size_t ambient_dim,
                       const std::vector<Vector>& generators);
  static Subspace row_space(const Matrix& m);
  static Subspace full(const QuadExt& k, std::size_t ambient_dim);

  const QuadExt& field() const noexcept { return *k_; }
  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vector> basis_vectors() const;

  bool contains(const Vector& v) const;
  /// Coefficients of v in the echelon basis, or nullopt if v is outside.
  std::optional<Vector> coordinates(const Vector& v) const;
  /// Linear combination of the basis with the given coefficients.
  Vector combine(const Vector& coeffs) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots);

  const QuadExt* k_;
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// {a : a . u = 0 for every u in s}.
Subspace annihilator(const Subspace& s);
Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
/// {v : u^T G v = 0 for all u in s}.
Subspace orthogonal_complement(const Subspace& s, const Matrix& gram);
bool contains(const Subspace& s, const Vector& v);

/// A solution c of a c = b, or nullopt when b is outside the column space.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// u^T G v.
Scalar bilinear(const Matrix& gram, const Vector& u, const Vector& v);

/// A quadratic form q with polar form B(u, v) = q(u+v) - q(u) - q(v); the Gram
/// matrix holds B, so q(v) = B(v, v) / 2.
class QuadraticForm {
 public:
  using Evaluator = std::function<Scalar(const Vector&)>;

  QuadraticForm(Matrix gram, Domain domain);
  /// Builds the Gram matrix by polarizing `q` on the unit vectors.
  static QuadraticForm from_evaluator(const QuadExt& k, std::size_t dim, Domain domain,
                                      Evaluator q);

  const QuadExt& field() const noexcept { return gram_.field(); }
  std::size_t dim() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  Domain domain() const noexcept { return domain_; }
  bool has_evaluator() const noexcept { return static_cast<bool>(eval_); }

  Scalar value(const Vector& v) const;
  /// Value computed from the Gram matrix alone, ignoring any evaluator.
  Scalar value_from_gram(const Vector& v) const;
  Scalar polar(const Vector& u, const Vector& v) const { return bilinear(gram_, u, v); }

 private:
  Matrix gram_;
  Domain domain_;
  Evaluator eval_;
};

struct WittDecomposition {
  std::size_t witt_index = 0;
  std::size_t radical_dim = 0;
  std::size_t anisotropic_dim = 0;
  /// Pairs (v, w) with q(v) = q(w) = 0 and B(v, w) = 1, mutually orthogonal.
  std::vector<std::pair<Vector, Vector>> hyperbolic_pairs;
  std::vector<Vector> anisotropic_basis;
  std::vector<Vector> radical_basis;
  std::uint64_t search_trials = 0;
};

/// Splits off hyperbolic planes until the remaining nondegenerate part is
/// anisotropic. Isotropic vectors are found by a seeded random sweep capped
/// at kIsotropicSearchCap trials, then by exhaustive enumeration.
WittDecomposition witt_decompose(const QuadraticForm& q, std::uint64_t seed = 0x5eed);

inline constexpr std::uint64_t kIsotropicSearchCap = 1'000'000;

}  // namespace e6geom
