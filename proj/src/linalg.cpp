#include "e6geom/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <string>

namespace e6geom {

Vector zero_vector(const QuadExt& k, std::size_t n) { return Vector(n, k.zero()); }

Vector unit_vector(const QuadExt& k, std::size_t n, std::size_t i) {
  Vector v = zero_vector(k, n);
  v[i] = k.one();
  return v;
}

Scalar dot(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw AmbientMismatch("dot of vectors of different length");
  Scalar s;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

Vector operator+(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw AmbientMismatch("sum of vectors of different length");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vector operator-(const Vector& u, const Vector& v) {
  if (u.size() != v.size()) throw AmbientMismatch("difference of vectors of different length");
  Vector r(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& x) { return x.is_zero(); });
}

// ---------------------------------------------------------------------------

Matrix::Matrix(const QuadExt& k, std::size_t rows, std::size_t cols)
    : k_(&k), rows_(rows), cols_(cols), data_(rows * cols, k.zero()) {}

Matrix Matrix::identity(const QuadExt& k, std::size_t n) {
  Matrix m(k, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = k.one();
  return m;
}

Matrix Matrix::from_rows(const QuadExt& k, const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(k, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw AmbientMismatch("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.data_.begin() + r * cols);
  }
  return m;
}

Matrix Matrix::from_columns(const QuadExt& k, const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(k, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (cols[c].size() != rows) throw AmbientMismatch("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw AmbientMismatch("matrix-vector shape mismatch");
  Vector out = zero_vector(*k_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar s = k_->zero();
    for (std::size_t c = 0; c < cols_; ++c) s += (*this)(r, c) * v[c];
    out[r] = s;
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(*k_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& other) const {
  if (cols_ != other.rows_) throw AmbientMismatch("matrix product shape mismatch");
  Matrix out(*k_, rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t i = 0; i < cols_; ++i) {
      const Scalar a = (*this)(r, i);
      if (a.is_zero()) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(i, c);
    }
  return out;
}

// ---------------------------------------------------------------------------

RrefResult rref_rank(Matrix m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t sel = rank;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != rank)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(sel, j), m(rank, j));
    const Scalar inv = m(rank, c).inverse();
    for (std::size_t j = c; j < cols; ++j) m(rank, j) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank) continue;
      const Scalar f = m(r, c);
      if (f.is_zero()) continue;
      for (std::size_t j = c; j < cols; ++j) m(r, j) -= f * m(rank, j);
    }
    pivots.push_back(c);
    ++rank;
  }
  return {std::move(m), rank, std::move(pivots)};
}

// ---------------------------------------------------------------------------

Subspace::Subspace(const QuadExt& k, std::size_t ambient_dim)
    : k_(&k), ambient_(ambient_dim), basis_(k, 0, ambient_dim) {}

Subspace::Subspace(Matrix basis, std::vector<std::size_t> pivots)
    : k_(&basis.field()),
      ambient_(basis.cols()),
      basis_(std::move(basis)),
      pivots_(std::move(pivots)) {}

Subspace Subspace::row_space(const Matrix& m) {
  RrefResult rr = rref_rank(m);
  Matrix basis(m.field(), rr.rank, m.cols());
  for (std::size_t r = 0; r < rr.rank; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) basis(r, c) = rr.reduced(r, c);
  return Subspace(std::move(basis), std::move(rr.pivots));
}

Subspace Subspace::span(const QuadExt& k, std::size_t ambient_dim,
                        const std::vector<Vector>& generators) {
  if (generators.empty()) return Subspace(k, ambient_dim);
  return row_space(Matrix::from_rows(k, generators, ambient_dim));
}

Subspace Subspace::full(const QuadExt& k, std::size_t ambient_dim) {
  return row_space(Matrix::identity(k, ambient_dim));
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (v.size() != ambient_) throw AmbientMismatch("vector does not live in the ambient space");
  Vector coeffs(dim());
  for (std::size_t r = 0; r < dim(); ++r) coeffs[r] = v[pivots_[r]];
  // Pivot columns of the residual vanish by construction; check the rest.
  std::size_t next_pivot = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (next_pivot < pivots_.size() && pivots_[next_pivot] == c) {
      ++next_pivot;
      continue;
    }
    // Unreduced accumulation: each product is below p^2 < 2^32.
    std::uint64_t re = 0, im = 0, dd = 0;
    for (std::size_t r = 0; r < dim(); ++r) {
      const Scalar& x = coeffs[r];
      const Scalar& y = basis_(r, c);
      re += std::uint64_t{x.re()} * y.re();
      dd += std::uint64_t{x.im()} * y.im();
      im += std::uint64_t{x.re()} * y.im() + std::uint64_t{x.im()} * y.re();
    }
    const std::uint64_t p = k_->characteristic();
    re = (re + (dd % p) * k_->nonsquare()) % p;
    im %= p;
    if (re != v[c].re() || im != v[c].im()) return std::nullopt;
  }
  return coeffs;
}

bool Subspace::contains(const Vector& v) const { return coordinates(v).has_value(); }

Vector Subspace::combine(const Vector& coeffs) const {
  if (coeffs.size() != dim()) throw AmbientMismatch("coefficient count differs from dimension");
  Vector out = zero_vector(*k_, ambient_);
  for (std::size_t r = 0; r < dim(); ++r) {
    if (coeffs[r].is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) out[c] += coeffs[r] * basis_(r, c);
  }
  return out;
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

Subspace kernel(const Matrix& m) {
  const QuadExt& k = m.field();
  RrefResult rr = rref_rank(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rr.pivots) is_pivot[c] = true;
  std::vector<Vector> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(k, m.cols(), f);
    for (std::size_t r = 0; r < rr.rank; ++r) v[rr.pivots[r]] = -rr.reduced(r, f);
    gens.push_back(std::move(v));
  }
  return Subspace::span(k, m.cols(), gens);
}

Subspace annihilator(const Subspace& s) {
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return kernel(s.basis());
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("intersect: ambient dims differ");
  const Subspace au = annihilator(u);
  const Subspace av = annihilator(v);
  std::vector<Vector> conditions = au.basis_vectors();
  for (auto& row : av.basis_vectors()) conditions.push_back(std::move(row));
  if (conditions.empty()) return Subspace::full(u.field(), u.ambient_dim());
  return kernel(Matrix::from_rows(u.field(), conditions, u.ambient_dim()));
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw AmbientMismatch("sum: ambient dims differ");
  std::vector<Vector> gens = u.basis_vectors();
  for (auto& row : v.basis_vectors()) gens.push_back(std::move(row));
  return Subspace::span(u.field(), u.ambient_dim(), gens);
}

Subspace orthogonal_complement(const Subspace& s, const Matrix& gram) {
  if (gram.rows() != s.ambient_dim() || gram.cols() != s.ambient_dim())
    throw AmbientMismatch("orthogonal_complement: Gram shape mismatch");
  if (s.dim() == 0) return Subspace::full(s.field(), s.ambient_dim());
  return kernel(s.basis() * gram);
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw AmbientMismatch("solve_linear: right-hand side length");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const RrefResult rr = rref_rank(std::move(aug));
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t r = 0; r < rr.rank; ++r) {
    if (rr.pivots[r] == a.cols()) return std::nullopt;
    x[rr.pivots[r]] = rr.reduced(r, a.cols());
  }
  return x;
}

Scalar bilinear(const Matrix& gram, const Vector& u, const Vector& v) {
  if (u.size() != gram.rows() || v.size() != gram.cols())
    throw AmbientMismatch("bilinear: shape mismatch");
  Scalar s = gram.field().zero();
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    Scalar row = gram.field().zero();
    for (std::size_t j = 0; j < v.size(); ++j) row += gram(i, j) * v[j];
    s += u[i] * row;
  }
  return s;
}

// ---------------------------------------------------------------------------

QuadraticForm::QuadraticForm(Matrix gram, Domain domain)
    : gram_(std::move(gram)), domain_(domain) {
  if (gram_.rows() != gram_.cols()) throw AmbientMismatch("Gram matrix must be square");
  if (!(gram_ == gram_.transpose())) throw StructureError("Gram matrix is not symmetric");
  if (domain_ == Domain::Base)
    for (std::size_t i = 0; i < gram_.rows(); ++i)
      for (std::size_t j = 0; j < gram_.cols(); ++j)
        if (!gram_(i, j).in_base()) throw FieldError("Gram entry outside the prime field");
}

QuadraticForm QuadraticForm::from_evaluator(const QuadExt& k, std::size_t dim, Domain domain,
                                            Evaluator q) {
  std::vector<Scalar> diag(dim);
  std::vector<Vector> units;
  for (std::size_t i = 0; i < dim; ++i) {
    units.push_back(unit_vector(k, dim, i));
    diag[i] = q(units.back());
  }
  Matrix gram(k, dim, dim);
  for (std::size_t i = 0; i < dim; ++i) {
    gram(i, i) = diag[i] + diag[i];
    for (std::size_t j = i + 1; j < dim; ++j) {
      const Scalar b = q(units[i] + units[j]) - diag[i] - diag[j];
      gram(i, j) = b;
      gram(j, i) = b;
    }
  }
  QuadraticForm form(std::move(gram), domain);
  form.eval_ = std::move(q);
  return form;
}

Scalar QuadraticForm::value_from_gram(const Vector& v) const {
  return polar(v, v) * field().from_int(2).inverse();
}

Scalar QuadraticForm::value(const Vector& v) const {
  return eval_ ? eval_(v) : value_from_gram(v);
}

namespace {

// Runs `visit` on every vector of dom^n (lexicographic order) until it
// returns true.
template <typename Visit>
bool for_each_vector(const QuadExt& k, Domain dom, std::size_t n, Visit&& visit) {
  const std::uint64_t base = k.size(dom);
  std::vector<std::uint64_t> idx(n, 0);
  Vector x(n, k.zero());
  while (true) {
    if (visit(x)) return true;
    std::size_t pos = 0;
    while (pos < n) {
      if (++idx[pos] < base) {
        x[pos] = k.element(idx[pos]);
        break;
      }
      idx[pos] = 0;
      x[pos] = k.zero();
      ++pos;
    }
    if (pos == n) return false;
  }
}

// Searches for a nonzero isotropic vector in span(basis), returned in ambient
// coordinates.
std::optional<Vector> find_isotropic(const QuadraticForm& q, const std::vector<Vector>& basis,
                                     std::mt19937_64& rng, std::uint64_t& trials) {
  const QuadExt& k = q.field();
  const std::size_t m = basis.size();
  if (m == 0) return std::nullopt;
  Matrix g(k, m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) g(i, j) = q.polar(basis[i], basis[j]);
  auto lift = [&](const Vector& x) {
    Vector v = zero_vector(k, q.dim());
    for (std::size_t i = 0; i < m; ++i)
      if (!x[i].is_zero()) v = v + x[i] * basis[i];
    return v;
  };
  for (std::size_t i = 0; i < m; ++i)
    if (g(i, i).is_zero()) return basis[i];
  if (m == 1) return std::nullopt;  // nondegenerate rank one: anisotropic

  const double space = static_cast<double>(k.size(q.domain()));
  double total = 1.0;
  for (std::size_t i = 0; i < m; ++i) total *= space;
  const std::uint64_t random_cap =
      total < static_cast<double>(kIsotropicSearchCap) ? static_cast<std::uint64_t>(total)
                                                      : kIsotropicSearchCap;
  Vector x(m);
  for (std::uint64_t t = 0; t < random_cap; ++t) {
    ++trials;
    for (auto& xi : x) xi = random_element(k, rng, false, q.domain());
    if (is_zero(x)) continue;
    if (bilinear(g, x, x).is_zero()) return lift(x);
  }
  if (total > 1e8) throw StructureError("isotropic search exhausted and space too large");
  std::optional<Vector> found;
  for_each_vector(k, q.domain(), m, [&](const Vector& y) {
    ++trials;
    if (is_zero(y) || !bilinear(g, y, y).is_zero()) return false;
    found = lift(y);
    return true;
  });
  return found;
}

}  // namespace

WittDecomposition witt_decompose(const QuadraticForm& q, std::uint64_t seed) {
  const QuadExt& k = q.field();
  const std::size_t n = q.dim();
  WittDecomposition out;

  const Subspace radical = kernel(q.gram());
  out.radical_dim = radical.dim();
  out.radical_basis = radical.basis_vectors();

  // Complement of the radical spanned by unit vectors; the form restricted to
  // it is nondegenerate.
  std::vector<Vector> current;
  Subspace covered = radical;
  for (std::size_t i = 0; i < n && covered.dim() < n; ++i) {
    Vector e = unit_vector(k, n, i);
    if (covered.contains(e)) continue;
    covered = sum(covered, Subspace::span(k, n, {e}));
    current.push_back(std::move(e));
  }

  std::mt19937_64 rng(seed);
  const Scalar half = k.from_int(2).inverse();
  while (true) {
    std::optional<Vector> iso = find_isotropic(q, current, rng, out.search_trials);
    if (!iso) break;
    const Vector& v = *iso;
    std::optional<Vector> partner;
    for (const Vector& u : current) {
      const Scalar b = q.polar(v, u);
      if (!b.is_zero()) {
        partner = b.inverse() * u;
        break;
      }
    }
    if (!partner) throw StructureError("isotropic vector lies in the radical");
    const Scalar qw = q.polar(*partner, *partner) * half;
    Vector w = *partner - qw * v;

    std::vector<Vector> projected;
    for (const Vector& u : current) {
      projected.push_back(u - q.polar(u, w) * v - q.polar(u, v) * w);
    }
    const Subspace rest = Subspace::span(k, n, projected);
    if (rest.dim() + 2 != current.size()) throw StructureError("hyperbolic split lost rank");
    current = rest.basis_vectors();
    out.hyperbolic_pairs.emplace_back(v, std::move(w));
  }
  out.witt_index = out.hyperbolic_pairs.size();
  out.anisotropic_dim = current.size();
  out.anisotropic_basis = std::move(current);
  return out;
}

}  // namespace e6geom
