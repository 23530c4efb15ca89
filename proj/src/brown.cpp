#include "e6geom/brown.hpp"

namespace e6geom {

namespace {

const QuadExt& field_of(const BrownElement& u) {
  if (u.alpha.field()) return *u.alpha.field();
  if (u.beta.field()) return *u.beta.field();
  for (const Scalar& s : u.j.coords())
    if (s.field()) return *s.field();
  for (const Scalar& s : u.jp.coords())
    if (s.field()) return *s.field();
  throw FieldError("Brown element is not bound to a field");
}

Vector split_coords(const QuadExt& k, const Vector& v) {
  Vector out(2 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[2 * i] = k.make(v[i].re());
    out[2 * i + 1] = k.make(v[i].im());
  }
  return out;
}

}  // namespace

BrownElement BrownElement::zero(const QuadExt& k) {
  return {k.zero(), AlbertElement::zero(k), AlbertElement::zero(k), k.zero()};
}

BrownElement BrownElement::one(const QuadExt& k) {
  return {k.one(), AlbertElement::zero(k), AlbertElement::zero(k), k.one()};
}

BrownElement BrownElement::from_coords(const Vector& c) {
  if (c.size() != kDim) throw AmbientMismatch("Brown element needs 56 coordinates");
  BrownElement u;
  u.alpha = c[0];
  u.j = AlbertElement::from_coords(Vector(c.begin() + 1, c.begin() + 28));
  u.jp = AlbertElement::from_coords(Vector(c.begin() + 28, c.begin() + 55));
  u.beta = c[55];
  return u;
}

Vector BrownElement::coords() const {
  Vector c;
  c.reserve(kDim);
  c.push_back(alpha);
  for (const Scalar& s : j.coords()) c.push_back(s);
  for (const Scalar& s : jp.coords()) c.push_back(s);
  c.push_back(beta);
  return c;
}

bool BrownElement::is_zero() const {
  return alpha.is_zero() && beta.is_zero() && j.is_zero() && jp.is_zero();
}

BrownElement operator+(const BrownElement& u, const BrownElement& v) {
  return {u.alpha + v.alpha, u.j + v.j, u.jp + v.jp, u.beta + v.beta};
}

BrownElement operator-(const BrownElement& u, const BrownElement& v) {
  return {u.alpha - v.alpha, u.j - v.j, u.jp - v.jp, u.beta - v.beta};
}

BrownElement operator*(const Scalar& c, const BrownElement& u) {
  return {c * u.alpha, c * u.j, c * u.jp, c * u.beta};
}

BrownElement brown_mul(const BrownElement& u, const BrownElement& v) {
  return {u.alpha * v.alpha + trace_form(u.j, v.jp),
          u.alpha * v.j + v.beta * u.j + cross(u.jp, v.jp),
          v.alpha * u.jp + u.beta * v.jp + cross(u.j, v.j),
          u.beta * v.beta + trace_form(v.j, u.jp)};
}

BrownElement involution(const BrownElement& u) { return {u.beta, u.j, u.jp, u.alpha}; }

BrownElement galois_twist(const BrownElement& u) {
  return {u.beta.conj(), galois(u.jp), galois(u.j), u.alpha.conj()};
}

BrownElement skew_generator(const QuadExt& k) {
  BrownElement s = BrownElement::zero(k);
  s.alpha = k.sqrt_d();
  s.beta = -k.sqrt_d();
  return s;
}

Subspace skew_space(const QuadExt& k) {
  // Kernel of u -> bar(u) + u.
  Matrix m(k, BrownElement::kDim, BrownElement::kDim);
  for (std::size_t c = 0; c < BrownElement::kDim; ++c) {
    const BrownElement u = BrownElement::from_coords(unit_vector(k, BrownElement::kDim, c));
    const Vector col = (involution(u) + u).coords();
    for (std::size_t r = 0; r < BrownElement::kDim; ++r) m(r, c) = col[r];
  }
  return kernel(m);
}

BrownType classify_type(const Scalar& s0_squared, Domain ground) {
  const bool square =
      ground == Domain::Base ? is_square(s0_squared) : is_square_in_extension(s0_squared);
  return {square ? 1 : 2, s0_squared};
}

Vector to_base_coords(const BrownElement& u) { return split_coords(field_of(u), u.coords()); }

BrownElement from_base_coords(const QuadExt& k, const Vector& v) {
  if (v.size() != BrownElement::kBaseDim) throw AmbientMismatch("expected 112 F-coordinates");
  Vector c(BrownElement::kDim);
  for (std::size_t i = 0; i < BrownElement::kDim; ++i) {
    if (!v[2 * i].in_base() || !v[2 * i + 1].in_base())
      throw FieldError("F-coordinates must lie in the prime field");
    c[i] = k.make(v[2 * i].re(), v[2 * i + 1].re());
  }
  return BrownElement::from_coords(c);
}

Subspace restrict_scalars(const Subspace& kspace) {
  const QuadExt& k = kspace.field();
  std::vector<Vector> gens;
  for (const Vector& b : kspace.basis_vectors()) {
    gens.push_back(split_coords(k, b));
    gens.push_back(split_coords(k, k.sqrt_d() * b));
  }
  return Subspace::span(k, 2 * kspace.ambient_dim(), gens);
}

Subspace fixed_space(const QuadExt& k) {
  const std::size_t n = BrownElement::kBaseDim;
  Matrix m(k, n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const Vector unit = unit_vector(k, n, c);
    const Vector col = to_base_coords(galois_twist(from_base_coords(k, unit))) - unit;
    for (std::size_t r = 0; r < n; ++r) m(r, c) = col[r];
  }
  return kernel(m);
}

Subspace rational_points(const Subspace& kspace) {
  if (kspace.ambient_dim() != BrownElement::kDim)
    throw AmbientMismatch("rational_points expects a subspace of K^56");
  return intersect(restrict_scalars(kspace), fixed_space(kspace.field()));
}

// ---------------------------------------------------------------------------

QuaternionPoint QuaternionPoint::make(const AlbertElement& e) {
  if (rank(e) != 1) throw NotRankOne("point generator must have rank 1");
  AlbertElement n = normalize_projective(e);
  AlbertElement s = galois(n);
  const Scalar h = trace_form(n, s);
  if (h.is_zero()) throw IsotropicPair("T(e, s(e)) = 0");
  return QuaternionPoint(std::move(n), std::move(s), h);
}

const QuadExt& QuaternionPoint::field() const { return *h_.field(); }

BrownElement QuaternionPoint::x() const {
  const QuadExt& k = field();
  return {k.zero(), e_, sigma_e_, k.zero()};
}

std::vector<BrownElement> QuaternionPoint::basis() const {
  const QuadExt& k = field();
  const BrownElement s0 = skew_generator(k);
  const BrownElement xx = x();
  return {BrownElement::one(k), s0, xx, brown_mul(s0, xx)};
}

Subspace QuaternionPoint::subalgebra() const {
  std::vector<Vector> gens;
  for (const BrownElement& b : basis()) gens.push_back(to_base_coords(b));
  return Subspace::span(field(), BrownElement::kBaseDim, gens);
}

QuaternionPoint quaternion_from(const AlbertElement& e) {
  QuaternionPoint p = QuaternionPoint::make(e);
  const QuadExt& k = p.field();
  if (!p.h().in_base()) throw StructureError("h(e) is not in the base field");

  const Subspace h = p.subalgebra();
  if (h.dim() != 4) throw StructureError("H is not 4-dimensional over F");
  const std::vector<BrownElement> basis = p.basis();
  for (const BrownElement& a : basis) {
    if (!h.contains(to_base_coords(involution(a))))
      throw StructureError("H is not stable under the involution");
    if (!(galois_twist(a) == a)) throw StructureError("H is not fixed by the Galois twist");
    for (const BrownElement& b : basis)
      if (!h.contains(to_base_coords(brown_mul(a, b))))
        throw StructureError("H is not closed under multiplication");
  }
  const BrownElement x = p.x();
  if (!(brown_mul(x, x) == p.h() * BrownElement::one(k)))
    throw StructureError("x^2 differs from h(e) 1");
  return p;
}

BlockSpace line_block_space(const AlbertElement& g) {
  const Subspace upper = cross_space(g);
  const Subspace lower = cross_space(galois(g));
  const QuadExt& k = upper.field();
  std::vector<Vector> gens;
  gens.push_back(unit_vector(k, BrownElement::kDim, 0));
  gens.push_back(unit_vector(k, BrownElement::kDim, BrownElement::kDim - 1));
  for (const Vector& b : upper.basis_vectors()) {
    BrownElement u = BrownElement::zero(k);
    u.j = AlbertElement::from_coords(b);
    gens.push_back(u.coords());
  }
  for (const Vector& b : lower.basis_vectors()) {
    BrownElement u = BrownElement::zero(k);
    u.jp = AlbertElement::from_coords(b);
    gens.push_back(u.coords());
  }
  Subspace kspace = Subspace::span(k, BrownElement::kDim, gens);
  Subspace rational = rational_points(kspace);
  return {std::move(kspace), std::move(rational), upper.dim(), lower.dim()};
}

BlockSpace pi_block_space(const QuaternionPoint& p) { return line_block_space(p.sigma_e()); }

ClosureReport closure_diagnostic(const Subspace& s) {
  const QuadExt& k = s.field();
  std::vector<BrownElement> elems;
  for (const Vector& b : s.basis_vectors()) elems.push_back(from_base_coords(k, b));
  std::vector<Vector> gens = s.basis_vectors();
  for (const BrownElement& a : elems)
    for (const BrownElement& b : elems) gens.push_back(to_base_coords(brown_mul(a, b)));
  const Subspace generated = Subspace::span(k, s.ambient_dim(), gens);
  return {s.dim(), generated.dim(), generated.dim() == s.dim()};
}

Subspace pointwise_product_span(const QuaternionPoint& p) {
  const QuadExt& k = p.field();
  const BrownElement x = p.x();
  const BrownElement s0x = brown_mul(skew_generator(k), x);
  std::vector<Vector> gens;
  for (const Vector& b : fixed_space(k).basis_vectors()) {
    const BrownElement u = from_base_coords(k, b);
    gens.push_back(to_base_coords(brown_mul(x, u)));
    gens.push_back(to_base_coords(brown_mul(s0x, u)));
  }
  return Subspace::span(k, BrownElement::kBaseDim, gens);
}

QuadraticForm quaternion_norm_form(const QuaternionPoint& p) {
  const QuadExt& k = p.field();
  const std::vector<BrownElement> basis = p.basis();
  std::vector<Vector> cols;
  for (const BrownElement& b : basis) cols.push_back(to_base_coords(b));
  const Matrix m = Matrix::from_columns(k, cols, BrownElement::kBaseDim);
  return QuadraticForm::from_evaluator(k, 4, Domain::Base, [&k, basis, m](const Vector& c) {
    BrownElement u = BrownElement::zero(k);
    for (std::size_t i = 0; i < 4; ++i) u = u + c[i] * basis[i];
    const std::optional<Vector> coeffs = solve_linear(m, to_base_coords(brown_mul(u, involution(u))));
    if (!coeffs) throw StructureError("u bar(u) left H");
    return (*coeffs)[0];
  });
}

}  // namespace e6geom
