#include "e6geom/albert.hpp"

namespace e6geom {

namespace {

const QuadExt& field_of(const AlbertElement& p) {
  for (const Scalar& s : p.xi)
    if (s.field()) return *s.field();
  for (const Octonion& o : p.x) {
    if (o.a.field()) return *o.a.field();
    if (o.b.field()) return *o.b.field();
    for (int i = 0; i < 3; ++i) {
      if (o.v[i].field()) return *o.v[i].field();
      if (o.w[i].field()) return *o.w[i].field();
    }
  }
  throw FieldError("Albert element is not bound to a field");
}

using OctMatrix = std::array<std::array<Octonion, 3>, 3>;

OctMatrix as_matrix(const AlbertElement& p) {
  OctMatrix m;
  for (int i = 0; i < 3; ++i) m[i][i] = Octonion::scalar(p.xi[i]);
  m[0][1] = p.x[2];
  m[0][2] = conj(p.x[1]);
  m[1][0] = conj(p.x[2]);
  m[1][2] = p.x[0];
  m[2][0] = p.x[1];
  m[2][1] = conj(p.x[0]);
  return m;
}

OctMatrix mat_mul(const OctMatrix& a, const OctMatrix& b) {
  OctMatrix c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

}  // namespace

AlbertElement AlbertElement::zero(const QuadExt& k) {
  AlbertElement p;
  p.xi = {k.zero(), k.zero(), k.zero()};
  p.x = {Octonion::zero(k), Octonion::zero(k), Octonion::zero(k)};
  return p;
}

AlbertElement AlbertElement::identity(const QuadExt& k) {
  return diagonal(k.one(), k.one(), k.one());
}

AlbertElement AlbertElement::idempotent(const QuadExt& k, int i) {
  if (i < 1 || i > 3) throw StructureError("idempotent index must be 1, 2 or 3");
  AlbertElement p = zero(k);
  p.xi[i - 1] = k.one();
  return p;
}

AlbertElement AlbertElement::diagonal(const Scalar& a, const Scalar& b, const Scalar& c) {
  const QuadExt* k = a.field() ? a.field() : (b.field() ? b.field() : c.field());
  if (!k) throw FieldError("diagonal element needs a bound scalar");
  AlbertElement p = zero(*k);
  p.xi = {a, b, c};
  return p;
}

AlbertElement AlbertElement::from_coords(const Vector& c) {
  if (c.size() != kDim) throw AmbientMismatch("Albert element needs 27 coordinates");
  AlbertElement p;
  for (int i = 0; i < 3; ++i) p.xi[i] = c[i];
  for (int i = 0; i < 3; ++i) p.x[i] = Octonion::from_coords(c.data() + 3 + 8 * i);
  return p;
}

Vector AlbertElement::coords() const {
  Vector c(kDim);
  for (int i = 0; i < 3; ++i) c[i] = xi[i];
  for (int i = 0; i < 3; ++i) x[i].write_coords(c.data() + 3 + 8 * i);
  return c;
}

bool AlbertElement::is_zero() const {
  return xi[0].is_zero() && xi[1].is_zero() && xi[2].is_zero() && x[0].is_zero() &&
         x[1].is_zero() && x[2].is_zero();
}

AlbertElement operator+(const AlbertElement& p, const AlbertElement& q) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = p.xi[i] + q.xi[i];
    r.x[i] = p.x[i] + q.x[i];
  }
  return r;
}

AlbertElement operator-(const AlbertElement& p, const AlbertElement& q) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = p.xi[i] - q.xi[i];
    r.x[i] = p.x[i] - q.x[i];
  }
  return r;
}

AlbertElement operator-(const AlbertElement& p) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = -p.xi[i];
    r.x[i] = -p.x[i];
  }
  return r;
}

AlbertElement operator*(const Scalar& c, const AlbertElement& p) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = c * p.xi[i];
    r.x[i] = c * p.x[i];
  }
  return r;
}

AlbertElement galois(const AlbertElement& p) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[i] = p.xi[i].conj();
    r.x[i] = galois(p.x[i]);
  }
  return r;
}

AlbertElement jordan_mul(const AlbertElement& p, const AlbertElement& q) {
  const QuadExt& k = field_of(p);
  const OctMatrix mp = as_matrix(p);
  const OctMatrix mq = as_matrix(q);
  const OctMatrix a = mat_mul(mp, mq);
  const OctMatrix b = mat_mul(mq, mp);
  const Scalar half = k.from_int(2).inverse();
  AlbertElement r;
  for (int i = 0; i < 3; ++i) r.xi[i] = half * (a[i][i].a + b[i][i].a);
  r.x[0] = half * (a[1][2] + b[1][2]);
  r.x[1] = half * (a[2][0] + b[2][0]);
  r.x[2] = half * (a[0][1] + b[0][1]);
  return r;
}

Scalar trace(const AlbertElement& p) { return p.xi[0] + p.xi[1] + p.xi[2]; }

Scalar trace_form(const AlbertElement& p, const AlbertElement& q) {
  Scalar s;
  for (int i = 0; i < 3; ++i) s += p.xi[i] * q.xi[i] + polar(p.x[i], q.x[i]);
  return s;
}

Scalar norm(const AlbertElement& p) {
  return p.xi[0] * p.xi[1] * p.xi[2] - p.xi[0] * norm(p.x[0]) - p.xi[1] * norm(p.x[1]) -
         p.xi[2] * norm(p.x[2]) + trace((p.x[0] * p.x[1]) * p.x[2]);
}

Scalar dnorm(const AlbertElement& p, const AlbertElement& q) {
  const QuadExt& k = field_of(p.is_zero() ? q : p);
  auto at = [&](int t) { return norm(p + k.from_int(t) * q); };
  const Scalar fm2 = at(-2), fm1 = at(-1), f0 = norm(p), f1 = at(1), f2 = at(2);
  // A cubic has vanishing fourth finite difference.
  const Scalar fourth = fm2 - k.from_int(4) * fm1 + k.from_int(6) * f0 - k.from_int(4) * f1 + f2;
  if (!fourth.is_zero()) throw StructureError("norm is not cubic along a line");
  return (k.from_int(8) * (f1 - fm1) - (f2 - fm2)) * k.from_int(12).inverse();
}

AlbertElement adjoint(const AlbertElement& p) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    r.xi[i] = p.xi[j] * p.xi[l] - norm(p.x[i]);
    r.x[i] = conj(p.x[j] * p.x[l]) - p.xi[i] * p.x[i];
  }
  return r;
}

AlbertElement cross(const AlbertElement& p, const AlbertElement& q) {
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    r.xi[i] = p.xi[j] * q.xi[l] + q.xi[j] * p.xi[l] - polar(p.x[i], q.x[i]);
    r.x[i] = conj(p.x[j] * q.x[l] + q.x[j] * p.x[l]) - p.xi[i] * q.x[i] - q.xi[i] * p.x[i];
  }
  return r;
}

int rank(const AlbertElement& p) {
  if (p.is_zero()) return 0;
  if (adjoint(p).is_zero()) return 1;
  if (norm(p).is_zero()) return 2;
  return 3;
}

AlbertElement normalize_projective(const AlbertElement& p) {
  const Vector c = p.coords();
  for (const Scalar& s : c)
    if (!s.is_zero()) return s.inverse() * p;
  return p;
}

AlbertElement random_albert(const QuadExt& k, std::mt19937_64& rng, Domain dom) {
  AlbertElement p;
  for (auto& s : p.xi) s = random_element(k, rng, false, dom);
  for (auto& o : p.x) o = random_octonion(k, rng, dom);
  return p;
}

AlbertElement cyclic_shift(const AlbertElement& p, int shift) {
  shift = ((shift % 3) + 3) % 3;
  AlbertElement r;
  for (int i = 0; i < 3; ++i) {
    r.xi[(i + shift) % 3] = p.xi[i];
    r.x[(i + shift) % 3] = p.x[i];
  }
  return r;
}

AlbertElement sample_rank1(const QuadExt& k, std::mt19937_64& rng, Domain dom) {
  constexpr int kMaxAttempts = 1000;
  std::uniform_int_distribution<int> shift_dist(0, 2);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const Scalar xi1 = random_element(k, rng, true, dom);
    const Octonion x2 = random_octonion(k, rng, dom);
    const Octonion x3 = random_octonion(k, rng, dom);
    const Scalar inv = xi1.inverse();
    AlbertElement e;
    e.xi = {xi1, inv * norm(x3), inv * norm(x2)};
    e.x = {inv * conj(x2 * x3), x2, x3};
    e = cyclic_shift(e, shift_dist(rng));
    if (rank(e) == 1) return e;
  }
  throw StructureError("sample_rank1 failed to produce a rank-1 element");
}

Matrix cross_operator(const AlbertElement& e) {
  const QuadExt& k = field_of(e);
  Matrix m(k, AlbertElement::kDim, AlbertElement::kDim);
  for (std::size_t c = 0; c < AlbertElement::kDim; ++c) {
    const Vector col =
        cross(e, AlbertElement::from_coords(unit_vector(k, AlbertElement::kDim, c))).coords();
    for (std::size_t r = 0; r < AlbertElement::kDim; ++r) m(r, c) = col[r];
  }
  return m;
}

Subspace cross_space(const AlbertElement& e) {
  if (rank(e) != 1) throw RankError("cross_space needs a rank-1 element");
  return Subspace::row_space(cross_operator(e).transpose());
}

Matrix trace_gram(const QuadExt& k) {
  std::vector<AlbertElement> units;
  for (std::size_t i = 0; i < AlbertElement::kDim; ++i)
    units.push_back(AlbertElement::from_coords(unit_vector(k, AlbertElement::kDim, i)));
  Matrix g(k, AlbertElement::kDim, AlbertElement::kDim);
  for (std::size_t i = 0; i < AlbertElement::kDim; ++i)
    for (std::size_t j = 0; j < AlbertElement::kDim; ++j) g(i, j) = trace_form(units[i], units[j]);
  return g;
}

}  // namespace e6geom
