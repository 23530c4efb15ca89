#include "e6geom/octonion.hpp"

namespace e6geom {

namespace {

Scalar dot3(const Vec3& x, const Vec3& y) { return x[0] * y[0] + x[1] * y[1] + x[2] * y[2]; }

Vec3 cross3(const Vec3& x, const Vec3& y) {
  return {x[1] * y[2] - x[2] * y[1], x[2] * y[0] - x[0] * y[2], x[0] * y[1] - x[1] * y[0]};
}

Vec3 add3(const Vec3& x, const Vec3& y) { return {x[0] + y[0], x[1] + y[1], x[2] + y[2]}; }
Vec3 sub3(const Vec3& x, const Vec3& y) { return {x[0] - y[0], x[1] - y[1], x[2] - y[2]}; }
Vec3 scale3(const Scalar& c, const Vec3& x) { return {c * x[0], c * x[1], c * x[2]}; }
Vec3 neg3(const Vec3& x) { return {-x[0], -x[1], -x[2]}; }

}  // namespace

Octonion Octonion::zero(const QuadExt& k) {
  const Scalar z = k.zero();
  return {z, {z, z, z}, {z, z, z}, z};
}

Octonion Octonion::one(const QuadExt& k) { return scalar(k.one()); }

Octonion Octonion::scalar(const Scalar& c) {
  const Scalar z = c.field() ? c.field()->zero() : Scalar{};
  return {c, {z, z, z}, {z, z, z}, c};
}

Octonion Octonion::from_coords(const Scalar* c) {
  return {c[0], {c[1], c[2], c[3]}, {c[4], c[5], c[6]}, c[7]};
}

void Octonion::write_coords(Scalar* out) const {
  out[0] = a;
  for (int i = 0; i < 3; ++i) out[1 + i] = v[i];
  for (int i = 0; i < 3; ++i) out[4 + i] = w[i];
  out[7] = b;
}

Vector Octonion::coords() const {
  Vector c(kDim);
  write_coords(c.data());
  return c;
}

bool Octonion::is_zero() const {
  return a.is_zero() && b.is_zero() && v[0].is_zero() && v[1].is_zero() && v[2].is_zero() &&
         w[0].is_zero() && w[1].is_zero() && w[2].is_zero();
}

Octonion operator+(const Octonion& x, const Octonion& y) {
  return {x.a + y.a, add3(x.v, y.v), add3(x.w, y.w), x.b + y.b};
}

Octonion operator-(const Octonion& x, const Octonion& y) {
  return {x.a - y.a, sub3(x.v, y.v), sub3(x.w, y.w), x.b - y.b};
}

Octonion operator-(const Octonion& x) { return {-x.a, neg3(x.v), neg3(x.w), -x.b}; }

Octonion operator*(const Scalar& c, const Octonion& x) {
  return {c * x.a, scale3(c, x.v), scale3(c, x.w), c * x.b};
}

Octonion operator*(const Octonion& x, const Octonion& y) {
  // (a1 a2 + v1.w2,  a1 v2 + b2 v1 - w1 x w2;
  //  a2 w1 + b1 w2 + v1 x v2,  b1 b2 + w1.v2)
  return {x.a * y.a + dot3(x.v, y.w),
          sub3(add3(scale3(x.a, y.v), scale3(y.b, x.v)), cross3(x.w, y.w)),
          add3(add3(scale3(y.a, x.w), scale3(x.b, y.w)), cross3(x.v, y.v)),
          x.b * y.b + dot3(x.w, y.v)};
}

Scalar norm(const Octonion& x) { return x.a * x.b - dot3(x.v, x.w); }

Scalar trace(const Octonion& x) { return x.a + x.b; }

Octonion conj(const Octonion& x) { return {x.b, neg3(x.v), neg3(x.w), x.a}; }

Scalar polar(const Octonion& x, const Octonion& y) {
  return x.a * y.b + x.b * y.a - dot3(x.v, y.w) - dot3(y.v, x.w);
}

Octonion galois(const Octonion& x) {
  return {x.a.conj(),
          {x.v[0].conj(), x.v[1].conj(), x.v[2].conj()},
          {x.w[0].conj(), x.w[1].conj(), x.w[2].conj()},
          x.b.conj()};
}

NormTraceConj oct_norm_trace_conj(const Octonion& x) { return {norm(x), trace(x), conj(x)}; }

Octonion random_octonion(const QuadExt& k, std::mt19937_64& rng, Domain dom) {
  std::array<Scalar, Octonion::kDim> c;
  for (auto& ci : c) ci = random_element(k, rng, false, dom);
  return Octonion::from_coords(c.data());
}

QuadraticForm octonion_norm_form(const QuadExt& k, Domain dom) {
  return QuadraticForm::from_evaluator(k, Octonion::kDim, dom, [](const Vector& c) {
    return norm(Octonion::from_coords(c.data()));
  });
}

}  // namespace e6geom
