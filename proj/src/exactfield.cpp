#include "e6geom/exactfield.hpp"

#include <ostream>
#include <sstream>

namespace e6geom {

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p), magic_(0) {
  if (p < 5 || !is_prime(p)) {
    throw FieldError("modulus " + std::to_string(p) + " is not a prime >= 5");
  }
  if (p > kMaxModulus) {
    throw FieldError("modulus " + std::to_string(p) + " exceeds " +
                     std::to_string(kMaxModulus));
  }
  magic_ = UINT64_C(0xFFFFFFFFFFFFFFFF) / p + 1;
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const noexcept {
  std::uint32_t result = 1 % p_;
  std::uint32_t base = reduce(a);
  while (e) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  a = reduce(a);
  if (a == 0) throw DivisionByZero("inverse of 0 in F_" + std::to_string(p_));
  return pow(a, p_ - 2);
}

std::uint32_t PrimeField::from_int(std::int64_t v) const noexcept {
  const std::int64_t m = v % static_cast<std::int64_t>(p_);
  return static_cast<std::uint32_t>(m < 0 ? m + p_ : m);
}

bool PrimeField::is_square(std::uint32_t a) const noexcept {
  a = reduce(a);
  return a == 0 || pow(a, (p_ - 1) / 2) == 1;
}

QuadExt::QuadExt(std::uint32_t p, std::uint32_t d) : base_(p), d_(0) {
  const std::uint32_t r = d % p;
  if (base_.is_square(r)) {
    throw FieldError("d = " + std::to_string(d) + " is a square mod " + std::to_string(p));
  }
  d_ = r;
}

Scalar QuadExt::zero() const noexcept { return Scalar(*this, 0, 0); }
Scalar QuadExt::one() const noexcept { return Scalar(*this, 1, 0); }
Scalar QuadExt::sqrt_d() const noexcept { return Scalar(*this, 0, 1); }

Scalar QuadExt::make(std::uint32_t a, std::uint32_t b) const noexcept {
  return Scalar(*this, a % base_.modulus(), b % base_.modulus());
}

Scalar QuadExt::from_int(std::int64_t v) const noexcept {
  return Scalar(*this, base_.from_int(v), 0);
}

Scalar QuadExt::element(std::uint64_t index) const noexcept {
  const std::uint32_t p = base_.modulus();
  return Scalar(*this, static_cast<std::uint32_t>(index % p),
                static_cast<std::uint32_t>((index / p) % p));
}

Scalar Scalar::norm() const noexcept {
  if (!k_) return {};
  const PrimeField& f = k_->base();
  return Scalar(*k_, f.sub(f.mul(a_, a_), f.mul(f.mul(b_, b_), k_->nonsquare())), 0);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of 0");
  const std::uint32_t n_inv = k_->base().inv(norm().re());
  const Scalar c = conj();
  const PrimeField& f = k_->base();
  return Scalar(*k_, f.mul(c.a_, n_inv), f.mul(c.b_, n_inv));
}

Scalar Scalar::pow(std::uint64_t e) const {
  if (!k_) return {};
  Scalar result = k_->one();
  Scalar base = *this;
  while (e) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& x) {
  if (x.im() == 0) return os << x.re();
  return os << x.re() << ':' << x.im();
}

Scalar field_arith(const Scalar& x, const Scalar& y, ArithOp op) {
  switch (op) {
    case ArithOp::Add: return x + y;
    case ArithOp::Sub: return x - y;
    case ArithOp::Mul: return x * y;
    case ArithOp::Div: return x / y;
  }
  return {};
}

bool is_square(const Scalar& x) {
  if (!x.in_base()) throw FieldError("is_square expects a prime-field element");
  if (x.is_zero()) return true;
  return x.field()->base().is_square(x.re());
}

bool is_square_in_extension(const Scalar& x) {
  // x is a square in K* iff its norm to F_p is a square there.
  if (x.is_zero()) return true;
  return is_square(x.norm());
}

Scalar random_element(const QuadExt& k, std::mt19937_64& rng, bool nonzero, Domain dom) {
  const std::uint64_t n = k.size(dom);
  std::uniform_int_distribution<std::uint64_t> dist(nonzero ? 1 : 0, n - 1);
  return k.element(dist(rng));
}

}  // namespace e6geom
