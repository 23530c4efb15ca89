#include "e6geom/geometry.hpp"

#include <sstream>

namespace e6geom {

namespace {

constexpr std::size_t kSamplingCap = 10'000;

// Sum of products in K with a single reduction; fine for a few dozen terms
// since each partial product is below p^2 < 2^32.
struct LazySum {
  std::uint64_t re = 0, im = 0, dd = 0;
  void add(const Scalar& x, const Scalar& y) {
    re += std::uint64_t{x.re()} * y.re();
    dd += std::uint64_t{x.im()} * y.im();
    im += std::uint64_t{x.re()} * y.im() + std::uint64_t{x.im()} * y.re();
  }
  Scalar value(const QuadExt& k) const {
    const std::uint64_t p = k.characteristic();
    return k.make(static_cast<std::uint32_t>((re + (dd % p) * k.nonsquare()) % p),
                  static_cast<std::uint32_t>(im % p));
  }
};

}  // namespace

Line Line::from_generator(const AlbertElement& g) {
  if (rank(g) != 1) throw NotRankOne("line generator must have rank 1");
  AlbertElement n = normalize_projective(g);
  AlbertElement s = galois(n);
  Subspace v = cross_space(n);
  Subspace sv = cross_space(s);
  return Line(std::move(n), std::move(s), std::move(v), std::move(sv));
}

std::string_view to_string(Position p) {
  switch (p) {
    case Position::Coincide: return "coincide";
    case Position::Incident: return "incident";
    case Position::Special: return "special";
    case Position::General: return "general";
  }
  return "?";
}

bool incident(const Point& p, const Line& l) {
  const bool direct = l.space().contains(p.e().coords());
  const bool conjugate = l.sigma_space().contains(p.quaternion().sigma_e().coords());
  if (direct != conjugate) throw StructureError("incidence disagrees with its Galois conjugate");
  return direct;
}

Position line_position(const Line& a, const Line& b) {
  Position pos;
  std::size_t expected;
  if (a == b) {
    pos = Position::Coincide;
    expected = 10;
  } else if (cross(a.g(), b.g()).is_zero()) {
    pos = Position::Special;
    expected = 5;
  } else {
    pos = Position::General;
    expected = 1;
  }
  const std::size_t d = intersect(a.space(), b.space()).dim();
  if (d != expected) {
    throw StructureError("lines in " + std::string(to_string(pos)) + " position meet in dimension " +
                         std::to_string(d));
  }
  return pos;
}

Position point_position(const Point& a, const Point& b) {
  if (a == b) return Position::Coincide;
  if (cross(a.e(), b.e()).is_zero()) return Position::Special;
  return Position::General;
}

Position point_line_position(const Point& p, const Line& l) {
  if (incident(p, l)) return Position::Incident;
  if (trace_form(p.e(), l.g()).is_zero()) return Position::Special;
  return Position::General;
}

Line join(const Point& a, const Point& b) {
  const AlbertElement g = cross(a.e(), b.e());
  if (g.is_zero()) throw SpecialPosition("e1 x e2 = 0; no join through the cross product");
  Line l = Line::from_generator(g);
  if (!incident(a, l) || !incident(b, l)) throw StructureError("join is not incident to its points");
  return l;
}

std::optional<Point> meet(const Line& a, const Line& b) {
  if (line_position(a, b) != Position::General)
    throw NotGeneralPosition("meet needs two lines in general position");
  const AlbertElement c = cross(a.g(), b.g());
  if (rank(c) != 1) throw StructureError("g1 x g2 does not have rank 1");
  const AlbertElement cn = normalize_projective(c);
  if (trace_form(cn, galois(cn)).is_zero()) return std::nullopt;
  Point p = Point::from_generator(cn);
  if (!incident(p, a) || !incident(p, b)) throw StructureError("meet is not incident to both lines");
  return p;
}

SpecialIntersection common_points_special(const Line& a, const Line& b,
                                          const std::function<void(const Point&)>& visit) {
  if (line_position(a, b) != Position::Special)
    throw NotSpecialPosition("common_points_special needs two lines in special position");
  SpecialIntersection out{intersect(a.space(), b.space())};
  const Subspace& w = out.common;
  const QuadExt& k = w.field();
  const std::size_t m = w.dim();

  std::vector<AlbertElement> basis;
  for (const Vector& v : w.basis_vectors()) basis.push_back(AlbertElement::from_coords(v));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j)
      if (!cross(basis[i], basis[j]).is_zero())
        throw StructureError("cross product does not vanish on V1 n V2");

  // h(sum c_i w_i) = sum c_i conj(c_j) T(w_i, s(w_j)).
  std::vector<std::vector<Scalar>> herm(m, std::vector<Scalar>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) herm[i][j] = trace_form(basis[i], galois(basis[j]));
  out.hermitian_rank = rref_rank(Matrix::from_rows(k, herm, m)).rank;

  const std::uint64_t q = k.size();
  const Matrix& rows = w.basis();
  std::vector<std::uint64_t> idx(m);
  Vector c(m);
  Vector coords(AlbertElement::kDim);
  for (std::size_t lead = 0; lead < m; ++lead) {
    std::fill(idx.begin(), idx.end(), 0);
    std::fill(c.begin(), c.end(), k.zero());
    c[lead] = k.one();
    while (true) {
      ++out.total_classes;
      for (std::size_t col = 0; col < AlbertElement::kDim; ++col) {
        LazySum s;
        for (std::size_t r = lead; r < m; ++r) s.add(c[r], rows(r, col));
        coords[col] = s.value(k);
      }
      Scalar h = k.zero();
      for (std::size_t i = lead; i < m; ++i) {
        if (c[i].is_zero()) continue;
        Scalar row = k.zero();
        for (std::size_t j = lead; j < m; ++j)
          if (!c[j].is_zero()) row += herm[i][j] * c[j].conj();
        h += c[i] * row;
      }
      if (h.is_zero()) {
        ++out.isotropic_classes;
      } else {
        const Point p = Point::from_generator(AlbertElement::from_coords(coords));
        if (!incident(p, a) || !incident(p, b))
          throw StructureError("common point is not incident to both lines");
        ++out.point_classes;
        if (visit) visit(p);
      }
      // Odometer over the free coordinates after the leading one.
      std::size_t pos = lead + 1;
      while (pos < m) {
        if (++idx[pos] < q) {
          c[pos] = k.element(idx[pos]);
          break;
        }
        idx[pos] = 0;
        c[pos] = k.zero();
        ++pos;
      }
      if (pos >= m) break;
    }
  }
  return out;
}

std::vector<Point> common_points_special_list(const Line& a, const Line& b) {
  std::vector<Point> pts;
  common_points_special(a, b, [&pts](const Point& p) { pts.push_back(p); });
  return pts;
}

// ---------------------------------------------------------------------------

AlbertElement LineQuadric::element(const Vector& coeffs) const {
  return AlbertElement::from_coords(line_.space().combine(coeffs));
}

Scalar LineQuadric::lambda(const AlbertElement& v) const {
  const AlbertElement a = adjoint(v);
  const Scalar l = a.coords()[pivot_];
  if (!(a == l * line_.g())) throw StructureError("v# is not a multiple of the line generator");
  return l;
}

AlbertElement LineQuadric::sample_isotropic(std::mt19937_64& rng) const {
  const QuadExt& k = form_.field();
  const auto& pairs = witt_.hyperbolic_pairs;
  if (pairs.empty()) throw StructureError("line quadric has no hyperbolic pairs");
  Vector c = zero_vector(k, form_.dim());
  Scalar rest = k.zero();
  const Scalar x0 = random_element(k, rng, true);
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    const Scalar x = random_element(k, rng);
    const Scalar y = random_element(k, rng);
    c = c + x * pairs[i].first + y * pairs[i].second;
    rest += x * y;
  }
  c = c + x0 * pairs[0].first + (-(rest / x0)) * pairs[0].second;
  return element(c);
}

LineQuadric line_quadric(const Line& l) {
  const Vector gc = l.g().coords();
  std::size_t pivot = 0;
  while (gc[pivot].is_zero()) ++pivot;
  const QuadExt& k = l.space().field();

  LineQuadric proto(l, pivot, QuadraticForm(Matrix(k, 0, 0), Domain::Extension));
  QuadraticForm form = QuadraticForm::from_evaluator(
      k, l.space().dim(), Domain::Extension,
      [proto](const Vector& c) { return proto.lambda(proto.element(c)); });
  LineQuadric out(l, pivot, std::move(form));
  out.witt_ = witt_decompose(out.form_);
  if (out.form_.dim() != 10 || out.rank() != 10 || out.witt_.radical_dim != 0 ||
      out.witt_.witt_index != 5) {
    std::ostringstream msg;
    msg << "line quadric has dim " << out.form_.dim() << ", radical " << out.witt_.radical_dim
        << ", Witt index " << out.witt_.witt_index;
    throw StructureError(msg.str());
  }
  return out;
}

std::vector<Point> points_on_line(const Line& l, std::size_t budget, std::mt19937_64& rng) {
  const LineQuadric quad = line_quadric(l);
  std::vector<Point> out;
  for (std::size_t draw = 0; draw < 10 * budget && out.size() < budget; ++draw) {
    const AlbertElement e = quad.sample_isotropic(rng);
    if (rank(e) != 1) throw StructureError("zero of the line quadric does not have rank 1");
    const AlbertElement en = normalize_projective(e);
    if (trace_form(en, galois(en)).is_zero()) continue;
    Point p = Point::from_generator(en);
    if (!incident(p, l)) throw StructureError("sampled point is not on its line");
    bool seen = false;
    for (const Point& o : out) seen = seen || o == p;
    if (!seen) out.push_back(std::move(p));
  }
  return out;
}

Chain chain(const Point& start, const Point& end, std::mt19937_64& rng, std::size_t budget) {
  if (start == end) throw StructureError("chain endpoints coincide");
  const QuadExt& k = start.quaternion().field();
  std::size_t rejected_special = 0, rejected_degenerate = 0;
  for (std::size_t trial = 1; trial <= budget; ++trial) {
    const Point mid = random_point(k, rng);
    if (mid == start || mid == end) {
      ++rejected_degenerate;
      continue;
    }
    if (cross(start.e(), mid.e()).is_zero() || cross(end.e(), mid.e()).is_zero()) {
      ++rejected_special;
      continue;
    }
    Line first = join(start, mid);
    Line second = join(end, mid);
    if (first == second) {
      ++rejected_degenerate;
      continue;
    }
    if (!incident(start, first) || !incident(mid, first) || !incident(mid, second) ||
        !incident(end, second))
      throw StructureError("chain incidence failed");
    return Chain{start, std::move(first), mid, std::move(second), end, trial};
  }
  std::ostringstream msg;
  msg << budget << " trials: " << rejected_special << " special-position middles, "
      << rejected_degenerate << " degenerate chains";
  throw BudgetExhausted(msg.str());
}

Point random_point(const QuadExt& k, std::mt19937_64& rng) {
  for (std::size_t i = 0; i < kSamplingCap; ++i) {
    const AlbertElement e = normalize_projective(sample_rank1(k, rng));
    if (!trace_form(e, galois(e)).is_zero()) return Point::from_generator(e);
  }
  throw StructureError("no rank-1 element with h != 0 found");
}

Line random_line(const QuadExt& k, std::mt19937_64& rng) {
  return Line::from_generator(sample_rank1(k, rng));
}

std::pair<Line, Line> make_special_pair(const QuadExt& k, std::mt19937_64& rng) {
  const LineQuadric quad = line_quadric(random_line(k, rng));
  const Subspace& v = quad.line().space();
  const AlbertElement u = quad.sample_isotropic(rng);
  const Vector cu = *v.coordinates(u.coords());
  // u^perp inside g x A, in quadric coordinates.
  Matrix row(k, 1, cu.size());
  for (std::size_t i = 0; i < cu.size(); ++i) row(0, i) = quad.form().polar(cu, unit_vector(k, cu.size(), i));
  const Subspace perp = kernel(row);
  const Subspace line_u = Subspace::span(k, cu.size(), {cu});
  for (std::size_t i = 0; i < kSamplingCap; ++i) {
    Vector coeffs(perp.dim());
    for (auto& c : coeffs) c = random_element(k, rng);
    const Vector cw = perp.combine(coeffs);
    if (is_zero(cw) || line_u.contains(cw) || !quad.form().value(cw).is_zero()) continue;
    return {Line::from_generator(u), Line::from_generator(quad.element(cw))};
  }
  throw StructureError("no second isotropic vector orthogonal to the first");
}

}  // namespace e6geom
