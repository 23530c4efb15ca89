#include "e6geom/weylcomb.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "e6geom/errors.hpp"

namespace e6geom {

namespace {

constexpr std::array<std::array<int, 2>, 5> kDynkinEdges{{{1, 3}, {3, 4}, {4, 5}, {5, 6}, {2, 4}}};

struct PermHash {
  std::size_t operator()(const Permutation& p) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (std::uint8_t b : p) h = (h ^ b) * 1099511628211ULL;
    return static_cast<std::size_t>(h);
  }
};

Permutation compose(const Permutation& outer, const Permutation& inner) {
  Permutation out;
  for (std::size_t r = 0; r < out.size(); ++r) out[r] = outer[inner[r]];
  return out;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

LabelSet levi_of(const LabelSet& labels) {
  LabelSet out;
  for (int i = 1; i <= 6; ++i)
    if (!labels.count(i)) out.insert(i);
  return out;
}

std::size_t RootSystemE6::index_of(const Root& r) const {
  const auto it = std::find(roots.begin(), roots.end(), r);
  if (it == roots.end()) throw StructureError("not a root");
  return static_cast<std::size_t>(it - roots.begin());
}

Root RootSystemE6::reflect(int label, const Root& r) const {
  int pairing = 0;
  for (int j = 0; j < 6; ++j) pairing += r[j] * cartan[label - 1][j];
  Root out = r;
  out[label - 1] -= pairing;
  return out;
}

int RootSystemE6::height(std::size_t root) const {
  return std::accumulate(roots[root].begin(), roots[root].end(), 0);
}

RootSystemE6 build_e6() {
  RootSystemE6 rs{};
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) rs.cartan[i][j] = i == j ? 2 : 0;
  for (const auto& [a, b] : kDynkinEdges) rs.cartan[a - 1][b - 1] = rs.cartan[b - 1][a - 1] = -1;

  std::deque<Root> queue;
  for (int i = 0; i < 6; ++i) {
    Root r{};
    r[i] = 1;
    rs.roots.push_back(r);
    queue.push_back(r);
  }
  while (!queue.empty()) {
    const Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= 6; ++i) {
      const Root s = rs.reflect(i, r);
      if (std::find(rs.roots.begin(), rs.roots.end(), s) == rs.roots.end()) {
        rs.roots.push_back(s);
        queue.push_back(s);
      }
    }
  }
  if (rs.roots.size() != RootSystemE6::kRoots)
    throw StructureError("E6 closure produced " + std::to_string(rs.roots.size()) + " roots");
  for (const Root& r : rs.roots) {
    const bool pos = std::all_of(r.begin(), r.end(), [](int c) { return c >= 0; });
    const bool neg = std::all_of(r.begin(), r.end(), [](int c) { return c <= 0; });
    if (pos == neg) throw StructureError("root is neither positive nor negative");
    rs.positive.push_back(pos);
  }
  for (int i = 0; i < 6; ++i) rs.simple[i] = static_cast<std::size_t>(i);
  return rs;
}

WeylGroup::WeylGroup(RootSystemE6 rs) : rs_(std::move(rs)) {
  std::array<Permutation, 6> gens;
  for (int i = 1; i <= 6; ++i)
    for (std::size_t r = 0; r < RootSystemE6::kRoots; ++r)
      gens[i - 1][r] = static_cast<std::uint8_t>(rs_.index_of(rs_.reflect(i, rs_.roots[r])));

  auto length_of = [this](const Permutation& p) {
    int len = 0;
    for (std::size_t r = 0; r < p.size(); ++r)
      if (rs_.positive[r] && !rs_.positive[p[r]]) ++len;
    return len;
  };

  Permutation id;
  for (std::size_t r = 0; r < id.size(); ++r) id[r] = static_cast<std::uint8_t>(r);
  std::unordered_map<Permutation, std::uint32_t, PermHash> index;
  elements_.push_back({id, 0});
  index.emplace(id, 0);
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    for (int i = 0; i < 6; ++i) {
      const Permutation p = compose(elements_[w].perm, gens[i]);
      if (index.emplace(p, static_cast<std::uint32_t>(elements_.size())).second)
        elements_.push_back({p, length_of(p)});
    }
  }
  for (int i = 0; i < 6; ++i) {
    left_[i].resize(elements_.size());
    right_[i].resize(elements_.size());
    for (std::size_t w = 0; w < elements_.size(); ++w) {
      left_[i][w] = index.at(compose(gens[i], elements_[w].perm));
      right_[i][w] = index.at(compose(elements_[w].perm, gens[i]));
    }
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      int expected = i == j ? 1 : (rs_.cartan[i - 1][j - 1] == -1 ? 3 : 2);
      if (coxeter_order(i, j) != expected)
        throw StructureError("Coxeter relation fails for s" + std::to_string(i) + " s" +
                             std::to_string(j));
    }
}

std::size_t WeylGroup::longest() const {
  return static_cast<std::size_t>(
      std::max_element(elements_.begin(), elements_.end(),
                       [](const WeylElement& a, const WeylElement& b) { return a.length < b.length; }) -
      elements_.begin());
}

int WeylGroup::coxeter_order(int i, int j) const {
  std::size_t w = identity();
  for (int m = 1; m <= 12; ++m) {
    w = right(j, right(i, w));
    if (w == identity()) return m;
  }
  return 0;
}

WeylGroup generate_weyl(const RootSystemE6& rs) { return WeylGroup(rs); }

const WeylGroup& weyl_e6() {
  static const WeylGroup group(build_e6());
  return group;
}

std::vector<std::uint32_t> double_coset_labels(const WeylGroup& w, const LabelSet& j1,
                                               const LabelSet& j2) {
  UnionFind uf(w.order());
  for (std::size_t x = 0; x < w.order(); ++x) {
    for (int i : j1) uf.unite(x, w.left(i, x));
    for (int i : j2) uf.unite(x, w.right(i, x));
  }
  // Order the cosets by their minimal length, then by the index of the
  // minimal element, so labels are deterministic.
  std::map<std::size_t, std::size_t> best;  // root -> minimal element
  for (std::size_t x = 0; x < w.order(); ++x) {
    const std::size_t r = uf.find(x);
    auto it = best.find(r);
    if (it == best.end() || w.length(x) < w.length(it->second)) best[r] = x;
  }
  std::vector<std::pair<std::size_t, std::size_t>> order;  // (min element, root)
  for (const auto& [root, m] : best) order.emplace_back(m, root);
  std::sort(order.begin(), order.end(), [&w](const auto& a, const auto& b) {
    return std::make_pair(w.length(a.first), a.first) < std::make_pair(w.length(b.first), b.first);
  });
  std::map<std::size_t, std::uint32_t> label;
  for (std::size_t i = 0; i < order.size(); ++i) label[order[i].second] = static_cast<std::uint32_t>(i);
  std::vector<std::uint32_t> out(w.order());
  for (std::size_t x = 0; x < w.order(); ++x) out[x] = label[uf.find(x)];
  return out;
}

std::vector<DoubleCoset> double_cosets(const WeylGroup& w, const LabelSet& j1, const LabelSet& j2) {
  const std::vector<std::uint32_t> labels = double_coset_labels(w, j1, j2);
  const std::size_t n = labels.empty() ? 0 : *std::max_element(labels.begin(), labels.end()) + 1;
  std::vector<DoubleCoset> out(n, DoubleCoset{0, -1, 0, 0});
  for (std::size_t x = 0; x < w.order(); ++x) {
    DoubleCoset& d = out[labels[x]];
    ++d.size;
    if (d.min_length < 0 || w.length(x) < d.min_length) {
      d.representative = x;
      d.min_length = w.length(x);
      d.minimal_count = 1;
    } else if (w.length(x) == d.min_length) {
      ++d.minimal_count;
    }
  }
  return out;
}

HasseDiagram hasse_v6(const RootSystemE6& rs) {
  HasseDiagram h;
  h.weights.push_back({0, 0, 0, 0, 0, 1});
  for (std::size_t n = 0; n < h.weights.size(); ++n) {
    for (int i = 1; i <= 6; ++i) {
      const Root mu = h.weights[n];
      if (mu[i - 1] <= 0) continue;
      Root next = mu;
      for (int j = 0; j < 6; ++j) next[j] -= rs.cartan[i - 1][j];
      auto it = std::find(h.weights.begin(), h.weights.end(), next);
      std::size_t to = static_cast<std::size_t>(it - h.weights.begin());
      if (it == h.weights.end()) h.weights.push_back(next);
      h.edges.push_back({n, to, i});
    }
  }
  return h;
}

std::size_t hasse_and_cut(const HasseDiagram& h, int label) {
  if (label < 1 || label > 6) throw ConfigError("label must lie in 1..6");
  UnionFind uf(h.weights.size());
  for (const auto& e : h.edges)
    if (e.label != label) uf.unite(e.from, e.to);
  std::set<std::size_t> roots;
  for (std::size_t n = 0; n < h.weights.size(); ++n) roots.insert(uf.find(n));
  return roots.size();
}

std::size_t hasse_and_cut(int label) { return hasse_and_cut(hasse_v6(weyl_e6().roots()), label); }

// ---------------------------------------------------------------------------

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPolynomial IntPolynomial::monomial(std::size_t degree, std::int64_t c) {
  std::vector<std::int64_t> v(degree + 1, 0);
  v[degree] = c;
  return IntPolynomial(std::move(v));
}

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::int64_t IntPolynomial::eval(std::int64_t q) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * q + *it;
  return acc;
}

std::string IntPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) out << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) out << "-";
    const std::int64_t a = c_[i] < 0 ? -c_[i] : c_[i];
    if (a != 1 || i == 0) out << a;
    if (i > 0) out << "q";
    if (i > 1) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.c_.empty() || b.c_.empty()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return IntPolynomial(std::move(c));
}

namespace {

bool minimal_in_right_coset(const WeylGroup& w, std::size_t x, const LabelSet& levi) {
  for (int j : levi)
    if (w.length(w.right(j, x)) < w.length(x)) return false;
  return true;
}

IntPolynomial length_series(const WeylGroup& w, const std::vector<std::size_t>& elems) {
  std::vector<std::int64_t> c;
  for (std::size_t x : elems) {
    const auto l = static_cast<std::size_t>(w.length(x));
    if (c.size() <= l) c.resize(l + 1, 0);
    ++c[l];
  }
  return IntPolynomial(std::move(c));
}

}  // namespace

IntPolynomial poincare_polynomial(const WeylGroup& w, const LabelSet& levi) {
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < w.order(); ++x)
    if (minimal_in_right_coset(w, x, levi)) reps.push_back(x);
  return length_series(w, reps);
}

IdentityCheck check_identity(const WeylGroup& w, std::string name, const LabelSet& left_levi,
                             const LabelSet& right_levi, std::vector<StratumTerm> terms) {
  IdentityCheck out;
  out.name = std::move(name);
  out.left_levi = left_levi;
  out.right_levi = right_levi;
  const IntPolynomial left = poincare_polynomial(w, left_levi);
  out.lhs = left * poincare_polynomial(w, right_levi);
  std::vector<IntPolynomial> expected;
  for (const StratumTerm& t : terms) {
    expected.push_back(IntPolynomial::monomial(static_cast<std::size_t>(t.shift)) *
                       poincare_polynomial(w, t.levi));
    out.rhs = out.rhs + expected.back();
  }
  out.terms = std::move(terms);
  out.holds = out.lhs == out.rhs;

  const std::vector<std::uint32_t> labels = double_coset_labels(w, left_levi, right_levi);
  const std::size_t n = *std::max_element(labels.begin(), labels.end()) + 1;
  out.double_coset_count = n;
  std::vector<std::vector<std::size_t>> members(n);
  for (std::size_t x = 0; x < w.order(); ++x)
    if (minimal_in_right_coset(w, x, right_levi)) members[labels[x]].push_back(x);
  for (const auto& m : members) out.coset_polynomials.push_back(left * length_series(w, m));

  auto key = [](const IntPolynomial& p) { return p.coeffs(); };
  std::vector<std::vector<std::int64_t>> a, b;
  for (const auto& p : out.coset_polynomials) a.push_back(key(p));
  for (const auto& p : expected) b.push_back(key(p));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  out.cosets_match = a == b;
  return out;
}

std::vector<IdentityCheck> verify_stratification(const WeylGroup& w) {
  const LabelSet p6 = levi_of({6}), p1 = levi_of({1}), p16 = levi_of({1, 6}),
                 p56 = levi_of({5, 6});
  std::vector<IdentityCheck> out;
  out.push_back(check_identity(w, "P6 x P6", p6, p6, {{8, p16}, {1, p56}, {0, p6}}));
  out.push_back(check_identity(w, "P6 x P1", p6, p1, {{16, p6}, {5, p56}, {0, p16}}));
  for (const IdentityCheck& c : out) {
    if (c.holds && c.cosets_match) continue;
    std::ostringstream msg;
    msg << c.name << ": lhs - rhs = " << (c.lhs - c.rhs).to_string();
    if (!c.cosets_match) msg << "; double-coset polynomials differ from the strata";
    throw IdentityFailure(msg.str());
  }
  return out;
}

}  // namespace e6geom
