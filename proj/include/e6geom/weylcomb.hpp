#pragma once

// E6 root system (Bourbaki numbering), its Weyl group as permutations of the
// 72 roots, parabolic double cosets, the Hasse diagram of the 27 weights of
// V(w6) and Poincare polynomials of the flag varieties G/P_J.
//
// Labels are 1..6. A label set J names the standard parabolic whose Levi
// factor has simple roots J, so J = {1..6} is the whole group and the
// maximal parabolic P6 has J = {1,2,3,4,5}.

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace e6geom {

using LabelSet = std::set<int>;
using Root = std::array<int, 6>;

/// Complement {1..6} \ labels, i.e. the Levi labels of P_labels.
LabelSet levi_of(const LabelSet& labels);

struct RootSystemE6 {
  static constexpr std::size_t kRoots = 72;

  std::array<std::array<int, 6>, 6> cartan;
  std::vector<Root> roots;  // coefficients on the simple roots
  std::vector<bool> positive;
  std::array<std::size_t, 6> simple;  // index of alpha_i, i = 1..6 at [i-1]

  std::size_t index_of(const Root& r) const;
  /// s_i(r) = r - <r, alpha_i> alpha_i.
  Root reflect(int label, const Root& r) const;
  int height(std::size_t root) const;
};

/// Roots by closure of the simple roots under reflections; checks the root
/// count and the Coxeter relations.
RootSystemE6 build_e6();

using Permutation = std::array<std::uint8_t, RootSystemE6::kRoots>;

struct WeylElement {
  Permutation perm;
  int length;
};

class WeylGroup {
 public:
  explicit WeylGroup(RootSystemE6 rs);

  const RootSystemE6& roots() const noexcept { return rs_; }
  std::size_t order() const noexcept { return elements_.size(); }
  const WeylElement& element(std::size_t w) const { return elements_[w]; }
  std::size_t identity() const noexcept { return 0; }
  /// Index of s_label * w and of w * s_label.
  std::size_t left(int label, std::size_t w) const { return left_[label - 1][w]; }
  std::size_t right(int label, std::size_t w) const { return right_[label - 1][w]; }
  int length(std::size_t w) const { return elements_[w].length; }
  std::size_t longest() const;

  /// Order of s_i s_j, computed on permutations.
  int coxeter_order(int i, int j) const;

 private:
  RootSystemE6 rs_;
  std::vector<WeylElement> elements_;
  std::array<std::vector<std::uint32_t>, 6> left_;
  std::array<std::vector<std::uint32_t>, 6> right_;
};

/// Breadth-first closure of the simple reflections.
WeylGroup generate_weyl(const RootSystemE6& rs);
/// Shared instance, built on first use.
const WeylGroup& weyl_e6();

struct DoubleCoset {
  std::size_t representative;  // the minimal-length element
  int min_length;
  std::size_t size;
  std::size_t minimal_count;  // elements of length min_length (always 1)
};

/// W_{J1} \ W / W_{J2}, sorted by the length of the representative.
std::vector<DoubleCoset> double_cosets(const WeylGroup& w, const LabelSet& j1, const LabelSet& j2);
/// Which double coset each element of W falls in (indices into the result
/// of double_cosets with the same arguments).
std::vector<std::uint32_t> double_coset_labels(const WeylGroup& w, const LabelSet& j1,
                                               const LabelSet& j2);

struct HasseDiagram {
  std::vector<Root> weights;  // Dynkin labels
  struct Edge {
    std::size_t from, to;
    int label;
  };
  std::vector<Edge> edges;
};

/// The weights of V(w6) reached from the highest weight by mu -> mu - alpha_i
/// whenever <mu, alpha_i> > 0.
HasseDiagram hasse_v6(const RootSystemE6& rs);
/// Connected components after deleting the edges with the given label.
std::size_t hasse_and_cut(const HasseDiagram& h, int label);
std::size_t hasse_and_cut(int label);

class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial monomial(std::size_t degree, std::int64_t c = 1);

  const std::vector<std::int64_t>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  std::int64_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::int64_t eval(std::int64_t q) const;
  std::string to_string() const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Sum of q^l(w) over the minimal representatives of the cosets w W_J.
IntPolynomial poincare_polynomial(const WeylGroup& w, const LabelSet& levi);

struct StratumTerm {
  int shift;        // fiber dimension
  LabelSet levi;    // stratum is an affine bundle over G/P_levi
};

struct IdentityCheck {
  std::string name;
  LabelSet left_levi, right_levi;
  IntPolynomial lhs, rhs;
  std::vector<StratumTerm> terms;
  std::size_t double_coset_count;
  /// poin(left) * sum of q^l(v) over v in D minimal in v W_right, per coset D.
  std::vector<IntPolynomial> coset_polynomials;
  bool holds;          // lhs == rhs
  bool cosets_match;   // coset_polynomials equal the terms as multisets
};

/// Evaluates poin(left) * poin(right) = sum over terms of q^shift poin(levi)
/// together with the double-coset decomposition. Never throws.
IdentityCheck check_identity(const WeylGroup& w, std::string name, const LabelSet& left_levi,
                             const LabelSet& right_levi, std::vector<StratumTerm> terms);

/// The two stratifications of G/P6 x G/P6 and G/P6 x G/P1. Throws
/// IdentityFailure with the coefficient difference when either fails.
std::vector<IdentityCheck> verify_stratification(const WeylGroup& w);

}  // namespace e6geom
