#pragma once

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/report.hpp"
#include "braidsym/word_problem.hpp"

namespace braidsym {

// ---------------------------------------------------------------------------
// Target groups with decidable equality.

template <class G>
concept EffectiveGroup = requires(const G& g, const typename G::Element& a, const typename G::Element& b) {
  { g.identity() } -> std::convertible_to<typename G::Element>;
  { g.multiply(a, b) } -> std::convertible_to<typename G::Element>;
  { g.invert(a) } -> std::convertible_to<typename G::Element>;
  { g.equal(a, b) } -> std::convertible_to<bool>;
};

struct BraidGroup {
  using Element = BraidWord;
  int strands;
  Element identity() const { return BraidWord(strands); }
  Element multiply(const Element& a, const Element& b) const { return free_reduce(a * b); }
  Element invert(const Element& a) const { return braidsym::invert(a); }
  bool equal(const Element& a, const Element& b) const { return braidsym::equal(a, b); }
};

/// Sigma_k acting on {0..k-1}; multiply(a, b) applies a first.
struct SymmetricGroup {
  using Element = Permutation;
  int degree;
  Element identity() const { return Permutation(degree); }
  Element multiply(const Element& a, const Element& b) const { return a.then(b); }
  Element invert(const Element& a) const { return a.inverse(); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
};

struct IntegerGroup {
  using Element = std::int64_t;
  Element identity() const { return 0; }
  Element multiply(Element a, Element b) const { return a + b; }
  Element invert(Element a) const { return -a; }
  bool equal(Element a, Element b) const { return a == b; }
};

struct TrivialGroup {
  using Element = std::monostate;
  Element identity() const { return {}; }
  Element multiply(Element, Element) const { return {}; }
  Element invert(Element) const { return {}; }
  bool equal(Element, Element) const { return true; }
};

/// Homomorphism out of B_n given by the images of sigma_1..sigma_{n-1}.
template <EffectiveGroup G>
struct TargetMap {
  G group;
  std::vector<typename G::Element> images;

  typename G::Element operator()(const BraidWord& w) const {
    require(static_cast<std::size_t>(w.strands()) == images.size() + 1, "word is not on the source strand count");
    auto out = group.identity();
    for (int e : w.letters()) {
      const auto& s = images[static_cast<std::size_t>(std::abs(e) - 1)];
      out = group.multiply(out, e > 0 ? s : group.invert(s));
    }
    return out;
  }

  /// Images satisfy the braid and far-commutation relations.
  bool respects_relations() const {
    const std::size_t k = images.size();
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto& a = images[i];
        const auto& b = images[j];
        if (j == i + 1) {
          if (!group.equal(group.multiply(group.multiply(a, b), a), group.multiply(group.multiply(b, a), b)))
            return false;
        } else if (!group.equal(group.multiply(a, b), group.multiply(b, a))) {
          return false;
        }
      }
    return true;
  }
};

// ---------------------------------------------------------------------------
// Certified totally symmetric sets.

/// Elements x_1..x_m of B_n with a conjugator for every adjacent transposition:
/// swaps[i] exchanges x_{i+1} and x_{i+2} and fixes the rest.
struct TotallySymmetricSetCert {
  int strands = 2;
  std::vector<BraidWord> elements;
  std::vector<BraidWord> swaps;
  bool commutator_only = false;

  std::size_t size() const { return elements.size(); }
};

CheckReport verify_cert(const TotallySymmetricSetCert& x);

/// Bounded breadth-first search for g with g x_k g^{-1} = y_k for every pair,
/// over words in the given letters, deduplicated by normal form.
std::optional<BraidWord> search_conjugator(int strands, const std::vector<std::pair<BraidWord, BraidWord>>& pairs,
                                           const std::vector<int>& letters, int max_depth);

inline constexpr int kDefaultSearchDepth = 12;

/// {sigma_1, sigma_3, ..., sigma_m}, m the largest odd number below n, with
/// exponent-sum-zero swap conjugators. Throws SearchExhausted if the search
/// bound is too small.
TotallySymmetricSetCert make_Xn(int n, int depth = kDefaultSearchDepth);
/// X_n' = {x_1 x_2^{-1}, ..., x_1 x_m^{-1}}.
TotallySymmetricSetCert make_Yn(int n, int depth = kDefaultSearchDepth);
/// (X_n^{n(n-1)})^{z^{-1}}.
TotallySymmetricSetCert make_Zn(int n, int depth = kDefaultSearchDepth);

TotallySymmetricSetCert derived_pow(const TotallySymmetricSetCert& x, std::int64_t k);
/// x_i^* is the product of the x_j with j != i.
TotallySymmetricSetCert derived_star(const TotallySymmetricSetCert& x);
/// x_i^k (x_i^*)^l.
TotallySymmetricSetCert derived_mixed(const TotallySymmetricSetCert& x, std::int64_t k, std::int64_t l);
TotallySymmetricSetCert derived_diff(const TotallySymmetricSetCert& x);
/// x_i z. Every swap conjugator must commute with z.
TotallySymmetricSetCert derived_translate(const TotallySymmetricSetCert& x, const BraidWord& z);

/// Applies a chain such as "pow 42 | translate z^-1" or "mixed 2 1 | diff".
/// Steps: pow k, star, mixed k l, diff, translate z^k, translate <letters>.
TotallySymmetricSetCert apply_derivations(const TotallySymmetricSetCert& x, std::string_view chain);

struct TssImage {
  std::size_t size = 0;  // distinct images
  bool relations_hold = false;
  bool passed = false;  // size in {1, m} and relations hold
  std::string detail;
};

/// Image of a certified set under a homomorphism into an effective group.
/// Deduplication uses only the target's equality.
template <EffectiveGroup G>
TssImage image_of_tss(const TargetMap<G>& hom, const TotallySymmetricSetCert& x) {
  const auto& g = hom.group;
  std::vector<typename G::Element> imgs;
  for (const auto& e : x.elements) imgs.push_back(hom(e));
  std::vector<typename G::Element> distinct;
  for (const auto& a : imgs) {
    bool seen = false;
    for (const auto& b : distinct)
      if (g.equal(a, b)) {
        seen = true;
        break;
      }
    if (!seen) distinct.push_back(a);
  }
  TssImage out;
  out.size = distinct.size();
  out.relations_hold = true;
  for (std::size_t i = 0; i < imgs.size() && out.relations_hold; ++i)
    for (std::size_t j = i + 1; j < imgs.size(); ++j)
      if (!g.equal(g.multiply(imgs[i], imgs[j]), g.multiply(imgs[j], imgs[i]))) {
        out.relations_hold = false;
        out.detail = "images of x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) + " do not commute";
        break;
      }
  for (std::size_t s = 0; s < x.swaps.size() && out.relations_hold; ++s) {
    const auto c = hom(x.swaps[s]);
    const auto c_inv = g.invert(c);
    for (std::size_t i = 0; i < imgs.size(); ++i) {
      const std::size_t target = i == s ? s + 1 : i == s + 1 ? s : i;
      if (!g.equal(g.multiply(g.multiply(c, imgs[i]), c_inv), imgs[target])) {
        out.relations_hold = false;
        out.detail = "image of swap " + std::to_string(s + 1) + " misplaces x" + std::to_string(i + 1);
        break;
      }
    }
  }
  out.passed = out.relations_hold && (out.size == 1 || out.size == x.size());
  if (out.detail.empty())
    out.detail = std::to_string(out.size) + " distinct images of " + std::to_string(x.size()) + " elements";
  return out;
}

// ---------------------------------------------------------------------------
// Exponent matrices.

/// m x m matrix over Z (modulus 0) or Z/d. Entries are stored reduced.
class ExponentMatrix {
 public:
  ExponentMatrix(std::vector<std::vector<std::int64_t>> entries, std::int64_t modulus = 0);

  int size() const { return static_cast<int>(rows_.size()); }
  std::int64_t modulus() const { return modulus_; }
  std::int64_t operator()(int i, int j) const { return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<std::int64_t>>& rows() const { return rows_; }

  friend bool operator==(const ExponentMatrix&, const ExponentMatrix&) = default;

 private:
  std::vector<std::vector<std::int64_t>> rows_;
  std::int64_t modulus_;
};

/// The (k, l)-form: k on the diagonal and l elsewhere.
ExponentMatrix kl_form(int m, std::int64_t k, std::int64_t l, std::int64_t modulus = 0);

struct MatrixForm {
  std::int64_t k;
  std::int64_t l;
  std::vector<int> row_order;  // row_order[i] = row of A placed at position i
};

/// A (k, l)-form after reordering rows, or nullopt. Rows must be distinct.
std::optional<MatrixForm> classify_exponent_matrix(const ExponentMatrix& a);
/// Every row permutation is undone by some column permutation. m <= 6.
bool check_perm_closure(const ExponentMatrix& a);

/// Each swap conjugator of y permutes the elements of x; y's elements are distinct.
CheckReport check_robustness_witnesses(const TotallySymmetricSetCert& x, const TotallySymmetricSetCert& y);

// ---------------------------------------------------------------------------
// Certificate files:
//   tss n=7 m=3 commutator_only=true
//   element 1: n=7: 1
//   swap 1 2: n=7: 2 1 3 2 -1 -1
std::string to_cert_text(const TotallySymmetricSetCert& x);
TotallySymmetricSetCert parse_cert_text(std::string_view text);

}  // namespace braidsym
