#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/curves.hpp"

namespace braidsym {

/// Subset of the label universe {1..N}; bit l-1 stands for label l.
using LabelSet = std::uint32_t;

inline constexpr int kMaxLabelUniverse = 16;

inline LabelSet full_label_set(int universe) { return (LabelSet{1} << universe) - 1; }

/// One curve of a labeled multicurve together with the curves it encloses.
struct LabeledNode {
  int weight = 2;  // punctures enclosed
  LabelSet label = 0;
  std::vector<LabeledNode> children;
};

/// A labeled multicurve in the n-punctured disk up to the braid group action:
/// the nesting tree of its components, rooted at the boundary, with each
/// node weighted by the punctures it encloses. Siblings are unordered.
class LabeledTree {
 public:
  LabeledTree(int strands, int universe, std::vector<LabeledNode> top_level = {});

  int strands() const { return strands_; }
  int universe() const { return universe_; }
  LabelSet full_label() const { return full_label_set(universe_); }
  const std::vector<LabeledNode>& top_level() const { return top_; }

  int curve_count() const;
  bool has_trivial_labeling() const;

  /// Isomorphism invariant: equal codes iff the trees are equivalent.
  std::string canonical_code() const;

  /// Round curves realizing the tree with children packed left to right in
  /// canonical order and free punctures last.
  std::vector<std::pair<RoundCurve, LabelSet>> standard_position() const;

 private:
  int strands_;
  int universe_;
  std::vector<LabeledNode> top_;
};

LabeledTree from_round(int strands, int universe, const std::vector<std::pair<RoundCurve, LabelSet>>& pairs);

bool equivalent(const LabeledTree& t1, const LabeledTree& t2);
/// sigma acts on {0..N-1}; label l is sent to sigma(l-1)+1.
LabeledTree permute_labels(const LabeledTree& t, const Permutation& sigma);
/// Brute force over all N! label permutations; N <= 8.
bool is_totally_symmetric(const LabeledTree& t);
/// Complements every label. Every label must be a proper subset.
LabeledTree star(const LabeledTree& t);

enum class MulticurveClass { TrivialLabeling, M, MStar, MHat, MHatStar, NotTotallySymmetric, Other };

std::string to_string(MulticurveClass c);
MulticurveClass classify(const LabeledTree& t);

/// Standard models with N = floor(n/2): curves c_i = [2i-1, 2i] labeled {i}
/// (or {i}^c), plus c_0 = [1, n-1] with the trivial label for the hat models
/// (n odd).
LabeledTree model_m(int n);
LabeledTree model_m_star(int n);
LabeledTree model_m_hat(int n);
LabeledTree model_m_hat_star(int n);

/// All equivalence classes of totally symmetric [N]-labeled multicurves in
/// D_n with nontrivial labeling, N = floor(n/2). Supports 5 <= n <= 10.
std::vector<LabeledTree> enumerate_totally_symmetric(int n);

/// "{1,3}" or "*" for the full universe.
std::string label_to_string(LabelSet label, int universe);
/// "(disk n=7 (curve 1 6 label=* (curve 1 2 label={1}) ...))". The universe
/// is written as "N=<k>" only when it differs from floor(n/2).
std::string to_dsl(const LabeledTree& t);
/// Accepts nested or flat curve lists; nesting is recovered from intervals.
LabeledTree parse_labeled_tree(std::string_view text);

}  // namespace braidsym
