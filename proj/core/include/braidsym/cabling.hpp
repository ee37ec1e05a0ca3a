#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

/// Un-nested round curves ("blocks") in D_n. Crushing each block to a marked
/// point leaves the fat-strand disk; its strands, left to right, are the
/// blocks and free punctures in positional order, each labeled by its width.
class CablePattern {
 public:
  CablePattern(int strands, std::vector<RoundCurve> blocks);

  int strands() const { return strands_; }
  const std::vector<RoundCurve>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }

  /// Widths of the fat strands, left to right.
  const std::vector<int>& labels() const { return labels_; }
  int fat_strands() const { return static_cast<int>(labels_.size()); }
  /// First puncture (1-based) of fat strand i (0-based).
  int first_puncture(int fat) const { return starts_[static_cast<std::size_t>(fat)]; }
  /// Fat strand of each block, in block order.
  const std::vector<int>& block_positions() const { return block_fat_; }
  /// Fat strand containing a puncture (1-based).
  int fat_of(int puncture) const;

  friend bool operator==(const CablePattern& x, const CablePattern& y) {
    return x.strands_ == y.strands_ && x.blocks_ == y.blocks_;
  }

 private:
  int strands_;
  std::vector<RoundCurve> blocks_;
  std::vector<int> labels_;
  std::vector<int> starts_;
  std::vector<int> block_fat_;
};

/// Exterior braid on the fat strands and one interior braid per block
/// (block order, interiors[j] on blocks()[j].punctures() strands).
struct CabledBraid {
  BraidWord exterior;
  std::vector<BraidWord> interiors;
};

/// Trivial interiors.
CabledBraid exterior_only(const CablePattern& p, const BraidWord& exterior);
/// Trivial exterior.
CabledBraid interiors_only(const CablePattern& p, std::vector<BraidWord> interiors);

/// The exterior permutes fat strands only among strands of equal width.
bool validate_exterior(const CablePattern& p, const BraidWord& w);

/// The a x b block crossing on n strands starting at puncture s: a parallel
/// strands pass over b parallel strands, positive crossings.
BraidWord block_crossing(int n, int s, int a, int b);

/// Exterior expanded into block crossings, followed by the interiors shifted
/// into their blocks.
BraidWord cable(const CablePattern& p, const CabledBraid& cb);

/// w maps the set of block curve classes to itself.
bool stabilizes(const CablePattern& p, const BraidWord& w);
/// Induced permutation of the fat strands, read off the strand permutation.
Permutation block_permutation(const CablePattern& p, const BraidWord& w);

/// (a) splitting is a homomorphism, (b) kernel is the product of block
/// groups, (c) the exterior acts on interiors by permuting blocks.
CheckReport check_semidirect(const CablePattern& p, const CabledBraid& cb1, const CabledBraid& cb2);

/// Patterns for cabling inside cabling. The flat pattern has the inner blocks
/// at absolute positions; the lifted pattern lives on the flat pattern's fat
/// strands and groups the fat strands coming from each outer block.
struct FlattenedPatterns {
  CablePattern flat;
  CablePattern lifted;
};

/// inner[j] is a pattern on outer.blocks()[j].punctures() strands.
FlattenedPatterns flatten_patterns(const CablePattern& outer, const std::vector<CablePattern>& inner);

/// cable(outer, (e, [cable(inner_j, cb_j)])) against
/// cable(flat, (cable(lifted, (e, [cb_j.exterior])), concatenated cb_j.interiors)).
CheckReport check_flattened(const CablePattern& outer, const std::vector<CablePattern>& inner,
                            const BraidWord& outer_exterior, const std::vector<CabledBraid>& inner_braids);

/// "pattern(n=7) blocks=[1..2, 3..4]".
std::string to_string(const CablePattern& p);
CablePattern parse_pattern(std::string_view text);

}  // namespace braidsym
