#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "braidsym/braid_word.hpp"

namespace braidsym {

/// Largest strand count the normal-form engine accepts.
inline constexpr int kMaxNormalFormStrands = 32;

/// Left-greedy normal form Delta^infimum * A_1 * ... * A_r.
///
/// Each A_k is a permutation braid stored as its permutation (strand start
/// position -> end position). No factor is trivial or Delta, and consecutive
/// factors are left-weighted: the starting set of A_{k+1} is contained in
/// the finishing set of A_k. Two words are equal in B_n iff their normal
/// forms compare equal.
struct NormalForm {
  int strands = 2;
  std::int64_t infimum = 0;
  std::vector<Permutation> factors;

  /// "Delta^k | p1 | p2 | ..." with permutations in one-line notation.
  std::string to_string() const;

  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

NormalForm normal_form(const BraidWord& w);
/// A word representing the normal form: Delta^k followed by each factor.
BraidWord to_word(const NormalForm& nf);
/// The positive permutation braid with the given permutation.
BraidWord permutation_braid(const Permutation& p);

bool equal(const BraidWord& u, const BraidWord& v);
bool is_trivial(const BraidWord& w);
bool commutes(const BraidWord& u, const BraidWord& v);
/// u v u = v u v.
bool braid_relation(const BraidWord& u, const BraidWord& v);
/// g x g^{-1} = y.
bool conjugates_witness(const BraidWord& g, const BraidWord& x, const BraidWord& y);

}  // namespace braidsym
