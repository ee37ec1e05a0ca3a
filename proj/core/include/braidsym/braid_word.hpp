#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "braidsym/errors.hpp"

namespace braidsym {

/// A permutation of {0, ..., n-1}. `image()[p]` is where p goes.
///
/// Products are written in diagram order: `p.then(q)` first applies p, then q.
/// With this convention `permutation_image` is a homomorphism from words
/// (read left to right) to permutations.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(int degree);  // identity
  explicit Permutation(std::vector<int> image);

  static Permutation transposition(int degree, int i, int j);

  int degree() const { return static_cast<int>(image_.size()); }
  int operator()(int p) const { return image_[static_cast<std::size_t>(p)]; }
  const std::vector<int>& image() const { return image_; }

  Permutation then(const Permutation& next) const;
  Permutation inverse() const;
  bool is_identity() const;
  bool is_even() const;
  std::vector<int> cycle_type() const;  // sorted descending, fixed points included

  /// One-line notation, 1-based, space separated: "2 1 3".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// A word in the Artin generators of B_n. Letter +i is sigma_i, -i its inverse.
class BraidWord {
 public:
  BraidWord() = default;
  explicit BraidWord(int strands, std::vector<int> letters = {});

  /// sigma_i^{exponent} as a word of |exponent| letters.
  static BraidWord generator(int strands, int i, int exponent = 1);

  int strands() const { return strands_; }
  std::span<const int> letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Syntactic equality (same strand count, same letters). Group equality is
  /// `braidsym::equal` in word_problem.hpp.
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<int> letters_;
};

BraidWord free_reduce(const BraidWord& w);
std::int64_t exponent_sum(const BraidWord& w);
Permutation permutation_image(const BraidWord& w);

/// The full twist (sigma_1 ... sigma_{n-1})^n, generator of the center.
BraidWord center_word(int n);
/// The half twist Delta = (s1)(s2 s1)(s3 s2 s1)... as a positive word.
BraidWord half_twist_word(int n);

bool is_in_commutator_subgroup(const BraidWord& w);

/// sigma_1 sigma_i^{-1} for 2 <= i <= n-1. Requires n >= 5.
std::vector<BraidWord> commutator_generators(int n);

BraidWord concatenate(const BraidWord& u, const BraidWord& v);
BraidWord invert(const BraidWord& w);
/// g x g^{-1}, freely reduced.
BraidWord conjugate(const BraidWord& g, const BraidWord& x);
BraidWord power(const BraidWord& w, std::int64_t k);
/// Commutator u v u^{-1} v^{-1}, freely reduced.
BraidWord commutator(const BraidWord& u, const BraidWord& v);
/// Shifts every letter index by `offset` and re-homes the word on `strands`.
BraidWord shift(const BraidWord& w, int offset, int strands);

inline BraidWord operator*(const BraidWord& u, const BraidWord& v) { return concatenate(u, v); }

/// Text form "n=7: 1 -3 5". The empty word prints as "n=7:".
std::string to_string(const BraidWord& w);
BraidWord parse_braid_word(std::string_view text);
/// Letters only ("1 -3 5"), homed on the given strand count.
BraidWord parse_letters(std::string_view text, int strands);

}  // namespace braidsym
