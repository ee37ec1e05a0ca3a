#include "braidsym/braid_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "text_util.hpp"

namespace braidsym {

Permutation::Permutation(int degree) : image_(static_cast<std::size_t>(degree)) {
  std::iota(image_.begin(), image_.end(), 0);
}

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (int v : image_) {
    if (v < 0 || v >= degree() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("permutation image is not a bijection");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::transposition(int degree, int i, int j) {
  Permutation p(degree);
  std::swap(p.image_[static_cast<std::size_t>(i)], p.image_[static_cast<std::size_t>(j)]);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  require(degree() == next.degree(), "permutation degree mismatch");
  Permutation out(degree());
  for (std::size_t p = 0; p < image_.size(); ++p)
    out.image_[p] = next.image_[static_cast<std::size_t>(image_[p])];
  return out;
}

Permutation Permutation::inverse() const {
  Permutation out(degree());
  for (std::size_t p = 0; p < image_.size(); ++p) out.image_[static_cast<std::size_t>(image_[p])] = static_cast<int>(p);
  return out;
}

bool Permutation::is_identity() const {
  for (std::size_t p = 0; p < image_.size(); ++p)
    if (image_[p] != static_cast<int>(p)) return false;
  return true;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(image_.size(), false);
  for (std::size_t start = 0; start < image_.size(); ++start) {
    if (seen[start]) continue;
    int len = 0;
    for (std::size_t p = start; !seen[p]; p = static_cast<std::size_t>(image_[p])) {
      seen[p] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t p = 0; p < image_.size(); ++p) {
    if (p) out += ' ';
    out += std::to_string(image_[p] + 1);
  }
  return out;
}

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands), letters_(std::move(letters)) {
  require(strands >= 1, "braid words need at least one strand");
  for (int e : letters_)
    if (e == 0 || std::abs(e) > strands - 1)
      throw PreconditionError("letter " + std::to_string(e) + " out of range for n=" + std::to_string(strands));
}

BraidWord BraidWord::generator(int strands, int i, int exponent) {
  std::vector<int> letters(static_cast<std::size_t>(std::abs(exponent)), exponent >= 0 ? i : -i);
  return BraidWord(strands, std::move(letters));
}

BraidWord free_reduce(const BraidWord& w) {
  std::vector<int> stack;
  stack.reserve(w.length());
  for (int e : w.letters()) {
    if (!stack.empty() && stack.back() == -e)
      stack.pop_back();
    else
      stack.push_back(e);
  }
  return BraidWord(w.strands(), std::move(stack));
}

std::int64_t exponent_sum(const BraidWord& w) {
  std::int64_t sum = 0;
  for (int e : w.letters()) sum += e > 0 ? 1 : -1;
  return sum;
}

Permutation permutation_image(const BraidWord& w) {
  // Track where each strand sits; letter i swaps whatever occupies i-1 and i.
  std::vector<int> at(static_cast<std::size_t>(w.strands()));
  std::iota(at.begin(), at.end(), 0);
  for (int e : w.letters()) {
    const auto i = static_cast<std::size_t>(std::abs(e) - 1);
    std::swap(at[i], at[i + 1]);
  }
  // at[pos] = strand that ends at pos; the permutation sends strand -> pos.
  std::vector<int> image(at.size());
  for (std::size_t pos = 0; pos < at.size(); ++pos) image[static_cast<std::size_t>(at[pos])] = static_cast<int>(pos);
  return Permutation(std::move(image));
}

BraidWord center_word(int n) {
  require(n >= 2, "center_word needs n >= 2");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(n * (n - 1)));
  for (int r = 0; r < n; ++r)
    for (int i = 1; i < n; ++i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord half_twist_word(int n) {
  std::vector<int> letters;
  for (int top = 1; top < n; ++top)
    for (int i = top; i >= 1; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

bool is_in_commutator_subgroup(const BraidWord& w) { return exponent_sum(w) == 0; }

std::vector<BraidWord> commutator_generators(int n) {
  require(n >= 5, "commutator_generators needs n >= 5");
  std::vector<BraidWord> out;
  for (int i = 2; i <= n - 1; ++i) out.emplace_back(n, std::vector<int>{1, -i});
  return out;
}

BraidWord concatenate(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  std::vector<int> letters(u.letters().begin(), u.letters().end());
  letters.insert(letters.end(), v.letters().begin(), v.letters().end());
  return BraidWord(u.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& w) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) letters.push_back(-*it);
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord conjugate(const BraidWord& g, const BraidWord& x) {
  return free_reduce(concatenate(concatenate(g, x), invert(g)));
}

BraidWord power(const BraidWord& w, std::int64_t k) {
  const BraidWord base = k >= 0 ? w : invert(w);
  std::vector<int> letters;
  const auto reps = static_cast<std::size_t>(k >= 0 ? k : -k);
  letters.reserve(reps * base.length());
  for (std::size_t r = 0; r < reps; ++r) letters.insert(letters.end(), base.letters().begin(), base.letters().end());
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord commutator(const BraidWord& u, const BraidWord& v) {
  return free_reduce(u * v * invert(u) * invert(v));
}

BraidWord shift(const BraidWord& w, int offset, int strands) {
  std::vector<int> letters;
  letters.reserve(w.length());
  for (int e : w.letters()) letters.push_back(e > 0 ? e + offset : e - offset);
  return BraidWord(strands, std::move(letters));
}

std::string to_string(const BraidWord& w) {
  std::string out = "n=" + std::to_string(w.strands()) + ":";
  for (int e : w.letters()) {
    out += ' ';
    out += std::to_string(e);
  }
  return out;
}

BraidWord parse_braid_word(std::string_view text) {
  detail::Scanner in(text);
  in.expect("n=");
  const int n = in.read_small_int();
  in.expect(":");
  std::vector<int> letters;
  while (!in.at_end()) letters.push_back(in.read_small_int());
  if (n < 1) in.fail("strand count must be positive");
  try {
    return BraidWord(n, std::move(letters));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

BraidWord parse_letters(std::string_view text, int strands) {
  detail::Scanner in(text);
  std::vector<int> letters;
  while (!in.at_end()) letters.push_back(in.read_small_int());
  try {
    return BraidWord(strands, std::move(letters));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidsym
