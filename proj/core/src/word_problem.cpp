#include "braidsym/word_problem.hpp"

#include <array>
#include <bit>
#include <cstdlib>

namespace braidsym {
namespace {

// A permutation braid on at most kMaxNormalFormStrands strands, with its
// inverse kept alongside so both descent sets are O(n) to read off.
struct Simple {
  std::array<std::uint8_t, kMaxNormalFormStrands> img{};  // start position -> end position
  std::array<std::uint8_t, kMaxNormalFormStrands> inv{};  // end position -> start position
  int n = 0;

  static Simple identity(int n) {
    Simple s;
    s.n = n;
    for (int p = 0; p < n; ++p) s.img[p] = s.inv[p] = static_cast<std::uint8_t>(p);
    return s;
  }
  static Simple delta(int n) {
    Simple s;
    s.n = n;
    for (int p = 0; p < n; ++p) s.img[p] = s.inv[p] = static_cast<std::uint8_t>(n - 1 - p);
    return s;
  }
  static Simple from_image(int n, const std::array<std::uint8_t, kMaxNormalFormStrands>& img) {
    Simple s;
    s.n = n;
    s.img = img;
    for (int p = 0; p < n; ++p) s.inv[img[p]] = static_cast<std::uint8_t>(p);
    return s;
  }

  bool is_identity() const {
    for (int p = 0; p < n; ++p)
      if (img[p] != p) return false;
    return true;
  }
  bool is_delta() const {
    for (int p = 0; p < n; ++p)
      if (img[p] != n - 1 - p) return false;
    return true;
  }

  // Bit i set iff sigma_{i+1} is a left divisor: strands starting at i, i+1 cross.
  std::uint32_t starting_set() const {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (img[i] > img[i + 1]) mask |= 1u << i;
    return mask;
  }
  // Bit i set iff sigma_{i+1} is a right divisor: strands ending at i, i+1 crossed.
  std::uint32_t finishing_set() const {
    std::uint32_t mask = 0;
    for (int i = 0; i + 1 < n; ++i)
      if (inv[i] > inv[i + 1]) mask |= 1u << i;
    return mask;
  }

  // this <- this * sigma_{i+1}; requires bit i absent from the finishing set.
  void append_generator(int i) {
    const std::uint8_t p1 = inv[i], p2 = inv[i + 1];
    img[p1] = static_cast<std::uint8_t>(i + 1);
    img[p2] = static_cast<std::uint8_t>(i);
    std::swap(inv[i], inv[i + 1]);
  }
  // this <- sigma_{i+1}^{-1} * this; requires bit i in the starting set.
  void strip_leading_generator(int i) {
    std::swap(img[i], img[i + 1]);
    inv[img[i]] = static_cast<std::uint8_t>(i);
    inv[img[i + 1]] = static_cast<std::uint8_t>(i + 1);
  }

  // Delta * this * Delta^{-1}.
  Simple flipped() const {
    Simple s;
    s.n = n;
    for (int p = 0; p < n; ++p) s.img[p] = static_cast<std::uint8_t>(n - 1 - img[n - 1 - p]);
    for (int p = 0; p < n; ++p) s.inv[s.img[p]] = static_cast<std::uint8_t>(p);
    return s;
  }

  Permutation to_permutation() const {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int p = 0; p < n; ++p) image[static_cast<std::size_t>(p)] = img[p];
    return Permutation(std::move(image));
  }
};

// Makes (a, b) left-weighted by sliding generators from b into a.
// Returns whether anything moved.
bool left_weight(Simple& a, Simple& b) {
  bool changed = false;
  for (;;) {
    const std::uint32_t movable = b.starting_set() & ~a.finishing_set();
    if (movable == 0) return changed;
    const int i = std::countr_zero(movable);
    a.append_generator(i);
    b.strip_leading_generator(i);
    changed = true;
  }
}

class LeftNormalizer {
 public:
  explicit LeftNormalizer(int n) : n_(n) {}

  void multiply(const Simple& s) {
    if (s.is_identity()) return;
    factors_.push_back(s);
    for (std::size_t j = factors_.size() - 1; j >= 1; --j)
      if (!left_weight(factors_[j - 1], factors_[j])) break;
    while (!factors_.empty() && factors_.back().is_identity()) factors_.pop_back();
  }

  NormalForm finish(std::int64_t delta_offset) const {
    NormalForm nf;
    nf.strands = n_;
    std::size_t k = 0;
    while (k < factors_.size() && factors_[k].is_delta()) ++k;
    nf.infimum = static_cast<std::int64_t>(k) + delta_offset;
    for (; k < factors_.size(); ++k) nf.factors.push_back(factors_[k].to_permutation());
    return nf;
  }

 private:
  int n_;
  std::vector<Simple> factors_;
};

Simple letter_simple(int n, int letter) {
  // sigma_i for a positive letter; Delta * sigma_i^{-1} for a negative one.
  const int i = std::abs(letter) - 1;
  Simple s = letter > 0 ? Simple::identity(n) : Simple::delta(n);
  s.append_generator(i);
  return s;
}

}  // namespace

std::string NormalForm::to_string() const {
  std::string out = "Delta^" + std::to_string(infimum);
  for (const auto& f : factors) out += " | " + f.to_string();
  return out;
}

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  require(n <= kMaxNormalFormStrands, "normal form supports at most 32 strands");
  if (n == 1) return NormalForm{1, 0, {}};
  // Write each sigma_i^{-1} as Delta^{-1} (Delta sigma_i^{-1}) and move every
  // Delta^{-1} to the front; a factor passing m of them is flipped m times.
  const auto letters = w.letters();
  std::int64_t negatives_after = 0;
  for (int e : letters)
    if (e < 0) ++negatives_after;
  const std::int64_t total_negatives = negatives_after;

  LeftNormalizer normalizer(n);
  for (int e : letters) {
    if (e < 0) --negatives_after;
    Simple s = letter_simple(n, e);
    if (negatives_after % 2 != 0) s = s.flipped();
    normalizer.multiply(s);
  }
  return normalizer.finish(-total_negatives);
}

BraidWord permutation_braid(const Permutation& p) {
  const int n = p.degree();
  std::vector<int> img = p.image();
  std::vector<int> letters;
  for (;;) {
    int i = 0;
    while (i + 1 < n && img[static_cast<std::size_t>(i)] < img[static_cast<std::size_t>(i + 1)]) ++i;
    if (i + 1 >= n) break;
    letters.push_back(i + 1);
    std::swap(img[static_cast<std::size_t>(i)], img[static_cast<std::size_t>(i + 1)]);
  }
  return BraidWord(n, std::move(letters));
}

BraidWord to_word(const NormalForm& nf) {
  BraidWord out = power(half_twist_word(nf.strands), nf.infimum);
  for (const auto& f : nf.factors) out = out * permutation_braid(f);
  return out;
}

bool is_trivial(const BraidWord& w) {
  if (exponent_sum(w) != 0) return false;
  if (!permutation_image(w).is_identity()) return false;
  const BraidWord reduced = free_reduce(w);
  if (reduced.empty()) return true;
  const NormalForm nf = normal_form(reduced);
  return nf.infimum == 0 && nf.factors.empty();
}

bool equal(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  return is_trivial(u * invert(v));
}

bool commutes(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  return equal(u * v, v * u);
}

bool braid_relation(const BraidWord& u, const BraidWord& v) {
  require_same_strands(u.strands(), v.strands());
  return equal(u * v * u, v * u * v);
}

bool conjugates_witness(const BraidWord& g, const BraidWord& x, const BraidWord& y) {
  require_same_strands(g.strands(), x.strands());
  require_same_strands(x.strands(), y.strands());
  return equal(g * x * invert(g), y);
}

}  // namespace braidsym
