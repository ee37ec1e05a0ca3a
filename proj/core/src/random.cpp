#include "braidsym/random.hpp"

namespace braidsym {

int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

BraidWord random_word(Rng& rng, int n, std::size_t length) {
  std::vector<int> letters;
  letters.reserve(length);
  if (n >= 2)
    for (std::size_t k = 0; k < length; ++k) {
      const int i = uniform_int(rng, 1, n - 1);
      letters.push_back(uniform_int(rng, 0, 1) ? i : -i);
    }
  return BraidWord(n, std::move(letters));
}

BraidWord random_relator(Rng& rng, int n) {
  require(n >= 3, "relators need n >= 3");
  BraidWord r(n);
  const int i = uniform_int(rng, 1, n - 1);
  int j = uniform_int(rng, 1, n - 1);
  if (j == i) j = i == n - 1 ? i - 1 : i + 1;
  if (std::abs(i - j) == 1)
    r = BraidWord(n, {i, j, i, -j, -i, -j});
  else
    r = BraidWord(n, {i, j, -i, -j});
  if (uniform_int(rng, 0, 1)) r = invert(r);
  const BraidWord g = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 4)));
  return g * r * invert(g);
}

BraidWord perturb(Rng& rng, const BraidWord& w, int insertions) {
  const int n = w.strands();
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  for (int k = 0; k < insertions; ++k) {
    const auto pos = static_cast<std::ptrdiff_t>(uniform_int(rng, 0, static_cast<int>(letters.size())));
    std::vector<int> piece;
    if (n >= 3 && uniform_int(rng, 0, 1)) {
      const BraidWord r = random_relator(rng, n);
      piece.assign(r.letters().begin(), r.letters().end());
    } else if (n >= 2) {
      const int e = uniform_int(rng, 1, n - 1) * (uniform_int(rng, 0, 1) ? 1 : -1);
      piece = {e, -e};
    }
    letters.insert(letters.begin() + pos, piece.begin(), piece.end());
  }
  return BraidWord(n, std::move(letters));
}

BraidWord random_hidden_nontrivial(Rng& rng, int n) {
  require(n >= 3, "needs n >= 3");
  const int i = uniform_int(rng, 1, n - 2);
  const BraidWord c = commutator(BraidWord::generator(n, i, 2), BraidWord::generator(n, i + 1, 2));
  const BraidWord g = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 6)));
  return g * c * invert(g);
}

}  // namespace braidsym
