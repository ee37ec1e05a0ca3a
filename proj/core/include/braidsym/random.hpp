#pragma once

#include <cstddef>
#include <random>

#include "braidsym/braid_word.hpp"

namespace braidsym {

using Rng = std::mt19937_64;

/// Uniform letters from {+-1, .., +-(n-1)}.
BraidWord random_word(Rng& rng, int n, std::size_t length);
/// g r^{+-1} g^{-1} for a defining relator r and a short random g.
BraidWord random_relator(Rng& rng, int n);
/// Inserts conjugated relators and canceling pairs at random positions.
/// The result represents the same element.
BraidWord perturb(Rng& rng, const BraidWord& w, int insertions);
/// A conjugate of [sigma_i^2, sigma_{i+1}^2], nontrivial with trivial
/// exponent sum and permutation. Needs n >= 3.
BraidWord random_hidden_nontrivial(Rng& rng, int n);

int uniform_int(Rng& rng, int lo, int hi);  // inclusive

}  // namespace braidsym
