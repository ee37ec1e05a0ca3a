#include <doctest.h>

#include "../oracles.hpp"
#include "braidsym/random.hpp"

using namespace braidsym;

TEST_CASE("free_reduce") {
  CHECK(free_reduce(BraidWord(5, {1, -1})).empty());
  CHECK(free_reduce(BraidWord(5, {1, 3, -3, 2})) == BraidWord(5, {1, 2}));
  CHECK(free_reduce(BraidWord(5, {1, 2, 1})) == BraidWord(5, {1, 2, 1}));
  CHECK(free_reduce(BraidWord(4, {1, 2, -2, -1, 3})) == BraidWord(4, {3}));
}

TEST_CASE("free_reduce is idempotent and never lengthens") {
  Rng rng(7);
  for (int t = 0; t < 500; ++t) {
    const BraidWord w = random_word(rng, 5, 30);
    const BraidWord r = free_reduce(w);
    CHECK(r.length() <= w.length());
    CHECK(free_reduce(r) == r);
    const auto l = r.letters();
    for (std::size_t k = 0; k + 1 < l.size(); ++k) CHECK(l[k] != -l[k + 1]);
  }
}

TEST_CASE("exponent sum") {
  CHECK(exponent_sum(BraidWord(4, {1, -3})) == 0);
  CHECK(exponent_sum(center_word(5)) == 20);
  CHECK(exponent_sum(BraidWord(4)) == 0);
}

TEST_CASE("permutation image") {
  CHECK(permutation_image(BraidWord(4, {1})) == Permutation::transposition(4, 0, 1));
  // sigma_1 then sigma_2^-1: strand 1 -> 2 -> 3, 2 -> 1, 3 -> 2.
  CHECK(permutation_image(BraidWord(4, {1, -2})) == Permutation({2, 0, 1, 3}));
  CHECK(permutation_image(center_word(4)).is_identity());
}

TEST_CASE("exponent sum and permutation are homomorphisms") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const int n = uniform_int(rng, 2, 9);
    const BraidWord u = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 20)));
    const BraidWord v = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 20)));
    CHECK(exponent_sum(u * v) == exponent_sum(u) + exponent_sum(v));
    CHECK(permutation_image(u * v) == permutation_image(u).then(permutation_image(v)));
    CHECK(permutation_image(u).image() == oracle::track_strands(u));
  }
}

TEST_CASE("conjugation preserves exponent sum and cycle type") {
  Rng rng(12);
  for (int t = 0; t < 200; ++t) {
    const BraidWord g = random_word(rng, 6, 12), x = random_word(rng, 6, 12);
    const BraidWord c = conjugate(g, x);
    CHECK(exponent_sum(c) == exponent_sum(x));
    CHECK(permutation_image(c).cycle_type() == permutation_image(x).cycle_type());
  }
}

TEST_CASE("center word") {
  CHECK(center_word(3).length() == 6);
  CHECK(exponent_sum(center_word(3)) == 6);
  CHECK(center_word(5).length() == 20);
  CHECK(center_word(2) == BraidWord(2, {1, 1}));
  CHECK_THROWS_AS(center_word(1), PreconditionError);
}

TEST_CASE("commutator subgroup membership") {
  CHECK(is_in_commutator_subgroup(BraidWord(4, {1, -3})));
  CHECK_FALSE(is_in_commutator_subgroup(BraidWord(4, {1})));
  CHECK(is_in_commutator_subgroup(BraidWord::generator(5, 1, 20) * invert(center_word(5))));
}

TEST_CASE("commutator generators") {
  CHECK(commutator_generators(5).size() == 3);
  const auto gens = commutator_generators(7);
  REQUIRE(gens.size() == 5);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    CHECK(gens[k] == BraidWord(7, {1, -static_cast<int>(k) - 2}));
    CHECK(exponent_sum(gens[k]) == 0);
    CHECK(permutation_image(gens[k]).is_even());
  }
  CHECK_THROWS_AS(commutator_generators(4), PreconditionError);
}

TEST_CASE("group operations on words") {
  CHECK(invert(BraidWord(3, {1, 2})) == BraidWord(3, {-2, -1}));
  const BraidWord x(5, {1, 2, -4});
  CHECK(conjugate(BraidWord(5), x) == x);
  CHECK(free_reduce(concatenate(x, invert(x))).empty());
  CHECK_THROWS_AS(concatenate(BraidWord(3, {1}), BraidWord(4, {1})), StrandMismatch);
  CHECK(power(BraidWord(3, {1, 2}), -2) == BraidWord(3, {-2, -1, -2, -1}));
  CHECK(shift(BraidWord(2, {1, -1, 1}), 3, 6) == BraidWord(6, {4, -4, 4}));
}

TEST_CASE("word text format") {
  CHECK(to_string(BraidWord(5, {1, -2, 3})) == "n=5: 1 -2 3");
  CHECK(parse_braid_word("n=5: 1 -2 3") == BraidWord(5, {1, -2, 3}));
  CHECK(parse_braid_word("  n=4:  ") == BraidWord(4));
  CHECK_THROWS_AS(parse_braid_word("n=4: 4"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("n=4 1 2"), ParseError);
  CHECK_THROWS_AS(parse_braid_word("n=4: 0"), ParseError);
  Rng rng(3);
  for (int t = 0; t < 100; ++t) {
    const BraidWord w = random_word(rng, uniform_int(rng, 2, 9), 15);
    CHECK(parse_braid_word(to_string(w)) == w);
  }
}

TEST_CASE("permutation text") {
  CHECK(Permutation({1, 0, 2}).to_string() == "2 1 3");
  CHECK_THROWS(Permutation({0, 0, 1}));
}
