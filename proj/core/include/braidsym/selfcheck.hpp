#pragma once

// Randomized and exhaustive consistency checks shared by the command line
// tool and the test suites. Every function is deterministic in its seed.

#include <cstdint>

#include "braidsym/cabling.hpp"
#include "braidsym/random.hpp"
#include "braidsym/report.hpp"
#include "braidsym/tss.hpp"

namespace braidsym {

/// Random pattern on at most max_strands punctures with q blocks of the
/// given widths, blocks and free punctures in random order.
CablePattern random_pattern(Rng& rng, const std::vector<int>& widths, int free_strands);
/// Label-preserving exterior: products of g sigma_i^{+-1} g^{-1} when the two
/// strands have equal width, g sigma_i^{+-2} g^{-1} otherwise.
BraidWord random_exterior(Rng& rng, const CablePattern& p, int factors);
CabledBraid random_cabled(Rng& rng, const CablePattern& p, int factors, std::size_t interior_length);

/// Validated homomorphism B_n -> Sigma_k built from transpositions, constant
/// maps, doubled transpositions, central twists and conjugation.
TargetMap<SymmetricGroup> random_symmetric_map(Rng& rng, int n, int k);

/// Random words against relator-perturbed copies and hidden nontrivial
/// factors; quotient soundness on independent pairs.
CheckReport check_word_problem(int n, int pairs, std::uint64_t seed, std::size_t max_length = 64);
/// z fixes round curves, round classes are distinct, action and inverse laws.
CheckReport check_curve_action(int n, int triples, std::uint64_t seed);
/// Enumerated classes against the standard models.
CheckReport check_multicurve_classes(int n);
/// Certified standard sets, derived sets and their images in small targets.
CheckReport check_certificates(int n);
/// Images of X_n under random maps into Sigma_k have 1 or floor(n/2) elements.
CheckReport check_symmetric_images(int maps, std::uint64_t seed, int max_degree = 12);
/// Exhaustive sweep over m x m matrices mod d against the (k, l)-forms.
CheckReport check_exponent_matrices(int m, int d);
/// Gamma of the standard families and conjugation equivariance.
CheckReport check_crs_agreement(int n, int conjugators, std::uint64_t seed);
/// Semidirect structure on random cabled pairs and nested-pattern flattening.
CheckReport check_cabling(int pairs, int nested, std::uint64_t seed, int max_strands = 9);

}  // namespace braidsym
