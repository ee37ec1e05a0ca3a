#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

/// Homomorphism B_n -> B_{n'} given by the images of sigma_1..sigma_{n-1}.
struct GeneratorMap {
  int source = 2;
  int target = 2;
  std::vector<BraidWord> images;

  GeneratorMap(int source_strands, int target_strands, std::vector<BraidWord> generator_images);

  static GeneratorMap identity(int n);
  /// Every sigma_i to the same word.
  static GeneratorMap constant(int n, const BraidWord& image);
};

/// Images of the generators sigma_1 sigma_i^{-1}, 2 <= i <= n-1, of B_n'.
/// No relations are checked: well-definedness comes from how it was built.
struct CommutatorMap {
  int source = 2;
  int target = 2;
  std::vector<BraidWord> images;

  static CommutatorMap inclusion(int n);
};

/// w -> g iota^e(w) g^{-1}, iota the inversion automorphism.
struct Automorphism {
  BraidWord inner;
  bool inversion = false;
};

struct EquivalenceWitness {
  Automorphism alpha;
  std::int64_t transvection = 0;
};

bool validate_hom(const GeneratorMap& m);
/// Substitutes images letter by letter. Throws if the map is invalid.
BraidWord apply_hom(const GeneratorMap& m, const BraidWord& w);
/// sigma_i -> rho(sigma_i) z^k. Needs equal source and target strand counts.
GeneratorMap transvect(const GeneratorMap& m, std::int64_t k);
CommutatorMap restrict_to_commutator(const GeneratorMap& m);
bool has_cyclic_image(const GeneratorMap& m);

/// Negates every letter: sigma_i -> sigma_i^{-1}.
BraidWord inversion(const BraidWord& w);
BraidWord apply_automorphism(const Automorphism& alpha, const BraidWord& w);
/// alpha o (m transvected by k).
GeneratorMap compose_equivalence(const GeneratorMap& m, const EquivalenceWitness& w);
/// alpha o m; the witness must carry no transvection.
CommutatorMap compose_equivalence(const CommutatorMap& m, const EquivalenceWitness& w);
bool check_equivalence(const GeneratorMap& m1, const GeneratorMap& m2, const EquivalenceWitness& w);
bool check_equivalence(const CommutatorMap& m1, const CommutatorMap& m2, const EquivalenceWitness& w);

struct SuiteOptions {
  bool tamper_gi_exponent = false;  // use 8-2i in place of 9-2i
  bool tamper_conjugator = false;   // replace sigma_2^-2 sigma_1 sigma_2 by the empty word
};

/// Explicit braid identities among the model maps, items a..j.
/// Items whose index ranges are empty for this n are SKIP.
CheckReport identity_suite_report(int n, const SuiteOptions& options = {});

/// Map files:
///   n=7 -> n=7
///   s1: 1
///   s2: 2 1 -1
/// Commutator maps use "c2: ..." for the image of sigma_1 sigma_2^{-1}.
std::string to_map_text(const GeneratorMap& m);
std::string to_map_text(const CommutatorMap& m);
std::variant<GeneratorMap, CommutatorMap> parse_map_text(std::string_view text);

}  // namespace braidsym
