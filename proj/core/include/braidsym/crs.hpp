#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/labeled_multicurves.hpp"
#include "braidsym/report.hpp"

namespace braidsym {

enum class TwistKind { Half, Dehn };

/// H_c^e for a two-punctured c, or T_c^e for c = c_0 = [1, n-1].
struct TwistFactor {
  RoundCurve curve;
  TwistKind kind;
  std::int64_t exponent;
};

/// A product of twists about pairwise disjoint, distinct curves times z^s.
/// Excludes nested factors other than two-punctured curves inside c_0, so the
/// canonical reduction system is exactly the set of factor curves.
class TwistForm {
 public:
  explicit TwistForm(int strands, std::vector<TwistFactor> factors = {}, std::int64_t central = 0);

  int strands() const { return strands_; }
  const std::vector<TwistFactor>& factors() const { return factors_; }
  std::int64_t central() const { return central_; }

 private:
  int strands_;
  std::vector<TwistFactor> factors_;
  std::int64_t central_;
};

BraidWord twistform_to_word(const TwistForm& t);
/// Factor curves, sorted; central powers contribute nothing.
std::vector<RoundCurve> crs_of(const TwistForm& t);
/// Union of the reduction systems, each curve labeled by the members whose
/// system contains it. The label universe is {1..ts.size()}.
LabeledTree gamma_of_set(const std::vector<TwistForm>& ts);

/// Twist forms of the standard families: H_{c_i}^k for X_n^k (c_i = [2i-1, 2i])
/// and H_{c_i}^{n(n-1)} z^{-1} for Z_n.
std::vector<TwistForm> xn_twistforms(int n, std::int64_t k = 1);
std::vector<TwistForm> zn_twistforms(int n);

/// Conjugation equivariance through the curve action: g t g^{-1} fixes every
/// g(c) for c in crs_of(t), and if an expected twist form for g t g^{-1} is
/// given, its word equals the conjugate and its curve classes are exactly
/// the g(c).
CheckReport check_crs_axioms(const TwistForm& t, const BraidWord& g, const std::optional<TwistForm>& expected = {});
/// For commuting t1, t2: every pair of reduction curves is equal or disjoint,
/// decided by the Dehn twist about one fixing the class of the other.
CheckReport check_crs_commuting(const TwistForm& t1, const TwistForm& t2);

/// "H[1,2]^3 * T[1,6]^2 * z^-1 (n=7)"; "1 (n=7)" for the identity.
std::string to_string(const TwistForm& t);
TwistForm parse_twistform(std::string_view text);

}  // namespace braidsym
