#include <doctest.h>

#include <set>

#include "braidsym/crs.hpp"
#include "braidsym/random.hpp"
#include "braidsym/tss.hpp"
#include "braidsym/word_problem.hpp"

using namespace braidsym;

namespace {

TwistFactor half(int n, int lo, std::int64_t e) { return {RoundCurve(n, lo, lo + 1), TwistKind::Half, e}; }
TwistFactor dehn(int n, std::int64_t e) { return {RoundCurve(n, 1, n - 1), TwistKind::Dehn, e}; }

}  // namespace

TEST_CASE("twist form validation") {
  CHECK_THROWS_AS(TwistForm(7, {{RoundCurve(7, 1, 3), TwistKind::Half, 1}}), PreconditionError);
  CHECK_THROWS_AS(TwistForm(7, {{RoundCurve(7, 2, 4), TwistKind::Dehn, 1}}), PreconditionError);
  CHECK_THROWS_AS(TwistForm(7, {half(7, 1, 0)}), PreconditionError);
  CHECK_THROWS_AS(TwistForm(7, {half(7, 1, 1), half(7, 2, 1)}), PreconditionError);
  CHECK_THROWS_AS(TwistForm(7, {half(7, 1, 1), half(7, 1, 2)}), PreconditionError);
}

TEST_CASE("twist forms as words") {
  const int n = 6;
  const BraidWord z = twistform_to_word(TwistForm(n, {half(n, 1, n * (n - 1))}, -1));
  CHECK(exponent_sum(z) == 0);
  CHECK(equal(twistform_to_word(TwistForm(n, {}, 1)), center_word(n)));
  CHECK(twistform_to_word(TwistForm(n, {half(n, 1, 1)})) == BraidWord(n, {1}));
  CHECK(equal(twistform_to_word(TwistForm(n, {dehn(n, 1)})), dehn_twist(RoundCurve(n, 1, n - 1))));
}

TEST_CASE("reduction systems") {
  const int n = 7;
  CHECK(crs_of(TwistForm(n, {half(n, 1, 42)}, -1)) == std::vector<RoundCurve>{RoundCurve(n, 1, 2)});
  CHECK(crs_of(TwistForm(n, {half(n, 1, 1), half(n, 3, -1)})) == std::vector<RoundCurve>{RoundCurve(n, 1, 2), RoundCurve(n, 3, 4)});
  CHECK(crs_of(TwistForm(n, {}, 3)).empty());
}

TEST_CASE("gamma of the standard families") {
  for (int n = 5; n <= 10; ++n) {
    CHECK(equivalent(gamma_of_set(zn_twistforms(n)), model_m(n)));
    CHECK(equivalent(gamma_of_set(xn_twistforms(n)), model_m(n)));
    CHECK(equivalent(gamma_of_set(xn_twistforms(n, -3)), model_m(n)));
    if (n % 2 == 1) {
      std::vector<TwistForm> fam;
      for (int i = 1; i <= n / 2; ++i) fam.emplace_back(n, std::vector<TwistFactor>{half(n, 2 * i - 1, 2), dehn(n, -1)}, 3);
      CHECK(classify(gamma_of_set(fam)) == MulticurveClass::MHat);
    }
  }
  // Y_n: sigma_1 sigma_{2i+1}^-1 for i = 1..N-1; c_1 lies in every member.
  const int n = 8;
  std::vector<TwistForm> y;
  for (int i = 2; i <= n / 2; ++i) y.emplace_back(n, std::vector<TwistFactor>{half(n, 1, 1), half(n, 2 * i - 1, -1)});
  std::vector<std::pair<RoundCurve, LabelSet>> expected{{RoundCurve(n, 1, 2), full_label_set(n / 2 - 1)}};
  for (int i = 2; i <= n / 2; ++i) expected.push_back({RoundCurve(n, 2 * i - 1, 2 * i), LabelSet{1} << (i - 2)});
  CHECK(equivalent(gamma_of_set(y), from_round(n, n / 2 - 1, expected)));
}

TEST_CASE("conjugation moves reduction curves") {
  const int n = 7;
  const auto z = make_Zn(n);
  const auto forms = zn_twistforms(n);
  CHECK(check_crs_axioms(forms[0], z.swaps[0], forms[1]).passed());
  CHECK(check_crs_axioms(forms[1], z.swaps[1], forms[2]).passed());
  CHECK_FALSE(check_crs_axioms(forms[0], z.swaps[0], forms[2]).passed());
  CHECK(check_crs_axioms(forms[0], center_word(n)).passed());
  Rng rng(4);
  for (int t = 0; t < 50; ++t) CHECK(check_crs_axioms(TwistForm(n, {half(n, 3, 2), dehn(n, 1)}, -2), random_word(rng, n, 15)).passed());
}

TEST_CASE("commuting twist forms have equal or disjoint reduction curves") {
  const int n = 7;
  CHECK(check_crs_commuting(TwistForm(n, {half(n, 1, 1)}), TwistForm(n, {half(n, 3, 1)})).passed());
  CHECK(check_crs_commuting(TwistForm(n, {half(n, 1, 1), dehn(n, 1)}), TwistForm(n, {half(n, 3, 1)})).passed());
  const auto r = check_crs_commuting(TwistForm(n, {half(n, 1, 1)}), TwistForm(n, {half(n, 2, 1)}));
  REQUIRE(!r.items().empty());
  CHECK(r.items()[0].status == Status::Skip);
}

TEST_CASE("twist form text") {
  const TwistForm t = parse_twistform("H[1,2]^3 * T[1,6]^2 * z^-1 (n=7)");
  REQUIRE(t.factors().size() == 2);
  CHECK(t.factors()[0].kind == TwistKind::Half);
  CHECK(t.factors()[0].exponent == 3);
  CHECK(t.factors()[1].kind == TwistKind::Dehn);
  CHECK(t.central() == -1);
  CHECK(to_string(t) == "H[1,2]^3 * T[1,6]^2 * z^-1 (n=7)");
  CHECK(to_string(parse_twistform(to_string(t))) == to_string(t));
  CHECK(to_string(parse_twistform("1 (n=5)")) == "1 (n=5)");
  CHECK(parse_twistform("H[3,4] (n=5)").factors()[0].exponent == 1);
  CHECK_THROWS_AS(parse_twistform("H[1,2]^3"), ParseError);
}
