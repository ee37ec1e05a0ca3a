#include <doctest.h>

#include "braidsym/homomorphisms.hpp"
#include "braidsym/random.hpp"
#include "braidsym/word_problem.hpp"

using namespace braidsym;

namespace {

bool images_equal(const std::vector<BraidWord>& a, const std::vector<BraidWord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!equal(a[i], b[i])) return false;
  return true;
}

Status status_of(const CheckReport& r, const std::string& key) {
  const auto* i = r.find(key);
  REQUIRE(i != nullptr);
  return i->status;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(validate_hom(GeneratorMap::identity(6)));
  CHECK(validate_hom(GeneratorMap::constant(6, BraidWord(6, {1}))));
  std::vector<BraidWord> imgs;
  for (int i = 1; i < 6; ++i) imgs.emplace_back(6, std::vector<int>{i});
  imgs[1] = BraidWord(6, {-1});
  CHECK_FALSE(validate_hom(GeneratorMap(6, 6, imgs)));
  CHECK_THROWS_AS(GeneratorMap(6, 6, {BraidWord(6, {1})}), PreconditionError);
}

TEST_CASE("applying maps") {
  const BraidWord w(5, {1, -2});
  CHECK(equal(apply_hom(GeneratorMap::identity(5), w), w));
  CHECK(apply_hom(GeneratorMap::constant(5, BraidWord(5, {1})), w).empty());
  const BraidWord t = apply_hom(transvect(GeneratorMap::identity(5), 1), w);
  CHECK(equal(t, w));
}

TEST_CASE("maps are homomorphisms on random words") {
  Rng rng(41);
  const GeneratorMap m = transvect(GeneratorMap::identity(5), 2);
  for (int k = 0; k < 50; ++k) {
    const BraidWord u = random_word(rng, 5, 8), v = random_word(rng, 5, 8);
    CHECK(equal(apply_hom(m, u * v), apply_hom(m, u) * apply_hom(m, v)));
    CHECK(equal(apply_hom(m, perturb(rng, u, 1)), apply_hom(m, u)));
  }
}

TEST_CASE("transvections") {
  const GeneratorMap id = GeneratorMap::identity(6);
  CHECK(images_equal(transvect(id, 0).images, id.images));
  const GeneratorMap t = transvect(id, 1);
  CHECK(validate_hom(t));
  for (int i = 1; i < 6; ++i) CHECK(equal(t.images[static_cast<std::size_t>(i - 1)], BraidWord(6, {i}) * center_word(6)));
  CHECK(images_equal(transvect(t, -1).images, id.images));
  CHECK_THROWS_AS(transvect(GeneratorMap(5, 6, GeneratorMap::identity(6).images), 1), Error);
}

TEST_CASE("restriction to the commutator subgroup") {
  const CommutatorMap inc = CommutatorMap::inclusion(6);
  CHECK(images_equal(restrict_to_commutator(GeneratorMap::identity(6)).images, inc.images));
  for (const auto& img : restrict_to_commutator(GeneratorMap::constant(6, BraidWord(6, {2, 2}))).images) CHECK(is_trivial(img));
  CHECK(images_equal(restrict_to_commutator(transvect(GeneratorMap::identity(6), 3)).images, inc.images));
}

TEST_CASE("cyclic images") {
  CHECK(has_cyclic_image(GeneratorMap::constant(6, BraidWord(6, {1, 2}))));
  CHECK_FALSE(has_cyclic_image(GeneratorMap::identity(6)));
  CHECK_FALSE(has_cyclic_image(transvect(GeneratorMap::identity(6), 1)));
  CHECK(has_cyclic_image(GeneratorMap::constant(6, BraidWord(6))));
}

TEST_CASE("cyclic image iff trivial restriction") {
  Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const int n = uniform_int(rng, 5, 7);
    const BraidWord g = random_word(rng, n, 6);
    GeneratorMap m = t % 2 ? GeneratorMap::constant(n, random_word(rng, n, 3)) : GeneratorMap::identity(n);
    for (auto& img : m.images) img = conjugate(g, img);
    m = transvect(m, uniform_int(rng, -2, 2));
    REQUIRE(validate_hom(m));
    bool trivial = true;
    for (const auto& img : restrict_to_commutator(m).images) trivial = trivial && is_trivial(img);
    CHECK(has_cyclic_image(m) == trivial);
  }
}

TEST_CASE("automorphisms and equivalence") {
  const int n = 6;
  const GeneratorMap id = GeneratorMap::identity(n);
  const EquivalenceWitness trivial{{BraidWord(n), false}, 0};
  CHECK(images_equal(compose_equivalence(id, trivial).images, id.images));
  CHECK(check_equivalence(id, id, trivial));
  CHECK(check_equivalence(transvect(id, 1), id, {{BraidWord(n), false}, -1}));
  const EquivalenceWitness inv{{BraidWord(n), true}, 0};
  CHECK(check_equivalence(id, compose_equivalence(id, inv), inv));
  CHECK_FALSE(check_equivalence(id, compose_equivalence(id, inv), trivial));

  const BraidWord g(n, {2, -3, 1});
  const GeneratorMap inner = compose_equivalence(id, {{g, false}, 0});
  for (int i = 1; i < n; ++i) CHECK(equal(inner.images[static_cast<std::size_t>(i - 1)], conjugate(g, BraidWord(n, {i}))));

  CHECK(inversion(BraidWord(n, {1, -2, 3})) == BraidWord(n, {-1, 2, -3}));
  const CommutatorMap inc = CommutatorMap::inclusion(n);
  const CommutatorMap flipped = compose_equivalence(inc, inv);
  for (int j = 2; j < n; ++j) CHECK(equal(flipped.images[static_cast<std::size_t>(j - 2)], BraidWord(n, {-1, j})));
  CHECK(check_equivalence(inc, flipped, inv));
  CHECK(equal(apply_automorphism({g, true}, BraidWord(n, {1})), conjugate(g, BraidWord(n, {-1}))));
}

TEST_CASE("identity suite") {
  for (int n = 7; n <= 10; ++n) {
    const CheckReport r = identity_suite_report(n);
    CHECK(r.passed());
    CHECK(r.items().size() == 10);
    for (const auto& i : r.items()) CHECK(i.status == Status::Pass);
  }
  const CheckReport r5 = identity_suite_report(5);
  CHECK(r5.passed());
  CHECK(status_of(r5, "d") == Status::Skip);
  CHECK(status_of(r5, "f") == Status::Skip);
  CHECK(status_of(r5, "a") == Status::Pass);
  CHECK_THROWS_AS(identity_suite_report(4), PreconditionError);
}

TEST_CASE("tampered suite inputs fail") {
  for (int n = 7; n <= 10; ++n) {
    const CheckReport e = identity_suite_report(n, {true, false});
    CHECK_FALSE(e.passed());
    CHECK(status_of(e, "d") == Status::Fail);
    const CheckReport c = identity_suite_report(n, {false, true});
    CHECK_FALSE(c.passed());
    CHECK(status_of(c, "c") == Status::Fail);
  }
}

TEST_CASE("map text") {
  const GeneratorMap t = transvect(GeneratorMap::identity(5), 1);
  const auto back = parse_map_text(to_map_text(t));
  REQUIRE(std::holds_alternative<GeneratorMap>(back));
  CHECK(std::get<GeneratorMap>(back).images == t.images);
  const auto c = parse_map_text(to_map_text(CommutatorMap::inclusion(6)));
  REQUIRE(std::holds_alternative<CommutatorMap>(c));
  CHECK(std::get<CommutatorMap>(c).images == CommutatorMap::inclusion(6).images);
  const auto m = parse_map_text("n=3 -> n=3\ns1: 1\ns2: 2\n");
  CHECK(std::get<GeneratorMap>(m).images == GeneratorMap::identity(3).images);
  CHECK_THROWS_AS(parse_map_text("n=3 -> n=3\ns1: 1\n"), Error);
  CHECK_THROWS_AS(parse_map_text("n=3 => n=3\n"), ParseError);
}
