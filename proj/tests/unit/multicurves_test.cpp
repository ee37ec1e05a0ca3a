#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "braidsym/labeled_multicurves.hpp"

using namespace braidsym;

namespace {

using Curves = std::vector<std::pair<RoundCurve, LabelSet>>;

// Canonical string straight from intervals: parent = smallest enclosing
// interval, children sorted.
std::string interval_code(const Curves& cs, const std::vector<int>& relabel) {
  const std::size_t k = cs.size();
  std::vector<int> parent(k, -1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& a = cs[i].first;
      const auto& b = cs[j].first;
      if (b.lo() <= a.lo() && a.hi() <= b.hi() &&
          (parent[i] < 0 || b.punctures() < cs[static_cast<std::size_t>(parent[i])].first.punctures()))
        parent[i] = static_cast<int>(j);
    }
  std::function<std::string(int)> code = [&](int node) {
    std::vector<std::string> kids;
    for (std::size_t i = 0; i < k; ++i)
      if (parent[i] == node) kids.push_back(code(static_cast<int>(i)));
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    if (node >= 0) {
      const auto& [c, label] = cs[static_cast<std::size_t>(node)];
      LabelSet moved = 0;
      for (std::size_t l = 0; l < relabel.size(); ++l)
        if (label >> l & 1u) moved |= LabelSet{1} << relabel[l];
      s += std::to_string(c.punctures()) + ":" + std::to_string(moved);
    }
    for (const auto& kid : kids) s += kid;
    return s + ")";
  };
  return code(-1);
}

// Brute force: every laminar family of round curves with every labeling.
std::set<std::string> brute_symmetric_classes(int n) {
  const int universe = n / 2;
  std::vector<RoundCurve> all;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi)
      if (!(lo == 1 && hi == n)) all.emplace_back(n, lo, hi);
  std::vector<std::vector<int>> perms;
  std::vector<int> p(static_cast<std::size_t>(universe));
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const LabelSet full = full_label_set(universe);

  std::set<std::string> classes;
  std::vector<RoundCurve> chosen;
  std::function<void(std::size_t)> families = [&](std::size_t from) {
    if (!chosen.empty()) {
      Curves cs;
      for (const auto& c : chosen) cs.push_back({c, 1});
      std::function<void(std::size_t)> label = [&](std::size_t i) {
        if (i == cs.size()) {
          if (std::all_of(cs.begin(), cs.end(), [&](const auto& x) { return x.second == full; })) return;
          const std::string base = interval_code(cs, perms[0]);
          for (const auto& q : perms)
            if (interval_code(cs, q) != base) return;
          classes.insert(base);
          return;
        }
        for (LabelSet l = 1; l <= full; ++l) {
          cs[i].second = l;
          label(i + 1);
        }
      };
      label(0);
    }
    for (std::size_t j = from; j < all.size(); ++j) {
      if (!std::all_of(chosen.begin(), chosen.end(), [&](const RoundCurve& c) { return c.compatible_with(all[j]); })) continue;
      chosen.push_back(all[j]);
      families(j + 1);
      chosen.pop_back();
    }
  };
  families(0);
  return classes;
}

LabeledTree tree_of(int n, const std::vector<std::tuple<int, int, LabelSet>>& cs, int universe = 0) {
  Curves pairs;
  for (auto [lo, hi, l] : cs) pairs.push_back({RoundCurve(n, lo, hi), l});
  return from_round(n, universe ? universe : n / 2, pairs);
}

constexpr LabelSet L1 = 1, L2 = 2, L3 = 4;

}  // namespace

TEST_CASE("from_round builds the nesting tree") {
  const LabeledTree m6 = tree_of(6, {{1, 2, L1}, {3, 4, L2}, {5, 6, L3}});
  REQUIRE(m6.top_level().size() == 3);
  for (const auto& c : m6.top_level()) {
    CHECK(c.weight == 2);
    CHECK(c.children.empty());
  }
  const LabeledTree h7 = tree_of(7, {{1, 2, L1}, {3, 4, L2}, {5, 6, L3}, {1, 6, 7}});
  REQUIRE(h7.top_level().size() == 1);
  CHECK(h7.top_level()[0].weight == 6);
  CHECK(h7.top_level()[0].children.size() == 3);
  CHECK_THROWS_AS(tree_of(6, {{1, 3, L1}, {2, 4, L2}}), PreconditionError);
  CHECK_THROWS_AS(tree_of(6, {{1, 3, 0}}), PreconditionError);
  CHECK_THROWS_AS(tree_of(6, {{1, 3, L1}, {1, 3, L2}}), PreconditionError);
}

TEST_CASE("equivalence") {
  CHECK(equivalent(tree_of(6, {{1, 2, L1}, {3, 4, L2}, {5, 6, L3}}), tree_of(6, {{5, 6, L2}, {1, 2, L3}, {3, 4, L1}})));
  // Position of the free punctures does not matter.
  CHECK(equivalent(tree_of(7, {{1, 2, L1}, {4, 5, L2}}, 3), tree_of(7, {{2, 3, L2}, {6, 7, L1}}, 3)));
  for (int n = 6; n <= 10; ++n) CHECK_FALSE(equivalent(model_m(n), model_m_star(n)));
  CHECK_FALSE(equivalent(model_m_hat(7), model_m(7)));
  CHECK_FALSE(equivalent(tree_of(6, {{1, 3, L1}}), tree_of(6, {{1, 2, L1}})));
}

TEST_CASE("permute_labels") {
  const LabeledTree m6 = model_m(6);
  CHECK(equivalent(permute_labels(m6, Permutation(3)), m6));
  CHECK(equivalent(permute_labels(m6, Permutation::transposition(3, 0, 1)), m6));
  const LabeledTree t = tree_of(4, {{1, 2, L1}, {3, 4, L1 | L2}});
  CHECK(equivalent(permute_labels(t, Permutation::transposition(2, 0, 1)), tree_of(4, {{1, 2, L2}, {3, 4, L1 | L2}})));
}

TEST_CASE("total symmetry") {
  for (int n = 4; n <= 10; ++n) CHECK(is_totally_symmetric(model_m(n)));
  CHECK(is_totally_symmetric(tree_of(7, {{1, 3, 7}, {4, 5, 7}})));
  const LabeledTree t = tree_of(4, {{1, 2, L1}, {3, 4, L1 | L2}});
  CHECK_FALSE(is_totally_symmetric(t));
  CHECK(classify(t) == MulticurveClass::NotTotallySymmetric);
}

TEST_CASE("star") {
  for (int n = 4; n <= 10; ++n) {
    CHECK(equivalent(star(model_m(n)), model_m_star(n)));
    CHECK(equivalent(star(star(model_m(n))), model_m(n)));
  }
  CHECK_THROWS_AS(star(model_m_hat(7)), PreconditionError);
}

TEST_CASE("classify") {
  CHECK(classify(model_m_hat(7)) == MulticurveClass::MHat);
  CHECK(classify(tree_of(6, {{1, 2, L2 | L3}, {3, 4, L1 | L3}, {5, 6, L1 | L2}})) == MulticurveClass::MStar);
  CHECK(classify(tree_of(6, {{1, 6 - 1, 7}})) == MulticurveClass::TrivialLabeling);
  for (int n : {7, 9}) {
    CHECK(classify(model_m(n)) == MulticurveClass::M);
    CHECK(classify(model_m_star(n)) == MulticurveClass::MStar);
    CHECK(classify(model_m_hat(n)) == MulticurveClass::MHat);
    CHECK(classify(model_m_hat_star(n)) == MulticurveClass::MHatStar);
  }
}

TEST_CASE("enumeration matches the classification") {
  auto kinds = [](int n) {
    std::multiset<MulticurveClass> out;
    for (const auto& t : enumerate_totally_symmetric(n)) out.insert(classify(t));
    return out;
  };
  using C = MulticurveClass;
  CHECK(kinds(6) == std::multiset<C>{C::M, C::MStar});
  CHECK(kinds(8) == std::multiset<C>{C::M, C::MStar});
  CHECK(kinds(10) == std::multiset<C>{C::M, C::MStar});
  CHECK(kinds(7) == std::multiset<C>{C::M, C::MStar, C::MHat, C::MHatStar});
  CHECK(kinds(9) == std::multiset<C>{C::M, C::MStar, C::MHat, C::MHatStar});
  // Two labels: the complement of {1} is {2}, so M_5* is a relabeling of M_5.
  CHECK(equivalent(model_m(5), model_m_star(5)));
  CHECK(kinds(5) == std::multiset<C>{C::M, C::MHat});
}

TEST_CASE("enumeration agrees with brute force over all labeled curve families") {
  for (int n : {5, 6}) {
    const auto brute = brute_symmetric_classes(n);
    const auto found = enumerate_totally_symmetric(n);
    CHECK(brute.size() == found.size());
    std::set<std::string> codes;
    for (const auto& t : found) {
      std::vector<int> id(static_cast<std::size_t>(t.universe()));
      std::iota(id.begin(), id.end(), 0);
      codes.insert(interval_code(t.standard_position(), id));
    }
    CHECK(codes == brute);
  }
}

TEST_CASE("tree DSL") {
  CHECK(to_dsl(model_m_hat(7)) ==
        "(disk n=7 (curve 1 6 label=* (curve 1 2 label={1}) (curve 3 4 label={2}) (curve 5 6 label={3})))");
  for (int n = 5; n <= 10; ++n)
    for (const auto& t : enumerate_totally_symmetric(n)) CHECK(parse_labeled_tree(to_dsl(t)).canonical_code() == t.canonical_code());
  const LabeledTree flat = parse_labeled_tree("(disk n=7 (curve 1 2 label={1}) (curve 1 6 label=*) (curve 3 4 label={2}) (curve 5 6 label={3}))");
  CHECK(equivalent(flat, model_m_hat(7)));
  const LabeledTree odd = parse_labeled_tree("(disk n=6 N=2 (curve 1 2 label={1,2}))");
  CHECK(odd.universe() == 2);
  CHECK(to_dsl(odd) == "(disk n=6 N=2 (curve 1 2 label=*))");
  CHECK_THROWS_AS(parse_labeled_tree("(disk n=7 (curve 1 2 label={4}))"), Error);
  CHECK_THROWS_AS(parse_labeled_tree("(disk n=7 (curve 1 2 label={1})"), ParseError);
}
