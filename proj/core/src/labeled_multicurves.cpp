#include "braidsym/labeled_multicurves.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "text_util.hpp"

namespace braidsym {
namespace {

void validate_node(const LabeledNode& node, int capacity, LabelSet full) {
  require(node.weight >= 2, "a curve must enclose at least two punctures");
  require(node.label != 0, "empty labels are not allowed");
  require((node.label & ~full) == 0, "label outside the label universe");
  int total = 0;
  for (const auto& child : node.children) {
    validate_node(child, node.weight, full);
    total += child.weight;
  }
  require(total <= node.weight, "children enclose more punctures than their parent");
  require(!(node.children.size() == 1 && node.children.front().weight == node.weight),
          "a curve and its only child enclose the same punctures");
  require(node.weight < capacity || capacity < 0, "curve is parallel to its parent");
}

std::string node_code(const LabeledNode& node) {
  std::vector<std::string> parts;
  parts.reserve(node.children.size());
  for (const auto& child : node.children) parts.push_back(node_code(child));
  std::sort(parts.begin(), parts.end());
  std::string out = "(" + std::to_string(node.weight) + ":" + std::to_string(node.label);
  for (const auto& p : parts) out += p;
  out += ")";
  return out;
}

int count_nodes(const std::vector<LabeledNode>& nodes) {
  int total = 0;
  for (const auto& node : nodes) total += 1 + count_nodes(node.children);
  return total;
}

bool all_full(const std::vector<LabeledNode>& nodes, LabelSet full) {
  return std::all_of(nodes.begin(), nodes.end(),
                     [&](const LabeledNode& node) { return node.label == full && all_full(node.children, full); });
}

std::vector<const LabeledNode*> sorted_by_code(const std::vector<LabeledNode>& nodes) {
  std::vector<std::pair<std::string, const LabeledNode*>> keyed;
  for (const auto& node : nodes) keyed.emplace_back(node_code(node), &node);
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<const LabeledNode*> out;
  for (const auto& [code, node] : keyed) out.push_back(node);
  return out;
}

void place(const LabeledNode& node, int start, int n, std::vector<std::pair<RoundCurve, LabelSet>>& out) {
  out.emplace_back(RoundCurve(n, start, start + node.weight - 1), node.label);
  int cursor = start;
  for (const LabeledNode* child : sorted_by_code(node.children)) {
    place(*child, cursor, n, out);
    cursor += child->weight;
  }
}

LabelSet permute_set(LabelSet label, const Permutation& sigma) {
  LabelSet out = 0;
  for (int l = 0; l < sigma.degree(); ++l)
    if (label & (LabelSet{1} << l)) out |= LabelSet{1} << sigma(l);
  return out;
}

void permute_nodes(std::vector<LabeledNode>& nodes, const Permutation& sigma) {
  for (auto& node : nodes) {
    node.label = permute_set(node.label, sigma);
    permute_nodes(node.children, sigma);
  }
}

void complement_nodes(std::vector<LabeledNode>& nodes, LabelSet full) {
  for (auto& node : nodes) {
    require(node.label != full, "star needs every label to be a proper subset");
    node.label = full & ~node.label;
    complement_nodes(node.children, full);
  }
}

void print_node(const LabeledNode& node, int start, int universe, std::string& out) {
  out += " (curve " + std::to_string(start) + " " + std::to_string(start + node.weight - 1) +
         " label=" + label_to_string(node.label, universe);
  int cursor = start;
  for (const LabeledNode* child : sorted_by_code(node.children)) {
    print_node(*child, cursor, universe, out);
    cursor += child->weight;
  }
  out += ")";
}

}  // namespace

LabeledTree::LabeledTree(int strands, int universe, std::vector<LabeledNode> top_level)
    : strands_(strands), universe_(universe), top_(std::move(top_level)) {
  require(strands >= 1, "need at least one puncture");
  require(universe >= 1 && universe <= kMaxLabelUniverse, "label universe size out of range");
  LabeledNode root{strands, full_label(), top_};
  int total = 0;
  for (const auto& child : top_) {
    validate_node(child, strands, full_label());
    total += child.weight;
  }
  require(total <= strands, "curves enclose more punctures than the disk has");
  (void)root;
}

int LabeledTree::curve_count() const { return count_nodes(top_); }

bool LabeledTree::has_trivial_labeling() const { return all_full(top_, full_label()); }

std::string LabeledTree::canonical_code() const {
  std::vector<std::string> parts;
  for (const auto& node : top_) parts.push_back(node_code(node));
  std::sort(parts.begin(), parts.end());
  std::string out = std::to_string(strands_) + "/" + std::to_string(universe_) + ":";
  for (const auto& p : parts) out += p;
  return out;
}

std::vector<std::pair<RoundCurve, LabelSet>> LabeledTree::standard_position() const {
  std::vector<std::pair<RoundCurve, LabelSet>> out;
  int cursor = 1;
  for (const LabeledNode* node : sorted_by_code(top_)) {
    place(*node, cursor, strands_, out);
    cursor += node->weight;
  }
  return out;
}

LabeledTree from_round(int strands, int universe, const std::vector<std::pair<RoundCurve, LabelSet>>& pairs) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    require_same_strands(pairs[i].first.strands(), strands);
    require(pairs[i].second != 0, "empty labels are not allowed");
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      require(!(pairs[i].first == pairs[j].first), "duplicate curve " + to_string(pairs[i].first));
      require(pairs[i].first.compatible_with(pairs[j].first),
              "curves " + to_string(pairs[i].first) + " and " + to_string(pairs[j].first) + " cross");
    }
  }
  // Outer curves first: by left end, then widest.
  std::vector<std::size_t> order(pairs.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    const auto& cx = pairs[x].first;
    const auto& cy = pairs[y].first;
    return cx.lo() != cy.lo() ? cx.lo() < cy.lo() : cx.hi() > cy.hi();
  });

  struct Pending {
    RoundCurve curve;
    LabeledNode node;
  };
  std::vector<LabeledNode> top;
  std::vector<Pending> stack;
  auto close_top = [&]() {
    LabeledNode done = std::move(stack.back().node);
    stack.pop_back();
    if (stack.empty())
      top.push_back(std::move(done));
    else
      stack.back().node.children.push_back(std::move(done));
  };
  for (std::size_t idx : order) {
    const auto& [curve, label] = pairs[idx];
    while (!stack.empty() && stack.back().curve.hi() < curve.lo()) close_top();
    stack.push_back(Pending{curve, LabeledNode{curve.punctures(), label, {}}});
  }
  while (!stack.empty()) close_top();
  return LabeledTree(strands, universe, std::move(top));
}

bool equivalent(const LabeledTree& t1, const LabeledTree& t2) {
  require_same_strands(t1.strands(), t2.strands());
  require(t1.universe() == t2.universe(), "label universes differ");
  return t1.canonical_code() == t2.canonical_code();
}

LabeledTree permute_labels(const LabeledTree& t, const Permutation& sigma) {
  require(sigma.degree() == t.universe(), "label permutation has the wrong degree");
  auto nodes = t.top_level();
  permute_nodes(nodes, sigma);
  return LabeledTree(t.strands(), t.universe(), std::move(nodes));
}

bool is_totally_symmetric(const LabeledTree& t) {
  require(t.universe() <= 8, "total symmetry check is limited to N <= 8");
  const std::string code = t.canonical_code();
  std::vector<int> image(static_cast<std::size_t>(t.universe()));
  std::iota(image.begin(), image.end(), 0);
  do {
    if (permute_labels(t, Permutation(image)).canonical_code() != code) return false;
  } while (std::next_permutation(image.begin(), image.end()));
  return true;
}

LabeledTree star(const LabeledTree& t) {
  auto nodes = t.top_level();
  complement_nodes(nodes, t.full_label());
  return LabeledTree(t.strands(), t.universe(), std::move(nodes));
}

std::string to_string(MulticurveClass c) {
  switch (c) {
    case MulticurveClass::TrivialLabeling: return "TRIVIAL_LABELING";
    case MulticurveClass::M: return "M";
    case MulticurveClass::MStar: return "M_STAR";
    case MulticurveClass::MHat: return "M_HAT";
    case MulticurveClass::MHatStar: return "M_HAT_STAR";
    case MulticurveClass::NotTotallySymmetric: return "NOT_TOTALLY_SYMMETRIC";
    case MulticurveClass::Other: return "OTHER";
  }
  return "OTHER";
}

LabeledTree model_m(int n) {
  const int universe = n / 2;
  require(universe >= 1, "models need n >= 2");
  std::vector<std::pair<RoundCurve, LabelSet>> pairs;
  for (int i = 1; i <= universe; ++i)
    if (!(2 * i - 1 == 1 && 2 * i == n)) pairs.emplace_back(RoundCurve(n, 2 * i - 1, 2 * i), LabelSet{1} << (i - 1));
  return from_round(n, universe, pairs);
}

LabeledTree model_m_star(int n) { return star(model_m(n)); }

LabeledTree model_m_hat(int n) {
  require(n % 2 == 1 && n >= 5, "hat models exist for odd n >= 5");
  auto pairs = model_m(n).standard_position();
  pairs.emplace_back(RoundCurve(n, 1, n - 1), full_label_set(n / 2));
  return from_round(n, n / 2, pairs);
}

LabeledTree model_m_hat_star(int n) {
  require(n % 2 == 1 && n >= 5, "hat models exist for odd n >= 5");
  auto pairs = model_m_star(n).standard_position();
  pairs.emplace_back(RoundCurve(n, 1, n - 1), full_label_set(n / 2));
  return from_round(n, n / 2, pairs);
}

MulticurveClass classify(const LabeledTree& t) {
  if (t.has_trivial_labeling()) return MulticurveClass::TrivialLabeling;
  if (!is_totally_symmetric(t)) return MulticurveClass::NotTotallySymmetric;
  const int n = t.strands();
  if (n >= 4 && t.universe() == n / 2) {
    if (equivalent(t, model_m(n))) return MulticurveClass::M;
    if (t.universe() >= 2 && equivalent(t, model_m_star(n))) return MulticurveClass::MStar;
    if (n % 2 == 1 && n >= 5) {
      if (equivalent(t, model_m_hat(n))) return MulticurveClass::MHat;
      if (equivalent(t, model_m_hat_star(n))) return MulticurveClass::MHatStar;
    }
  }
  return MulticurveClass::Other;
}

namespace {

// Unlabeled node shapes, identified by index; children are shape indices.
struct Shape {
  int weight;
  std::vector<int> children;  // non-decreasing
};

// All multisets of shape ids (non-decreasing) drawn from `pool` with total
// weight <= capacity.
void child_multisets(const std::vector<Shape>& shapes, int capacity, std::size_t from, std::vector<int>& current,
                     std::vector<std::vector<int>>& out) {
  out.push_back(current);
  for (std::size_t s = from; s < shapes.size(); ++s) {
    if (shapes[s].weight > capacity) continue;
    current.push_back(static_cast<int>(s));
    child_multisets(shapes, capacity - shapes[s].weight, s, current, out);
    current.pop_back();
  }
}

struct FlatNode {
  int shape;
  int parent;  // -1 for top level
  std::string orbit_key;
};

void flatten(const std::vector<Shape>& shapes, int shape, int parent, const std::string& parent_key,
             std::vector<FlatNode>& out) {
  const std::string key = parent_key + "/" + std::to_string(shape);
  const int self = static_cast<int>(out.size());
  out.push_back(FlatNode{shape, parent, key});
  for (int child : shapes[static_cast<std::size_t>(shape)].children) flatten(shapes, child, self, key, out);
}

LabeledNode build(const std::vector<FlatNode>& flat, const std::vector<Shape>& shapes, const std::vector<LabelSet>& labels,
                  int index) {
  LabeledNode node;
  node.weight = shapes[static_cast<std::size_t>(flat[static_cast<std::size_t>(index)].shape)].weight;
  node.label = labels[static_cast<std::size_t>(index)];
  for (std::size_t j = 0; j < flat.size(); ++j)
    if (flat[j].parent == index) node.children.push_back(build(flat, shapes, labels, static_cast<int>(j)));
  return node;
}

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

std::vector<LabeledTree> enumerate_totally_symmetric(int n) {
  require(n >= 5 && n <= 10, "enumeration supports 5 <= n <= 10");
  const int universe = n / 2;
  const LabelSet full = full_label_set(universe);

  // Shapes by increasing weight; a shape's children all have smaller weight.
  std::vector<Shape> shapes;
  for (int w = 2; w <= n - 1; ++w) {
    std::vector<Shape> smaller = shapes;
    std::vector<std::vector<int>> sets;
    std::vector<int> current;
    child_multisets(smaller, w, 0, current, sets);
    for (auto& s : sets) shapes.push_back(Shape{w, std::move(s)});
  }

  std::vector<std::vector<int>> roots;
  {
    std::vector<int> current;
    child_multisets(shapes, n, 0, current, roots);
  }

  // Label candidates by the size of the node's orbit under tree automorphisms:
  // a nontrivial label A needs C(N, |A|) nodes in its orbit to land on.
  std::vector<std::vector<LabelSet>> labels_for_orbit(static_cast<std::size_t>(n + 1));
  for (int orbit = 0; orbit <= n; ++orbit) {
    auto& options = labels_for_orbit[static_cast<std::size_t>(orbit)];
    options.push_back(full);
    for (LabelSet a = 1; a < full; ++a)
      if (binomial(universe, std::popcount(a)) <= orbit) options.push_back(a);
  }

  std::set<std::string> seen;
  std::vector<LabeledTree> found;
  for (const auto& top : roots) {
    if (top.empty()) continue;
    std::vector<FlatNode> flat;
    for (int s : top) flatten(shapes, s, -1, "", flat);
    std::map<std::string, int> orbit_size;
    for (const auto& f : flat) ++orbit_size[f.orbit_key];

    std::vector<const std::vector<LabelSet>*> options;
    bool any_nontrivial = false;
    for (const auto& f : flat) {
      const int orbit = std::min(orbit_size[f.orbit_key], n);
      options.push_back(&labels_for_orbit[static_cast<std::size_t>(orbit)]);
      any_nontrivial = any_nontrivial || options.back()->size() > 1;
    }
    if (!any_nontrivial) continue;

    std::vector<std::size_t> digit(flat.size(), 0);
    std::vector<LabelSet> labels(flat.size());
    for (;;) {
      bool nontrivial = false;
      for (std::size_t j = 0; j < flat.size(); ++j) {
        labels[j] = (*options[j])[digit[j]];
        nontrivial = nontrivial || labels[j] != full;
      }
      if (nontrivial) {
        std::vector<LabeledNode> nodes;
        for (std::size_t j = 0; j < flat.size(); ++j)
          if (flat[j].parent < 0) nodes.push_back(build(flat, shapes, labels, static_cast<int>(j)));
        LabeledTree tree(n, universe, std::move(nodes));
        if (seen.insert(tree.canonical_code()).second && is_totally_symmetric(tree)) found.push_back(std::move(tree));
      }
      std::size_t k = 0;
      while (k < flat.size() && ++digit[k] == options[k]->size()) digit[k++] = 0;
      if (k == flat.size()) break;
    }
  }
  std::sort(found.begin(), found.end(),
            [](const LabeledTree& x, const LabeledTree& y) { return x.canonical_code() < y.canonical_code(); });
  return found;
}

std::string label_to_string(LabelSet label, int universe) {
  if (label == full_label_set(universe)) return "*";
  std::string out = "{";
  bool first = true;
  for (int l = 0; l < universe; ++l)
    if (label & (LabelSet{1} << l)) {
      if (!first) out += ",";
      out += std::to_string(l + 1);
      first = false;
    }
  return out + "}";
}

std::string to_dsl(const LabeledTree& t) {
  std::string out = "(disk n=" + std::to_string(t.strands());
  if (t.universe() != t.strands() / 2) out += " N=" + std::to_string(t.universe());
  int cursor = 1;
  for (const LabeledNode* node : sorted_by_code(t.top_level())) {
    print_node(*node, cursor, t.universe(), out);
    cursor += node->weight;
  }
  return out + ")";
}

namespace {

LabelSet read_label(detail::Scanner& in, int universe) {
  if (in.consume("*")) return full_label_set(universe);
  in.expect("{");
  LabelSet label = 0;
  if (in.consume("}")) return 0;
  do {
    const int l = in.read_small_int();
    if (l < 1 || l > universe) in.fail("label " + std::to_string(l) + " outside {1.." + std::to_string(universe) + "}");
    label |= LabelSet{1} << (l - 1);
  } while (in.consume(","));
  in.expect("}");
  return label;
}

void read_curves(detail::Scanner& in, int n, int universe, std::vector<std::pair<RoundCurve, LabelSet>>& out) {
  while (in.consume("(curve")) {
    const int lo = in.read_small_int();
    const int hi = in.read_small_int();
    in.expect("label=");
    const LabelSet label = read_label(in, universe);
    try {
      out.emplace_back(RoundCurve(n, lo, hi), label);
    } catch (const PreconditionError& e) {
      in.fail(e.what());
    }
    read_curves(in, n, universe, out);
    in.expect(")");
  }
}

}  // namespace

LabeledTree parse_labeled_tree(std::string_view text) {
  detail::Scanner in(text);
  in.expect("(disk");
  in.expect("n=");
  const int n = in.read_small_int();
  int universe = n / 2;
  if (in.consume("N=")) universe = in.read_small_int();
  if (n < 2 || universe < 1 || universe > kMaxLabelUniverse) in.fail("bad disk parameters");
  std::vector<std::pair<RoundCurve, LabelSet>> pairs;
  read_curves(in, n, universe, pairs);
  in.expect(")");
  if (!in.at_end()) in.fail("trailing input");
  try {
    return from_round(n, universe, pairs);
  } catch (const PreconditionError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidsym
