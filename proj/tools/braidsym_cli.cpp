// braidsym command-line tool.
//
// Exit codes: 0 ok / true, 1 false / failed report, 2 usage or parse error,
// 3 internal invariant breach.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "braidsym/cabling.hpp"
#include "braidsym/crs.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/homomorphisms.hpp"
#include "braidsym/labeled_multicurves.hpp"
#include "braidsym/selfcheck.hpp"
#include "braidsym/tss.hpp"
#include "braidsym/word_problem.hpp"

#ifndef BRAIDSYM_VERSION
#define BRAIDSYM_VERSION "0.0.0"
#endif

using namespace braidsym;
using json = nlohmann::ordered_json;

namespace {

constexpr int kFalse = 1;
constexpr int kUsage = 2;
constexpr int kBreach = 3;

struct Globals {
  bool json = false;
  std::uint64_t seed = 42;
  int depth = kDefaultSearchDepth;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Inline text when it looks like the DSL, otherwise a file path.
std::string text_or_file(const std::string& arg, char opener) {
  const auto p = arg.find_first_not_of(" \t");
  if (p != std::string::npos && arg[p] == opener) return arg;
  return read_file(arg);
}

json report_json(const std::string& tool, const json& params, const CheckReport& r) {
  json items = json::array();
  for (const auto& i : r.items())
    items.push_back({{"key", i.key}, {"status", to_string(i.status)}, {"detail", i.detail}, {"elapsed_ms", i.elapsed_ms}});
  return {{"tool", tool}, {"version", BRAIDSYM_VERSION}, {"parameters", params}, {"items", items}, {"passed", r.passed()}};
}

int emit_report(const Globals& g, const std::string& tool, const json& params, const CheckReport& r) {
  if (g.json) {
    std::cout << report_json(tool, params, r).dump(2) << "\n";
  } else {
    for (const auto& i : r.items()) {
      std::cout << to_string(i.status) << "  " << i.key;
      if (!i.detail.empty()) std::cout << "  (" << i.detail << ")";
      std::cout << "\n";
    }
    std::cout << (r.passed() ? "passed" : "FAILED") << "\n";
  }
  return r.passed() ? 0 : kFalse;
}

int emit_bool(const Globals& g, bool v) {
  if (g.json)
    std::cout << json{{"result", v}}.dump() << "\n";
  else
    std::cout << (v ? "true" : "false") << "\n";
  return v ? 0 : kFalse;
}

int emit_text(const Globals& g, const std::string& s) {
  if (g.json)
    std::cout << json{{"result", s}}.dump() << "\n";
  else
    std::cout << s << (s.empty() || s.back() != '\n' ? "\n" : "");
  return 0;
}

std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      const int n = std::stoi(s);
      return {n, n};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw ParseError("bad range '" + s + "', expected A..B");
  }
}

GeneratorMap load_generator_map(const std::string& path) {
  auto m = parse_map_text(read_file(path));
  if (auto* gm = std::get_if<GeneratorMap>(&m)) return *gm;
  throw ParseError(path + " is a commutator-subgroup map; expected sK: lines");
}

// "E | I1 | I2": exterior word then one interior word per block.
CabledBraid parse_cabled(const std::string& text) {
  CabledBraid cb{BraidWord(2), {}};
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == '|') {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  parts.push_back(cur);
  cb.exterior = parse_braid_word(parts[0]);
  for (std::size_t k = 1; k < parts.size(); ++k) cb.interiors.push_back(parse_braid_word(parts[k]));
  return cb;
}

CheckReport check_all(int lo, int hi, std::uint64_t seed, int pairs) {
  CheckReport all;
  for (int n = lo; n <= hi; ++n) {
    const std::string pre = "n=" + std::to_string(n);
    if (n >= 2) all.merge(pre + ".word problem", check_word_problem(n, pairs, seed));
    if (n >= 3) all.merge(pre + ".curves", check_curve_action(n, 1000, seed));
    if (n >= 2) all.merge(pre + ".tss", check_certificates(n));
    if (n >= 5 && n <= 10) all.merge(pre + ".multicurves", check_multicurve_classes(n));
    if (n >= 5 && n <= 10) all.merge(pre + ".crs", check_crs_agreement(n, 100, seed));
    if (n >= 5 && n <= 12) all.merge(pre + ".suite", identity_suite_report(n));
  }
  all.merge("symmetric images", check_symmetric_images(200, seed));
  all.merge("exponent matrices m=3 d=2", check_exponent_matrices(3, 2));
  all.merge("cabling", check_cabling(500, 100, seed));
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"braidsym: braid group computations and consistency checks"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", BRAIDSYM_VERSION);
  Globals g;
  app.add_flag("--json", g.json, "machine-readable output");
  app.add_option("--seed", g.seed, "seed for randomized checks")->capture_default_str();
  app.add_option("--depth", g.depth, "BFS bound for conjugator search")->capture_default_str();

  int result = 0;
  auto run = [&result](auto fn) { return [&result, fn]() { result = fn(); }; };

  // braid
  auto* braid = app.add_subcommand("braid", "word problem")->require_subcommand(1);
  std::string w1, w2, w3;
  auto* nf = braid->add_subcommand("nf", "Garside normal form");
  nf->add_option("word", w1, "\"n=5: 1 -2 3\"")->required();
  nf->callback(run([&] { return emit_text(g, normal_form(parse_braid_word(w1)).to_string()); }));
  auto binary = [&](const char* name, const char* help, bool (*pred)(const BraidWord&, const BraidWord&)) {
    auto* sc = braid->add_subcommand(name, help);
    sc->add_option("u", w1)->required();
    sc->add_option("v", w2)->required();
    sc->callback(run([&, pred] { return emit_bool(g, pred(parse_braid_word(w1), parse_braid_word(w2))); }));
  };
  binary("eq", "u = v in B_n", &braidsym::equal);
  binary("commutes", "uv = vu", &commutes);
  binary("braidrel", "uvu = vuv", &braid_relation);
  auto* conj = braid->add_subcommand("conj", "check g x g^-1 = y");
  conj->add_option("g", w1)->required();
  conj->add_option("x", w2)->required();
  conj->add_option("y", w3)->required();
  conj->callback(run([&] {
    return emit_bool(g, conjugates_witness(parse_braid_word(w1), parse_braid_word(w2), parse_braid_word(w3)));
  }));

  // curve
  auto* curve = app.add_subcommand("curve", "curves in the punctured disk")->require_subcommand(1);
  std::string curve_text;
  auto* act_cmd = curve->add_subcommand("act", "Dynnikov coordinates of w(c)");
  act_cmd->add_option("word", w1)->required();
  act_cmd->add_option("curve", curve_text, "round(n=7)[3,4] or push(n=7)[3,4] <- 1 -2")->required();
  act_cmd->callback(run([&] {
    const BraidWord w = parse_braid_word(w1);
    const CurveClass c = curve_text.rfind("push", 0) == 0 ? class_of(parse_pushed_curve(curve_text))
                                                           : class_of_round(parse_round_curve(curve_text));
    return emit_text(g, act(w, c).to_string());
  }));

  // tss
  auto* tss = app.add_subcommand("tss", "totally symmetric sets")->require_subcommand(1);
  std::string family, derive, cert_path, target = "perm", map_path;
  int n = 7, random_degree = 0;
  auto* make = tss->add_subcommand("make", "build a certified set");
  make->add_option("family", family, "xn | yn | zn")->required()->check(CLI::IsMember({"xn", "yn", "zn"}));
  make->add_option("--n", n)->required();
  make->add_option("--derive", derive, "e.g. \"pow 42 | translate z^-1\"");
  make->callback(run([&] {
    TotallySymmetricSetCert x = family == "xn" ? make_Xn(n, g.depth) : family == "yn" ? make_Yn(n, g.depth) : make_Zn(n, g.depth);
    if (!derive.empty()) x = apply_derivations(x, derive);
    if (!verify_cert(x).passed()) throw std::logic_error("constructed certificate does not verify");
    return emit_text(g, to_cert_text(x));
  }));
  auto* verify = tss->add_subcommand("verify", "verify a certificate file");
  verify->add_option("file", cert_path)->required();
  verify->callback(run([&] {
    const auto x = parse_cert_text(read_file(cert_path));
    return emit_report(g, "tss verify", {{"file", cert_path}}, verify_cert(x));
  }));
  auto* image = tss->add_subcommand("image", "image of a certified set under a homomorphism");
  image->add_option("file", cert_path)->required();
  image->add_option("--target", target, "perm | int | trivial | braid")
      ->check(CLI::IsMember({"perm", "int", "trivial", "braid"}))
      ->capture_default_str();
  image->add_option("--map", map_path, "map file (braid target)");
  image->add_option("--random-degree", random_degree, "perm target: random map into Sigma_k instead of the projection");
  image->callback(run([&] {
    const auto x = parse_cert_text(read_file(cert_path));
    const int m = x.strands;
    TssImage img;
    if (target == "perm") {
      TargetMap<SymmetricGroup> hom{SymmetricGroup{m}, {}};
      if (random_degree > 0) {
        Rng rng(g.seed);
        hom = random_symmetric_map(rng, m, random_degree);
      } else {
        for (int i = 1; i < m; ++i) hom.images.push_back(permutation_image(BraidWord::generator(m, i)));
      }
      img = image_of_tss(hom, x);
    } else if (target == "int") {
      img = image_of_tss(TargetMap<IntegerGroup>{{}, std::vector<std::int64_t>(static_cast<std::size_t>(m - 1), 1)}, x);
    } else if (target == "trivial") {
      img = image_of_tss(TargetMap<TrivialGroup>{{}, std::vector<std::monostate>(static_cast<std::size_t>(m - 1))}, x);
    } else {
      if (map_path.empty()) throw ParseError("--target braid needs --map");
      const GeneratorMap gm = load_generator_map(map_path);
      require(gm.source == m, "map source does not match the certificate");
      if (!validate_hom(gm)) throw PreconditionError("map does not respect the braid relations");
      img = image_of_tss(TargetMap<BraidGroup>{BraidGroup{gm.target}, gm.images}, x);
    }
    CheckReport r;
    r.add("image size in {1, " + std::to_string(x.size()) + "}", img.passed, img.detail);
    return emit_report(g, "tss image", {{"file", cert_path}, {"target", target}, {"seed", g.seed}}, r);
  }));

  // mc
  auto* mc = app.add_subcommand("mc", "labeled multicurves")->require_subcommand(1);
  std::string tree_arg;
  auto* classify_cmd = mc->add_subcommand("classify", "classify a labeled tree");
  classify_cmd->add_option("tree", tree_arg, "DSL text or file")->required();
  classify_cmd->callback(run([&] { return emit_text(g, to_string(classify(parse_labeled_tree(text_or_file(tree_arg, '('))))); }));
  auto* enumerate_cmd = mc->add_subcommand("enumerate", "all totally symmetric nontrivially labeled classes");
  enumerate_cmd->add_option("--n", n)->required();
  enumerate_cmd->callback(run([&] {
    std::string out;
    for (const auto& t : enumerate_totally_symmetric(n)) out += to_string(classify(t)) + "  " + to_dsl(t) + "\n";
    return emit_text(g, out);
  }));

  // crs
  auto* crs = app.add_subcommand("crs", "canonical reduction systems of twist forms")->require_subcommand(1);
  std::vector<std::string> forms;
  std::string expected;
  auto* of = crs->add_subcommand("of", "reduction curves of a twist form");
  of->add_option("form", w1, "\"H[1,2]^3 * T[1,6]^2 * z^-1 (n=7)\"")->required();
  of->callback(run([&] {
    std::string out;
    for (const auto& c : crs_of(parse_twistform(w1))) out += to_string(c) + "\n";
    return emit_text(g, out);
  }));
  auto* gamma = crs->add_subcommand("gamma", "labeled multicurve of a set of twist forms");
  gamma->add_option("forms", forms)->required();
  gamma->callback(run([&] {
    std::vector<TwistForm> ts;
    for (const auto& f : forms) ts.push_back(parse_twistform(f));
    const LabeledTree t = gamma_of_set(ts);
    return emit_text(g, to_dsl(t) + "\n" + to_string(classify(t)));
  }));
  auto* axioms = crs->add_subcommand("axioms", "equivariance of the reduction system under conjugation");
  axioms->add_option("form", w1)->required();
  axioms->add_option("conjugator", w2)->required();
  axioms->add_option("--expected", expected, "twist form of the conjugate");
  axioms->callback(run([&] {
    std::optional<TwistForm> e;
    if (!expected.empty()) e = parse_twistform(expected);
    return emit_report(g, "crs axioms", {{"form", w1}, {"conjugator", w2}},
                       check_crs_axioms(parse_twistform(w1), parse_braid_word(w2), e));
  }));

  // cable
  auto* cab = app.add_subcommand("cable", "cabled braids")->require_subcommand(1);
  std::string pattern_text;
  int pairs = 500, nested = 100;
  auto* compose = cab->add_subcommand("compose", "cable an exterior and interiors into one word");
  compose->add_option("pattern", pattern_text, "\"pattern(n=7) blocks=[1..2, 3..4]\"")->required();
  compose->add_option("braid", w1, "\"E | I1 | I2\"")->required();
  compose->callback(run([&] { return emit_text(g, to_string(cable(parse_pattern(pattern_text), parse_cabled(w1)))); }));
  auto* cab_check = cab->add_subcommand("check", "semidirect structure for two cabled braids, or a random sweep");
  cab_check->add_option("pattern", pattern_text);
  cab_check->add_option("first", w1, "\"E | I1 | I2\"");
  cab_check->add_option("second", w2);
  cab_check->add_option("--pairs", pairs)->capture_default_str();
  cab_check->add_option("--nested", nested)->capture_default_str();
  cab_check->callback(run([&] {
    if (pattern_text.empty())
      return emit_report(g, "cable check", {{"pairs", pairs}, {"nested", nested}, {"seed", g.seed}},
                         check_cabling(pairs, nested, g.seed));
    if (w1.empty() || w2.empty()) throw ParseError("cable check needs a pattern and two cabled braids");
    return emit_report(g, "cable check", {{"pattern", pattern_text}},
                       check_semidirect(parse_pattern(pattern_text), parse_cabled(w1), parse_cabled(w2)));
  }));

  // hom
  auto* hom = app.add_subcommand("hom", "homomorphisms given by generator images")->require_subcommand(1);
  std::string map2_path, inner;
  bool inversion_flag = false, tamper_exp = false, tamper_conj = false;
  std::int64_t k = 0;
  auto* validate = hom->add_subcommand("validate", "images satisfy the braid relations");
  validate->add_option("map", map_path)->required();
  validate->callback(run([&] { return emit_bool(g, validate_hom(load_generator_map(map_path))); }));
  auto* apply = hom->add_subcommand("apply", "image of a word");
  apply->add_option("map", map_path)->required();
  apply->add_option("word", w1)->required();
  apply->callback(run([&] { return emit_text(g, to_string(apply_hom(load_generator_map(map_path), parse_braid_word(w1)))); }));
  auto* transvect_cmd = hom->add_subcommand("transvect", "multiply every image by z^k");
  transvect_cmd->add_option("map", map_path)->required();
  transvect_cmd->add_option("--k", k)->required();
  transvect_cmd->callback(run([&] { return emit_text(g, to_map_text(transvect(load_generator_map(map_path), k))); }));
  auto* restrict_cmd = hom->add_subcommand("restrict", "restriction to the commutator subgroup");
  restrict_cmd->add_option("map", map_path)->required();
  restrict_cmd->callback(run([&] { return emit_text(g, to_map_text(restrict_to_commutator(load_generator_map(map_path)))); }));
  auto* cyclic = hom->add_subcommand("cyclic", "image is cyclic");
  cyclic->add_option("map", map_path)->required();
  cyclic->callback(run([&] { return emit_bool(g, has_cyclic_image(load_generator_map(map_path))); }));
  auto* equiv = hom->add_subcommand("equiv", "check an equivalence witness m2 = z^k alpha(m1)");
  equiv->add_option("map1", map_path)->required();
  equiv->add_option("map2", map2_path)->required();
  equiv->add_option("--inner", inner, "conjugator word");
  equiv->add_flag("--inversion", inversion_flag);
  equiv->add_option("--transvection", k);
  equiv->callback(run([&] {
    const auto m1 = parse_map_text(read_file(map_path));
    const auto m2 = parse_map_text(read_file(map2_path));
    if (m1.index() != m2.index()) throw ParseError("maps are of different kinds");
    const int target = std::visit([](const auto& m) { return m.target; }, m1);
    EquivalenceWitness wit{{inner.empty() ? BraidWord(target) : parse_braid_word(inner), inversion_flag}, k};
    if (const auto* a = std::get_if<GeneratorMap>(&m1)) return emit_bool(g, check_equivalence(*a, std::get<GeneratorMap>(m2), wit));
    return emit_bool(g, check_equivalence(std::get<CommutatorMap>(m1), std::get<CommutatorMap>(m2), wit));
  }));
  auto* suite = hom->add_subcommand("suite", "check the explicit braid identities a..j");
  suite->add_option("--n", n)->required();
  suite->add_flag("--tamper-exponent", tamper_exp, "perturb the g_i exponent");
  suite->add_flag("--tamper-conjugator", tamper_conj, "use a wrong conjugator");
  suite->callback(run([&] {
    return emit_report(g, "hom suite", {{"n", n}, {"tamper_exponent", tamper_exp}, {"tamper_conjugator", tamper_conj}},
                       identity_suite_report(n, {tamper_exp, tamper_conj}));
  }));

  // check
  auto* check = app.add_subcommand("check", "consistency checks")->require_subcommand(1);
  std::string range = "5..9";
  int wp_pairs = 1000;
  auto* all = check->add_subcommand("all", "every module");
  all->add_option("--n", range, "A..B")->capture_default_str();
  all->add_option("--pairs", wp_pairs, "word-problem pairs per n")->capture_default_str();
  all->callback(run([&] {
    const auto [lo, hi] = parse_range(range);
    require(lo >= 2 && lo <= hi && hi <= 12, "--n must lie in 2..12");
    return emit_report(g, "check all", {{"n", range}, {"seed", g.seed}, {"pairs", wp_pairs}}, check_all(lo, hi, g.seed, wp_pairs));
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const StrandMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kBreach;
  }
  return result;
}
