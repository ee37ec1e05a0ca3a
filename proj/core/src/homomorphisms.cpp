#include "braidsym/homomorphisms.hpp"

#include <sstream>

#include "braidsym/crs.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/labeled_multicurves.hpp"
#include "braidsym/tss.hpp"
#include "braidsym/word_problem.hpp"
#include "text_util.hpp"

namespace braidsym {
namespace {

BraidWord substitute(const std::vector<BraidWord>& images, int target, const BraidWord& w) {
  std::vector<int> letters;
  for (int e : w.letters()) {
    const BraidWord& img = images[static_cast<std::size_t>(std::abs(e) - 1)];
    if (e > 0) {
      letters.insert(letters.end(), img.letters().begin(), img.letters().end());
    } else {
      for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) letters.push_back(-*it);
    }
  }
  return free_reduce(BraidWord(target, std::move(letters)));
}

BraidWord gen(int n, int i, int e = 1) { return BraidWord::generator(n, i, e); }

// sigma_a sigma_{a-1} ... sigma_b for a >= b, empty otherwise.
BraidWord descending(int n, int a, int b) {
  std::vector<int> letters;
  for (int i = a; i >= b; --i) letters.push_back(i);
  return BraidWord(n, std::move(letters));
}

BraidWord g_i(int n, int i, bool tamper) {
  return gen(n, i, tamper ? 8 - 2 * i : 9 - 2 * i) * descending(n, i - 1, 5) * descending(n, i, 5);
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : "; ") + p;
  return out;
}

// Collects failure notes for a single report item.
struct Item {
  std::vector<std::string> failures;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) failures.push_back(what);
  }
  void emit(CheckReport& r, const std::string& key, const Stopwatch& sw) const {
    r.add(key, failures.empty(), failures.empty() ? std::to_string(checks) + " checks" : join(failures), sw.elapsed_ms());
  }
};

}  // namespace

GeneratorMap::GeneratorMap(int source_strands, int target_strands, std::vector<BraidWord> generator_images)
    : source(source_strands), target(target_strands), images(std::move(generator_images)) {
  require(source >= 2 && target >= 1, "bad strand counts");
  require(images.size() == static_cast<std::size_t>(source - 1), "need one image per generator");
  for (const auto& w : images) require_same_strands(w.strands(), target);
}

GeneratorMap GeneratorMap::identity(int n) {
  std::vector<BraidWord> images;
  for (int i = 1; i < n; ++i) images.push_back(gen(n, i));
  return GeneratorMap(n, n, std::move(images));
}

GeneratorMap GeneratorMap::constant(int n, const BraidWord& image) {
  return GeneratorMap(n, image.strands(), std::vector<BraidWord>(static_cast<std::size_t>(n - 1), image));
}

CommutatorMap CommutatorMap::inclusion(int n) { return CommutatorMap{n, n, commutator_generators(n)}; }

bool validate_hom(const GeneratorMap& m) {
  const auto& img = m.images;
  for (std::size_t i = 0; i < img.size(); ++i)
    for (std::size_t j = i + 1; j < img.size(); ++j) {
      const bool ok = j == i + 1 ? braid_relation(img[i], img[j]) : commutes(img[i], img[j]);
      if (!ok) return false;
    }
  return true;
}

BraidWord apply_hom(const GeneratorMap& m, const BraidWord& w) {
  require_same_strands(w.strands(), m.source);
  require(validate_hom(m), "generator images violate the braid relations");
  return substitute(m.images, m.target, w);
}

GeneratorMap transvect(const GeneratorMap& m, std::int64_t k) {
  require(m.source == m.target, "transvection needs equal source and target strand counts");
  const BraidWord zk = power(center_word(m.target), k);
  std::vector<BraidWord> images;
  for (const auto& w : m.images) images.push_back(free_reduce(w * zk));
  return GeneratorMap(m.source, m.target, std::move(images));
}

CommutatorMap restrict_to_commutator(const GeneratorMap& m) {
  require(validate_hom(m), "generator images violate the braid relations");
  CommutatorMap out{m.source, m.target, {}};
  for (int i = 2; i < m.source; ++i)
    out.images.push_back(substitute(m.images, m.target, gen(m.source, 1) * gen(m.source, i, -1)));
  return out;
}

bool has_cyclic_image(const GeneratorMap& m) {
  require(validate_hom(m), "generator images violate the braid relations");
  for (std::size_t i = 1; i < m.images.size(); ++i)
    if (!equal(m.images[i], m.images[0])) return false;
  return true;
}

BraidWord inversion(const BraidWord& w) {
  std::vector<int> letters(w.letters().begin(), w.letters().end());
  for (int& e : letters) e = -e;
  return BraidWord(w.strands(), std::move(letters));
}

BraidWord apply_automorphism(const Automorphism& alpha, const BraidWord& w) {
  require_same_strands(alpha.inner.strands(), w.strands());
  return conjugate(alpha.inner, alpha.inversion ? inversion(w) : w);
}

GeneratorMap compose_equivalence(const GeneratorMap& m, const EquivalenceWitness& w) {
  const GeneratorMap base = w.transvection == 0 ? m : transvect(m, w.transvection);
  std::vector<BraidWord> images;
  for (const auto& img : base.images) images.push_back(apply_automorphism(w.alpha, img));
  return GeneratorMap(m.source, m.target, std::move(images));
}

CommutatorMap compose_equivalence(const CommutatorMap& m, const EquivalenceWitness& w) {
  require(w.transvection == 0, "transvections are not defined on commutator subgroup maps");
  CommutatorMap out{m.source, m.target, {}};
  for (const auto& img : m.images) out.images.push_back(apply_automorphism(w.alpha, img));
  return out;
}

bool check_equivalence(const GeneratorMap& m1, const GeneratorMap& m2, const EquivalenceWitness& w) {
  require(m1.source == m2.source && m1.target == m2.target, "maps have different shapes");
  const GeneratorMap composed = compose_equivalence(m1, w);
  for (std::size_t i = 0; i < composed.images.size(); ++i)
    if (!equal(composed.images[i], m2.images[i])) return false;
  return true;
}

bool check_equivalence(const CommutatorMap& m1, const CommutatorMap& m2, const EquivalenceWitness& w) {
  require(m1.source == m2.source && m1.target == m2.target && m1.images.size() == m2.images.size(),
          "maps have different shapes");
  const CommutatorMap composed = compose_equivalence(m1, w);
  for (std::size_t i = 0; i < composed.images.size(); ++i)
    if (!equal(composed.images[i], m2.images[i])) return false;
  return true;
}

CheckReport identity_suite_report(int n, const SuiteOptions& options) {
  require(n >= 5 && n <= 12, "the identity suite supports 5 <= n <= 12");
  CheckReport report;
  const BraidWord z = center_word(n);
  auto s = [n](int i, int e = 1) { return gen(n, i, e); };
  auto d = [n](int i, int j) { return gen(n, i) * gen(n, j, -1); };  // sigma_i sigma_j^{-1}

  {
    Stopwatch sw;
    Item it;
    for (int i = 1; i < n; ++i) it.expect(commutes(z, s(i)), "z does not commute with sigma_" + std::to_string(i));
    it.expect(exponent_sum(z) == static_cast<std::int64_t>(n) * (n - 1), "exponent sum of z is " + std::to_string(exponent_sum(z)));
    it.emit(report, "a", sw);
  }
  {
    Stopwatch sw;
    Item it;
    const auto zn = make_Zn(n);
    for (std::size_t i = 0; i < zn.size(); ++i)
      it.expect(is_in_commutator_subgroup(zn.elements[i]), "Z_n element " + std::to_string(i + 1) + " has nonzero exponent sum");
    it.expect(verify_cert(zn).passed(), "Z_n certificate fails");
    const auto forms = zn_twistforms(n);
    for (std::size_t i = 0; i < forms.size(); ++i)
      it.expect(equal(twistform_to_word(forms[i]), zn.elements[i]), "twist form " + std::to_string(i + 1) + " differs from Z_n element");
    it.expect(equivalent(gamma_of_set(forms), model_m(n)), "Gamma(Z_n) is not M_n");
    it.emit(report, "b", sw);
  }
  {
    Stopwatch sw;
    Item it;
    const BraidWord g = options.tamper_conjugator ? BraidWord(n) : s(2, -2) * s(1) * s(2);
    it.expect(conjugates_witness(g, s(1), s(2)), "g sigma_1 g^-1 != sigma_2");
    it.expect(exponent_sum(g) == 0, "exponent sum of g is " + std::to_string(exponent_sum(g)));
    if (n >= 6) {
      it.expect(commutes(g, s(5)), "g does not commute with sigma_5");
      it.expect(conjugates_witness(g, d(1, 5), d(2, 5)), "g does not conjugate sigma_1 sigma_5^-1 to sigma_2 sigma_5^-1");
    }
    it.emit(report, "c", sw);
  }
  if (n - 1 < 5) {
    report.skip("d", "no index 5 <= i <= n-1");
  } else {
    Stopwatch sw;
    Item it;
    for (int i = 5; i <= n - 1; ++i) {
      const BraidWord g = g_i(n, i, options.tamper_gi_exponent);
      const std::string tag = "g_" + std::to_string(i);
      it.expect(conjugates_witness(g, s(5), s(i)), tag + " sigma_5 " + tag + "^-1 != sigma_" + std::to_string(i));
      it.expect(commutes(g, s(1)) && commutes(g, s(3)), tag + " does not commute with sigma_1 and sigma_3");
      it.expect(exponent_sum(g) == 0, tag + " has exponent sum " + std::to_string(exponent_sum(g)));
    }
    it.emit(report, "d", sw);
  }
  {
    Stopwatch sw;
    Item it;
    const BraidWord g4 = s(4, -2) * s(3) * s(4);
    it.expect(conjugates_witness(g4, s(3), s(4)), "g_4 sigma_3 g_4^-1 != sigma_4");
    it.expect(commutes(g4, s(1)), "g_4 does not commute with sigma_1");
    for (int i = 6; i <= n - 1; ++i)
      it.expect(commutes(g4, s(i)), "g_4 does not commute with sigma_" + std::to_string(i));
    it.expect(exponent_sum(g4) == 0, "g_4 has nonzero exponent sum");
    it.emit(report, "e", sw);
  }
  if (n < 7) {
    report.skip("f", "needs sigma_6");
  } else {
    Stopwatch sw;
    Item it;
    it.expect(equal(invert(d(1, 5)) * d(1, 6), d(5, 6)), "(s1 s5^-1)^-1 (s1 s6^-1) != s5 s6^-1");
    it.expect(equal(invert(d(1, 4)) * d(1, 6), d(4, 6)), "(s1 s4^-1)^-1 (s1 s6^-1) != s4 s6^-1");
    for (int i = 2; i < n; ++i)
      for (int j = 2; j < n; ++j)
        if (i != j) it.expect(equal(invert(d(1, i)) * d(1, j), d(i, j)), "identity fails for " + std::to_string(i) + "," + std::to_string(j));
    it.emit(report, "f", sw);
  }
  {
    Stopwatch sw;
    Item it;
    for (int i = 3; i + 1 <= n - 1; ++i)
      it.expect(braid_relation(d(1, i), d(1, i + 1)), "s1 s" + std::to_string(i) + "^-1 and s1 s" + std::to_string(i + 1) + "^-1 do not braid");
    if (n >= 6) it.expect(braid_relation(d(1, 5), d(2, 5)), "s1 s5^-1 and s2 s5^-1 do not braid");
    it.emit(report, "g", sw);
  }
  {
    Stopwatch sw;
    Item it;
    std::vector<PushedCurve> round, pushed;
    for (int i = 1; i < n; ++i) {
      round.emplace_back(RoundCurve(n, i, i + 1));
      if (i < 5)
        pushed.emplace_back(RoundCurve(n, i, i + 1));
      else
        pushed.emplace_back(RoundCurve(n, 5, 6), g_i(n, i, options.tamper_gi_exponent));
    }
    it.expect(is_chain(round), "a_1..a_{n-1} is not a chain");
    it.expect(is_chain(pushed), "a_1..a_4, g_i(a_5) is not a chain");
    it.emit(report, "h", sw);
  }
  {
    Stopwatch sw;
    Item it;
    const BraidWord base = d(1, 3);
    for (int i = 1; i <= n - 1; ++i)
      for (int j = i + 2; j <= n - 1; ++j) {
        BraidWord u(n), v(n);
        for (int k = j - 1; k >= 3; --k) u = u * s(k) * s(k + 1);
        for (int k = i - 1; k >= 1; --k) v = v * s(k) * s(k + 1);
        BraidWord h = v * u;
        h = h * s(1, static_cast<int>(-exponent_sum(h)));
        const std::string tag = "s" + std::to_string(i) + " s" + std::to_string(j) + "^-1";
        it.expect(exponent_sum(h) == 0, tag + ": witness outside B_n'");
        it.expect(conjugates_witness(h, base, d(i, j)), tag + ": witness fails");
      }
    it.emit(report, "i", sw);
  }
  {
    Stopwatch sw;
    Item it;
    for (int r = -3; r <= 3; ++r) {
      const bool same = equal(s(1, r) * s(3, -r), d(1, 3));
      it.expect(same == (r == 1), "r=" + std::to_string(r) + (same ? " unexpectedly equal" : " unexpectedly different"));
    }
    it.emit(report, "j", sw);
  }
  return report;
}

std::string to_map_text(const GeneratorMap& m) {
  std::ostringstream out;
  out << "n=" << m.source << " -> n=" << m.target << "\n";
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    out << "s" << i + 1 << ":";
    for (int e : m.images[i].letters()) out << " " << e;
    out << "\n";
  }
  return out.str();
}

std::string to_map_text(const CommutatorMap& m) {
  std::ostringstream out;
  out << "n=" << m.source << " -> n=" << m.target << "\n";
  for (std::size_t i = 0; i < m.images.size(); ++i) {
    out << "c" << i + 2 << ":";
    for (int e : m.images[i].letters()) out << " " << e;
    out << "\n";
  }
  return out.str();
}

std::variant<GeneratorMap, CommutatorMap> parse_map_text(std::string_view text) {
  std::istringstream lines{std::string(text)};
  std::string line;
  int source = 0, target = 0;
  bool header = false;
  char kind = 0;
  std::vector<BraidWord> images;
  while (std::getline(lines, line)) {
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    detail::Scanner in(body);
    if (!header) {
      in.expect("n=");
      source = in.read_small_int();
      in.expect("->");
      in.expect("n=");
      target = in.read_small_int();
      if (!in.at_end()) in.fail("trailing input");
      if (source < 2 || target < 1) in.fail("bad strand counts");
      header = true;
      continue;
    }
    const char c = in.peek();
    if (c != 's' && c != 'c') in.fail("expected 'sK:' or 'cK:'");
    if (kind == 0) kind = c;
    if (c != kind) in.fail("cannot mix generator and commutator images");
    in.consume(std::string_view(&c, 1));
    const int index = in.read_small_int();
    const int expected = static_cast<int>(images.size()) + (kind == 's' ? 1 : 2);
    if (index != expected) in.fail("expected image " + std::to_string(expected));
    in.expect(":");
    try {
      images.push_back(parse_letters(in.rest(), target));
    } catch (const Error& e) {
      throw ParseError(e.what());
    }
  }
  if (!header) throw ParseError("missing map header");
  if (kind == 'c') {
    if (images.size() != static_cast<std::size_t>(std::max(source - 2, 0)))
      throw ParseError("commutator map needs " + std::to_string(source - 2) + " images");
    return CommutatorMap{source, target, std::move(images)};
  }
  if (images.size() != static_cast<std::size_t>(source - 1))
    throw ParseError("generator map needs " + std::to_string(source - 1) + " images");
  return GeneratorMap(source, target, std::move(images));
}

}  // namespace braidsym
