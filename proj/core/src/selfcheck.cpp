#include "braidsym/selfcheck.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "braidsym/crs.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/labeled_multicurves.hpp"
#include "braidsym/word_problem.hpp"

namespace braidsym {
namespace {

Permutation random_permutation(Rng& rng, int k) {
  std::vector<int> image(static_cast<std::size_t>(k));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(std::move(image));
}

std::vector<int> distinct_points(Rng& rng, int k, int count) {
  std::vector<int> pts(static_cast<std::size_t>(k));
  std::iota(pts.begin(), pts.end(), 0);
  std::shuffle(pts.begin(), pts.end(), rng);
  pts.resize(static_cast<std::size_t>(count));
  return pts;
}

std::string counted(std::size_t bad, std::size_t total, const std::string& what) {
  return std::to_string(bad) + " " + what + " in " + std::to_string(total);
}

}  // namespace

CablePattern random_pattern(Rng& rng, const std::vector<int>& widths, int free_strands) {
  std::vector<int> tokens = widths;
  tokens.insert(tokens.end(), static_cast<std::size_t>(free_strands), 1);
  std::shuffle(tokens.begin(), tokens.end(), rng);
  const int n = std::accumulate(tokens.begin(), tokens.end(), 0);
  std::vector<RoundCurve> blocks;
  int p = 1;
  // Free punctures are the 1-tokens; widths are >= 2.
  for (int t : tokens) {
    if (t >= 2) blocks.emplace_back(n, p, p + t - 1);
    p += t;
  }
  return CablePattern(n, std::move(blocks));
}

BraidWord random_exterior(Rng& rng, const CablePattern& p, int factors) {
  const int f = p.fat_strands();
  BraidWord out(f);
  if (f < 2) return out;
  const auto& labels = p.labels();
  for (int k = 0; k < factors; ++k) {
    const BraidWord g = random_word(rng, f, static_cast<std::size_t>(uniform_int(rng, 0, 3)));
    const int i = uniform_int(rng, 1, f - 1);
    const Permutation back = permutation_image(g).inverse();
    const bool same = labels[static_cast<std::size_t>(back(i - 1))] == labels[static_cast<std::size_t>(back(i))];
    const int sign = uniform_int(rng, 0, 1) ? 1 : -1;
    out = out * g * BraidWord::generator(f, i, sign * (same ? 1 : 2)) * invert(g);
  }
  return free_reduce(out);
}

CabledBraid random_cabled(Rng& rng, const CablePattern& p, int factors, std::size_t interior_length) {
  CabledBraid cb{random_exterior(rng, p, factors), {}};
  for (const auto& b : p.blocks())
    cb.interiors.push_back(random_word(rng, b.punctures(), static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(interior_length)))));
  return cb;
}

TargetMap<SymmetricGroup> random_symmetric_map(Rng& rng, int n, int k) {
  require(n >= 2 && k >= 1, "bad map shape");
  std::vector<int> kinds{0};
  if (k >= n) kinds.push_back(1), kinds.push_back(3);
  if (k >= 2 * n) kinds.push_back(2);
  const int kind = kinds[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(kinds.size()) - 1))];
  TargetMap<SymmetricGroup> m{SymmetricGroup{k}, {}};
  if (kind == 0) {
    m.images.assign(static_cast<std::size_t>(n - 1), random_permutation(rng, k));
  } else {
    const auto pts = distinct_points(rng, k, kind == 2 ? 2 * n : n);
    Permutation twist(k);
    if (kind == 3) {
      // A permutation of the unused points commutes with every transposition.
      std::vector<int> rest;
      std::vector<bool> used(static_cast<std::size_t>(k), false);
      for (int q : pts) used[static_cast<std::size_t>(q)] = true;
      for (int q = 0; q < k; ++q)
        if (!used[static_cast<std::size_t>(q)]) rest.push_back(q);
      std::vector<int> image(static_cast<std::size_t>(k));
      std::iota(image.begin(), image.end(), 0);
      std::vector<int> shuffled = rest;
      std::shuffle(shuffled.begin(), shuffled.end(), rng);
      for (std::size_t r = 0; r < rest.size(); ++r) image[static_cast<std::size_t>(rest[r])] = shuffled[r];
      twist = Permutation(std::move(image));
    }
    for (int i = 0; i + 1 < n; ++i) {
      const auto a = static_cast<std::size_t>(i);
      Permutation t = Permutation::transposition(k, pts[a], pts[a + 1]);
      if (kind == 2) t = t.then(Permutation::transposition(k, pts[a + static_cast<std::size_t>(n)], pts[a + static_cast<std::size_t>(n) + 1]));
      m.images.push_back(t.then(twist));
    }
  }
  if (uniform_int(rng, 0, 1)) {
    const Permutation h = random_permutation(rng, k);
    for (auto& img : m.images) img = h.inverse().then(img).then(h);
  }
  if (!m.respects_relations()) throw Error("random symmetric map violates the braid relations");
  return m;
}

CheckReport check_word_problem(int n, int pairs, std::uint64_t seed, std::size_t max_length) {
  Rng rng(seed);
  CheckReport report;
  Stopwatch sw;
  std::size_t false_neg = 0, false_pos = 0, unsound = 0, nf_moved = 0, roundtrip = 0;
  for (int k = 0; k < pairs; ++k) {
    const BraidWord w = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(max_length))));
    const BraidWord same = perturb(rng, w, uniform_int(rng, 1, 3));
    if (!equal(w, same)) ++false_neg;
    const NormalForm nf = normal_form(w);
    if (!(nf == normal_form(same))) ++nf_moved;
    if (!(normal_form(to_word(nf)) == nf)) ++roundtrip;
    if (n >= 3) {
      const BraidWord other = perturb(rng, w * random_hidden_nontrivial(rng, n), uniform_int(rng, 0, 2));
      if (equal(w, other)) ++false_pos;
    }
    const BraidWord u = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 8)));
    const BraidWord v = perturb(rng, u, 1);
    for (const BraidWord* x : {&u, &v})
      if (equal(w, *x) && (exponent_sum(w) != exponent_sum(*x) || !(permutation_image(w) == permutation_image(*x))))
        ++unsound;
  }
  const auto total = static_cast<std::size_t>(pairs);
  report.add("equal pairs", false_neg == 0, counted(false_neg, total, "false negatives"), sw.elapsed_ms());
  report.add("unequal pairs", false_pos == 0, n >= 3 ? counted(false_pos, total, "false positives") : "no hidden factors below 3 strands");
  report.add("quotient soundness", unsound == 0, counted(unsound, 2 * total, "violations"));
  report.add("normal form invariance", nf_moved == 0, counted(nf_moved, total, "changed normal forms"));
  report.add("normal form round trip", roundtrip == 0, counted(roundtrip, total, "non-fixed points"));
  return report;
}

CheckReport check_curve_action(int n, int triples, std::uint64_t seed) {
  require(n >= 3, "curve checks need n >= 3");
  Rng rng(seed);
  CheckReport report;
  std::vector<RoundCurve> rounds;
  for (int lo = 1; lo <= n; ++lo)
    for (int hi = lo + 1; hi <= n; ++hi)
      if (!(lo == 1 && hi == n)) rounds.emplace_back(n, lo, hi);
  const BraidWord z = center_word(n);
  std::size_t moved = 0;
  std::set<CurveClass> classes;
  for (const auto& c : rounds) {
    const CurveClass k = class_of_round(c);
    classes.insert(k);
    if (!(act(z, k) == k)) ++moved;
  }
  report.add("z fixes round curves", moved == 0, counted(moved, rounds.size(), "moved"));
  report.add("round classes distinct", classes.size() == rounds.size(),
             std::to_string(classes.size()) + " classes for " + std::to_string(rounds.size()) + " curves");

  std::size_t assoc = 0, ident = 0, inverse = 0;
  for (int t = 0; t < triples; ++t) {
    const auto& base = rounds[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(rounds.size()) - 1))];
    const CurveClass c = class_of(PushedCurve(base, random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 6)))));
    const BraidWord u = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 10)));
    const BraidWord v = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 0, 10)));
    if (!(act(u * v, c) == act(u, act(v, c)))) ++assoc;
    if (!(act(BraidWord(n), c) == c)) ++ident;
    if (!(act(invert(u), act(u, c)) == c)) ++inverse;
  }
  const auto total = static_cast<std::size_t>(triples);
  report.add("action law", assoc == 0, counted(assoc, total, "violations"));
  report.add("identity law", ident == 0, counted(ident, total, "violations"));
  report.add("inverse law", inverse == 0, counted(inverse, total, "violations"));
  return report;
}

CheckReport check_multicurve_classes(int n) {
  CheckReport report;
  Stopwatch sw;
  const auto found = enumerate_totally_symmetric(n);
  std::vector<LabeledTree> models{model_m(n), model_m_star(n)};
  if (n % 2 == 1) {
    models.push_back(model_m_hat(n));
    models.push_back(model_m_hat_star(n));
  }
  std::vector<LabeledTree> distinct;
  for (const auto& m : models)
    if (std::none_of(distinct.begin(), distinct.end(), [&](const LabeledTree& d) { return equivalent(d, m); }))
      distinct.push_back(m);
  report.add("class count", found.size() == distinct.size(),
             std::to_string(found.size()) + " classes, " + std::to_string(distinct.size()) + " distinct models",
             sw.elapsed_ms());
  std::size_t unmatched = 0;
  for (const auto& t : found) {
    const auto c = classify(t);
    if (c == MulticurveClass::Other || c == MulticurveClass::NotTotallySymmetric) ++unmatched;
  }
  report.add("every class is a model", unmatched == 0, counted(unmatched, found.size(), "unmatched"));
  std::size_t missing = 0;
  for (const auto& m : distinct)
    if (std::none_of(found.begin(), found.end(), [&](const LabeledTree& t) { return equivalent(t, m); })) ++missing;
  report.add("every model is found", missing == 0, counted(missing, distinct.size(), "missing"));
  return report;
}

CheckReport check_certificates(int n) {
  CheckReport report;
  const auto x = make_Xn(n);
  report.merge("X", verify_cert(x));
  if (x.size() >= 2) report.merge("Y", verify_cert(make_Yn(n)));
  report.merge("Z", verify_cert(make_Zn(n)));
  report.merge("X^3", verify_cert(derived_pow(x, 3)));
  if (x.size() >= 3) {
    report.merge("X*", verify_cert(derived_star(x)));
    report.merge("(X*)*", verify_cert(derived_star(derived_star(x))));
  }
  report.merge("X^{2,1}", verify_cert(derived_mixed(x, 2, 1)));
  report.merge("(X^2)^z", verify_cert(derived_translate(derived_pow(x, 2), center_word(n))));
  report.merge("robust X^{2,1}", check_robustness_witnesses(x, derived_mixed(x, 2, 1)));
  if (x.size() >= 2) {
    const bool degenerate_caught = !check_robustness_witnesses(x, derived_mixed(x, 0, 0)).passed();
    report.add("degenerate X^{0,0} rejected", degenerate_caught);
  }
  const auto m = x.size();
  const auto ints = image_of_tss(TargetMap<IntegerGroup>{{}, std::vector<std::int64_t>(static_cast<std::size_t>(n - 1), 1)}, x);
  report.add("image in Z", ints.passed && ints.size == 1, ints.detail);
  std::vector<Permutation> transpositions;
  for (int i = 0; i + 1 < n; ++i) transpositions.push_back(Permutation::transposition(n, i, i + 1));
  const auto perms = image_of_tss(TargetMap<SymmetricGroup>{{n}, transpositions}, x);
  report.add("image in Sigma_n", perms.passed && perms.size == m, perms.detail);
  const auto triv = image_of_tss(
      TargetMap<TrivialGroup>{{}, std::vector<std::monostate>(static_cast<std::size_t>(n - 1))}, x);
  report.add("image in trivial group", triv.passed && triv.size == 1, triv.detail);
  return report;
}

CheckReport check_symmetric_images(int maps, std::uint64_t seed, int max_degree) {
  Rng rng(seed);
  CheckReport report;
  Stopwatch sw;
  std::map<int, TotallySymmetricSetCert> xs;
  std::size_t exceptions = 0;
  std::map<std::string, int> histogram;
  for (int t = 0; t < maps; ++t) {
    const int n = uniform_int(rng, 4, std::min(9, max_degree));
    const int k = uniform_int(rng, 2, max_degree);
    if (!xs.count(n)) xs.emplace(n, make_Xn(n));
    const auto& x = xs.at(n);
    const auto img = image_of_tss(random_symmetric_map(rng, n, k), x);
    ++histogram[img.size == 1 ? "singleton" : img.size == x.size() ? "full" : "other"];
    if (!img.passed) ++exceptions;
  }
  std::string detail = counted(exceptions, static_cast<std::size_t>(maps), "exceptions") + " (";
  for (const auto& [key, count] : histogram) detail += key + " " + std::to_string(count) + " ";
  detail.back() = ')';
  report.add("image sizes", exceptions == 0, detail, sw.elapsed_ms());
  return report;
}

CheckReport check_exponent_matrices(int m, int d) {
  require(m >= 1 && m <= 4 && d >= 2, "matrix sweep supports 1 <= m <= 4 and d >= 2");
  std::int64_t total = 1;
  for (int e = 0; e < m * m; ++e) total *= d;
  require(total <= 1 << 20, "matrix sweep too large");

  // Oracle: every (k, l)-form with rows permuted.
  std::set<std::vector<std::vector<std::int64_t>>> forms;
  for (int k = 0; k < d; ++k)
    for (int l = 0; l < d; ++l) {
      const auto base = kl_form(m, k, l, d).rows();
      std::vector<int> order(static_cast<std::size_t>(m));
      std::iota(order.begin(), order.end(), 0);
      do {
        std::vector<std::vector<std::int64_t>> rows;
        for (int r : order) rows.push_back(base[static_cast<std::size_t>(r)]);
        forms.insert(rows);
      } while (std::next_permutation(order.begin(), order.end()));
    }

  CheckReport report;
  Stopwatch sw;
  std::size_t swept = 0, disagree = 0, unclosed = 0, accepted = 0, bad_witness = 0;
  for (std::int64_t code = 0; code < total; ++code) {
    std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m)));
    std::int64_t c = code;
    for (auto& row : rows)
      for (auto& v : row) {
        v = c % d;
        c /= d;
      }
    const std::set<std::vector<std::int64_t>> unique_rows(rows.begin(), rows.end());
    if (unique_rows.size() != rows.size()) continue;
    ++swept;
    const ExponentMatrix a(rows, d);
    const auto form = classify_exponent_matrix(a);
    if (form.has_value() != (forms.count(rows) == 1)) ++disagree;
    if (form) {
      ++accepted;
      if (!check_perm_closure(a)) ++unclosed;
      std::vector<std::vector<std::int64_t>> ordered;
      for (int r : form->row_order) ordered.push_back(rows[static_cast<std::size_t>(r)]);
      if (!(ExponentMatrix(ordered, d) == kl_form(m, form->k, form->l, d))) ++bad_witness;
    }
  }
  report.add("classifier matches oracle", disagree == 0,
             counted(disagree, swept, "disagreements") + ", " + std::to_string(accepted) + " accepted", sw.elapsed_ms());
  report.add("row order witnesses form", bad_witness == 0, counted(bad_witness, accepted, "bad witnesses"));
  report.add("accepted matrices closed under row permutation", unclosed == 0, counted(unclosed, accepted, "not closed"));
  return report;
}

CheckReport check_crs_agreement(int n, int conjugators, std::uint64_t seed) {
  require(n >= 3, "needs n >= 3");
  Rng rng(seed);
  CheckReport report;
  const auto zn = zn_twistforms(n);
  const auto xn = xn_twistforms(n);
  report.add("Gamma(Z_n) = M_n", equivalent(gamma_of_set(zn), model_m(n)));
  report.add("Gamma(X_n) = M_n", equivalent(gamma_of_set(xn), model_m(n)));
  std::vector<TwistForm> pool = zn;
  pool.insert(pool.end(), xn.begin(), xn.end());
  if (n % 2 == 1 && n >= 5) {
    std::vector<TwistForm> hat;
    for (int i = 1; i <= n / 2; ++i)
      hat.emplace_back(n, std::vector<TwistFactor>{{RoundCurve(n, 2 * i - 1, 2 * i), TwistKind::Half, 3},
                                                   {RoundCurve(n, 1, n - 1), TwistKind::Dehn, 2}},
                       -1);
    report.add("Gamma(H^l T^r z^s family) = M-hat_n", equivalent(gamma_of_set(hat), model_m_hat(n)));
    pool.insert(pool.end(), hat.begin(), hat.end());
  }

  const auto cert = make_Zn(n);
  std::size_t random_bad = 0, cert_bad = 0;
  for (int t = 0; t < conjugators; ++t) {
    const auto& f = pool[static_cast<std::size_t>(uniform_int(rng, 0, static_cast<int>(pool.size()) - 1))];
    const BraidWord g = random_word(rng, n, static_cast<std::size_t>(uniform_int(rng, 1, 10)));
    if (!check_crs_axioms(f, g).passed()) ++random_bad;

    // A random product of swap conjugators permutes Z_n, so the expected
    // image of each member is known.
    if (cert.swaps.empty()) continue;
    BraidWord h(n);
    std::vector<int> where(zn.size());
    std::iota(where.begin(), where.end(), 0);
    for (int s = uniform_int(rng, 1, 4); s > 0; --s) {
      const int j = uniform_int(rng, 0, static_cast<int>(cert.swaps.size()) - 1);
      h = cert.swaps[static_cast<std::size_t>(j)] * h;
      for (int& w : where)
        if (w == j)
          w = j + 1;
        else if (w == j + 1)
          w = j;
    }
    const int i = uniform_int(rng, 0, static_cast<int>(zn.size()) - 1);
    if (!check_crs_axioms(zn[static_cast<std::size_t>(i)], h, zn[static_cast<std::size_t>(where[static_cast<std::size_t>(i)])]).passed())
      ++cert_bad;
  }
  const auto total = static_cast<std::size_t>(conjugators);
  report.add("equivariance under random conjugators", random_bad == 0, counted(random_bad, total, "failures"));
  report.add("equivariance under certificate conjugators", cert_bad == 0, counted(cert_bad, total, "failures"));
  if (zn.size() >= 2) report.merge("commuting", check_crs_commuting(zn[0], zn[1]));
  return report;
}

CheckReport check_cabling(int pairs, int nested, std::uint64_t seed, int max_strands) {
  Rng rng(seed);
  CheckReport report;
  Stopwatch sw;
  std::size_t failures = 0, runs = 0;
  std::set<int> block_counts;
  std::string first_failure;
  for (int t = 0; t < pairs; ++t) {
    const int q = 1 + t % 3;
    std::vector<int> widths;
    for (int j = 0; j < q; ++j) widths.push_back(uniform_int(rng, 2, 3));
    if (std::accumulate(widths.begin(), widths.end(), 0) > max_strands) widths.assign(static_cast<std::size_t>(q), 2);
    const int base = std::accumulate(widths.begin(), widths.end(), 0);
    const int min_free = q == 1 ? 1 : 0;
    const int free = uniform_int(rng, min_free, std::max(min_free, max_strands - base));
    const CablePattern p = random_pattern(rng, widths, free);
    block_counts.insert(q);
    const auto cb1 = random_cabled(rng, p, 3, 6);
    const auto cb2 = random_cabled(rng, p, 3, 6);
    const auto r = check_semidirect(p, cb1, cb2);
    ++runs;
    if (!r.passed()) {
      ++failures;
      if (first_failure.empty()) first_failure = to_string(p);
    }
  }
  report.add("semidirect structure", failures == 0,
             counted(failures, runs, "failures") + (first_failure.empty() ? "" : ", first on " + first_failure),
             sw.elapsed_ms());

  std::size_t nested_bad = 0;
  for (int t = 0; t < nested; ++t) {
    // Outer blocks of width 3 or 4; equal widths share an inner pattern.
    std::map<int, CablePattern> inner_by_width;
    inner_by_width.emplace(3, random_pattern(rng, {2}, 1));
    inner_by_width.emplace(4, uniform_int(rng, 0, 1) ? random_pattern(rng, {2, 2}, 0) : random_pattern(rng, {2}, 2));
    const int q = uniform_int(rng, 1, 2);
    std::vector<int> widths;
    for (int j = 0; j < q; ++j) widths.push_back(uniform_int(rng, 3, 4));
    const int used = std::accumulate(widths.begin(), widths.end(), 0);
    const int free = std::max(q == 1 ? 1 : 0, uniform_int(rng, 0, std::max(0, max_strands - used)));
    const CablePattern outer = random_pattern(rng, widths, free);
    std::vector<CablePattern> inner;
    std::vector<CabledBraid> inner_braids;
    for (const auto& b : outer.blocks()) {
      inner.push_back(inner_by_width.at(b.punctures()));
      inner_braids.push_back(random_cabled(rng, inner.back(), 2, 4));
    }
    if (!check_flattened(outer, inner, random_exterior(rng, outer, 3), inner_braids).passed()) ++nested_bad;
  }
  report.add("nested cabling flattens", nested_bad == 0, counted(nested_bad, static_cast<std::size_t>(nested), "failures"));
  return report;
}

}  // namespace braidsym
