#include "braidsym/tss.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "text_util.hpp"

namespace braidsym {
namespace {

std::string index_pair(std::size_t s) { return std::to_string(s + 1) + "<->" + std::to_string(s + 2); }

// Index of the element of xs equal to w, or -1.
int find_equal(const std::vector<BraidWord>& xs, const BraidWord& w) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    if (equal(xs[i], w)) return static_cast<int>(i);
  return -1;
}

}  // namespace

CheckReport verify_cert(const TotallySymmetricSetCert& x) {
  CheckReport report;
  const std::size_t m = x.elements.size();
  bool shape_ok = m >= 1 && x.swaps.size() == m - 1;
  for (const auto& e : x.elements) shape_ok = shape_ok && e.strands() == x.strands;
  for (const auto& g : x.swaps) shape_ok = shape_ok && g.strands() == x.strands;
  report.add("shape", shape_ok,
             std::to_string(m) + " elements, " + std::to_string(x.swaps.size()) + " swap conjugators on " +
                 std::to_string(x.strands) + " strands");
  if (!shape_ok) return report;

  std::string dup;
  for (std::size_t i = 0; i < m && dup.empty(); ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (equal(x.elements[i], x.elements[j])) {
        dup = "x" + std::to_string(i + 1) + " = x" + std::to_string(j + 1);
        break;
      }
  report.add("distinct", dup.empty(), dup);

  std::string clash;
  for (std::size_t i = 0; i < m && clash.empty(); ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (!commutes(x.elements[i], x.elements[j])) {
        clash = "x" + std::to_string(i + 1) + " and x" + std::to_string(j + 1) + " do not commute";
        break;
      }
  report.add("commute", clash.empty(), clash);

  for (std::size_t s = 0; s < x.swaps.size(); ++s) {
    std::string wrong;
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t target = i == s ? s + 1 : i == s + 1 ? s : i;
      if (!conjugates_witness(x.swaps[s], x.elements[i], x.elements[target])) {
        wrong = "sends x" + std::to_string(i + 1) + " somewhere other than x" + std::to_string(target + 1);
        break;
      }
    }
    report.add("swap " + index_pair(s), wrong.empty(), wrong);
  }

  if (x.commutator_only) {
    std::string bad;
    for (std::size_t s = 0; s < x.swaps.size(); ++s)
      if (exponent_sum(x.swaps[s]) != 0) {
        bad = "swap " + index_pair(s) + " has exponent sum " + std::to_string(exponent_sum(x.swaps[s]));
        break;
      }
    report.add("commutator_only", bad.empty(), bad);
  }
  return report;
}

std::optional<BraidWord> search_conjugator(int strands, const std::vector<std::pair<BraidWord, BraidWord>>& pairs,
                                           const std::vector<int>& letters, int max_depth) {
  for (const auto& [a, b] : pairs) {
    require_same_strands(a.strands(), strands);
    require_same_strands(b.strands(), strands);
  }
  auto works = [&](const BraidWord& g) {
    return std::all_of(pairs.begin(), pairs.end(), [&](const auto& p) { return conjugates_witness(g, p.first, p.second); });
  };
  std::vector<BraidWord> frontier{BraidWord(strands)};
  std::set<std::string> seen{normal_form(frontier.front()).to_string()};
  if (works(frontier.front())) return frontier.front();
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<BraidWord> next;
    for (const auto& w : frontier)
      for (int e : letters) {
        BraidWord g = w * BraidWord(strands, {e});
        if (!seen.insert(normal_form(g).to_string()).second) continue;
        if (works(g)) return g;
        next.push_back(std::move(g));
      }
    frontier = std::move(next);
  }
  return std::nullopt;
}

TotallySymmetricSetCert make_Xn(int n, int depth) {
  require(n >= 2, "X_n needs n >= 2");
  TotallySymmetricSetCert x;
  x.strands = n;
  x.commutator_only = true;
  const int m = n / 2;
  for (int i = 1; i <= m; ++i) x.elements.push_back(BraidWord::generator(n, 2 * i - 1));
  for (int i = 1; i < m; ++i) {
    const int a = 2 * i - 1;
    const auto& xi = x.elements[static_cast<std::size_t>(i - 1)];
    const auto& xj = x.elements[static_cast<std::size_t>(i)];
    auto g = search_conjugator(n, {{xi, xj}, {xj, xi}}, {a, -a, a + 1, -(a + 1), a + 2, -(a + 2)}, depth);
    if (!g) throw SearchExhausted("no swap conjugator for sigma_" + std::to_string(a) + " <-> sigma_" +
                                  std::to_string(a + 2) + " within depth " + std::to_string(depth));
    // sigma_1 commutes with every element, so it corrects the exponent sum for free.
    x.swaps.push_back(*g * BraidWord::generator(n, 1, static_cast<int>(-exponent_sum(*g))));
  }
  return x;
}

TotallySymmetricSetCert make_Yn(int n, int depth) { return derived_diff(make_Xn(n, depth)); }

TotallySymmetricSetCert make_Zn(int n, int depth) {
  return derived_translate(derived_pow(make_Xn(n, depth), static_cast<std::int64_t>(n) * (n - 1)),
                           invert(center_word(n)));
}

TotallySymmetricSetCert derived_pow(const TotallySymmetricSetCert& x, std::int64_t k) {
  return derived_mixed(x, k, 0);
}

TotallySymmetricSetCert derived_star(const TotallySymmetricSetCert& x) { return derived_mixed(x, 0, 1); }

TotallySymmetricSetCert derived_mixed(const TotallySymmetricSetCert& x, std::int64_t k, std::int64_t l) {
  TotallySymmetricSetCert y = x;
  y.elements.clear();
  for (std::size_t i = 0; i < x.size(); ++i) {
    BraidWord star(x.strands);
    for (std::size_t j = 0; j < x.size(); ++j)
      if (j != i) star = star * x.elements[j];
    y.elements.push_back(free_reduce(power(x.elements[i], k) * power(star, l)));
  }
  return y;
}

TotallySymmetricSetCert derived_diff(const TotallySymmetricSetCert& x) {
  require(x.size() >= 2, "X' needs at least two elements");
  TotallySymmetricSetCert y;
  y.strands = x.strands;
  y.commutator_only = x.commutator_only;
  for (std::size_t i = 1; i < x.size(); ++i) y.elements.push_back(free_reduce(x.elements[0] * invert(x.elements[i])));
  // Swaps of x_2..x_m fix x_1.
  y.swaps.assign(x.swaps.begin() + 1, x.swaps.end());
  return y;
}

TotallySymmetricSetCert derived_translate(const TotallySymmetricSetCert& x, const BraidWord& z) {
  require_same_strands(x.strands, z.strands());
  for (std::size_t s = 0; s < x.swaps.size(); ++s)
    require(commutes(x.swaps[s], z), "translation element does not commute with swap " + index_pair(s));
  TotallySymmetricSetCert y = x;
  for (auto& e : y.elements) e = free_reduce(e * z);
  return y;
}

TotallySymmetricSetCert apply_derivations(const TotallySymmetricSetCert& x, std::string_view chain) {
  TotallySymmetricSetCert out = x;
  std::string_view rest = chain;
  while (!detail::trim(rest).empty()) {
    const auto bar = rest.find('|');
    const std::string_view step = detail::trim(rest.substr(0, bar));
    rest = bar == std::string_view::npos ? std::string_view{} : rest.substr(bar + 1);
    detail::Scanner in(step);
    if (in.consume("pow")) {
      out = derived_pow(out, in.read_int());
    } else if (in.consume("star")) {
      out = derived_star(out);
    } else if (in.consume("mixed")) {
      const auto k = in.read_int();
      out = derived_mixed(out, k, in.read_int());
    } else if (in.consume("diff")) {
      out = derived_diff(out);
    } else if (in.consume("translate")) {
      if (in.consume("z^")) {
        out = derived_translate(out, power(center_word(out.strands), in.read_int()));
      } else if (in.consume("z")) {
        out = derived_translate(out, center_word(out.strands));
      } else {
        out = derived_translate(out, parse_letters(in.rest(), out.strands));
        continue;
      }
    } else {
      in.fail("unknown derivation step");
    }
    if (!in.at_end()) in.fail("trailing input in derivation step");
  }
  return out;
}

ExponentMatrix::ExponentMatrix(std::vector<std::vector<std::int64_t>> entries, std::int64_t modulus)
    : rows_(std::move(entries)), modulus_(modulus) {
  require(modulus >= 0, "modulus must be nonnegative");
  for (auto& row : rows_) {
    require(row.size() == rows_.size(), "exponent matrix must be square");
    if (modulus_ > 0)
      for (auto& v : row) v = ((v % modulus_) + modulus_) % modulus_;
  }
}

ExponentMatrix kl_form(int m, std::int64_t k, std::int64_t l, std::int64_t modulus) {
  std::vector<std::vector<std::int64_t>> rows(static_cast<std::size_t>(m), std::vector<std::int64_t>(static_cast<std::size_t>(m), l));
  for (int i = 0; i < m; ++i) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = k;
  return ExponentMatrix(std::move(rows), modulus);
}

std::optional<MatrixForm> classify_exponent_matrix(const ExponentMatrix& a) {
  const int m = a.size();
  require(m >= 1, "empty exponent matrix");
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      require(a.rows()[static_cast<std::size_t>(i)] != a.rows()[static_cast<std::size_t>(j)],
              "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " coincide");
  if (m == 1) return MatrixForm{a(0, 0), 0, {0}};

  // Distinct rows force k != l, so each row has a single k entry; try each
  // position of row 0 as that entry.
  for (int c = 0; c < m; ++c) {
    const std::int64_t k = a(0, c);
    const std::int64_t l = a(0, c == 0 ? 1 : 0);
    std::vector<int> order(static_cast<std::size_t>(m), -1);
    bool ok = true;
    for (int r = 0; r < m && ok; ++r) {
      int k_col = -1;
      for (int j = 0; j < m && ok; ++j) {
        if (a(r, j) == k && k_col < 0)
          k_col = j;
        else if (a(r, j) != l)
          ok = false;
      }
      ok = ok && k_col >= 0 && order[static_cast<std::size_t>(k_col)] < 0;
      if (ok) order[static_cast<std::size_t>(k_col)] = r;
    }
    if (ok) return MatrixForm{k, l, order};
  }
  return std::nullopt;
}

bool check_perm_closure(const ExponentMatrix& a) {
  const int m = a.size();
  require(m <= 6, "permutation closure check is limited to m <= 6");
  std::vector<int> pi(static_cast<std::size_t>(m));
  std::iota(pi.begin(), pi.end(), 0);
  do {
    std::vector<int> tau(static_cast<std::size_t>(m));
    std::iota(tau.begin(), tau.end(), 0);
    bool found = false;
    do {
      bool same = true;
      for (int i = 0; i < m && same; ++i)
        for (int j = 0; j < m && same; ++j)
          same = a(pi[static_cast<std::size_t>(i)], tau[static_cast<std::size_t>(j)]) == a(i, j);
      found = same;
    } while (!found && std::next_permutation(tau.begin(), tau.end()));
    if (!found) return false;
  } while (std::next_permutation(pi.begin(), pi.end()));
  return true;
}

CheckReport check_robustness_witnesses(const TotallySymmetricSetCert& x, const TotallySymmetricSetCert& y) {
  require_same_strands(x.strands, y.strands);
  CheckReport report;
  std::string dup;
  for (std::size_t i = 0; i < y.size() && dup.empty(); ++i)
    for (std::size_t j = i + 1; j < y.size(); ++j)
      if (equal(y.elements[i], y.elements[j])) {
        dup = "y" + std::to_string(i + 1) + " = y" + std::to_string(j + 1);
        break;
      }
  report.add("distinct", dup.empty(), dup);
  for (std::size_t s = 0; s < y.swaps.size(); ++s) {
    std::vector<bool> hit(x.size(), false);
    std::string wrong;
    for (std::size_t i = 0; i < x.size(); ++i) {
      const int j = find_equal(x.elements, conjugate(y.swaps[s], x.elements[i]));
      if (j < 0 || hit[static_cast<std::size_t>(j)]) {
        wrong = "x" + std::to_string(i + 1) + " leaves the set";
        break;
      }
      hit[static_cast<std::size_t>(j)] = true;
    }
    report.add("swap " + index_pair(s) + " permutes X", wrong.empty(), wrong);
  }
  return report;
}

std::string to_cert_text(const TotallySymmetricSetCert& x) {
  std::ostringstream out;
  out << "tss n=" << x.strands << " m=" << x.size() << " commutator_only=" << (x.commutator_only ? "true" : "false")
      << "\n";
  for (std::size_t i = 0; i < x.elements.size(); ++i) out << "element " << i + 1 << ": " << to_string(x.elements[i]) << "\n";
  for (std::size_t s = 0; s < x.swaps.size(); ++s)
    out << "swap " << s + 1 << " " << s + 2 << ": " << to_string(x.swaps[s]) << "\n";
  return out.str();
}

TotallySymmetricSetCert parse_cert_text(std::string_view text) {
  TotallySymmetricSetCert x;
  std::istringstream lines{std::string(text)};
  std::string line;
  bool header = false;
  std::size_t m = 0;
  while (std::getline(lines, line)) {
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    detail::Scanner in(body);
    if (!header) {
      in.expect("tss");
      in.expect("n=");
      x.strands = in.read_small_int();
      in.expect("m=");
      m = static_cast<std::size_t>(in.read_int());
      in.expect("commutator_only=");
      if (in.consume("true"))
        x.commutator_only = true;
      else if (!in.consume("false"))
        in.fail("expected true or false");
      if (!in.at_end()) in.fail("trailing input");
      header = true;
    } else if (in.consume("element")) {
      if (static_cast<std::size_t>(in.read_int()) != x.elements.size() + 1) in.fail("elements out of order");
      in.expect(":");
      x.elements.push_back(parse_braid_word(in.rest()));
    } else if (in.consume("swap")) {
      const auto i = static_cast<std::size_t>(in.read_int());
      const auto j = static_cast<std::size_t>(in.read_int());
      if (i != x.swaps.size() + 1 || j != i + 1) in.fail("swaps must be listed as 1 2, 2 3, ...");
      in.expect(":");
      x.swaps.push_back(parse_braid_word(in.rest()));
    } else {
      in.fail("expected 'element' or 'swap'");
    }
  }
  if (!header) throw ParseError("missing tss header");
  if (x.elements.size() != m) throw ParseError("header announces " + std::to_string(m) + " elements");
  for (const auto& w : x.elements)
    if (w.strands() != x.strands) throw ParseError("element on the wrong strand count");
  for (const auto& w : x.swaps)
    if (w.strands() != x.strands) throw ParseError("swap on the wrong strand count");
  return x;
}

}  // namespace braidsym
