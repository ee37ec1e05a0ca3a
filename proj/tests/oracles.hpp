#pragma once

// Reference implementations used to cross-check the library. None of these
// call into the code they check; they share only the value types.

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "braidsym/braid_word.hpp"
#include "braidsym/curves.hpp"
#include "braidsym/tss.hpp"

namespace oracle {

using braidsym::BraidWord;

// --- Artin action on the free group F_n ------------------------------------
// Faithful, so two braids are equal iff their actions on x_1..x_n agree.
// Letters are +-j for x_j^{+-1}, 1-based.

using FreeWord = std::vector<int>;

inline void push_reduced(FreeWord& w, int x) {
  if (!w.empty() && w.back() == -x)
    w.pop_back();
  else
    w.push_back(x);
}

inline FreeWord free_inverse(const FreeWord& w) {
  FreeWord out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

// Image of the generator x_j under sigma_i^{sign}.
inline FreeWord artin_generator_image(int i, int sign, int j) {
  if (sign > 0) {
    if (j == i) return {i, i + 1, -i};
    if (j == i + 1) return {i};
  } else {
    if (j == i) return {i + 1};
    if (j == i + 1) return {-(i + 1), i, i + 1};
  }
  return {j};
}

// Tuple of images of x_1..x_n, joined into one comparable key.
inline std::vector<FreeWord> artin_images(const BraidWord& w) {
  const int n = w.strands();
  std::vector<FreeWord> images;
  for (int j = 1; j <= n; ++j) images.push_back({j});
  for (int e : w.letters()) {
    const int i = std::abs(e), sign = e > 0 ? 1 : -1;
    for (auto& img : images) {
      FreeWord next;
      for (int x : img) {
        FreeWord piece = artin_generator_image(i, sign, std::abs(x));
        if (x < 0) piece = free_inverse(piece);
        for (int y : piece) push_reduced(next, y);
      }
      img = std::move(next);
    }
  }
  return images;
}

inline bool artin_equal(const BraidWord& u, const BraidWord& v) { return artin_images(u) == artin_images(v); }

// --- Permutations by explicit tracking --------------------------------------

// Follows each strand through the word: result[start] = end (0-based).
inline std::vector<int> track_strands(const BraidWord& w) {
  const int n = w.strands();
  std::vector<int> at(static_cast<std::size_t>(n));  // at[position] = strand
  std::iota(at.begin(), at.end(), 0);
  for (int e : w.letters()) std::swap(at[static_cast<std::size_t>(std::abs(e) - 1)], at[static_cast<std::size_t>(std::abs(e))]);
  std::vector<int> end(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) end[static_cast<std::size_t>(at[static_cast<std::size_t>(pos)])] = pos;
  return end;
}

// --- Round curves by plane geometry -----------------------------------------
// Punctures sit at (p, 0). A round curve [lo, hi] is the rectangle
// [lo - 0.4, hi + 0.4] x [-1, 1]. Arcs: rays straight up and down from each
// puncture, and full vertical lines x = i + 0.5 between punctures. Crossings
// are counted segment by segment.

struct Point {
  double x, y;
};

inline bool segments_cross(Point a, Point b, Point c, Point d) {
  auto orient = [](Point p, Point q, Point r) {
    const double v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
    return v > 1e-12 ? 1 : v < -1e-12 ? -1 : 0;
  };
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}

inline int polygon_crossings(const std::vector<Point>& poly, Point c, Point d) {
  int count = 0;
  for (std::size_t k = 0; k < poly.size(); ++k)
    if (segments_cross(poly[k], poly[(k + 1) % poly.size()], c, d)) ++count;
  return count;
}

// Dynnikov coordinates (a_1..a_{n-2}; b_1..b_{n-2}) from the crossing counts:
// a_i = (below_{i+1} - above_{i+1}) / 2 at puncture i+1,
// b_i = (line_i - line_{i+1}) / 2 for the lines right of punctures i, i+1.
inline std::vector<long> round_curve_coordinates(int n, int lo, int hi) {
  const double l = lo - 0.4, h = hi + 0.4;
  const std::vector<Point> rect{{l, -1}, {h, -1}, {h, 1}, {l, 1}};
  std::vector<int> above(static_cast<std::size_t>(n + 1)), below(static_cast<std::size_t>(n + 1)),
      line(static_cast<std::size_t>(n));
  for (int p = 1; p <= n; ++p) {
    above[static_cast<std::size_t>(p)] = polygon_crossings(rect, {double(p), 0}, {double(p), 10});
    below[static_cast<std::size_t>(p)] = polygon_crossings(rect, {double(p), 0}, {double(p), -10});
  }
  for (int i = 1; i < n; ++i) line[static_cast<std::size_t>(i)] = polygon_crossings(rect, {i + 0.5, -10}, {i + 0.5, 10});
  std::vector<long> out;
  for (int i = 1; i <= n - 2; ++i) out.push_back((below[static_cast<std::size_t>(i + 1)] - above[static_cast<std::size_t>(i + 1)]) / 2);
  for (int i = 1; i <= n - 2; ++i) out.push_back((line[static_cast<std::size_t>(i)] - line[static_cast<std::size_t>(i + 1)]) / 2);
  return out;
}

inline std::vector<long> as_longs(const braidsym::CurveClass& c) {
  std::vector<long> out;
  for (const auto& x : c.coordinates()) out.push_back(static_cast<long>(x));
  return out;
}

// --- (k, l)-forms by brute force over row orders ----------------------------

using Rows = std::vector<std::vector<std::int64_t>>;

// True when some ordering of the rows puts k on the diagonal and l elsewhere.
inline bool is_permuted_kl_form(const Rows& a) {
  const std::size_t m = a.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  do {
    const std::int64_t k = a[order[0]][0];
    const std::int64_t l = m > 1 ? a[order[0]][1] : 0;
    bool ok = true;
    for (std::size_t i = 0; i < m && ok; ++i)
      for (std::size_t j = 0; j < m && ok; ++j) ok = a[order[i]][j] == (i == j ? k : l);
    if (ok) return true;
  } while (std::next_permutation(order.begin(), order.end()));
  return false;
}

// Row permutations admitting a compensating column permutation form a
// subgroup, so it is enough to test adjacent row swaps. The column
// permutation is found by backtracking over column matches.
inline bool columns_match(const Rows& a, const Rows& b, std::size_t j, std::vector<bool>& used) {
  const std::size_t m = a.size();
  if (j == m) return true;
  for (std::size_t c = 0; c < m; ++c) {
    if (used[c]) continue;
    bool same = true;
    for (std::size_t i = 0; i < m && same; ++i) same = b[i][c] == a[i][j];
    if (!same) continue;
    used[c] = true;
    if (columns_match(a, b, j + 1, used)) return true;
    used[c] = false;
  }
  return false;
}

inline bool closure_by_generators(const Rows& a) {
  for (std::size_t r = 0; r + 1 < a.size(); ++r) {
    Rows b = a;
    std::swap(b[r], b[r + 1]);
    std::vector<bool> used(a.size(), false);
    if (!columns_match(a, b, 0, used)) return false;
  }
  return true;
}

}  // namespace oracle
