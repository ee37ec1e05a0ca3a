#include "braidsym/curves.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <limits>

#include "braidsym/word_problem.hpp"
#include "text_util.hpp"

namespace braidsym {
namespace {

// int64 that throws on overflow; the action retries in BigInt when it does.
struct Overflow {};

struct Checked {
  std::int64_t v = 0;

  friend Checked operator+(Checked x, Checked y) {
    Checked r;
    if (__builtin_add_overflow(x.v, y.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked x, Checked y) {
    Checked r;
    if (__builtin_sub_overflow(x.v, y.v, &r.v)) throw Overflow{};
    return r;
  }
  friend Checked operator-(Checked x) { return Checked{} - x; }
  friend bool operator<(Checked x, Checked y) { return x.v < y.v; }
};

template <class Int>
Int pos(const Int& x) {
  return x < Int{} ? Int{} : x;
}
template <class Int>
Int neg(const Int& x) {
  return x < Int{} ? x : Int{};
}
template <class Int>
Int absolute(const Int& x) {
  return x < Int{} ? -x : x;
}
template <class Int>
Int larger(const Int& x, const Int& y) {
  return x < y ? y : x;
}

// Dynnikov update for one letter on the extended coordinate arrays
// a[0..n-1], b[0..n-1] with a_0 = a_{n-1} = 0 and b_0, b_{n-1} recovered from
// the intersections with the outermost vertical lines.
template <class Int>
void apply_letter(std::vector<Int>& a, std::vector<Int>& b, int n, int letter) {
  Int partial{};
  Int widest{};
  for (int k = 1; k <= n - 2; ++k) {
    const Int candidate = absolute(a[k]) + pos(b[k]) + partial;
    widest = k == 1 ? candidate : larger(widest, candidate);
    partial = partial + b[k];
  }
  a[0] = Int{};
  a[n - 1] = Int{};
  b[0] = -widest;
  b[n - 1] = widest - partial;

  const int i = std::abs(letter);
  const Int a0 = a[i - 1], a1 = a[i], b0 = b[i - 1], b1 = b[i];
  if (letter > 0) {
    const Int c = a0 - a1 - pos(b1) + neg(b0);
    a[i - 1] = a0 - pos(b0) - pos(pos(b1) + c);
    b[i - 1] = b1 + neg(c);
    a[i] = a1 - neg(b1) - neg(neg(b0) - c);
    b[i] = b0 - neg(c);
  } else {
    // Mirror image of the positive rule under a -> -a.
    const Int d = a0 - a1 + pos(b1) - neg(b0);
    a[i - 1] = a0 + pos(b0) + pos(pos(b1) - d);
    b[i - 1] = b1 - pos(d);
    a[i] = a1 + neg(b1) + neg(neg(b0) + d);
    b[i] = b0 + pos(d);
  }
}

template <class Int>
void act_in_place(const BraidWord& w, std::vector<Int>& a, std::vector<Int>& b) {
  const int n = w.strands();
  const auto letters = w.letters();
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) apply_letter(a, b, n, *it);
}

BigInt half_of(const BigInt& x) {
  if (x % 2 != 0) throw PreconditionError("intersection counts have odd difference");
  return x / 2;
}

}  // namespace

RoundCurve::RoundCurve(int strands, int lo, int hi) : strands_(strands), lo_(lo), hi_(hi) {
  require(1 <= lo && lo < hi && hi <= strands, "round curve interval out of range");
  require(!(lo == 1 && hi == strands), "round curve around every puncture is boundary parallel");
}

bool RoundCurve::compatible_with(const RoundCurve& other) const {
  const bool separated = hi_ < other.lo_ || other.hi_ < lo_;
  const bool nested = (lo_ <= other.lo_ && other.hi_ <= hi_) || (other.lo_ <= lo_ && hi_ <= other.hi_);
  return separated || nested;
}

CurveClass::CurveClass(int strands)
    : strands_(strands), coords_(static_cast<std::size_t>(std::max(0, 2 * strands - 4))) {}

CurveClass::CurveClass(int strands, std::vector<BigInt> coordinates) : strands_(strands), coords_(std::move(coordinates)) {
  require(coords_.size() == static_cast<std::size_t>(std::max(0, 2 * strands - 4)), "curve class needs 2n-4 coordinates");
}

bool CurveClass::is_empty() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& x) { return x == 0; });
}

std::string CurveClass::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < coords_.size(); ++k) {
    if (k) out += ' ';
    out += coords_[k].str();
  }
  return out;
}

PushedCurve::PushedCurve(RoundCurve base_curve, BraidWord w) : base(base_curve), witness(std::move(w)) {
  require_same_strands(base.strands(), witness.strands());
}

PushedCurve::PushedCurve(RoundCurve base_curve) : base(base_curve), witness(base_curve.strands()) {}

CurveClass from_intersections(int n, const ArcIntersections& counts) {
  require(counts.above.size() == static_cast<std::size_t>(n) && counts.below.size() == static_cast<std::size_t>(n) &&
              counts.between.size() == static_cast<std::size_t>(n - 1),
          "intersection count arrays have the wrong size");
  std::vector<BigInt> coords;
  coords.reserve(static_cast<std::size_t>(2 * n - 4));
  for (int i = 1; i <= n - 2; ++i) coords.push_back(half_of(counts.below[i] - counts.above[i]));
  for (int i = 1; i <= n - 2; ++i) coords.push_back(half_of(counts.between[i - 1] - counts.between[i]));
  return CurveClass(n, std::move(coords));
}

ArcIntersections round_curve_intersections(const RoundCurve& c) {
  const int n = c.strands();
  ArcIntersections counts;
  for (int p = 1; p <= n; ++p) {
    // An arc from an enclosed puncture out to the boundary leaves the disk once.
    counts.above.emplace_back(c.contains(p) ? 1 : 0);
    counts.below.emplace_back(c.contains(p) ? 1 : 0);
  }
  for (int i = 1; i <= n - 1; ++i) counts.between.emplace_back(c.contains(i) && c.contains(i + 1) ? 2 : 0);
  return counts;
}

CurveClass class_of_round(const RoundCurve& c) { return from_intersections(c.strands(), round_curve_intersections(c)); }

CurveClass class_of(const PushedCurve& b) { return act(b.witness, class_of_round(b.base)); }

CurveClass act(const BraidWord& w, const CurveClass& c) {
  require_same_strands(w.strands(), c.strands());
  const int n = c.strands();
  if (n <= 2 || w.empty()) return c;
  const auto m = static_cast<std::size_t>(n - 2);
  const auto& coords = c.coordinates();

  constexpr std::int64_t kFastLimit = std::numeric_limits<std::int64_t>::max() / 4;
  const bool fits = std::all_of(coords.begin(), coords.end(), [&](const BigInt& x) { return abs(x) < kFastLimit; });
  if (fits) {
    try {
      std::vector<Checked> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
      for (std::size_t k = 0; k < m; ++k) {
        a[k + 1].v = static_cast<std::int64_t>(coords[k]);
        b[k + 1].v = static_cast<std::int64_t>(coords[m + k]);
      }
      act_in_place(w, a, b);
      std::vector<BigInt> out;
      out.reserve(2 * m);
      for (std::size_t k = 0; k < m; ++k) out.emplace_back(a[k + 1].v);
      for (std::size_t k = 0; k < m; ++k) out.emplace_back(b[k + 1].v);
      return CurveClass(n, std::move(out));
    } catch (const Overflow&) {
    }
  }
  std::vector<BigInt> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < m; ++k) {
    a[k + 1] = coords[k];
    b[k + 1] = coords[m + k];
  }
  act_in_place(w, a, b);
  std::vector<BigInt> out(a.begin() + 1, a.end() - 1);
  out.insert(out.end(), b.begin() + 1, b.end() - 1);
  return CurveClass(n, std::move(out));
}

std::vector<BigInt> between_intersections(const CurveClass& c) {
  const int n = c.strands();
  std::vector<BigInt> beta(static_cast<std::size_t>(std::max(0, n - 1)));
  if (n <= 2) return beta;
  const auto m = static_cast<std::size_t>(n - 2);
  const auto& x = c.coordinates();
  BigInt partial = 0, widest = 0;
  for (std::size_t k = 0; k < m; ++k) {
    const BigInt candidate = abs(x[k]) + (x[m + k] > 0 ? BigInt(x[m + k]) : BigInt(0)) + partial;
    if (k == 0 || candidate > widest) widest = candidate;
    partial += x[m + k];
  }
  beta[0] = 2 * widest;
  for (std::size_t i = 1; i < beta.size(); ++i) beta[i] = beta[i - 1] - 2 * x[m + i - 1];
  return beta;
}

BraidWord half_twist(const PushedCurve& b) {
  if (b.base.punctures() != 2) throw PreconditionError("half twist needs a curve around exactly two punctures");
  return conjugate(b.witness, BraidWord::generator(b.base.strands(), b.base.lo()));
}

BraidWord dehn_twist(const RoundCurve& c) {
  std::vector<int> cycle;
  for (int i = c.lo(); i < c.hi(); ++i) cycle.push_back(i);
  return power(BraidWord(c.strands(), std::move(cycle)), c.punctures());
}

bool disjoint(const PushedCurve& b1, const PushedCurve& b2) {
  require_same_strands(b1.base.strands(), b2.base.strands());
  if (b1.base.punctures() != 2 || b2.base.punctures() != 2)
    throw PreconditionError("disjointness test needs curves around exactly two punctures");
  if (class_of(b1) == class_of(b2)) throw PreconditionError("disjointness test needs distinct curves");
  return commutes(half_twist(b1), half_twist(b2));
}

bool is_chain(const std::vector<PushedCurve>& curves) {
  std::vector<BraidWord> twists;
  for (const auto& b : curves) {
    if (b.base.punctures() != 2) throw PreconditionError("chains consist of curves around exactly two punctures");
    twists.push_back(half_twist(b));
  }
  for (std::size_t i = 0; i < twists.size(); ++i)
    for (std::size_t j = i + 1; j < twists.size(); ++j) {
      const bool ok = j == i + 1 ? braid_relation(twists[i], twists[j]) : commutes(twists[i], twists[j]);
      if (!ok) return false;
    }
  return true;
}

std::string to_string(const RoundCurve& c) {
  return "round(n=" + std::to_string(c.strands()) + ")[" + std::to_string(c.lo()) + "," + std::to_string(c.hi()) + "]";
}

std::string to_string(const PushedCurve& b) {
  if (b.witness.empty()) return to_string(b.base);
  std::string out = "push(n=" + std::to_string(b.base.strands()) + ")[" + std::to_string(b.base.lo()) + "," +
                    std::to_string(b.base.hi()) + "] <-";
  for (int e : b.witness.letters()) out += " " + std::to_string(e);
  return out;
}

namespace {

RoundCurve read_interval(detail::Scanner& in, int n) {
  in.expect("[");
  const int lo = in.read_small_int();
  in.expect(",");
  const int hi = in.read_small_int();
  in.expect("]");
  try {
    return RoundCurve(n, lo, hi);
  } catch (const PreconditionError& e) {
    in.fail(e.what());
  }
}

}  // namespace

RoundCurve parse_round_curve(std::string_view text) {
  detail::Scanner in(text);
  in.expect("round(n=");
  const int n = in.read_small_int();
  in.expect(")");
  RoundCurve c = read_interval(in, n);
  if (!in.at_end()) in.fail("trailing input");
  return c;
}

PushedCurve parse_pushed_curve(std::string_view text) {
  detail::Scanner in(text);
  if (in.consume("round(n=")) {
    const int n = in.read_small_int();
    in.expect(")");
    RoundCurve c = read_interval(in, n);
    if (!in.at_end()) in.fail("trailing input");
    return PushedCurve(c);
  }
  in.expect("push(n=");
  const int n = in.read_small_int();
  in.expect(")");
  RoundCurve c = read_interval(in, n);
  in.expect("<-");
  return PushedCurve(c, parse_letters(in.rest(), n));
}

}  // namespace braidsym
