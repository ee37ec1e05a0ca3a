#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "braidsym/braid_word.hpp"

namespace braidsym {

using BigInt = boost::multiprecision::cpp_int;

/// The standard round curve enclosing punctures lo..hi (1-based, inclusive)
/// of the n-punctured disk. Must enclose at least two punctures and must not
/// be boundary parallel, so (lo, hi) = (1, n) is rejected.
class RoundCurve {
 public:
  RoundCurve(int strands, int lo, int hi);

  int strands() const { return strands_; }
  int lo() const { return lo_; }
  int hi() const { return hi_; }
  int punctures() const { return hi_ - lo_ + 1; }
  bool contains(int puncture) const { return lo_ <= puncture && puncture <= hi_; }

  /// Intervals are nested or separated.
  bool compatible_with(const RoundCurve& other) const;

  friend bool operator==(const RoundCurve&, const RoundCurve&) = default;
  friend auto operator<=>(const RoundCurve&, const RoundCurve&) = default;

 private:
  int strands_;
  int lo_;
  int hi_;
};

/// Intersection counts of a multicurve in minimal position with the standard
/// arc system: vertical arcs above and below each puncture, and the vertical
/// lines between consecutive punctures.
struct ArcIntersections {
  std::vector<BigInt> above;    // size n, index p-1 for puncture p
  std::vector<BigInt> below;    // size n
  std::vector<BigInt> between;  // size n-1, index i-1 for the line between i and i+1
};

/// Isotopy class of an integral lamination in the n-punctured disk, in
/// Dynnikov coordinates (a_1..a_{n-2}; b_1..b_{n-2}). The zero vector is the
/// empty multicurve.
class CurveClass {
 public:
  explicit CurveClass(int strands);  // empty multicurve
  CurveClass(int strands, std::vector<BigInt> coordinates);

  int strands() const { return strands_; }
  const std::vector<BigInt>& coordinates() const { return coords_; }
  bool is_empty() const;

  /// Space-separated integers, a-block first.
  std::string to_string() const;

  friend bool operator==(const CurveClass&, const CurveClass&) = default;
  friend bool operator<(const CurveClass& x, const CurveClass& y) { return x.coords_ < y.coords_; }

 private:
  int strands_;
  std::vector<BigInt> coords_;
};

/// A curve given as witness(base).
struct PushedCurve {
  RoundCurve base;
  BraidWord witness;

  PushedCurve(RoundCurve base_curve, BraidWord w);
  explicit PushedCurve(RoundCurve base_curve);
};

/// Converts arc intersection counts into Dynnikov coordinates.
CurveClass from_intersections(int strands, const ArcIntersections& counts);
/// Arc intersection counts of the round curve, read off from its position.
ArcIntersections round_curve_intersections(const RoundCurve& c);

CurveClass class_of_round(const RoundCurve& c);
CurveClass class_of(const PushedCurve& b);

/// Left action: act(u v, C) = act(u, act(v, C)).
CurveClass act(const BraidWord& w, const CurveClass& c);

/// Intersection counts with the vertical lines between punctures,
/// recovered from the coordinates.
std::vector<BigInt> between_intersections(const CurveClass& c);

/// witness * sigma_lo * witness^{-1} for a two-punctured base [lo, lo+1].
BraidWord half_twist(const PushedCurve& b);
/// (sigma_lo ... sigma_{hi-1})^k where k is the number of enclosed punctures.
BraidWord dehn_twist(const RoundCurve& c);

/// Two distinct two-punctured curves are disjoint iff their half twists commute.
bool disjoint(const PushedCurve& b1, const PushedCurve& b2);
/// Consecutive half twists braid, all others commute.
bool is_chain(const std::vector<PushedCurve>& curves);

/// "round(n=7)[3,4]".
std::string to_string(const RoundCurve& c);
/// "push(n=7)[3,4] <- 1 -2 5"; a bare round curve when the witness is empty.
std::string to_string(const PushedCurve& b);
RoundCurve parse_round_curve(std::string_view text);
/// Accepts both "round(...)" and "push(...)" forms.
PushedCurve parse_pushed_curve(std::string_view text);

}  // namespace braidsym
