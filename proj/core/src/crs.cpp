#include "braidsym/crs.hpp"

#include <algorithm>
#include <set>

#include "braidsym/word_problem.hpp"
#include "text_util.hpp"

namespace braidsym {

TwistForm::TwistForm(int strands, std::vector<TwistFactor> factors, std::int64_t central)
    : strands_(strands), factors_(std::move(factors)), central_(central) {
  require(strands >= 2, "twist forms need n >= 2");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    const auto& f = factors_[i];
    require_same_strands(f.curve.strands(), strands);
    require(f.exponent != 0, "twist exponents must be nonzero");
    if (f.kind == TwistKind::Half)
      require(f.curve.punctures() == 2, "half twists need a two-punctured curve, got " + to_string(f.curve));
    else
      require(f.curve.lo() == 1 && f.curve.hi() == strands - 1,
              "Dehn twist factors are restricted to [1, n-1], got " + to_string(f.curve));
    for (std::size_t j = 0; j < i; ++j) {
      require(!(factors_[j].curve == f.curve), "repeated twist curve " + to_string(f.curve));
      require(factors_[j].curve.compatible_with(f.curve),
              "twist curves " + to_string(factors_[j].curve) + " and " + to_string(f.curve) + " cross");
    }
  }
}

BraidWord twistform_to_word(const TwistForm& t) {
  const int n = t.strands();
  BraidWord out(n);
  for (const auto& f : t.factors()) {
    const BraidWord base = f.kind == TwistKind::Half ? BraidWord::generator(n, f.curve.lo()) : dehn_twist(f.curve);
    out = out * power(base, f.exponent);
  }
  if (t.central() != 0) out = out * power(center_word(n), t.central());
  return out;
}

std::vector<RoundCurve> crs_of(const TwistForm& t) {
  std::vector<RoundCurve> out;
  for (const auto& f : t.factors()) out.push_back(f.curve);
  std::sort(out.begin(), out.end());
  return out;
}

LabeledTree gamma_of_set(const std::vector<TwistForm>& ts) {
  require(!ts.empty(), "need at least one twist form");
  require(ts.size() <= static_cast<std::size_t>(kMaxLabelUniverse), "too many twist forms for the label universe");
  const int n = ts.front().strands();
  std::vector<std::pair<RoundCurve, LabelSet>> pairs;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    require_same_strands(ts[i].strands(), n);
    for (const auto& c : crs_of(ts[i])) {
      auto it = std::find_if(pairs.begin(), pairs.end(), [&](const auto& p) { return p.first == c; });
      if (it == pairs.end()) {
        pairs.emplace_back(c, 0);
        it = pairs.end() - 1;
      }
      it->second |= LabelSet{1} << i;
    }
  }
  return from_round(n, static_cast<int>(ts.size()), pairs);
}

std::vector<TwistForm> xn_twistforms(int n, std::int64_t k) {
  require(n >= 3, "X_n twist forms need n >= 3");
  std::vector<TwistForm> out;
  for (int i = 1; i <= n / 2; ++i)
    out.emplace_back(n, std::vector<TwistFactor>{{RoundCurve(n, 2 * i - 1, 2 * i), TwistKind::Half, k}});
  return out;
}

std::vector<TwistForm> zn_twistforms(int n) {
  require(n >= 3, "Z_n twist forms need n >= 3");
  std::vector<TwistForm> out;
  const std::int64_t p = static_cast<std::int64_t>(n) * (n - 1);
  for (int i = 1; i <= n / 2; ++i)
    out.emplace_back(n, std::vector<TwistFactor>{{RoundCurve(n, 2 * i - 1, 2 * i), TwistKind::Half, p}}, -1);
  return out;
}

CheckReport check_crs_axioms(const TwistForm& t, const BraidWord& g, const std::optional<TwistForm>& expected) {
  require_same_strands(t.strands(), g.strands());
  CheckReport report;
  const BraidWord w = twistform_to_word(t);
  const BraidWord conj = conjugate(g, w);

  std::vector<CurveClass> moved;
  std::string bad_fix, bad_image;
  for (const auto& c : crs_of(t)) {
    const CurveClass base = class_of_round(c);
    if (bad_fix.empty() && !(act(w, base) == base)) bad_fix = to_string(c) + " is moved";
    moved.push_back(act(g, base));
    if (bad_image.empty() && !(act(conj, moved.back()) == moved.back()))
      bad_image = "image of " + to_string(c) + " is moved by the conjugate";
  }
  report.add("element fixes its reduction curves", bad_fix.empty(), bad_fix);
  report.add("conjugate fixes the moved curves", bad_image.empty(), bad_image);

  if (expected) {
    require_same_strands(expected->strands(), t.strands());
    report.add("conjugate equals expected element", equal(conj, twistform_to_word(*expected)));
    std::set<CurveClass> want, got(moved.begin(), moved.end());
    for (const auto& c : crs_of(*expected)) want.insert(class_of_round(c));
    report.add("moved curves equal expected reduction system", want == got,
               std::to_string(got.size()) + " moved classes vs " + std::to_string(want.size()) + " expected");
  }
  return report;
}

CheckReport check_crs_commuting(const TwistForm& t1, const TwistForm& t2) {
  require_same_strands(t1.strands(), t2.strands());
  CheckReport report;
  if (!commutes(twistform_to_word(t1), twistform_to_word(t2))) {
    report.skip("reduction curves equal or disjoint", "elements do not commute");
    return report;
  }
  std::string crossing;
  for (const auto& c : crs_of(t1))
    for (const auto& d : crs_of(t2)) {
      if (c == d || !crossing.empty()) continue;
      const CurveClass cd = class_of_round(d);
      if (!(act(dehn_twist(c), cd) == cd)) crossing = to_string(c) + " crosses " + to_string(d);
    }
  report.add("reduction curves equal or disjoint", crossing.empty(), crossing);
  return report;
}

std::string to_string(const TwistForm& t) {
  std::string out;
  auto append = [&](const std::string& term) { out += (out.empty() ? "" : " * ") + term; };
  for (const auto& f : t.factors())
    append(std::string(f.kind == TwistKind::Half ? "H" : "T") + "[" + std::to_string(f.curve.lo()) + "," +
           std::to_string(f.curve.hi()) + "]^" + std::to_string(f.exponent));
  if (t.central() != 0) append("z^" + std::to_string(t.central()));
  if (out.empty()) out = "1";
  return out + " (n=" + std::to_string(t.strands()) + ")";
}

TwistForm parse_twistform(std::string_view text) {
  const std::string_view body = detail::trim(text);
  const auto open = body.rfind("(n=");
  if (open == std::string_view::npos || body.back() != ')')
    throw ParseError("twist form must end with \"(n=<strands>)\": \"" + std::string(text) + "\"");
  detail::Scanner tail(body.substr(open + 3, body.size() - open - 4));
  const int n = tail.read_small_int();
  if (!tail.at_end()) tail.fail("bad strand count");

  detail::Scanner in(body.substr(0, open));
  std::vector<TwistFactor> factors;
  std::int64_t central = 0;
  if (in.consume("1")) {
    if (!in.at_end()) in.fail("trailing input after identity");
  } else {
    do {
      auto read_exponent = [&]() -> std::int64_t { return in.consume("^") ? in.read_int() : 1; };
      if (in.consume("z")) {
        central += read_exponent();
        continue;
      }
      TwistKind kind;
      if (in.consume("H"))
        kind = TwistKind::Half;
      else if (in.consume("T"))
        kind = TwistKind::Dehn;
      else
        in.fail("expected H[..], T[..] or z");
      in.expect("[");
      const int lo = in.read_small_int();
      in.expect(",");
      const int hi = in.read_small_int();
      in.expect("]");
      try {
        factors.push_back({RoundCurve(n, lo, hi), kind, read_exponent()});
      } catch (const PreconditionError& e) {
        in.fail(e.what());
      }
    } while (in.consume("*"));
    if (!in.at_end()) in.fail("trailing input");
  }
  try {
    return TwistForm(n, std::move(factors), central);
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidsym
