#include "braidsym/cabling.hpp"

#include <algorithm>
#include <set>

#include "braidsym/word_problem.hpp"
#include "text_util.hpp"

namespace braidsym {

CablePattern::CablePattern(int strands, std::vector<RoundCurve> blocks) : strands_(strands), blocks_(std::move(blocks)) {
  require(strands >= 1, "patterns need at least one puncture");
  std::sort(blocks_.begin(), blocks_.end());
  for (std::size_t j = 0; j < blocks_.size(); ++j) {
    require_same_strands(blocks_[j].strands(), strands);
    if (j > 0)
      require(blocks_[j - 1].hi() < blocks_[j].lo(),
              "blocks " + to_string(blocks_[j - 1]) + " and " + to_string(blocks_[j]) + " are not separated");
  }
  std::size_t next = 0;
  for (int p = 1; p <= strands;) {
    starts_.push_back(p);
    if (next < blocks_.size() && blocks_[next].lo() == p) {
      block_fat_.push_back(static_cast<int>(labels_.size()));
      labels_.push_back(blocks_[next].punctures());
      p += blocks_[next].punctures();
      ++next;
    } else {
      labels_.push_back(1);
      ++p;
    }
  }
}

int CablePattern::fat_of(int puncture) const {
  require(puncture >= 1 && puncture <= strands_, "puncture out of range");
  const auto it = std::upper_bound(starts_.begin(), starts_.end(), puncture);
  return static_cast<int>(it - starts_.begin()) - 1;
}

CabledBraid exterior_only(const CablePattern& p, const BraidWord& exterior) {
  CabledBraid cb{exterior, {}};
  for (const auto& b : p.blocks()) cb.interiors.emplace_back(b.punctures());
  return cb;
}

CabledBraid interiors_only(const CablePattern& p, std::vector<BraidWord> interiors) {
  return CabledBraid{BraidWord(p.fat_strands()), std::move(interiors)};
}

bool validate_exterior(const CablePattern& p, const BraidWord& w) {
  require_same_strands(w.strands(), p.fat_strands());
  const Permutation perm = permutation_image(w);
  const auto& labels = p.labels();
  for (int i = 0; i < p.fat_strands(); ++i)
    if (labels[static_cast<std::size_t>(i)] != labels[static_cast<std::size_t>(perm(i))]) return false;
  return true;
}

BraidWord block_crossing(int n, int s, int a, int b) {
  require(a >= 1 && b >= 1 && s >= 1 && s + a + b - 1 <= n, "block crossing does not fit");
  std::vector<int> letters;
  letters.reserve(static_cast<std::size_t>(a * b));
  for (int i = a - 1; i >= 0; --i)
    for (int j = 0; j < b; ++j) letters.push_back(s + i + j);
  return BraidWord(n, std::move(letters));
}

BraidWord cable(const CablePattern& p, const CabledBraid& cb) {
  require(validate_exterior(p, cb.exterior), "exterior braid mixes fat strands of different widths");
  require(cb.interiors.size() == p.blocks().size(), "need one interior braid per block");
  const int n = p.strands();
  std::vector<int> widths = p.labels();
  std::vector<int> letters;
  for (int e : cb.exterior.letters()) {
    const std::size_t right = static_cast<std::size_t>(std::abs(e));
    const std::size_t left = right - 1;
    int s = 1;
    for (std::size_t k = 0; k < left; ++k) s += widths[k];
    const int a = widths[left];
    const int b = widths[right];
    const BraidWord crossing = e > 0 ? block_crossing(n, s, a, b) : invert(block_crossing(n, s, b, a));
    letters.insert(letters.end(), crossing.letters().begin(), crossing.letters().end());
    std::swap(widths[left], widths[right]);
  }
  for (std::size_t j = 0; j < cb.interiors.size(); ++j) {
    const auto& block = p.blocks()[j];
    require_same_strands(cb.interiors[j].strands(), block.punctures());
    const BraidWord moved = shift(cb.interiors[j], block.lo() - 1, n);
    letters.insert(letters.end(), moved.letters().begin(), moved.letters().end());
  }
  return BraidWord(n, std::move(letters));
}

bool stabilizes(const CablePattern& p, const BraidWord& w) {
  require_same_strands(w.strands(), p.strands());
  std::set<CurveClass> classes;
  for (const auto& b : p.blocks()) classes.insert(class_of_round(b));
  // act is injective on classes, so mapping into the set means mapping onto it.
  return std::all_of(p.blocks().begin(), p.blocks().end(),
                     [&](const RoundCurve& b) { return classes.count(act(w, class_of_round(b))) == 1; });
}

Permutation block_permutation(const CablePattern& p, const BraidWord& w) {
  require(stabilizes(p, w), "braid does not stabilize the blocks");
  const Permutation perm = permutation_image(w);
  std::vector<int> image(static_cast<std::size_t>(p.fat_strands()));
  for (int f = 0; f < p.fat_strands(); ++f) {
    const int first = p.first_puncture(f);
    const int target = p.fat_of(perm(first - 1) + 1);
    for (int q = first; q < first + p.labels()[static_cast<std::size_t>(f)]; ++q)
      if (p.fat_of(perm(q - 1) + 1) != target) throw Error("block strands separated by a stabilizing braid");
    image[static_cast<std::size_t>(f)] = target;
  }
  return Permutation(std::move(image));
}

CheckReport check_semidirect(const CablePattern& p, const CabledBraid& cb1, const CabledBraid& cb2) {
  CheckReport report;
  const auto& blocks = p.blocks();
  const BraidWord e1 = cable(p, exterior_only(p, cb1.exterior));
  const BraidWord e2 = cable(p, exterior_only(p, cb2.exterior));
  report.add("splitting", equal(e1 * e2, cable(p, exterior_only(p, cb1.exterior * cb2.exterior))));

  std::vector<BraidWord> products;
  for (std::size_t j = 0; j < blocks.size(); ++j) products.push_back(cb1.interiors[j] * cb2.interiors[j]);
  const BraidWord i1 = cable(p, interiors_only(p, cb1.interiors));
  const BraidWord i2 = cable(p, interiors_only(p, cb2.interiors));
  report.add("kernel product", equal(i1 * i2, cable(p, interiors_only(p, products))));

  // After e1 the block at fat position f sits at pi(f); conjugating moves the
  // interior acting there back onto block f.
  const Permutation pi = permutation_image(cb1.exterior);
  std::vector<int> block_at(static_cast<std::size_t>(p.fat_strands()), -1);
  for (std::size_t j = 0; j < blocks.size(); ++j) block_at[static_cast<std::size_t>(p.block_positions()[j])] = static_cast<int>(j);
  std::vector<BraidWord> moved;
  for (std::size_t j = 0; j < blocks.size(); ++j) {
    const int src = block_at[static_cast<std::size_t>(pi(p.block_positions()[j]))];
    moved.push_back(cb2.interiors[static_cast<std::size_t>(src)]);
  }
  report.add("exterior action", equal(e1 * i2 * invert(e1), cable(p, interiors_only(p, moved))));

  const BraidWord full = cable(p, cb1);
  const bool stab = stabilizes(p, full);
  report.add("stabilizes", stab);
  report.add("block permutation", stab && block_permutation(p, full) == pi);
  return report;
}

FlattenedPatterns flatten_patterns(const CablePattern& outer, const std::vector<CablePattern>& inner) {
  require(inner.size() == outer.blocks().size(), "need one inner pattern per outer block");
  const int n = outer.strands();
  std::vector<RoundCurve> flat_blocks;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    const auto& b = outer.blocks()[j];
    require_same_strands(inner[j].strands(), b.punctures());
    for (const auto& c : inner[j].blocks()) flat_blocks.emplace_back(n, b.lo() + c.lo() - 1, b.lo() + c.hi() - 1);
  }
  CablePattern flat(n, std::move(flat_blocks));
  std::vector<RoundCurve> lifted_blocks;
  for (const auto& b : outer.blocks())
    lifted_blocks.emplace_back(flat.fat_strands(), flat.fat_of(b.lo()) + 1, flat.fat_of(b.hi()) + 1);
  CablePattern lifted(flat.fat_strands(), std::move(lifted_blocks));
  return FlattenedPatterns{std::move(flat), std::move(lifted)};
}

CheckReport check_flattened(const CablePattern& outer, const std::vector<CablePattern>& inner,
                            const BraidWord& outer_exterior, const std::vector<CabledBraid>& inner_braids) {
  require(inner_braids.size() == inner.size(), "need one inner cabled braid per inner pattern");
  CheckReport report;
  const auto [flat, lifted] = flatten_patterns(outer, inner);

  CabledBraid nested{outer_exterior, {}};
  CabledBraid lifted_cb{outer_exterior, {}};
  std::vector<BraidWord> leaves;
  for (std::size_t j = 0; j < inner.size(); ++j) {
    nested.interiors.push_back(cable(inner[j], inner_braids[j]));
    lifted_cb.interiors.push_back(inner_braids[j].exterior);
    leaves.insert(leaves.end(), inner_braids[j].interiors.begin(), inner_braids[j].interiors.end());
  }
  const BraidWord lhs = cable(outer, nested);
  const BraidWord flat_exterior = cable(lifted, lifted_cb);
  const bool labels_ok = validate_exterior(flat, flat_exterior);
  report.add("flat exterior preserves widths", labels_ok);
  if (!labels_ok) return report;
  report.add("nested equals flattened", equal(lhs, cable(flat, CabledBraid{flat_exterior, leaves})));
  return report;
}

std::string to_string(const CablePattern& p) {
  std::string out = "pattern(n=" + std::to_string(p.strands()) + ") blocks=[";
  for (std::size_t j = 0; j < p.blocks().size(); ++j) {
    if (j > 0) out += ", ";
    out += std::to_string(p.blocks()[j].lo()) + ".." + std::to_string(p.blocks()[j].hi());
  }
  return out + "]";
}

CablePattern parse_pattern(std::string_view text) {
  detail::Scanner in(text);
  in.expect("pattern(n=");
  const int n = in.read_small_int();
  in.expect(")");
  in.expect("blocks=[");
  std::vector<RoundCurve> blocks;
  if (!in.consume("]")) {
    do {
      const int lo = in.read_small_int();
      in.expect("..");
      const int hi = in.read_small_int();
      try {
        blocks.emplace_back(n, lo, hi);
      } catch (const PreconditionError& e) {
        in.fail(e.what());
      }
    } while (in.consume(","));
    in.expect("]");
  }
  if (!in.at_end()) in.fail("trailing input");
  try {
    return CablePattern(n, std::move(blocks));
  } catch (const Error& e) {
    throw ParseError(e.what());
  }
}

}  // namespace braidsym
