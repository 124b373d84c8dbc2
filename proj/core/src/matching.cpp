#include "bimatch/matching.hpp"

#include <algorithm>

namespace bimatch {

BichromaticPointSet::BichromaticPointSet(std::vector<Point> reds, std::vector<Point> blues)
    : reds_(std::move(reds)), blues_(std::move(blues)) {
  if (reds_.empty() || reds_.size() != blues_.size()) {
    throw PreconditionError("unbalanced colors: " + std::to_string(reds_.size()) + " red vs " +
                            std::to_string(blues_.size()) + " blue points");
  }
  std::vector<Point> all = reds_;
  all.insert(all.end(), blues_.begin(), blues_.end());
  if (!check_general_position(std::span<const Point>(all))) {
    throw PreconditionError("points are not in general position (collinear triple or repeated x)");
  }
}

BichromaticPointSet BichromaticPointSet::from_colored(const std::vector<ColoredPoint>& points) {
  std::vector<Point> reds, blues;
  for (const ColoredPoint& cp : points) (cp.color() == Color::Red ? reds : blues).push_back(cp.point());
  return BichromaticPointSet(std::move(reds), std::move(blues));
}

std::vector<ColoredPoint> BichromaticPointSet::colored_points() const {
  std::vector<ColoredPoint> out;
  for (const Point& p : reds_) out.emplace_back(p, Color::Red);
  for (const Point& p : blues_) out.emplace_back(p, Color::Blue);
  return out;
}

BichromaticPointSet BichromaticPointSet::subset(const std::vector<int>& red_ids,
                                                const std::vector<int>& blue_ids) const {
  std::vector<Point> r, b;
  for (int i : red_ids) r.push_back(red(i));
  for (int i : blue_ids) b.push_back(blue(i));
  return BichromaticPointSet(std::move(r), std::move(b));
}

BRMatching::BRMatching(std::vector<MatchPair> pairs) : pairs_(std::move(pairs)) {
  std::sort(pairs_.begin(), pairs_.end());
}

bool BRMatching::contains(const MatchPair& p) const {
  return std::binary_search(pairs_.begin(), pairs_.end(), p);
}

std::optional<int> BRMatching::blue_of(int red) const {
  for (const MatchPair& p : pairs_) {
    if (p.red == red) return p.blue;
  }
  return std::nullopt;
}

std::string to_string(const BRMatching& m) {
  std::string s = "{";
  for (std::size_t i = 0; i < m.pairs().size(); ++i) {
    if (i) s += ", ";
    s += "r" + std::to_string(m.pairs()[i].red) + "-b" + std::to_string(m.pairs()[i].blue);
  }
  return s + "}";
}

Segment segment_of(const BichromaticPointSet& P, const MatchPair& pair) {
  return Segment(P.red(pair.red), P.blue(pair.blue));
}

std::optional<MatchingViolation> validate_matching(const BichromaticPointSet& P, const BRMatching& M) {
  const int n = static_cast<int>(P.n());
  for (const MatchPair& p : M.pairs()) {
    if (p.red < 0 || p.red >= n || p.blue < 0 || p.blue >= n) {
      throw InvalidMatchingError("index out of range in pair r" + std::to_string(p.red) + "-b" +
                                 std::to_string(p.blue) + " (n = " + std::to_string(n) + ")");
    }
  }
  std::vector<int> red_use(n, -1), blue_use(n, -1);
  const auto& pairs = M.pairs();
  for (int k = 0; k < static_cast<int>(pairs.size()); ++k) {
    const MatchPair& p = pairs[k];
    if (red_use[p.red] >= 0) {
      return MatchingViolation{MatchingViolation::Kind::NotPerfect,
                               "red " + std::to_string(p.red) + " used twice",
                               {pairs[red_use[p.red]], p}};
    }
    if (blue_use[p.blue] >= 0) {
      return MatchingViolation{MatchingViolation::Kind::NotPerfect,
                               "blue " + std::to_string(p.blue) + " used twice",
                               {pairs[blue_use[p.blue]], p}};
    }
    red_use[p.red] = k;
    blue_use[p.blue] = k;
  }
  if (static_cast<int>(pairs.size()) != n) {
    return MatchingViolation{MatchingViolation::Kind::NotPerfect,
                             "matching has " + std::to_string(pairs.size()) + " pairs, expected " +
                                 std::to_string(n),
                             {}};
  }
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    for (std::size_t j = i + 1; j < pairs.size(); ++j) {
      if (segments_properly_cross(segment_of(P, pairs[i]), segment_of(P, pairs[j]))) {
        return MatchingViolation{MatchingViolation::Kind::Crossing,
                                 "segments r" + std::to_string(pairs[i].red) + "-b" +
                                     std::to_string(pairs[i].blue) + " and r" +
                                     std::to_string(pairs[j].red) + "-b" + std::to_string(pairs[j].blue) +
                                     " cross",
                                 {pairs[i], pairs[j]}};
      }
    }
  }
  return std::nullopt;
}

void require_valid(const BichromaticPointSet& P, const BRMatching& M) {
  if (auto v = validate_matching(P, M)) throw InvalidMatchingError(v->message);
}

bool compatible(const BichromaticPointSet& P, const BRMatching& M, const BRMatching& M2) {
  require_valid(P, M);
  require_valid(P, M2);
  for (const MatchPair& p : M.pairs()) {
    const Segment s = segment_of(P, p);
    for (const MatchPair& q : M2.pairs()) {
      if (p == q) continue;
      if (segments_properly_cross(s, segment_of(P, q))) return false;
    }
  }
  return true;
}

void require_line_avoids_points(const BichromaticPointSet& P, const Line& l) {
  for (const Point& p : P.reds()) {
    if (line_side(l, p) == Side::On) throw PreconditionError("cut line passes through red point " + to_string(p));
  }
  for (const Point& p : P.blues()) {
    if (line_side(l, p) == Side::On) throw PreconditionError("cut line passes through blue point " + to_string(p));
  }
}

namespace {

void sort_along(std::vector<Crossing>& list, const Line& l) {
  std::sort(list.begin(), list.end(), [&](const Crossing& a, const Crossing& b) {
    return l.position(a.at) < l.position(b.at);
  });
  for (std::size_t i = 0; i + 1 < list.size(); ++i) {
    if (list[i].at == list[i + 1].at) {
      throw InternalError("two segments cross the cut at the same point");
    }
  }
}

}  // namespace

CrossingList crossing_list(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  require_line_avoids_points(P, l);
  CrossingList out;
  for (const MatchPair& p : M.pairs()) {
    if (auto x = segment_line_intersection(segment_of(P, p), l)) out.push_back({p, *x});
  }
  sort_along(out, l);
  return out;
}

Color left_color(const BichromaticPointSet& P, const MatchPair& pair, const Line& l) {
  return line_side(l, P.red(pair.red)) == Side::Negative ? Color::Red : Color::Blue;
}

bool is_chromatic_cut(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  const CrossingList s = crossing_list(P, M, l);
  if (s.size() < 2) return false;
  const Color first = left_color(P, s.front().pair, l);
  return std::any_of(s.begin(), s.end(), [&](const Crossing& c) { return left_color(P, c.pair, l) != first; });
}

std::vector<Crossing> crossing_candidates(const BichromaticPointSet& P, const Line& l) {
  require_line_avoids_points(P, l);
  std::vector<Crossing> out;
  const int n = static_cast<int>(P.n());
  for (int r = 0; r < n; ++r) {
    for (int b = 0; b < n; ++b) {
      if (auto x = segment_line_intersection(Segment(P.red(r), P.blue(b)), l)) out.push_back({{r, b}, *x});
    }
  }
  sort_along(out, l);
  return out;
}

std::size_t ChiMeasure::popcount() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), true));
}

std::string ChiMeasure::to_string() const {
  std::string s;
  for (bool b : bits_) s += b ? '1' : '0';
  return s;
}

std::strong_ordering operator<=>(const ChiMeasure& a, const ChiMeasure& b) {
  // Equal-length vectors over the same C_P; leading bit is most significant.
  if (a.bits_.size() != b.bits_.size()) return a.bits_.size() <=> b.bits_.size();
  for (std::size_t i = 0; i < a.bits_.size(); ++i) {
    if (a.bits_[i] != b.bits_[i]) return a.bits_[i] ? std::strong_ordering::greater : std::strong_ordering::less;
  }
  return std::strong_ordering::equal;
}

ChiMeasure chi(const BichromaticPointSet& P, const Line& l, const BRMatching& M) {
  const std::vector<Crossing> cp = crossing_candidates(P, l);
  std::vector<bool> bits;
  bits.reserve(cp.size());
  for (const Crossing& z : cp) bits.push_back(M.contains(z.pair));
  return ChiMeasure(std::move(bits));
}

}  // namespace bimatch
