#include "bimatch/hamsandwich.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace bimatch {

namespace {

Scalar abs_of(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }

std::vector<Point> all_points(const BichromaticPointSet& P) {
  std::vector<Point> pts = P.reds();
  pts.insert(pts.end(), P.blues().begin(), P.blues().end());
  return pts;
}

// Crossing points of pairs of bichromatic segments whose interiors cross.
std::vector<Point> bichromatic_crossings(const BichromaticPointSet& P) {
  std::vector<Segment> segs;
  const int n = static_cast<int>(P.n());
  for (int r = 0; r < n; ++r) {
    for (int b = 0; b < n; ++b) segs.emplace_back(P.red(r), P.blue(b));
  }
  std::vector<Point> out;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (!segments_properly_cross(segs[i], segs[j])) continue;
      if (auto x = line_line_intersection(segs[i].a, segs[i].b, segs[j].a, segs[j].b)) out.push_back(*x);
    }
  }
  return out;
}

}  // namespace

std::optional<SideCounts> side_counts(const BichromaticPointSet& P, const Line& l) {
  SideCounts c;
  for (const Point& p : P.reds()) {
    switch (line_side(l, p)) {
      case Side::Positive: ++c.red_pos; break;
      case Side::Negative: ++c.red_neg; break;
      case Side::On: return std::nullopt;
    }
  }
  for (const Point& p : P.blues()) {
    switch (line_side(l, p)) {
      case Side::Positive: ++c.blue_pos; break;
      case Side::Negative: ++c.blue_neg; break;
      case Side::On: return std::nullopt;
    }
  }
  return c;
}

bool is_ham_sandwich_cut(const BichromaticPointSet& P, const Line& l) {
  const auto c = side_counts(P, l);
  if (!c) return false;
  const int half = static_cast<int>(P.n() / 2);
  return (c->blue_pos == half && c->red_pos == half) || (c->blue_neg == half && c->red_neg == half);
}

std::vector<Line> ham_sandwich_cut_candidates(const BichromaticPointSet& P) {
  const std::vector<Point> pts = all_points(P);
  std::set<Line> candidates;

  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Point& p = pts[i];
      const Point& q = pts[j];
      const Line base = Line::through(p, q);
      const Point pq = q - p;
      const Point m = midpoint(p, q);

      // Smallest |value| of a non-incident point bounds both perturbations.
      std::optional<Scalar> min_val;
      Scalar max_g = 0;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == i || k == j) continue;
        Scalar v = abs_of(base.eval(pts[k]));
        if (!min_val || v < *min_val) min_val = v;
        Scalar g = abs_of(dot(pts[k] - m, pq));
        if (g > max_g) max_g = g;
      }
      const Scalar delta = min_val ? Scalar(*min_val / 2) : Scalar(1);
      candidates.insert(base.translated(delta));
      candidates.insert(base.translated(-delta));

      const Scalar tau = (min_val && max_g > 0) ? Scalar(*min_val / (2 * max_g)) : Scalar(1);
      for (int sign : {1, -1}) {
        const Scalar t = sign * tau;
        candidates.insert(Line::from_coefficients(base.a() + t * pq.x, base.b() + t * pq.y,
                                                  base.c() - t * dot(m, pq)));
      }
    }
  }

  std::vector<Scalar> xs;
  for (const Point& p : pts) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  candidates.insert(Line::vertical(xs.front() - 1));
  candidates.insert(Line::vertical(xs.back() + 1));
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) candidates.insert(Line::vertical((xs[i] + xs[i + 1]) / 2));

  std::vector<Line> out;
  for (const Line& l : candidates) {
    if (is_ham_sandwich_cut(P, l)) out.push_back(l);
  }
  return out;
}

HamSandwichCut find_ham_sandwich_cut(const BichromaticPointSet& P) {
  const std::vector<Line> valid = ham_sandwich_cut_candidates(P);
  if (valid.empty()) throw InternalError("no ham-sandwich cut found among candidates");
  const std::vector<Point> crossings = bichromatic_crossings(P);
  auto avoids = [&](const Line& l) {
    return std::none_of(crossings.begin(), crossings.end(), [&](const Point& x) { return line_side(l, x) == Side::On; });
  };
  for (const Line& l : valid) {
    if (avoids(l)) return HamSandwichCut{l, *side_counts(P, l)};
  }
  // Every candidate meets a crossing. A shift smaller than the nearest point
  // keeps the counts, and one of |crossings| + 1 distinct shifts is clear.
  const std::vector<Point> pts = all_points(P);
  for (const Line& l : valid) {
    Scalar nearest = abs_of(l.eval(pts.front()));
    for (const Point& p : pts) nearest = std::min(nearest, abs_of(l.eval(p)));
    const long steps = static_cast<long>(crossings.size()) + 2;
    for (long k = 1; k < steps; ++k) {
      const Line shifted = l.translated(nearest * ratio(k, steps));
      if (avoids(shifted) && is_ham_sandwich_cut(P, shifted)) return HamSandwichCut{shifted, *side_counts(P, shifted)};
    }
  }
  throw InternalError("no ham-sandwich cut found among candidates");
}

int CutTree::add(CutNode node) {
  nodes_.push_back(std::move(node));
  return static_cast<int>(nodes_.size()) - 1;
}

int CutTree::depth() const {
  std::function<int(int)> rec = [&](int id) -> int {
    const CutNode& nd = node(id);
    if (nd.is_leaf()) return 0;
    return 1 + std::max(rec(nd.positive), rec(nd.negative));
  };
  return nodes_.empty() ? 0 : rec(0);
}

HamSandwichMatching ham_sandwich_matching(const BichromaticPointSet& P) {
  HamSandwichMatching out;
  std::vector<MatchPair> pairs;

  std::function<int(std::vector<int>, std::vector<int>)> build = [&](std::vector<int> reds,
                                                                      std::vector<int> blues) -> int {
    const int id = out.tree.add(CutNode{reds, blues, std::nullopt, -1, -1});
    if (reds.size() == 1) {
      pairs.push_back({reds[0], blues[0]});
      return id;
    }
    const BichromaticPointSet sub = P.subset(reds, blues);
    HamSandwichCut cut = find_ham_sandwich_cut(sub);
    std::vector<int> rp, rn, bp, bn;
    for (int r : reds) (line_side(cut.line, P.red(r)) == Side::Positive ? rp : rn).push_back(r);
    for (int b : blues) (line_side(cut.line, P.blue(b)) == Side::Positive ? bp : bn).push_back(b);
    const int pos = build(std::move(rp), std::move(bp));
    const int neg = build(std::move(rn), std::move(bn));
    CutNode& node = out.tree.mutable_node(id);
    node.cut = std::move(cut);
    node.positive = pos;
    node.negative = neg;
    return id;
  };

  build([&] {
    std::vector<int> v(P.n());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
  }(), [&] {
    std::vector<int> v(P.n());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
    return v;
  }());
  out.matching = BRMatching(std::move(pairs));
  return out;
}

}  // namespace bimatch
