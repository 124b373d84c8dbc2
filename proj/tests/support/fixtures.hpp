#pragma once

// Instance generators and brute-force oracles shared by the unit tests and
// the acceptance runner. Oracles deliberately avoid the library's own
// predicates where a simple exact re-derivation exists.

#include <bimatch/gcg.hpp>
#include <bimatch/matching.hpp>
#include <bimatch/reconfig.hpp>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

namespace bmt {

using bimatch::BichromaticPointSet;
using bimatch::BRMatching;
using bimatch::Color;
using bimatch::FreeSegment;
using bimatch::Gcg;
using bimatch::Line;
using bimatch::Location;
using bimatch::MatchPair;
using bimatch::Point;
using bimatch::Pslg;
using bimatch::PslgEdge;
using bimatch::PslgVertex;
using bimatch::Scalar;

inline Point pt(long x, long y) { return Point{Scalar(x), Scalar(y)}; }

// ---------------------------------------------------------------------------
// exact primitives for oracles

inline int orient(const Point& a, const Point& b, const Point& c) {
  const Scalar d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return d > 0 ? 1 : (d < 0 ? -1 : 0);
}

inline bool between(const Point& a, const Point& b, const Point& p) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

// Closed segments [a,b] and [c,d] share at least one point.
inline bool closed_meet(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && between(a, b, c)) return true;
  if (o2 == 0 && between(a, b, d)) return true;
  if (o3 == 0 && between(c, d, a)) return true;
  if (o4 == 0 && between(c, d, b)) return true;
  return false;
}

// Interiors cross at a single point (no endpoint involved).
inline bool interiors_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const int o1 = orient(a, b, c), o2 = orient(a, b, d), o3 = orient(c, d, a), o4 = orient(c, d, b);
  return o1 * o2 < 0 && o3 * o4 < 0;
}

// Two segments that may share endpoints meet anywhere else.
inline bool meet_beyond_shared(const Point& a, const Point& b, const Point& c, const Point& d) {
  const bool share = a == c || a == d || b == c || b == d;
  if (!share) return closed_meet(a, b, c, d);
  if (orient(a, b, c) != 0 || orient(a, b, d) != 0) return false;
  // collinear with a shared endpoint: overlap iff they leave it the same way
  const Point& s = (a == c || a == d) ? a : b;
  const Point& p = s == a ? b : a;
  const Point& q = (s == c) ? d : c;
  return (p.x - s.x) * (q.x - s.x) + (p.y - s.y) * (q.y - s.y) > 0;
}

enum class Where { In, Out, On };

// Crossing-number test; exact.
inline Where point_vs_polygon(const std::vector<Point>& poly, const Point& p) {
  const std::size_t n = poly.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (orient(a, b, p) == 0 && between(a, b, p)) return Where::On;
    if ((a.y > p.y) != (b.y > p.y)) {
      const Scalar x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (x > p.x) inside = !inside;
    }
  }
  return inside ? Where::In : Where::Out;
}

// [p,q] stays in the closed polygon: no proper crossing with the boundary and
// every piece between boundary contacts has its midpoint inside or on it.
inline bool segment_inside(const std::vector<Point>& poly, const Point& p, const Point& q) {
  const std::size_t n = poly.size();
  std::vector<Scalar> cuts{Scalar(0), Scalar(1)};
  const Point d = q - p;
  const Scalar dd = d.x * d.x + d.y * d.y;
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (interiors_cross(p, q, a, b)) return false;
    if (orient(p, q, a) == 0 && between(p, q, a)) cuts.push_back(((a.x - p.x) * d.x + (a.y - p.y) * d.y) / dd);
  }
  std::sort(cuts.begin(), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i] == cuts[i + 1]) continue;
    const Scalar t = (cuts[i] + cuts[i + 1]) / 2;
    if (point_vs_polygon(poly, Point{p.x + t * d.x, p.y + t * d.y}) == Where::Out) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// random instances

// n reds and n blues with integer coordinates in [lo, hi], distinct x, no
// three collinear.
inline BichromaticPointSet random_instance(int n, std::mt19937& rng, long lo = 0, long hi = 100000) {
  std::uniform_int_distribution<long> d(lo, hi);
  for (;;) {
    std::vector<Point> reds, blues;
    std::set<long> xs;
    for (int i = 0; i < 2 * n; ++i) {
      long x;
      do x = d(rng);
      while (!xs.insert(x).second);
      (i < n ? reds : blues).push_back(pt(x, d(rng)));
    }
    try {
      return BichromaticPointSet(reds, blues);
    } catch (const bimatch::PreconditionError&) {
    }
  }
}

// Random permutation, then uncross pairs by swapping partners until no two
// segments cross (total length drops with every swap, so this ends).
inline BRMatching uncrossed_matching(const BichromaticPointSet& P, std::mt19937& rng) {
  const int n = static_cast<int>(P.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        if (closed_meet(P.red(i), P.blue(perm[i]), P.red(j), P.blue(perm[j]))) {
          std::swap(perm[i], perm[j]);
          changed = true;
        }
      }
    }
  }
  std::vector<MatchPair> pairs;
  for (int i = 0; i < n; ++i) pairs.push_back({i, perm[i]});
  return BRMatching(pairs);
}

// No two segments of M ∪ M2 share a point other than a common endpoint.
inline bool union_plane(const BichromaticPointSet& P, const BRMatching& M, const BRMatching& M2) {
  std::vector<MatchPair> all = M.pairs();
  all.insert(all.end(), M2.pairs().begin(), M2.pairs().end());
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      if (all[i] == all[j]) continue;
      if (meet_beyond_shared(P.red(all[i].red), P.blue(all[i].blue), P.red(all[j].red), P.blue(all[j].blue))) {
        return false;
      }
    }
  }
  return true;
}

// Every BR-matching by filtering all n! red-to-blue assignments.
inline std::set<BRMatching> permutation_oracle(const BichromaticPointSet& P) {
  const int n = static_cast<int>(P.n());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::set<BRMatching> out;
  do {
    std::vector<MatchPair> pairs;
    for (int i = 0; i < n; ++i) pairs.push_back({i, perm[i]});
    BRMatching m(pairs);
    if (union_plane(P, m, m)) out.insert(m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// ---------------------------------------------------------------------------
// cuts and the one-step contract

struct CrossingOracle {
  Scalar position;
  MatchPair pair;
  Color left;
};

// Segments of M crossing l, sorted along l.direction(), found by sign tests.
inline std::vector<CrossingOracle> crossings_oracle(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  std::vector<CrossingOracle> out;
  for (const MatchPair& p : M.pairs()) {
    const Point& r = P.red(p.red);
    const Point& b = P.blue(p.blue);
    const Scalar er = l.eval(r), eb = l.eval(b);
    if ((er < 0) == (eb < 0)) continue;
    const Point x = bimatch::lerp(r, b, er / (er - eb));
    out.push_back({-l.b() * x.x + l.a() * x.y, p, er < 0 ? Color::Red : Color::Blue});
  }
  std::sort(out.begin(), out.end(), [](const CrossingOracle& a, const CrossingOracle& b) { return a.position < b.position; });
  return out;
}

inline bool chromatic_oracle(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  const auto c = crossings_oracle(P, M, l);
  for (std::size_t i = 1; i < c.size(); ++i) {
    if (c[i].left != c[0].left) return true;
  }
  return false;
}

inline bool line_avoids(const BichromaticPointSet& P, const Line& l) {
  for (const Point& p : P.reds()) {
    if (l.eval(p) == 0) return false;
  }
  for (const Point& p : P.blues()) {
    if (l.eval(p) == 0) return false;
  }
  return true;
}

struct ChromaticInstance {
  BichromaticPointSet P;
  BRMatching M;
  Line l;
};

// Random instance, random plane matching and a random line through the
// middle of the box that is a chromatic cut of it.
inline ChromaticInstance random_chromatic(int n, std::mt19937& rng) {
  std::uniform_int_distribution<long> slope(-6, 6);
  std::uniform_int_distribution<long> off(-20000, 20000);
  for (;;) {
    const BichromaticPointSet P = random_instance(n, rng);
    const BRMatching M = uncrossed_matching(P, rng);
    for (int attempt = 0; attempt < 60; ++attempt) {
      long a = slope(rng), b = slope(rng);
      if (a == 0 && b == 0) continue;
      const Line l = Line::from_coefficients(a, b, -50000 * (a + b) + off(rng) * (std::abs(a) + std::abs(b)) / 4);
      if (line_avoids(P, l) && chromatic_oracle(P, M, l)) return {P, M, l};
    }
  }
}

// Clause-by-clause check of one reconfiguration step.
inline std::vector<std::string> contract_failures(const BichromaticPointSet& P, const BRMatching& M, const Line& l,
                                                  const bimatch::NextMatching& r) {
  std::vector<std::string> bad;
  const BRMatching& N = r.matching;
  const int n = static_cast<int>(P.n());
  std::set<int> reds, blues;
  for (const MatchPair& p : N.pairs()) {
    reds.insert(p.red);
    blues.insert(p.blue);
  }
  if (static_cast<int>(N.size()) != n || static_cast<int>(reds.size()) != n || static_cast<int>(blues.size()) != n) {
    bad.push_back("result is not a perfect matching");
  }
  if (!union_plane(P, N, N)) bad.push_back("result has crossing segments");
  if (!union_plane(P, M, N)) bad.push_back("result is not compatible with the input");
  const auto before = crossings_oracle(P, M, l);
  if (r.j < 1 || r.j > static_cast<int>(before.size())) {
    bad.push_back("j out of range");
    return bad;
  }
  const CrossingOracle& sj = before[static_cast<std::size_t>(r.j - 1)];
  if (!(sj.pair == r.dropped)) bad.push_back("reported s_j is not the j-th crossing");
  if (N.contains(sj.pair)) bad.push_back("s_j was kept");
  std::vector<MatchPair> want;
  for (int t = 0; t + 1 < r.j; ++t) {
    want.push_back(before[t].pair);
    if (!N.contains(before[t].pair)) bad.push_back("a segment below s_j was dropped");
  }
  std::vector<MatchPair> below;
  for (const CrossingOracle& c : crossings_oracle(P, N, l)) {
    if (c.position < sj.position) below.push_back(c.pair);
  }
  if (below != want) bad.push_back("a new crossing appeared below s_j");
  return bad;
}

// ---------------------------------------------------------------------------
// glue-cut graphs

// Invariant suite read straight off the face walks: reflex corners (turning
// right, or doubling back) sit on colored degree-1 vertices, and their colors
// alternate around each bounded face.
inline std::vector<std::string> gcg_oracle(const Pslg& g) {
  std::vector<std::string> bad;
  for (std::size_t f = 0; f < g.faces().size(); ++f) {
    const auto& face = g.faces()[f];
    if (!face.bounded) continue;
    std::vector<Color> seq;
    for (int h : face.half_edges) {
      const Point& u = g.point(g.origin(h));
      const Point& v = g.point(g.target(h));
      const Point& w = g.point(g.target(g.next(h)));
      if (!(u == w || orient(u, v, w) < 0)) continue;
      const int id = g.target(h);
      if (g.neighbors(id).size() != 1) bad.push_back("reflex vertex of degree " + std::to_string(g.degree(id)));
      if (!g.vertex(id).color) {
        bad.push_back("uncolored reflex vertex");
        continue;
      }
      seq.push_back(*g.vertex(id).color);
    }
    if (seq.size() % 2 != 0) bad.push_back("odd reflex count " + std::to_string(seq.size()));
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == seq[(i + 1) % seq.size()]) {
        bad.push_back("equal consecutive reflex colors");
        break;
      }
    }
  }
  return bad;
}

inline Gcg polygon_gcg(const std::vector<Point>& poly) {
  std::vector<PslgVertex> vs;
  std::vector<PslgEdge> es;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    vs.push_back(PslgVertex{poly[i], std::nullopt, -1});
    es.push_back(PslgEdge{static_cast<int>(i), static_cast<int>((i + 1) % poly.size())});
  }
  return Gcg(bimatch::build_pslg(vs, es));
}

inline std::vector<FreeSegment> free_segments(const BichromaticPointSet& P, const BRMatching& M) {
  std::vector<FreeSegment> out;
  for (const MatchPair& p : M.pairs()) out.push_back(FreeSegment{P.red(p.red), P.blue(p.blue), p.red, p.blue});
  return out;
}

// Non-reflex boundary points: vertices plus one random interior point per edge.
inline std::vector<Location> boundary_candidates(const Pslg& g, std::mt19937& rng) {
  std::vector<Location> out;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (!bimatch::is_reflex_vertex(g, v)) out.push_back(Location::vertex(g, v));
  }
  std::uniform_int_distribution<int> t(1, 7);
  for (int e = 0; e < g.num_edges(); ++e) {
    const PslgEdge& ed = g.edges()[e];
    out.push_back(Location::on_edge(e, bimatch::lerp(g.point(ed.u), g.point(ed.v), bimatch::ratio(t(rng), 8))));
  }
  return out;
}

// A square enclosing random free segments, grown by random valid glue/cut
// operations. `on_step` sees every intermediate graph.
struct GrownGcg {
  Gcg G;
  std::vector<FreeSegment> free;
  int operations = 0;
  int glues = 0;
  int cuts = 0;
};

inline GrownGcg grow_gcg(std::mt19937& rng, int segments, int operations,
                         const std::function<void(const Gcg&, const std::vector<FreeSegment>&)>& on_step = {}) {
  const BichromaticPointSet P = random_instance(segments, rng, 50, 950);
  GrownGcg out{polygon_gcg({pt(0, 0), pt(1000, 0), pt(1000, 1000), pt(0, 1000)}),
               free_segments(P, uncrossed_matching(P, rng))};
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<int> t(1, 9);
  for (int attempt = 0; out.operations < operations && attempt < 40 * operations; ++attempt) {
    const Pslg& g = out.G.graph();
    std::vector<Location> bd = boundary_candidates(g, rng);
    std::uniform_int_distribution<std::size_t> pick(0, bd.size() - 1);
    const bool glue = !out.free.empty() && coin(rng) == 0;
    if (glue) {
      std::uniform_int_distribution<std::size_t> ps(0, out.free.size() - 1);
      const std::size_t s = ps(rng);
      const Location z =
          Location::on_segment(static_cast<int>(s), bimatch::lerp(out.free[s].red, out.free[s].blue, bimatch::ratio(t(rng), 10)));
      const Location z2 = bd[pick(rng)];
      if (!bimatch::color_visible(g, out.free, z, z2)) continue;
      out.G = bimatch::glue(out.G, out.free, z, z2);
      out.free.erase(out.free.begin() + static_cast<std::ptrdiff_t>(s));
      ++out.glues;
    } else {
      const Location a = bd[pick(rng)];
      const Location b = bd[pick(rng)];
      if (a.p == b.p || !bimatch::color_visible(g, out.free, a, b)) continue;
      out.G = bimatch::cut(out.G, out.free, a, b);
      ++out.cuts;
    }
    ++out.operations;
    if (on_step) on_step(out.G, out.free);
  }
  return out;
}

// ---------------------------------------------------------------------------
// reflex matching oracle

// Lexicographically least (as a sorted pair list) perfect bichromatic
// matching of the flagged polygon vertices whose segments lie in the closed
// polygon and pairwise share no point; nullopt if none exists.
inline std::optional<std::vector<std::pair<int, int>>> reflex_oracle(const std::vector<Point>& poly,
                                                                     const std::vector<int>& flagged,
                                                                     const std::vector<Color>& colors) {
  const std::size_t m = flagged.size();
  std::optional<std::vector<std::pair<int, int>>> best;
  std::vector<bool> used(m, false);
  std::vector<std::pair<int, int>> cur;
  std::function<void()> rec = [&] {
    std::size_t i = 0;
    while (i < m && used[i]) ++i;
    if (i == m) {
      auto sorted = cur;
      std::sort(sorted.begin(), sorted.end());
      if (!best || sorted < *best) best = sorted;
      return;
    }
    used[i] = true;
    for (std::size_t k = i + 1; k < m; ++k) {
      if (used[k] || colors[i] == colors[k]) continue;
      const Point& a = poly[flagged[i]];
      const Point& b = poly[flagged[k]];
      if (!segment_inside(poly, a, b)) continue;
      bool clash = false;
      for (const auto& [u, v] : cur) clash = clash || closed_meet(a, b, poly[u], poly[v]);
      if (clash) continue;
      used[k] = true;
      cur.emplace_back(flagged[i], flagged[k]);
      rec();
      cur.pop_back();
      used[k] = false;
    }
    used[i] = false;
  };
  rec();
  return best;
}

}  // namespace bmt
