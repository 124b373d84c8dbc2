#include "bimatch/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <string>

namespace bimatch {

int enumeration_cap() {
  if (const char* env = std::getenv("BIMATCH_ENUM_CAP")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  return kDefaultEnumerationCap;
}

std::vector<BRMatching> enumerate_matchings(const BichromaticPointSet& P, std::optional<int> cap) {
  const int n = static_cast<int>(P.n());
  const int limit = cap ? *cap : enumeration_cap();
  if (n > limit) {
    throw CapExceededError("enumeration of n = " + std::to_string(n) + " exceeds the cap of " + std::to_string(limit));
  }
  std::vector<int> reds(n);
  std::iota(reds.begin(), reds.end(), 0);
  std::sort(reds.begin(), reds.end(), [&](int a, int b) { return P.red(a).x < P.red(b).x; });

  std::vector<BRMatching> out;
  std::vector<MatchPair> chosen;
  std::vector<bool> used(n, false);
  auto rec = [&](auto&& self, int depth) -> void {
    if (depth == n) {
      out.emplace_back(chosen);
      return;
    }
    const int r = reds[depth];
    for (int b = 0; b < n; ++b) {
      if (used[b]) continue;
      const Segment s(P.red(r), P.blue(b));
      const bool crosses = std::any_of(chosen.begin(), chosen.end(), [&](const MatchPair& c) {
        return segments_properly_cross(s, segment_of(P, c));
      });
      if (crosses) continue;
      used[b] = true;
      chosen.push_back({r, b});
      self(self, depth + 1);
      chosen.pop_back();
      used[b] = false;
    }
  };
  rec(rec, 0);
  return out;
}

std::optional<int> CompatibleGraph::index_of(const BRMatching& m) const {
  const auto it = std::find(nodes.begin(), nodes.end(), m);
  if (it == nodes.end()) return std::nullopt;
  return static_cast<int>(it - nodes.begin());
}

std::size_t CompatibleGraph::num_edges() const {
  std::size_t deg = 0;
  for (const auto& a : adjacency) deg += a.size();
  return deg / 2;
}

CompatibleGraph build_graph(const BichromaticPointSet& P, std::optional<int> cap) {
  CompatibleGraph g;
  g.nodes = enumerate_matchings(P, cap);
  const std::size_t N = g.nodes.size();
  g.adjacency.assign(N, {});
  for (std::size_t a = 0; a < N; ++a) {
    for (std::size_t b = a + 1; b < N; ++b) {
      if (compatible(P, g.nodes[a], g.nodes[b])) {
        g.adjacency[a].push_back(static_cast<int>(b));
        g.adjacency[b].push_back(static_cast<int>(a));
      }
    }
  }
  return g;
}

std::vector<int> distances_from(const CompatibleGraph& g, int u) {
  std::vector<int> dist(g.nodes.size(), -1);
  std::deque<int> queue{u};
  dist.at(static_cast<std::size_t>(u)) = 0;
  while (!queue.empty()) {
    const int v = queue.front();
    queue.pop_front();
    for (int w : g.adjacency[v]) {
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<int> distance(const CompatibleGraph& g, int u, int v) {
  const int d = distances_from(g, u).at(static_cast<std::size_t>(v));
  if (d < 0) return std::nullopt;
  return d;
}

GraphAnalysis analyze(const CompatibleGraph& g) {
  if (g.nodes.empty()) return {true, 0};
  int diameter = 0;
  for (int u = 0; u < static_cast<int>(g.nodes.size()); ++u) {
    const std::vector<int> dist = distances_from(g, u);
    for (int d : dist) {
      if (d < 0) return {false, std::nullopt};
      diameter = std::max(diameter, d);
    }
  }
  return {true, diameter};
}

namespace {

// Point on the unit circle with half-angle tangent t.
Point circle_point(const Scalar& t) {
  const Scalar d = 1 + t * t;
  return {(1 - t * t) / d, 2 * t / d};
}

}  // namespace

LowerBoundInstance lower_bound_instance(int n) {
  if (n < 1) throw PreconditionError("lower bound instance needs n >= 1");
  const int m = 4 * n;
  const double pi = std::acos(-1.0);
  // Tilt by 0.3 of a step keeps x-coordinates distinct and avoids angle pi.
  std::vector<Point> pts;
  for (int k = 0; k < m; ++k) {
    const double theta = 2 * pi * (k + 0.3) / m;
    const double t = std::tan(theta / 2);
    const Scalar q = ratio(static_cast<long>(std::llround(t * 1000000)), 1000000);
    pts.push_back(circle_point(q));
  }
  auto arc = [&](int a, int i) { return pts[static_cast<std::size_t>(a * n + i)]; };
  std::vector<Point> blues, reds;
  for (int a : {0, 2}) {
    for (int i = 0; i < n; ++i) blues.push_back(arc(a, i));
  }
  for (int a : {1, 3}) {
    for (int i = 0; i < n; ++i) reds.push_back(arc(a, i));
  }
  // Index of arc point (a, i) among its color class.
  auto blue_id = [&](int a, int i) { return (a == 0 ? 0 : n) + i; };
  auto red_id = [&](int a, int i) { return (a == 1 ? 0 : n) + i; };

  std::vector<MatchPair> m1, m2;
  for (int i = 0; i < n; ++i) {
    // Last of one arc with first of the next, nesting outward.
    m1.push_back({red_id(1, i), blue_id(0, n - 1 - i)});
    m1.push_back({red_id(3, n - 1 - i), blue_id(2, i)});
    m2.push_back({red_id(1, n - 1 - i), blue_id(2, i)});
    // P3 wraps around to P0.
    m2.push_back({red_id(3, n - 1 - i), blue_id(0, i)});
  }
  LowerBoundInstance out{BichromaticPointSet(std::move(reds), std::move(blues)), BRMatching(std::move(m1)),
                         BRMatching(std::move(m2))};
  require_valid(out.P, out.M);
  require_valid(out.P, out.M2);
  return out;
}

}  // namespace bimatch
