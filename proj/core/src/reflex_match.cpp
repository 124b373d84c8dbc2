#include "bimatch/reflex_match.hpp"

#include <algorithm>

namespace bimatch {

std::vector<ReflexSegment> match_reflex_in_polygon(const ReflexPolygonInstance& inst) {
  const std::size_t nv = inst.polygon.size();
  if (inst.reflex.size() != nv) throw PreconditionError("reflex flags do not match the polygon size");
  std::vector<int> r;
  for (std::size_t i = 0; i < nv; ++i) {
    if (inst.reflex[i]) r.push_back(static_cast<int>(i));
  }
  const int m = static_cast<int>(r.size());
  if (m % 2 != 0) throw PreconditionError("odd number of reflex vertices (" + std::to_string(m) + ")");
  if (m == 0) return {};

  std::vector<char> sees(static_cast<std::size_t>(m * m), 0);
  for (int i = 0; i < m; ++i) {
    for (int k = i + 1; k < m; k += 2) {
      sees[i * m + k] = segment_in_closed_polygon(inst.polygon, inst.polygon[r[i]], inst.polygon[r[k]]) ? 1 : 0;
    }
  }

  // ok(i, j): the reflex run i..j (inclusive) has a non-crossing matching.
  std::vector<signed char> memo(static_cast<std::size_t>(m * m), -1);
  auto ok = [&](auto&& self, int i, int j) -> bool {
    if (i > j) return true;
    signed char& cell = memo[i * m + j];
    if (cell >= 0) return cell != 0;
    bool res = false;
    for (int k = i + 1; k <= j && !res; k += 2) {
      res = sees[i * m + k] && self(self, i + 1, k - 1) && self(self, k + 1, j);
    }
    cell = res ? 1 : 0;
    return res;
  };
  if (!ok(ok, 0, m - 1)) throw InternalError("no planar matching of the reflex vertices inside the polygon");

  std::vector<ReflexSegment> out;
  std::vector<std::pair<int, int>> todo{{0, m - 1}};
  while (!todo.empty()) {
    auto [i, j] = todo.back();
    todo.pop_back();
    if (i > j) continue;
    for (int k = i + 1; k <= j; k += 2) {
      if (sees[i * m + k] && ok(ok, i + 1, k - 1) && ok(ok, k + 1, j)) {
        out.push_back({r[i], r[k]});
        todo.push_back({k + 1, j});
        todo.push_back({i + 1, k - 1});
        break;
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ReflexPair> match_reflex_in_gcg(const Gcg& G) {
  const Pslg& g = G.graph();
  const Simplification s = simplify(g);
  std::vector<ReflexPair> out;
  for (const FacePolygon& fp : s.polygons) {
    ReflexPolygonInstance inst;
    inst.polygon = fp.polygon;
    for (int src : fp.source) {
      inst.reflex.push_back(src >= 0);
      inst.colors.push_back(src >= 0 ? g.vertex(src).color : std::nullopt);
    }
    for (const ReflexSegment& seg : match_reflex_in_polygon(inst)) {
      const int a = fp.source[seg.a];
      const int b = fp.source[seg.b];
      const auto ca = g.vertex(a).color;
      const auto cb = g.vertex(b).color;
      if (!ca || !cb || *ca == *cb) {
        throw InternalError("reflex matching paired " + to_string(g.point(a)) + " with a vertex of the same color");
      }
      out.push_back(*ca == Color::Red ? ReflexPair{a, b} : ReflexPair{b, a});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bimatch
