#include "bimatch/gcg.hpp"

#include <algorithm>

namespace bimatch {

namespace {

Scalar abs_of(const Scalar& s) { return s < 0 ? Scalar(-s) : s; }
Scalar max_norm(const Point& p) { return std::max(abs_of(p.x), abs_of(p.y)); }

Point edge_point(const Pslg& g, int e, bool second) {
  return g.point(second ? g.edges()[e].v : g.edges()[e].u);
}

std::optional<Color> vertex_color(const Pslg& g, int v) { return g.vertex(v).color; }

ViewColor from_color(Color c) { return c == Color::Red ? ViewColor::Red : ViewColor::Blue; }

ViewColor reflex_color(const Pslg& g, int v) {
  const auto c = vertex_color(g, v);
  if (!c) throw PreconditionError("reflex vertex " + to_string(g.point(v)) + " has no color");
  return from_color(*c);
}

// Walks the face forward from corner (h, next(h)) and returns the color of the
// first reflex vertex, including target(h) itself.
ViewColor first_reflex_color(const Pslg& g, int h) {
  const std::size_t len = g.face(g.face_of(h)).half_edges.size();
  for (std::size_t step = 0; step < len; ++step) {
    if (g.corner_is_reflex(h)) return reflex_color(g, g.target(h));
    h = g.next(h);
  }
  return ViewColor::Wildcard;
}

void require_boundary(const Pslg& g, const Location& x) {
  if (x.kind == Location::Kind::Vertex) {
    if (x.id < 0 || x.id >= g.num_vertices() || g.point(x.id) != x.p) {
      throw PreconditionError("location does not name a vertex at " + to_string(x.p));
    }
  } else if (x.kind == Location::Kind::Edge) {
    if (x.id < 0 || x.id >= g.num_edges() ||
        !in_segment_interior(x.p, edge_point(g, x.id, false), edge_point(g, x.id, true))) {
      throw PreconditionError("location " + to_string(x.p) + " is not inside the named edge");
    }
  } else {
    throw PreconditionError("expected a boundary location, got a point on a free segment");
  }
}

void require_segment(std::span<const FreeSegment> free, const Location& z) {
  if (z.kind != Location::Kind::Segment) throw PreconditionError("expected a point on a free segment");
  if (z.id < 0 || z.id >= static_cast<int>(free.size()) ||
      !in_segment_interior(z.p, free[z.id].red, free[z.id].blue)) {
    throw PreconditionError("location " + to_string(z.p) + " is not inside the named free segment");
  }
}

void require_not_reflex(const Pslg& g, const Location& x) {
  if (x.kind == Location::Kind::Vertex && is_reflex_vertex(g, x.id)) {
    throw PreconditionError("attachment point " + to_string(x.p) + " is a reflex vertex");
  }
}

Gcg checked_result(Pslg g, const char* op) {
  const auto bad = gcg_violations(g);
  if (!bad.empty()) throw InternalError(std::string(op) + " produced an invalid graph: " + bad.front());
  return trusted_gcg(std::move(g));
}

// Strict transversal crossing: each segment has the other's endpoints
// strictly on opposite sides.
bool transversal_cross(const Point& p, const Point& q, const Point& a, const Point& b) {
  const auto o1 = orientation(p, q, a);
  const auto o2 = orientation(p, q, b);
  const auto o3 = orientation(a, b, p);
  const auto o4 = orientation(a, b, q);
  return o1 != Orientation::Collinear && o2 != Orientation::Collinear && o1 != o2 &&
         o3 != Orientation::Collinear && o4 != Orientation::Collinear && o3 != o4;
}

// Clips [p,q] to the closed counterclockwise triangle; nullopt if disjoint.
std::optional<std::pair<Point, Point>> clip_to_triangle(const Point& p, const Point& q, const Point (&tri)[3]) {
  Scalar t0 = 0, t1 = 1;
  for (int j = 0; j < 3; ++j) {
    const Point& u = tri[j];
    const Point edge = tri[(j + 1) % 3] - u;
    const Scalar fp = cross(edge, p - u);
    const Scalar fq = cross(edge, q - u);
    if (fp < 0 && fq < 0) return std::nullopt;
    if (fp >= 0 && fq >= 0) continue;
    const Scalar t = fp / (fp - fq);
    if (fp < 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
  }
  if (t0 > t1) return std::nullopt;
  return std::make_pair(lerp(p, q, t0), lerp(p, q, t1));
}

struct Corner {
  int vertex;
  Point at;
  bool reflex;
};

std::optional<Simplification> try_simplify(const Pslg& g, const Scalar& eps) {
  Simplification out;
  out.epsilon = eps;
  for (int f : g.bounded_faces()) {
    FacePolygon poly;
    poly.face = f;
    for (int h : g.face(f).half_edges) {
      const int v = g.target(h);
      const Point& pu = g.point(g.origin(h));
      const Point& pv = g.point(v);
      const Point& pw = g.point(g.target(g.next(h)));
      if (g.corner_is_reflex(h)) {
        poly.polygon.push_back(pv);
        poly.source.push_back(v);
      } else if (!g.corner_is_collinear(h)) {
        const Point du = pu - pv;
        const Point dw = pw - pv;
        const Point d = (Scalar(1) / max_norm(du)) * du + (Scalar(1) / max_norm(dw)) * dw;
        poly.polygon.push_back(pv + eps * d);
        poly.source.push_back(-1);
      }
    }
    const std::vector<Point>& pts = poly.polygon;
    const std::size_t k = pts.size();
    if (k < 3 || !is_simple_polygon(pts) || signed_area2(pts) <= 0) return std::nullopt;
    for (std::size_t t = 0; t < k; ++t) {
      const auto o = orientation(pts[(t + k - 1) % k], pts[t], pts[(t + 1) % k]);
      const auto want = poly.source[t] >= 0 ? Orientation::Right : Orientation::Left;
      if (o != want) return std::nullopt;
      if (poly.source[t] < 0 && g.locate(pts[t]) != f) return std::nullopt;
    }
    for (std::size_t t = 0; t < k; ++t) {
      const Point& p = pts[t];
      const Point& q = pts[(t + 1) % k];
      for (const PslgEdge& e : g.edges()) {
        if (transversal_cross(p, q, g.point(e.u), g.point(e.v))) return std::nullopt;
      }
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
      if (locate_in_polygon(pts, g.point(v)) == PolygonLocation::Inside) return std::nullopt;
    }
    out.polygons.push_back(std::move(poly));
  }
  return out;
}

// The line through v with direction c passes through the interior of some
// bounded face.
bool line_meets_interior(const Pslg& g, const Point& v, const Point& c) {
  const Scalar cc = dot(c, c);
  std::vector<Scalar> ts;
  auto param = [&](const Point& x) { return dot(x - v, c) / cc; };
  for (const PslgEdge& e : g.edges()) {
    const Point& a = g.point(e.u);
    const Point& b = g.point(e.v);
    const Scalar sa = cross(c, a - v);
    const Scalar sb = cross(c, b - v);
    if (sa == 0) ts.push_back(param(a));
    if (sb == 0) ts.push_back(param(b));
    if ((sa < 0 && sb > 0) || (sa > 0 && sb < 0)) ts.push_back(param(lerp(a, b, sa / (sa - sb))));
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
    const Scalar mid = (ts[i] + ts[i + 1]) / 2;
    if (g.locate(v + mid * c)) return true;
  }
  return false;
}

// Points of the carrier near `hit` on the side of line (o,p) given by `side`,
// ordered by decreasing distance from hit; each is a location on the graph.
struct SideTarget {
  Point toward;  // an edge endpoint strictly on the chosen side
  int edge;
};

std::vector<SideTarget> side_targets(const Pslg& g, const Location& hit, const Point& o, const Point& p,
                                     Orientation side) {
  std::vector<SideTarget> out;
  if (hit.kind == Location::Kind::Edge) {
    for (bool second : {false, true}) {
      const Point end = edge_point(g, hit.id, second);
      if (orientation(o, p, end) == side) out.push_back({end, hit.id});
    }
  } else if (hit.kind == Location::Kind::Vertex) {
    for (int h : g.outgoing(hit.id)) {
      const Point end = g.point(g.target(h));
      if (orientation(o, p, end) == side) out.push_back({end, h >> 1});
    }
  }
  return out;
}

}  // namespace

std::optional<Location> locate_boundary(const Pslg& g, std::span<const FreeSegment> free, const Point& p) {
  if (auto v = g.find_vertex(p)) return Location::vertex(g, *v);
  if (auto e = g.find_edge_containing(p)) return Location::on_edge(*e, p);
  for (std::size_t s = 0; s < free.size(); ++s) {
    if (in_segment_interior(p, free[s].red, free[s].blue)) return Location::on_segment(static_cast<int>(s), p);
  }
  return std::nullopt;
}

bool is_reflex_vertex(const Pslg& g, int v) {
  for (int h : g.outgoing(v)) {
    const int in = Pslg::twin(h);
    if (g.face(g.face_of(in)).bounded && g.corner_is_reflex(in)) return true;
  }
  return false;
}

std::vector<std::string> gcg_violations(const Pslg& g) {
  std::vector<std::string> out;
  for (int f : g.bounded_faces()) {
    std::vector<int> seq;
    for (int h : g.face(f).half_edges) {
      if (!g.corner_is_reflex(h)) continue;
      const int v = g.target(h);
      if (g.degree(v) != 1) {
        out.push_back("reflex vertex " + to_string(g.point(v)) + " has degree " + std::to_string(g.degree(v)));
      }
      if (!g.vertex(v).color) out.push_back("reflex vertex " + to_string(g.point(v)) + " has no color");
      seq.push_back(v);
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
      const auto a = g.vertex(seq[i]).color;
      const auto b = g.vertex(seq[(i + 1) % seq.size()]).color;
      if (a && b && *a == *b) {
        out.push_back("reflex vertices " + to_string(g.point(seq[i])) + " and " +
                      to_string(g.point(seq[(i + 1) % seq.size()])) + " are consecutive with the same color");
        break;
      }
    }
  }
  return out;
}

bool is_gcg(const Pslg& g) { return gcg_violations(g).empty(); }

bool is_well_colored(const Pslg& g) {
  for (int f : g.bounded_faces()) {
    std::vector<Color> seq;
    for (int h : g.face(f).half_edges) {
      if (!g.corner_is_reflex(h)) continue;
      const auto c = g.vertex(g.target(h)).color;
      if (!c) throw PreconditionError("reflex vertex " + to_string(g.point(g.target(h))) + " has no color");
      seq.push_back(*c);
    }
    for (std::size_t i = 0; i < seq.size(); ++i) {
      if (seq[i] == seq[(i + 1) % seq.size()]) return false;
    }
  }
  return true;
}

Gcg::Gcg(Pslg g) : g_(std::move(g)) {
  const auto bad = gcg_violations(g_);
  if (!bad.empty()) throw PreconditionError("not a glue-cut graph: " + bad.front());
}

Gcg trusted_gcg(Pslg g) { return Gcg(std::move(g), true); }

bool visible(const Pslg& g, std::span<const FreeSegment> free, const Point& p, const Point& q) {
  if (p == q) return false;
  for (const PslgEdge& e : g.edges()) {
    if (open_segment_meets(p, q, g.point(e.u), g.point(e.v))) return false;
  }
  for (const FreeSegment& s : free) {
    if (open_segment_meets(p, q, s.red, s.blue)) return false;
  }
  return g.locate(midpoint(p, q)).has_value();
}

std::string to_string(ViewColor c) {
  switch (c) {
    case ViewColor::Red: return "red";
    case ViewColor::Blue: return "blue";
    case ViewColor::Wildcard: return "wildcard";
  }
  return "?";
}

ViewColor color_viewed_from(const Pslg& g, std::span<const FreeSegment> free, const Location& x, const Point& y) {
  if (!visible(g, free, x.p, y)) {
    throw PreconditionError("points " + to_string(x.p) + " and " + to_string(y) + " do not see each other");
  }
  switch (x.kind) {
    case Location::Kind::Segment: {
      require_segment(free, x);
      return orientation(y, x.p, free[x.id].blue) == Orientation::Left ? ViewColor::Blue : ViewColor::Red;
    }
    case Location::Kind::Vertex: {
      require_boundary(g, x);
      const auto h = g.corner_facing(x.id, y - x.p);
      if (!h) throw PreconditionError("viewer lies along an edge at " + to_string(x.p));
      if (g.corner_is_reflex(*h)) return reflex_color(g, x.id);
      return first_reflex_color(g, g.next(*h));
    }
    case Location::Kind::Edge: {
      require_boundary(g, x);
      const PslgEdge& e = g.edges()[x.id];
      const int h = orientation(g.point(e.u), g.point(e.v), y) == Orientation::Left ? 2 * x.id : 2 * x.id + 1;
      return first_reflex_color(g, h);
    }
  }
  return ViewColor::Wildcard;
}

bool color_visible(const Pslg& g, std::span<const FreeSegment> free, const Location& z, const Location& z2) {
  if (!visible(g, free, z.p, z2.p)) return false;
  return colors_match(color_viewed_from(g, free, z, z2.p), color_viewed_from(g, free, z2, z.p));
}

Gcg glue(const Gcg& G, std::span<const FreeSegment> free, const Location& z, const Location& z2) {
  const Pslg& g = G.graph();
  require_segment(free, z);
  require_boundary(g, z2);
  require_not_reflex(g, z2);
  if (!color_visible(g, free, z, z2)) {
    throw PreconditionError("glue points " + to_string(z.p) + " and " + to_string(z2.p) + " are not color-visible");
  }
  const FreeSegment& s = free[z.id];
  PslgBuilder b(g);
  const int v2 = *b.vertex_at(z2.p);
  const int vz = b.add_vertex(PslgVertex{z.p, std::nullopt, -1});
  const int vr = b.add_vertex(PslgVertex{s.red, Color::Red, s.red_tag});
  const int vb = b.add_vertex(PslgVertex{s.blue, Color::Blue, s.blue_tag});
  b.add_edge(vz, v2);
  b.add_edge(vz, vr);
  b.add_edge(vz, vb);
  return checked_result(b.build(), "glue");
}

Gcg cut(const Gcg& G, std::span<const FreeSegment> free, const Location& y, const Location& y2) {
  const Pslg& g = G.graph();
  require_boundary(g, y);
  require_boundary(g, y2);
  require_not_reflex(g, y);
  require_not_reflex(g, y2);
  if (!color_visible(g, free, y, y2)) {
    throw PreconditionError("cut points " + to_string(y.p) + " and " + to_string(y2.p) + " are not color-visible");
  }
  PslgBuilder b(g);
  const int v1 = *b.vertex_at(y.p);
  const int v2 = *b.vertex_at(y2.p);
  b.add_edge(v1, v2);
  return checked_result(b.build(), "cut");
}

Gcg glue_cut(const Gcg& G, std::span<const FreeSegment> free, const Location& a, const Location& b) {
  if (a.kind == Location::Kind::Segment) return glue(G, free, a, b);
  if (b.kind == Location::Kind::Segment) return glue(G, free, b, a);
  return cut(G, free, a, b);
}

Simplification simplify(const Pslg& g) {
  // rho2: squared clearance between a vertex and any edge not incident to it.
  std::optional<Scalar> rho2;
  for (int v = 0; v < g.num_vertices(); ++v) {
    for (const PslgEdge& e : g.edges()) {
      if (e.u == v || e.v == v) continue;
      Scalar d = squared_distance_to_segment(g.point(v), g.point(e.u), g.point(e.v));
      if (!rho2 || d < *rho2) rho2 = d;
    }
  }
  // Offsets have length at most 2*sqrt(2)*eps; keep them under rho/2.
  Scalar eps = 1;
  const Scalar bound = rho2 ? *rho2 : Scalar(1);
  while (32 * eps * eps >= bound) eps /= 2;
  for (int attempt = 0; attempt < 200; ++attempt) {
    if (auto s = try_simplify(g, eps)) return *s;
    eps /= 2;
  }
  throw InternalError("simplification failed for every epsilon tried");
}

PolygonLocation locate_in_simplification(const Simplification& s, const Point& p) {
  for (const FacePolygon& fp : s.polygons) {
    const auto loc = locate_in_polygon(fp.polygon, p);
    if (loc != PolygonLocation::Outside) return loc;
  }
  return PolygonLocation::Outside;
}

bool open_segment_avoids_simplification(const Simplification& s, const Point& p, const Point& q) {
  for (const FacePolygon& fp : s.polygons) {
    const auto& poly = fp.polygon;
    for (std::size_t i = 0; i < poly.size(); ++i) {
      if (open_segment_meets(p, q, poly[i], poly[(i + 1) % poly.size()])) return false;
    }
    if (locate_in_polygon(poly, midpoint(p, q)) != PolygonLocation::Outside) return false;
  }
  return true;
}

bool triangle_clear(const Pslg& g, std::span<const FreeSegment> free, const Point& apex, const Point& a,
                    const Point& b, int skip_edge, int skip_segment) {
  const auto o = orientation(apex, a, b);
  if (o == Orientation::Collinear) return false;
  const Point tri[3] = {apex, o == Orientation::Left ? a : b, o == Orientation::Left ? b : a};
  auto blocks = [&](const Point& p, const Point& q) {
    const auto piece = clip_to_triangle(p, q, tri);
    if (!piece) return false;
    const bool on_base = orientation(a, b, piece->first) == Orientation::Collinear &&
                         orientation(a, b, piece->second) == Orientation::Collinear;
    return !on_base;
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    if (e == skip_edge) continue;
    if (blocks(g.point(g.edges()[e].u), g.point(g.edges()[e].v))) return false;
  }
  for (int s = 0; s < static_cast<int>(free.size()); ++s) {
    if (s == skip_segment) continue;
    if (blocks(free[s].red, free[s].blue)) return false;
  }
  return true;
}

std::optional<RayHit> shoot_ray(const Pslg& g, std::span<const FreeSegment> free, const Point& from,
                                const Point& dir, int skip_segment) {
  std::optional<RayHit> best;
  auto consider = [&](const Point& a, const Point& b, const Scalar& t, const Scalar& s, Location loc_interior,
                      std::optional<Location> at_a, std::optional<Location> at_b) {
    if (t <= 0) return;
    if (best && best->t < t) return;
    Location loc = loc_interior;
    if (s == 0 && at_a) {
      loc = *at_a;
    } else if (s == 1 && at_b) {
      loc = *at_b;
    } else {
      loc.p = lerp(a, b, s);
    }
    if (best && best->t == t && best->where.kind == Location::Kind::Vertex) return;
    best = RayHit{loc, t};
  };
  auto test = [&](const Point& a, const Point& b, Location loc_interior, std::optional<Location> at_a,
                  std::optional<Location> at_b) {
    const Point ab = b - a;
    const Scalar denom = cross(dir, ab);
    if (denom != 0) {
      const Scalar t = cross(a - from, ab) / denom;
      const Scalar s = cross(a - from, dir) / denom;
      if (s < 0 || s > 1) return;
      consider(a, b, t, s, loc_interior, at_a, at_b);
      return;
    }
    if (cross(a - from, dir) != 0) return;
    const Scalar dd = dot(dir, dir);
    consider(a, b, dot(a - from, dir) / dd, 0, loc_interior, at_a, at_b);
    consider(a, b, dot(b - from, dir) / dd, 1, loc_interior, at_a, at_b);
  };
  for (int e = 0; e < g.num_edges(); ++e) {
    const PslgEdge& ed = g.edges()[e];
    test(g.point(ed.u), g.point(ed.v), Location::on_edge(e, {}), Location::vertex(g, ed.u),
         Location::vertex(g, ed.v));
  }
  for (int s = 0; s < static_cast<int>(free.size()); ++s) {
    if (s == skip_segment) continue;
    test(free[s].red, free[s].blue, Location::on_segment(s, {}), std::nullopt, std::nullopt);
  }
  return best;
}

Gcg glue_matching(const Gcg& G, std::vector<FreeSegment> free) {
  Gcg cur = G;
  while (!free.empty()) {
    int si = 0;
    Scalar best_x;
    for (int s = 0; s < static_cast<int>(free.size()); ++s) {
      const Scalar x = std::max(free[s].red.x, free[s].blue.x);
      if (s == 0 || x > best_x) {
        best_x = x;
        si = s;
      }
    }
    const FreeSegment& seg = free[si];
    const Point& p = seg.red.x > seg.blue.x ? seg.red : seg.blue;
    const Point& o = seg.red.x > seg.blue.x ? seg.blue : seg.red;
    const Pslg& g = cur.graph();
    const auto hit = shoot_ray(g, free, p, p - o, si);
    if (!hit || hit->where.kind == Location::Kind::Segment) {
      throw InternalError("ray from " + to_string(p) + " does not reach the graph boundary");
    }
    const Location zloc = Location::on_segment(si, midpoint(seg.red, seg.blue));
    std::optional<Gcg> next;
    for (Orientation side : {Orientation::Left, Orientation::Right}) {
      for (const SideTarget& st : side_targets(g, hit->where, o, p, side)) {
        Scalar t = Scalar(1, 2);
        for (int halving = 0; halving < 64 && !next; ++halving, t /= 2) {
          const Point y = lerp(hit->where.p, st.toward, t);
          if (!triangle_clear(g, free, y, o, p, st.edge, si)) continue;
          const Location yloc = Location::on_edge(st.edge, y);
          if (color_visible(g, free, zloc, yloc)) next = glue(cur, free, zloc, yloc);
          break;
        }
        if (next) break;
      }
      if (next) break;
    }
    if (!next) throw InternalError("no color-visible attachment for segment at " + to_string(p));
    cur = std::move(*next);
    free.erase(free.begin() + si);
  }
  return cur;
}

bool is_isolated(const Pslg& g, int v) {
  const Point& pv = g.point(v);
  std::vector<Point> dirs;
  for (int w : g.neighbors(v)) dirs.push_back(g.point(w) - pv);
  if (dirs.empty()) return false;
  std::vector<Point> candidates;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    const Point& d = dirs[k];
    const Point& d2 = dirs[(k + 1) % dirs.size()];
    candidates.push_back(d);
    candidates.push_back(Point{-d.y, d.x});
    const Point mid = (Scalar(1) / max_norm(d)) * d + (Scalar(1) / max_norm(d2)) * d2;
    if (mid.x != 0 || mid.y != 0) candidates.push_back(mid);
  }
  for (const Point& c : candidates) {
    bool all_left = true, all_right = true;
    for (const Point& d : dirs) {
      const Scalar s = cross(c, d);
      if (s < 0) all_left = false;
      if (s > 0) all_right = false;
    }
    if ((all_left || all_right) && line_meets_interior(g, pv, c)) return false;
  }
  return true;
}

}  // namespace bimatch
