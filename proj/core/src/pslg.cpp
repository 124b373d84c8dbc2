#include "bimatch/pslg.hpp"

#include <algorithm>
#include <map>

namespace bimatch {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2pi).
int half_plane(const Point& d) { return (d.y < 0 || (d.y == 0 && d.x < 0)) ? 1 : 0; }

bool angle_less(const Point& a, const Point& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b) > 0;
}

// Half-turn index of x measured counterclockwise from reference a.
int half_from(const Point& a, const Point& x) {
  const Scalar c = cross(a, x);
  return (c > 0 || (c == 0 && dot(a, x) > 0)) ? 0 : 1;
}

// x comes strictly before y counterclockwise from a.
bool ccw_before(const Point& a, const Point& x, const Point& y) {
  const int hx = half_from(a, x);
  const int hy = half_from(a, y);
  if (hx != hy) return hx < hy;
  return cross(x, y) > 0;
}

bool same_ray(const Point& a, const Point& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

// Direction d lies strictly inside the counterclockwise wedge from a to b.
// With a and b on one ray the wedge is the full turn minus that ray.
bool strictly_in_ccw_wedge(const Point& a, const Point& b, const Point& d) {
  if (same_ray(a, d) || same_ray(b, d)) return false;
  if (same_ray(a, b)) return true;
  return ccw_before(a, d, b);
}

}  // namespace

Pslg::Pslg(std::vector<PslgVertex> vertices, std::vector<PslgEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  const int nv = num_vertices();
  std::map<std::pair<Scalar, Scalar>, int> seen;
  for (int v = 0; v < nv; ++v) {
    if (!seen.emplace(std::make_pair(vertices_[v].p.x, vertices_[v].p.y), v).second) {
      throw GeometryError("duplicate vertex " + to_string(vertices_[v].p));
    }
  }
  std::vector<std::pair<int, int>> keys;
  for (const PslgEdge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= nv || e.v >= nv) throw GeometryError("edge endpoint out of range");
    if (e.u == e.v) throw GeometryError("loop edge at vertex " + std::to_string(e.u));
    keys.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
  }
  std::sort(keys.begin(), keys.end());
  if (std::adjacent_find(keys.begin(), keys.end()) != keys.end()) throw GeometryError("duplicate edge");

  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Point& a = point(edges_[i].u);
    const Point& b = point(edges_[i].v);
    for (int v = 0; v < nv; ++v) {
      if (v == edges_[i].u || v == edges_[i].v) continue;
      if (on_segment(point(v), a, b)) {
        throw GeometryError("vertex " + to_string(point(v)) + " lies on edge " + to_string(a) + "-" + to_string(b));
      }
    }
    for (std::size_t j = i + 1; j < edges_.size(); ++j) {
      if (segments_properly_cross(Segment(a, b), Segment(point(edges_[j].u), point(edges_[j].v)))) {
        throw GeometryError("edges " + to_string(a) + "-" + to_string(b) + " and " + to_string(point(edges_[j].u)) +
                            "-" + to_string(point(edges_[j].v)) + " cross");
      }
    }
  }

  if (nv == 0) throw GeometryError("empty graph");
  std::vector<std::vector<int>> adj(nv);
  for (const PslgEdge& e : edges_) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<bool> reached(nv, false);
  std::vector<int> stack{0};
  reached[0] = true;
  int count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v]) {
      if (!reached[w]) {
        reached[w] = true;
        ++count;
        stack.push_back(w);
      }
    }
  }
  if (count != nv) throw GeometryError("graph is not connected");

  build_embedding();
}

void Pslg::build_embedding() {
  const int nv = num_vertices();
  const int nh = 2 * num_edges();
  out_.assign(nv, {});
  for (int h = 0; h < nh; ++h) out_[origin(h)].push_back(h);
  for (int v = 0; v < nv; ++v) {
    const Point& p = point(v);
    std::sort(out_[v].begin(), out_[v].end(),
              [&](int h1, int h2) { return angle_less(point(target(h1)) - p, point(target(h2)) - p); });
  }
  pos_in_out_.assign(nh, 0);
  for (int v = 0; v < nv; ++v) {
    for (std::size_t k = 0; k < out_[v].size(); ++k) pos_in_out_[out_[v][k]] = static_cast<int>(k);
  }
  next_.assign(nh, -1);
  for (int h = 0; h < nh; ++h) {
    const auto& around = out_[target(h)];
    const int d = static_cast<int>(around.size());
    const int k = pos_in_out_[twin(h)];
    next_[h] = around[(k - 1 + d) % d];
  }
  face_of_.assign(nh, -1);
  faces_.clear();
  for (int h0 = 0; h0 < nh; ++h0) {
    if (face_of_[h0] >= 0) continue;
    Face f;
    f.area2 = 0;
    const int id = static_cast<int>(faces_.size());
    int h = h0;
    do {
      face_of_[h] = id;
      f.half_edges.push_back(h);
      f.area2 += cross(point(origin(h)), point(target(h)));
      h = next_[h];
    } while (h != h0);
    f.bounded = f.area2 > 0;
    faces_.push_back(std::move(f));
  }
}

std::vector<int> Pslg::neighbors(int v) const {
  std::vector<int> out;
  for (int h : outgoing(v)) out.push_back(target(h));
  return out;
}

std::vector<int> Pslg::bounded_faces() const {
  std::vector<int> out;
  for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
    if (faces_[f].bounded) out.push_back(f);
  }
  return out;
}

std::optional<int> Pslg::find_vertex(const Point& p) const {
  for (int v = 0; v < num_vertices(); ++v) {
    if (point(v) == p) return v;
  }
  return std::nullopt;
}

std::optional<int> Pslg::find_edge_containing(const Point& p) const {
  for (int e = 0; e < num_edges(); ++e) {
    if (in_segment_interior(p, point(edges_[e].u), point(edges_[e].v))) return e;
  }
  return std::nullopt;
}

std::optional<int> Pslg::locate(const Point& p) const {
  for (int e = 0; e < num_edges(); ++e) {
    if (on_segment(p, point(edges_[e].u), point(edges_[e].v))) return std::nullopt;
  }
  // Winding number of each bounded walk. The graph is connected, so a walk
  // winds around p exactly when p is inside that face.
  for (int f : bounded_faces()) {
    int wn = 0;
    for (int h : faces_[f].half_edges) {
      const Point& a = point(origin(h));
      const Point& b = point(target(h));
      if (a.y <= p.y) {
        if (b.y > p.y && orientation(a, b, p) == Orientation::Left) ++wn;
      } else if (b.y <= p.y && orientation(a, b, p) == Orientation::Right) {
        --wn;
      }
    }
    if (wn != 0) return f;
  }
  return std::nullopt;
}

bool Pslg::corner_is_reflex(int h) const {
  const int u = origin(h);
  const int v = target(h);
  const int w = target(next(h));
  return u == w || orientation(point(u), point(v), point(w)) == Orientation::Right;
}

bool Pslg::corner_is_collinear(int h) const {
  const int u = origin(h);
  const int w = target(next(h));
  return u != w && orientation(point(u), point(target(h)), point(w)) == Orientation::Collinear;
}

std::optional<int> Pslg::corner_facing(int v, const Point& dir) const {
  const auto& around = outgoing(v);
  const int d = static_cast<int>(around.size());
  if (d == 0) return std::nullopt;
  const Point& p = point(v);
  for (int k = 0; k < d; ++k) {
    const int h_out = around[k];
    const int h_back = around[(k + 1) % d];
    if (strictly_in_ccw_wedge(point(target(h_out)) - p, point(target(h_back)) - p, dir)) return twin(h_back);
  }
  return std::nullopt;
}

Pslg build_pslg(std::vector<PslgVertex> vertices, std::vector<PslgEdge> edges) {
  return Pslg(std::move(vertices), std::move(edges));
}

int PslgBuilder::add_vertex(PslgVertex v) {
  vertices_.push_back(std::move(v));
  return static_cast<int>(vertices_.size()) - 1;
}

std::optional<int> PslgBuilder::vertex_at(const Point& p) {
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    if (vertices_[v].p == p) return static_cast<int>(v);
  }
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const PslgEdge edge = edges_[e];
    if (in_segment_interior(p, point(edge.u), point(edge.v))) {
      const int z = add_vertex(PslgVertex{p, std::nullopt, -1});
      edges_[e] = PslgEdge{edge.u, z};
      edges_.push_back(PslgEdge{z, edge.v});
      return z;
    }
  }
  return std::nullopt;
}

void PslgBuilder::add_edge(int u, int v) { edges_.push_back(PslgEdge{u, v}); }

std::vector<ReflexCorner> reflex_vertices(const Pslg& g) {
  std::vector<ReflexCorner> out;
  for (int f : g.bounded_faces()) {
    for (int h : g.face(f).half_edges) {
      if (g.corner_is_reflex(h)) out.push_back(ReflexCorner{g.target(h), f, h});
    }
  }
  return out;
}

}  // namespace bimatch
