#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimatch/errors.hpp"
#include "bimatch/geometry.hpp"

namespace bimatch {

struct PslgVertex {
  Point p;
  std::optional<Color> color;
  // Caller-defined label (e.g. the input point a vertex stands for); -1 if none.
  int tag = -1;
};

struct PslgEdge {
  int u;
  int v;
};

// Connected planar straight-line graph with its combinatorial embedding.
//
// Half-edge 2e runs edges[e].u -> edges[e].v and 2e+1 the reverse. Every
// half-edge has its face on the left; bounded faces are walked
// counterclockwise. A degree-1 vertex is passed through as u -> v -> u, so an
// edge bounding the same face on both sides appears twice in its walk.
class Pslg {
 public:
  Pslg(std::vector<PslgVertex> vertices, std::vector<PslgEdge> edges);

  const std::vector<PslgVertex>& vertices() const { return vertices_; }
  const std::vector<PslgEdge>& edges() const { return edges_; }
  const PslgVertex& vertex(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }
  const Point& point(int v) const { return vertex(v).p; }
  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  int origin(int h) const { return (h & 1) ? edges_[h >> 1].v : edges_[h >> 1].u; }
  int target(int h) const { return (h & 1) ? edges_[h >> 1].u : edges_[h >> 1].v; }
  static int twin(int h) { return h ^ 1; }
  int next(int h) const { return next_[static_cast<std::size_t>(h)]; }
  int face_of(int h) const { return face_of_[static_cast<std::size_t>(h)]; }
  // Outgoing half-edges of v sorted counterclockwise by angle.
  const std::vector<int>& outgoing(int v) const { return out_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return static_cast<int>(outgoing(v).size()); }
  std::vector<int> neighbors(int v) const;

  struct Face {
    std::vector<int> half_edges;  // walk order
    Scalar area2;                 // twice the signed area of the walk
    bool bounded;
  };
  const std::vector<Face>& faces() const { return faces_; }
  const Face& face(int f) const { return faces_.at(static_cast<std::size_t>(f)); }
  std::vector<int> bounded_faces() const;

  std::optional<int> find_vertex(const Point& p) const;
  // Edge whose relative interior contains p.
  std::optional<int> find_edge_containing(const Point& p) const;
  // Bounded face whose open interior contains p; nullopt if p lies on an
  // edge or outside every bounded face.
  std::optional<int> locate(const Point& p) const;

  // Corner at target(h) between h and next(h).
  bool corner_is_reflex(int h) const;
  bool corner_is_collinear(int h) const;

  // Half-edge h entering v whose corner (h, next(h)) contains direction dir
  // strictly inside its wedge; nullopt if dir points along an edge.
  std::optional<int> corner_facing(int v, const Point& dir) const;

 private:
  void build_embedding();

  std::vector<PslgVertex> vertices_;
  std::vector<PslgEdge> edges_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_in_out_;
  std::vector<int> next_;
  std::vector<int> face_of_;
  std::vector<Face> faces_;
};

// Validates (no duplicate vertices, no crossing or overlapping edges, edges
// meet only at shared endpoints, connected) and computes the embedding.
Pslg build_pslg(std::vector<PslgVertex> vertices, std::vector<PslgEdge> edges);

// Mutable edit list that rebuilds into a Pslg.
class PslgBuilder {
 public:
  PslgBuilder() = default;
  explicit PslgBuilder(const Pslg& g) : vertices_(g.vertices()), edges_(g.edges()) {}

  int add_vertex(PslgVertex v);
  // Returns the vertex at p, splitting the edge whose interior contains p if
  // needed; nullopt if p is on no vertex or edge.
  std::optional<int> vertex_at(const Point& p);
  void add_edge(int u, int v);
  const Point& point(int v) const { return vertices_.at(static_cast<std::size_t>(v)).p; }
  Pslg build() const { return Pslg(vertices_, edges_); }

 private:
  std::vector<PslgVertex> vertices_;
  std::vector<PslgEdge> edges_;
};

struct ReflexCorner {
  int vertex;
  int face;
  int half_edge;  // enters vertex; the corner is (half_edge, next(half_edge))
};

// Reflex corners of bounded faces, in face-walk order per face.
std::vector<ReflexCorner> reflex_vertices(const Pslg& g);

}  // namespace bimatch
