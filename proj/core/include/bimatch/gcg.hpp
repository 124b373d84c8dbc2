#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bimatch/matching.hpp"
#include "bimatch/pslg.hpp"

namespace bimatch {

// A matching segment not (yet) part of the graph.
struct FreeSegment {
  Point red;
  Point blue;
  int red_tag = -1;
  int blue_tag = -1;

  const Point& end(Color c) const { return c == Color::Red ? red : blue; }
};

// Point of a geometric configuration (graph plus free segments) that an
// operation attaches to: a graph vertex, a point inside a graph edge, or a
// point of a free segment (endpoints excluded).
struct Location {
  enum class Kind { Vertex, Edge, Segment };
  Kind kind;
  int id;  // vertex id, edge id, or index into the free segment list
  Point p;

  static Location vertex(const Pslg& g, int v) { return {Kind::Vertex, v, g.point(v)}; }
  static Location on_edge(int e, Point p) { return {Kind::Edge, e, std::move(p)}; }
  static Location on_segment(int s, Point p) { return {Kind::Segment, s, std::move(p)}; }
};

// Resolves p against the graph and free segments; nullopt if p is on none.
std::optional<Location> locate_boundary(const Pslg& g, std::span<const FreeSegment> free, const Point& p);

// Reasons a graph is not a glue-cut graph (empty when it is one): every
// reflex vertex must have degree 1 and a color, and reflex colors must
// alternate around every bounded face.
std::vector<std::string> gcg_violations(const Pslg& g);
bool is_gcg(const Pslg& g);
// Reflex vertices alternate in color around every bounded face. Throws
// PreconditionError if some reflex vertex has no color.
bool is_well_colored(const Pslg& g);

// Graph satisfying gcg_violations(...) == {}.
class Gcg {
 public:
  // Throws PreconditionError listing the violations.
  explicit Gcg(Pslg g);
  const Pslg& graph() const { return g_; }

 private:
  Gcg(Pslg g, bool) : g_(std::move(g)) {}
  friend Gcg trusted_gcg(Pslg g);

  Pslg g_;
};

// Wraps without checking; used where the construction guarantees closure and
// the caller verifies separately.
Gcg trusted_gcg(Pslg g);

// Open segment (p,q) meets no edge, vertex or free segment and lies inside a
// bounded face.
bool visible(const Pslg& g, std::span<const FreeSegment> free, const Point& p, const Point& q);

enum class ViewColor { Red, Blue, Wildcard };

std::string to_string(ViewColor c);
inline bool colors_match(ViewColor a, ViewColor b) {
  return a == ViewColor::Wildcard || b == ViewColor::Wildcard || a == b;
}

// Color of x as seen from viewer y. On a free segment: the color of the
// endpoint on y's left when looking from y to x. On the graph boundary: the
// color of the first reflex vertex reached by walking the face forward from
// the side facing y; Wildcard when the face has no reflex vertex.
// Throws PreconditionError unless x and y are visible from each other.
ViewColor color_viewed_from(const Pslg& g, std::span<const FreeSegment> free, const Location& x, const Point& y);

bool color_visible(const Pslg& g, std::span<const FreeSegment> free, const Location& z, const Location& z2);

// Adds free segment z.id to the graph, joined to z2 by the edge z-z2. z must
// be on a free segment, z2 a non-reflex boundary point, and the two
// color-visible. The caller drops free[z.id] afterwards.
Gcg glue(const Gcg& g, std::span<const FreeSegment> free, const Location& z, const Location& z2);
// Adds the chord y-y2 between two color-visible non-reflex boundary points.
Gcg cut(const Gcg& g, std::span<const FreeSegment> free, const Location& y, const Location& y2);
// Glue when either point is on a free segment (that one is glued), else Cut.
Gcg glue_cut(const Gcg& g, std::span<const FreeSegment> free, const Location& a, const Location& b);

// One simple polygon per bounded face.
struct FacePolygon {
  int face;
  std::vector<Point> polygon;  // counterclockwise
  // Graph vertex kept as a polygon vertex (the reflex ones), else -1.
  std::vector<int> source;
};

struct Simplification {
  std::vector<FacePolygon> polygons;
  Scalar epsilon;
};

// Replaces each bounded face by a simple polygon whose reflex vertices are
// exactly the face's reflex vertices. Convex corners are pushed by epsilon
// into the face along a rational bisector-like direction; straight corners
// are dropped. Throws InternalError if no epsilon down to 2^-200 works.
Simplification simplify(const Pslg& g);

// Union of the simplification polygons classifies p.
PolygonLocation locate_in_simplification(const Simplification& s, const Point& p);
// The open segment (p,q) meets no simplification polygon.
bool open_segment_avoids_simplification(const Simplification& s, const Point& p, const Point& q);

// Glues every free segment to the graph, rightmost endpoint first. The graph
// must enclose all free segments in its bounded faces.
Gcg glue_matching(const Gcg& g, std::vector<FreeSegment> free);

// No line through v that meets the interior of a bounded face has all of
// v's neighbors in one of its closed half-planes.
bool is_isolated(const Pslg& g, int v);

// The closed triangle (apex, a, b) meets graph edges and free segments only
// along its base [a,b]. Edge skip_edge and free segment skip_segment are
// ignored (-1 for none).
bool triangle_clear(const Pslg& g, std::span<const FreeSegment> free, const Point& apex, const Point& a,
                    const Point& b, int skip_edge = -1, int skip_segment = -1);

bool is_reflex_vertex(const Pslg& g, int v);

// First point hit by the ray from `from` in direction dir, among graph edges
// and free segments (excluding free segment `skip_segment`).
struct RayHit {
  Location where;
  Scalar t;  // hit = from + t * dir
};
std::optional<RayHit> shoot_ray(const Pslg& g, std::span<const FreeSegment> free, const Point& from,
                                const Point& dir, int skip_segment = -1);

}  // namespace bimatch
