#pragma once

#include <gmpxx.h>

#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bimatch {

// Exact rational. gmpxx keeps results of arithmetic in canonical form, but
// the two-argument constructor does not reduce.
using Scalar = mpq_class;

inline Scalar ratio(long num, long den) {
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts integers ("-3"), decimals ("2.125", "-.5", "1e-3") and fractions ("7/3").
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point& a, const Point& b) {
    return a.x == b.x && a.y == b.y;
  }
};

inline Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(const Scalar& s, const Point& p) { return {s * p.x, s * p.y}; }
inline Scalar cross(const Point& u, const Point& v) { return u.x * v.y - u.y * v.x; }
inline Scalar dot(const Point& u, const Point& v) { return u.x * v.x + u.y * v.y; }
inline Point midpoint(const Point& a, const Point& b) {
  return {(a.x + b.x) / 2, (a.y + b.y) / 2};
}
// a + t (b - a)
inline Point lerp(const Point& a, const Point& b, const Scalar& t) {
  return {a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)};
}
bool lex_less(const Point& a, const Point& b);
std::string to_string(const Point& p);

enum class Color { Red, Blue };

inline Color opposite(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
char color_char(Color c);

class ColoredPoint {
 public:
  ColoredPoint(Point point, Color color) : point_(std::move(point)), color_(color) {}

  const Point& point() const { return point_; }
  Color color() const { return color_; }

 private:
  Point point_;
  Color color_;
};

struct Segment {
  Point a;
  Point b;

  Segment(Point a_, Point b_);
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

Orientation orientation(const Point& a, const Point& b, const Point& c);

// Open segments intersect: a transversal interior crossing, or collinear
// overlap of positive length. Shared endpoints do not count.
bool segments_properly_cross(const Segment& s1, const Segment& s2);

// Closed segment contains p.
bool on_segment(const Point& p, const Point& a, const Point& b);
// p lies on segment [a,b] strictly between the endpoints.
bool in_segment_interior(const Point& p, const Point& a, const Point& b);

// True when the open segment (p,q) meets the closed segment [a,b].
bool open_segment_meets(const Point& p, const Point& q, const Point& a, const Point& b);

// Intersection of the lines through (p1,p2) and (q1,q2); absent when parallel.
std::optional<Point> line_line_intersection(const Point& p1, const Point& p2, const Point& q1,
                                            const Point& q2);

Scalar squared_distance(const Point& p, const Point& q);
Scalar squared_distance_to_segment(const Point& p, const Point& a, const Point& b);

enum class Side { Negative = -1, On = 0, Positive = 1 };

// Ax + By + C = 0 with the first nonzero of (A, B) scaled to 1.
class Line {
 public:
  static Line from_coefficients(Scalar a, Scalar b, Scalar c);
  static Line through(const Point& p, const Point& q);
  static Line vertical(const Scalar& x) { return from_coefficients(1, 0, -x); }

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

  Scalar eval(const Point& p) const { return a_ * p.x + b_ * p.y + c_; }
  // Direction along the line with the Positive side on its right; "upward"
  // for vertical lines.
  Point direction() const { return {-b_, a_}; }
  // Coordinate along direction(); orders points on the line bottom-to-top.
  Scalar position(const Point& p) const { return dot(direction(), p); }
  Line translated(const Scalar& delta_c) const { return from_coefficients(a_, b_, c_ + delta_c); }

  friend bool operator==(const Line&, const Line&) = default;
  // Lexicographic on (A, B, C).
  friend bool operator<(const Line& l1, const Line& l2);

 private:
  Line(Scalar a, Scalar b, Scalar c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

  Scalar a_, b_, c_;
};

std::string to_string(const Line& l);

Side line_side(const Line& l, const Point& p);

// Unique intersection when the endpoints lie strictly on opposite sides.
std::optional<Point> segment_line_intersection(const Segment& s, const Line& l);

enum class PolygonLocation { Inside, Outside, OnBoundary };

bool is_simple_polygon(std::span<const Point> poly);
// Throws GeometryError if the polygon is not simple.
PolygonLocation point_in_simple_polygon(std::span<const Point> poly, const Point& p);
// Same classification without the simplicity check; the caller guarantees it.
PolygonLocation locate_in_polygon(std::span<const Point> poly, const Point& p);
// Closed segment [p,q] lies inside the closed polygon.
bool segment_in_closed_polygon(std::span<const Point> poly, const Point& p, const Point& q);
// Closed segment [p,q] meets the closed polygon (interior or boundary).
bool segment_meets_closed_polygon(std::span<const Point> poly, const Point& p, const Point& q);
Scalar signed_area2(std::span<const Point> poly);

// No three points collinear and all x-coordinates distinct.
bool check_general_position(std::span<const ColoredPoint> points);
bool check_general_position(std::span<const Point> points);

}  // namespace bimatch
