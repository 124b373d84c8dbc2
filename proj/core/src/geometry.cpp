#include "bimatch/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace bimatch {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

[[noreturn]] void bad_number(std::string_view text) {
  throw GeometryError("invalid number '" + std::string(text) + "'");
}

int sign_of(const Scalar& s) { return sgn(s); }

bool closed_segments_intersect(const Point& p1, const Point& p2, const Point& q1, const Point& q2) {
  const int d1 = static_cast<int>(orientation(q1, q2, p1));
  const int d2 = static_cast<int>(orientation(q1, q2, p2));
  const int d3 = static_cast<int>(orientation(p1, p2, q1));
  const int d4 = static_cast<int>(orientation(p1, p2, q2));
  if (d1 * d2 < 0 && d3 * d4 < 0) return true;
  if (d1 == 0 && on_segment(p1, q1, q2)) return true;
  if (d2 == 0 && on_segment(p2, q1, q2)) return true;
  if (d3 == 0 && on_segment(q1, p1, p2)) return true;
  if (d4 == 0 && on_segment(q2, p1, p2)) return true;
  return false;
}

// Parameter t of point x on the line p + t (q - p); x must be on that line.
Scalar param_on(const Point& p, const Point& q, const Point& x) {
  const Point d = q - p;
  return dot(x - p, d) / dot(d, d);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad_number(text);

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    bool neg = false;
    if (!num.empty() && (num.front() == '-' || num.front() == '+')) {
      neg = num.front() == '-';
      num.remove_prefix(1);
    }
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) bad_number(text);
    Scalar q(neg ? mpz_class(-n) : n, d);
    q.canonicalize();
    return q;
  }

  bool neg = false;
  if (s.front() == '-' || s.front() == '+') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp = s.substr(e + 1);
    bool eneg = false;
    if (!exp.empty() && (exp.front() == '-' || exp.front() == '+')) {
      eneg = exp.front() == '-';
      exp.remove_prefix(1);
    }
    if (!all_digits(exp) || exp.size() > 6) bad_number(text);
    exponent = std::stol(std::string(exp));
    if (eneg) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot_pos = s.find('.'); dot_pos != std::string_view::npos) {
    int_part = s.substr(0, dot_pos);
    frac_part = s.substr(dot_pos + 1);
    if (int_part.empty() && frac_part.empty()) bad_number(text);
    if (!int_part.empty() && !all_digits(int_part)) bad_number(text);
    if (!frac_part.empty() && !all_digits(frac_part)) bad_number(text);
  } else if (!all_digits(int_part)) {
    bad_number(text);
  }
  std::string digits = std::string(int_part) + std::string(frac_part);
  if (digits.empty()) digits = "0";
  mpz_class num(digits, 10);
  exponent -= static_cast<long>(frac_part.size());
  mpz_class pow10;
  mpz_ui_pow_ui(pow10.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Scalar q = exponent < 0 ? Scalar(num, pow10) : Scalar(num * pow10);
  q.canonicalize();
  return neg ? Scalar(-q) : q;
}

std::string to_string(const Scalar& s) {
  Scalar q(s);
  q.canonicalize();
  return q.get_str();
}

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

std::string to_string(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

char color_char(Color c) { return c == Color::Red ? 'R' : 'B'; }

Segment::Segment(Point a_, Point b_) : a(std::move(a_)), b(std::move(b_)) {
  if (a == b) throw GeometryError("degenerate segment at " + to_string(a));
}

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const int s = sign_of(cross(b - a, c - a));
  return s > 0 ? Orientation::Left : (s < 0 ? Orientation::Right : Orientation::Collinear);
}

bool on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
         p.y <= std::max(a.y, b.y);
}

bool in_segment_interior(const Point& p, const Point& a, const Point& b) {
  return on_segment(p, a, b) && p != a && p != b;
}

bool segments_properly_cross(const Segment& s1, const Segment& s2) {
  return open_segment_meets(s1.a, s1.b, s2.a, s2.b) && open_segment_meets(s2.a, s2.b, s1.a, s1.b);
}

bool open_segment_meets(const Point& p, const Point& q, const Point& a, const Point& b) {
  const Orientation oa = orientation(p, q, a);
  const Orientation ob = orientation(p, q, b);
  if (oa == Orientation::Collinear && ob == Orientation::Collinear) {
    // Overlap of the parameter intervals (0,1) and [ta,tb].
    Scalar ta = param_on(p, q, a);
    Scalar tb = param_on(p, q, b);
    if (ta > tb) std::swap(ta, tb);
    return ta < 1 && tb > 0;
  }
  if (oa != Orientation::Collinear && oa == ob) return false;
  const Orientation op = orientation(a, b, p);
  const Orientation oq = orientation(a, b, q);
  if (op != Orientation::Collinear && op == oq) return false;
  if (oa == Orientation::Collinear) return in_segment_interior(a, p, q);
  if (ob == Orientation::Collinear) return in_segment_interior(b, p, q);
  // [a,b] straddles line pq strictly; the crossing lies on the open segment
  // unless it is exactly p or q.
  return op != Orientation::Collinear && oq != Orientation::Collinear;
}

std::optional<Point> line_line_intersection(const Point& p1, const Point& p2, const Point& q1,
                                            const Point& q2) {
  const Point r = p2 - p1;
  const Point s = q2 - q1;
  const Scalar denom = cross(r, s);
  if (denom == 0) return std::nullopt;
  const Scalar t = cross(q1 - p1, s) / denom;
  return lerp(p1, p2, t);
}

Scalar squared_distance(const Point& p, const Point& q) {
  const Point d = p - q;
  return dot(d, d);
}

Scalar squared_distance_to_segment(const Point& p, const Point& a, const Point& b) {
  const Point d = b - a;
  const Scalar len2 = dot(d, d);
  Scalar t = dot(p - a, d) / len2;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return squared_distance(p, lerp(a, b, t));
}

Line Line::from_coefficients(Scalar a, Scalar b, Scalar c) {
  if (a != 0) {
    Scalar inv = 1 / a;
    return Line(1, b * inv, c * inv);
  }
  if (b != 0) {
    Scalar inv = 1 / b;
    return Line(0, 1, c * inv);
  }
  throw GeometryError("line with A = B = 0");
}

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw GeometryError("line through coincident points");
  return from_coefficients(q.y - p.y, p.x - q.x, q.x * p.y - p.x * q.y);
}

bool operator<(const Line& l1, const Line& l2) {
  if (l1.a_ != l2.a_) return l1.a_ < l2.a_;
  if (l1.b_ != l2.b_) return l1.b_ < l2.b_;
  return l1.c_ < l2.c_;
}

std::string to_string(const Line& l) {
  return "[" + to_string(l.a()) + "]x + [" + to_string(l.b()) + "]y + [" + to_string(l.c()) + "] = 0";
}

Side line_side(const Line& l, const Point& p) {
  const int s = sign_of(l.eval(p));
  return s > 0 ? Side::Positive : (s < 0 ? Side::Negative : Side::On);
}

std::optional<Point> segment_line_intersection(const Segment& s, const Line& l) {
  const Scalar va = l.eval(s.a);
  const Scalar vb = l.eval(s.b);
  if (sgn(va) * sgn(vb) >= 0) return std::nullopt;
  return lerp(s.a, s.b, va / (va - vb));
}

Scalar signed_area2(std::span<const Point> poly) {
  Scalar area = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) area += cross(poly[i], poly[(i + 1) % poly.size()]);
  return area;
}

bool is_simple_polygon(std::span<const Point> poly) {
  const std::size_t n = poly.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (poly[i] == poly[(i + 1) % n]) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      const Point& c = poly[j];
      const Point& d = poly[(j + 1) % n];
      const bool adjacent_next = j == i + 1;
      const bool adjacent_prev = (j + 1) % n == i;
      if (adjacent_next || adjacent_prev) {
        // Shared vertex only; no fold-back along a common line.
        if (n == 3 && adjacent_next && adjacent_prev) continue;
        if (adjacent_next && (on_segment(d, a, b) || on_segment(a, c, d))) return false;
        if (adjacent_prev && (on_segment(c, a, b) || on_segment(b, c, d))) return false;
        continue;
      }
      if (closed_segments_intersect(a, b, c, d)) return false;
    }
  }
  if (n == 3) {
    return orientation(poly[0], poly[1], poly[2]) != Orientation::Collinear;
  }
  return true;
}

PolygonLocation locate_in_polygon(std::span<const Point> poly, const Point& p) {
  bool inside = false;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    if (on_segment(p, a, b)) return PolygonLocation::OnBoundary;
    if ((a.y > p.y) != (b.y > p.y)) {
      const Scalar x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside ? PolygonLocation::Inside : PolygonLocation::Outside;
}

PolygonLocation point_in_simple_polygon(std::span<const Point> poly, const Point& p) {
  if (!is_simple_polygon(poly)) throw GeometryError("polygon is not simple");
  return locate_in_polygon(poly, p);
}

bool segment_in_closed_polygon(std::span<const Point> poly, const Point& p, const Point& q) {
  if (p == q) return locate_in_polygon(poly, p) != PolygonLocation::Outside;
  std::vector<Scalar> params{0, 1};
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % n];
    const Orientation oa = orientation(p, q, a);
    const Orientation ob = orientation(p, q, b);
    if (oa == Orientation::Collinear) params.push_back(param_on(p, q, a));
    if (ob == Orientation::Collinear) params.push_back(param_on(p, q, b));
    if (oa != Orientation::Collinear && ob != Orientation::Collinear && oa != ob) {
      if (auto x = line_line_intersection(p, q, a, b)) params.push_back(param_on(p, q, *x));
    }
  }
  std::sort(params.begin(), params.end());
  params.erase(std::unique(params.begin(), params.end()), params.end());
  for (const Scalar& t : params) {
    if (t < 0 || t > 1) continue;
    if (locate_in_polygon(poly, lerp(p, q, t)) == PolygonLocation::Outside) return false;
  }
  for (std::size_t i = 0; i + 1 < params.size(); ++i) {
    Scalar lo = std::max(params[i], Scalar(0));
    Scalar hi = std::min(params[i + 1], Scalar(1));
    if (lo >= hi) continue;
    if (locate_in_polygon(poly, lerp(p, q, (lo + hi) / 2)) == PolygonLocation::Outside) return false;
  }
  return true;
}

bool segment_meets_closed_polygon(std::span<const Point> poly, const Point& p, const Point& q) {
  if (locate_in_polygon(poly, p) != PolygonLocation::Outside) return true;
  if (locate_in_polygon(poly, q) != PolygonLocation::Outside) return true;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (closed_segments_intersect(p, q, poly[i], poly[(i + 1) % n])) return true;
  }
  return false;
}

bool check_general_position(std::span<const Point> pts) {
  std::set<Scalar> xs;
  for (const Point& p : pts) {
    if (!xs.insert(p.x).second) return false;
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      for (std::size_t k = j + 1; k < pts.size(); ++k) {
        if (orientation(pts[i], pts[j], pts[k]) == Orientation::Collinear) return false;
      }
    }
  }
  return true;
}

bool check_general_position(std::span<const ColoredPoint> points) {
  std::vector<Point> pts;
  pts.reserve(points.size());
  for (const ColoredPoint& cp : points) pts.push_back(cp.point());
  return check_general_position(std::span<const Point>(pts));
}

}  // namespace bimatch
