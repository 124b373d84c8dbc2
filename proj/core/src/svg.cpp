#include "bimatch/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace bimatch {

namespace {

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

struct Box {
  double x0, y0, x1, y1;
};

// Portion of l inside the box, as two points; false if it misses.
bool clip_line(const Line& l, const Box& b, double& ax, double& ay, double& bx, double& by) {
  const double A = l.a().get_d(), B = l.b().get_d(), C = l.c().get_d();
  std::vector<std::pair<double, double>> pts;
  if (B != 0) {
    for (double x : {b.x0, b.x1}) {
      const double y = -(A * x + C) / B;
      if (y >= b.y0 && y <= b.y1) pts.emplace_back(x, y);
    }
  }
  if (A != 0) {
    for (double y : {b.y0, b.y1}) {
      const double x = -(B * y + C) / A;
      if (x >= b.x0 && x <= b.x1) pts.emplace_back(x, y);
    }
  }
  if (pts.size() < 2) return false;
  std::sort(pts.begin(), pts.end());
  ax = pts.front().first;
  ay = pts.front().second;
  bx = pts.back().first;
  by = pts.back().second;
  return true;
}

}  // namespace

std::string render_svg(const BichromaticPointSet& P, const std::vector<BRMatching>& matchings,
                       const std::vector<Line>& cuts) {
  std::vector<std::pair<double, double>> pts;
  for (const Point& p : P.reds()) pts.emplace_back(p.x.get_d(), p.y.get_d());
  for (const Point& p : P.blues()) pts.emplace_back(p.x.get_d(), p.y.get_d());
  Box box{pts[0].first, pts[0].second, pts[0].first, pts[0].second};
  for (const auto& [x, y] : pts) {
    box.x0 = std::min(box.x0, x);
    box.x1 = std::max(box.x1, x);
    box.y0 = std::min(box.y0, y);
    box.y1 = std::max(box.y1, y);
  }
  double span = std::max(box.x1 - box.x0, box.y1 - box.y0);
  if (span <= 0) span = 1;
  const double margin = 0.05 * span;
  box = {box.x0 - margin, box.y0 - margin, box.x1 + margin, box.y1 + margin};
  const double w = box.x1 - box.x0;
  const double h = box.y1 - box.y0;
  const double r = 0.012 * span;
  const double stroke = 0.004 * span;

  // SVG's y axis points down; flip so the picture matches the coordinates.
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << num(box.x0) << ' ' << num(-box.y1) << ' '
      << num(w) << ' ' << num(h) << "\">\n";
  for (const Line& l : cuts) {
    double ax, ay, bx, by;
    if (!clip_line(l, box, ax, ay, bx, by)) continue;
    out << "  <line class=\"cut\" x1=\"" << num(ax) << "\" y1=\"" << num(-ay) << "\" x2=\"" << num(bx)
        << "\" y2=\"" << num(-by) << "\" stroke=\"gray\" stroke-width=\"" << num(stroke / 2) << "\"/>\n";
  }
  for (std::size_t k = 0; k < matchings.size(); ++k) {
    for (const MatchPair& p : matchings[k].pairs()) {
      const Point& a = P.red(p.red);
      const Point& b = P.blue(p.blue);
      out << "  <line class=\"matching" << k << "\" x1=\"" << num(a.x.get_d()) << "\" y1=\"" << num(-a.y.get_d())
          << "\" x2=\"" << num(b.x.get_d()) << "\" y2=\"" << num(-b.y.get_d()) << "\" stroke=\"black\" stroke-width=\""
          << num(stroke) << '"';
      if (k > 0) out << " stroke-dasharray=\"" << num(4 * stroke) << ' ' << num(3 * stroke) << '"';
      out << "/>\n";
    }
  }
  for (const Point& p : P.reds()) {
    out << "  <circle cx=\"" << num(p.x.get_d()) << "\" cy=\"" << num(-p.y.get_d()) << "\" r=\"" << num(r)
        << "\" fill=\"red\"/>\n";
  }
  for (const Point& p : P.blues()) {
    out << "  <circle cx=\"" << num(p.x.get_d()) << "\" cy=\"" << num(-p.y.get_d()) << "\" r=\"" << num(r)
        << "\" fill=\"blue\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

void write_svg(const std::string& path, const std::string& svg) {
  std::ofstream f(path);
  if (!f || !(f << svg) || !f.flush()) throw std::runtime_error("cannot write " + path);
}

std::string frame_path(const std::string& stem, std::size_t i, std::size_t count) {
  const std::size_t width = std::max<std::size_t>(3, std::to_string(count > 0 ? count - 1 : 0).size());
  std::string idx = std::to_string(i);
  if (idx.size() < width) idx.insert(0, width - idx.size(), '0');
  return stem + "_" + idx + ".svg";
}

}  // namespace bimatch
