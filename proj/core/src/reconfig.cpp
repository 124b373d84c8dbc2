#include "bimatch/reconfig.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace bimatch {

namespace {

// Smallest input-bounding octagon (box grown by 1, corners clipped) whose
// vertices avoid the cut and every line through two input points.
std::vector<Point> enclosing_octagon(const BichromaticPointSet& P, const Line& l) {
  std::vector<Point> pts = P.reds();
  pts.insert(pts.end(), P.blues().begin(), P.blues().end());
  Scalar x0 = pts[0].x, x1 = pts[0].x, y0 = pts[0].y, y1 = pts[0].y;
  for (const Point& p : pts) {
    x0 = std::min(x0, p.x);
    x1 = std::max(x1, p.x);
    y0 = std::min(y0, p.y);
    y1 = std::max(y1, p.y);
  }
  x0 -= 1;
  y0 -= 1;
  x1 += 1;
  y1 += 1;
  for (int attempt = 0; attempt < 64; ++attempt) {
    const Scalar c = ratio(64 - attempt, 128);
    std::vector<Point> oct = {{x0 + c, y0}, {x1 - c, y0}, {x1, y0 + c}, {x1, y1 - c},
                              {x1 - c, y1}, {x0 + c, y1}, {x0, y1 - c}, {x0, y0 + c}};
    bool generic = true;
    for (const Point& v : oct) {
      if (line_side(l, v) == Side::On) generic = false;
      for (std::size_t a = 0; a < pts.size() && generic; ++a) {
        for (std::size_t b = a + 1; b < pts.size() && generic; ++b) {
          if (orientation(pts[a], pts[b], v) == Orientation::Collinear) generic = false;
        }
      }
      if (!generic) break;
    }
    if (generic) return oct;
  }
  throw InternalError("no generic enclosing polygon found");
}

int free_index(std::span<const FreeSegment> free, const MatchPair& pair) {
  for (int s = 0; s < static_cast<int>(free.size()); ++s) {
    if (free[s].red_tag == pair.red && free[s].blue_tag == pair.blue) return s;
  }
  return -1;
}

int vertex_of(const Pslg& g, const Point& p) {
  const auto v = g.find_vertex(p);
  if (!v) throw InternalError("expected a graph vertex at " + to_string(p));
  return *v;
}

// Rethrows a failed precondition of a guaranteed step as an internal error.
template <class F>
auto guaranteed(const char* what, F&& f) {
  try {
    return f();
  } catch (const PreconditionError& e) {
    throw InternalError(std::string(what) + ": " + e.what());
  }
}

struct Target {
  Point toward;
  int edge = -1;
  int segment = -1;
};

// Directions along the obstacle at `hit` that leave the line (l, r) to its
// left ("above").
std::vector<Target> targets_above(const Pslg& g, std::span<const FreeSegment> free, const Location& hit,
                                  const Point& l, const Point& r) {
  std::vector<Target> out;
  auto above = [&](const Point& p) { return orientation(l, r, p) == Orientation::Left; };
  switch (hit.kind) {
    case Location::Kind::Segment:
      for (const Point& e : {free[hit.id].red, free[hit.id].blue}) {
        if (above(e)) out.push_back({e, -1, hit.id});
      }
      break;
    case Location::Kind::Edge:
      for (int v : {g.edges()[hit.id].u, g.edges()[hit.id].v}) {
        if (above(g.point(v))) out.push_back({g.point(v), hit.id, -1});
      }
      break;
    case Location::Kind::Vertex:
      for (int h : g.outgoing(hit.id)) {
        if (above(g.point(g.target(h)))) out.push_back({g.point(g.target(h)), h >> 1, -1});
      }
      break;
  }
  return out;
}

// A point just above the hit, seeing all of [l, r], color-visible with `from`.
std::optional<Location> attachment_above(const Pslg& g, std::span<const FreeSegment> free, const Location& hit,
                                         const Point& l, const Point& r, const Location& from) {
  for (const Target& tg : targets_above(g, free, hit, l, r)) {
    Scalar t(1, 2);
    for (int halving = 0; halving < 64; ++halving, t /= 2) {
      const Point y = lerp(hit.p, tg.toward, t);
      if (!triangle_clear(g, free, y, l, r, tg.edge, tg.segment)) continue;
      const Location yl = tg.segment >= 0 ? Location::on_segment(tg.segment, y) : Location::on_edge(tg.edge, y);
      if (color_visible(g, free, from, yl)) return yl;
      break;
    }
  }
  return std::nullopt;
}

BRMatching to_local(const BRMatching& M, const std::vector<int>& reds, const std::vector<int>& blues) {
  std::map<int, int> rl, bl;
  for (std::size_t i = 0; i < reds.size(); ++i) rl[reds[i]] = static_cast<int>(i);
  for (std::size_t i = 0; i < blues.size(); ++i) bl[blues[i]] = static_cast<int>(i);
  std::vector<MatchPair> out;
  for (const MatchPair& p : M.pairs()) out.push_back({rl.at(p.red), bl.at(p.blue)});
  return BRMatching(std::move(out));
}

BRMatching to_global(const BRMatching& M, const std::vector<int>& reds, const std::vector<int>& blues) {
  std::vector<MatchPair> out;
  for (const MatchPair& p : M.pairs()) out.push_back({reds.at(p.red), blues.at(p.blue)});
  return BRMatching(std::move(out));
}

BRMatching restrict_to(const BRMatching& M, const std::vector<int>& reds) {
  std::vector<MatchPair> out;
  for (const MatchPair& p : M.pairs()) {
    if (std::find(reds.begin(), reds.end(), p.red) != reds.end()) out.push_back(p);
  }
  return BRMatching(std::move(out));
}

BRMatching merge(const BRMatching& a, const BRMatching& b) {
  std::vector<MatchPair> out = a.pairs();
  out.insert(out.end(), b.pairs().begin(), b.pairs().end());
  return BRMatching(std::move(out));
}

}  // namespace

FreeSegment free_segment(const BichromaticPointSet& P, const MatchPair& pair) {
  return FreeSegment{P.red(pair.red), P.blue(pair.blue), pair.red, pair.blue};
}

const Point& AugmentState::x(int t) const { return crossing.at(static_cast<std::size_t>(t - 1)).at; }

Point AugmentState::left_end(int t) const {
  const MatchPair& pr = crossing.at(static_cast<std::size_t>(t - 1)).pair;
  return line_side(cut, P.red(pr.red)) == Side::Negative ? P.red(pr.red) : P.blue(pr.blue);
}

Point AugmentState::right_end(int t) const {
  const MatchPair& pr = crossing.at(static_cast<std::size_t>(t - 1)).pair;
  return line_side(cut, P.red(pr.red)) == Side::Negative ? P.blue(pr.blue) : P.red(pr.red);
}

Location AugmentState::location_of_x(int t) const {
  const int s = free_index(remaining, crossing.at(static_cast<std::size_t>(t - 1)).pair);
  if (s >= 0) return Location::on_segment(s, x(t));
  const auto loc = locate_boundary(X.graph(), {}, x(t));
  if (!loc) throw InternalError("crossing point " + to_string(x(t)) + " is on no segment");
  return *loc;
}

std::vector<std::string> augment_invariant_failures(const AugmentState& s) {
  std::vector<std::string> out;
  const Pslg& g = s.X.graph();
  const int i = s.i;
  const int xi = s.attachments.at(static_cast<std::size_t>(i));
  const std::string at = " (i = " + std::to_string(i) + ")";
  const auto nb = g.neighbors(xi);
  auto adjacent = [&](int v) { return std::find(nb.begin(), nb.end(), v) != nb.end(); };

  if (i < s.k() && !visible(g, s.remaining, g.point(xi), s.x(i + 1))) out.push_back("(a) x_i does not see x_i+1" + at);
  if (!adjacent(s.attachments[static_cast<std::size_t>(i - 1)])) out.push_back("(a) x_i-1 is not adjacent to x_i" + at);

  const Point l = s.left_end(i);
  const Point r = s.right_end(i);
  int neg = 0, pos = 0;
  for (int w : nb) {
    if (!on_segment(g.point(w), l, r)) continue;
    const Side side = line_side(s.cut, g.point(w));
    if (side == Side::Negative) ++neg;
    if (side == Side::Positive) ++pos;
  }
  if (neg == 0 || pos == 0) out.push_back("(b) x_i lacks a neighbor on s_i on each side of the cut" + at);

  const auto lv = g.find_vertex(l);
  const auto rv = g.find_vertex(r);
  if (!lv || !rv || !is_reflex_vertex(g, *lv) || !is_reflex_vertex(g, *rv)) {
    out.push_back("(c) an endpoint of s_i is not reflex" + at);
  }

  if (i >= 2) {
    const auto pl = g.find_vertex(s.left_end(i - 1));
    const auto pr = g.find_vertex(s.right_end(i - 1));
    if (!pl || !pr || is_reflex_vertex(g, *pl) || is_reflex_vertex(g, *pr)) {
      out.push_back("(d) an endpoint of s_i-1 is still reflex" + at);
    }
    if (!is_isolated(g, s.attachments[static_cast<std::size_t>(i - 1)])) out.push_back("(d) x_i-1 is not isolated" + at);
  }

  const Point up = s.cut.direction();
  Scalar t = 1;
  std::optional<Point> viewer;
  for (int halving = 0; halving < 64; ++halving, t /= 2) {
    const Point y = g.point(xi) + t * up;
    if (visible(g, s.remaining, g.point(xi), y)) {
      viewer = y;
      break;
    }
  }
  if (!viewer) {
    out.push_back("(e) nothing above x_i sees it" + at);
  } else {
    const ViewColor seen = color_viewed_from(g, s.remaining, Location::vertex(g, xi), *viewer);
    const MatchPair& pr = s.crossing[static_cast<std::size_t>(i - 1)].pair;
    const ViewColor want = s.P.red(pr.red) == r ? ViewColor::Red : ViewColor::Blue;
    if (seen != want) out.push_back("(e) s_i seen from above is " + to_string(seen) + ", right endpoint is " + to_string(want) + at);
  }
  return out;
}

namespace {

void require_invariants(const AugmentState& s) {
  const auto bad = augment_invariant_failures(s);
  if (!bad.empty()) throw InternalError("walk invariant broken: " + bad.front());
}

}  // namespace

AugmentState init_augment(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  require_valid(P, M);
  if (!is_chromatic_cut(P, M, l)) throw PreconditionError("the line is not a chromatic cut of the matching");
  CrossingList crossing = crossing_list(P, M, l);

  const std::vector<Point> oct = enclosing_octagon(P, l);
  std::vector<PslgVertex> verts;
  std::vector<PslgEdge> edges;
  for (std::size_t i = 0; i < oct.size(); ++i) {
    verts.push_back(PslgVertex{oct[i], std::nullopt, -1});
    edges.push_back(PslgEdge{static_cast<int>(i), static_cast<int>((i + 1) % oct.size())});
  }
  const Gcg R(build_pslg(std::move(verts), std::move(edges)));

  std::optional<Point> x0;
  for (std::size_t i = 0; i < oct.size(); ++i) {
    const auto hit = segment_line_intersection(Segment(oct[i], oct[(i + 1) % oct.size()]), l);
    if (hit && (!x0 || l.position(*hit) < l.position(*x0))) x0 = hit;
  }
  if (!x0) throw InternalError("cut misses the enclosing polygon");

  std::vector<FreeSegment> free;
  for (const MatchPair& p : M.pairs()) free.push_back(free_segment(P, p));
  const int s1 = free_index(free, crossing.front().pair);
  const Location x0loc = *locate_boundary(R.graph(), {}, *x0);
  Gcg X1 = guaranteed("first glue", [&] {
    return glue(R, free, Location::on_segment(s1, crossing.front().at), x0loc);
  });
  free.erase(free.begin() + s1);
  std::vector<int> att = {vertex_of(X1.graph(), *x0), vertex_of(X1.graph(), crossing.front().at)};
  AugmentState s{P, M, l, std::move(crossing), std::move(X1), 1, std::move(free), std::move(att)};
  require_invariants(s);
  return s;
}

std::optional<Escape> find_escape(const AugmentState& s) {
  const Pslg& g = s.X.graph();
  const int i = s.i;
  const Location xi = Location::vertex(g, s.attachments.at(static_cast<std::size_t>(i)));
  if (i < s.k()) {
    const Location next = s.location_of_x(i + 1);
    if (color_visible(g, s.remaining, xi, next)) return Escape{Escape::Via::Next, next};
  }
  const Point l = s.left_end(i);
  const Point r = s.right_end(i);
  const std::pair<Escape::Via, std::pair<Point, Point>> sides[] = {{Escape::Via::Left, {l, l - r}},
                                                                    {Escape::Via::Right, {r, r - l}}};
  for (const auto& [via, ray] : sides) {
    const auto hit = shoot_ray(g, s.remaining, ray.first, ray.second);
    if (!hit) throw InternalError("extension of s_i leaves the enclosing polygon");
    if (auto y = attachment_above(g, s.remaining, hit->where, l, r, xi)) return Escape{via, *y};
  }
  return std::nullopt;
}

AugmentState augment_step(const AugmentState& s) {
  if (s.i >= s.k()) throw InternalError("reached the top crossing segment without an escape");
  const Pslg& g = s.X.graph();
  const Point l = s.left_end(s.i);
  const Point r = s.right_end(s.i);
  const auto hit_l = shoot_ray(g, s.remaining, l, l - r);
  const auto hit_r = shoot_ray(g, s.remaining, r, r - l);
  if (!hit_l || !hit_r) throw InternalError("extension of s_i leaves the enclosing polygon");

  PslgBuilder b(g);
  std::vector<bool> glued(s.remaining.size(), false);
  auto materialize = [&](const Location& at) -> int {
    switch (at.kind) {
      case Location::Kind::Vertex: return at.id;
      case Location::Kind::Edge: return *b.vertex_at(at.p);
      case Location::Kind::Segment: {
        const FreeSegment& seg = s.remaining[at.id];
        glued[at.id] = true;
        const int z = b.add_vertex(PslgVertex{at.p, std::nullopt, -1});
        b.add_edge(z, b.add_vertex(PslgVertex{seg.red, Color::Red, seg.red_tag}));
        b.add_edge(z, b.add_vertex(PslgVertex{seg.blue, Color::Blue, seg.blue_tag}));
        return z;
      }
    }
    return -1;
  };
  const int vl = materialize(hit_l->where);
  const int vr = materialize(hit_r->where);
  b.add_edge(vertex_of(g, l), vl);
  b.add_edge(vertex_of(g, r), vr);
  Pslg extended = b.build();
  if (const auto bad = gcg_violations(extended); !bad.empty()) {
    throw InternalError("extending s_i broke the graph: " + bad.front());
  }

  AugmentState next{s.P, s.M, s.cut, s.crossing, trusted_gcg(std::move(extended)), s.i, {}, s.attachments};
  for (std::size_t t = 0; t < s.remaining.size(); ++t) {
    if (!glued[t]) next.remaining.push_back(s.remaining[t]);
  }
  const Location to = next.location_of_x(s.i + 1);
  const Location from = Location::vertex(next.X.graph(), s.attachments.at(static_cast<std::size_t>(s.i)));
  Gcg attached = guaranteed("attaching x_i+1", [&] { return glue_cut(next.X, next.remaining, to, from); });
  if (to.kind == Location::Kind::Segment) next.remaining.erase(next.remaining.begin() + to.id);
  next.X = std::move(attached);
  next.i = s.i + 1;
  next.attachments.push_back(vertex_of(next.X.graph(), next.x(next.i)));
  require_invariants(next);
  return next;
}

Extension build_extension(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  AugmentState s = init_augment(P, M, l);
  int steps = 0;
  std::optional<Escape> esc;
  while (!(esc = find_escape(s))) {
    s = augment_step(s);
    ++steps;
  }
  const Location xj = Location::vertex(s.X.graph(), s.attachments.at(static_cast<std::size_t>(s.i)));
  Gcg G = guaranteed("attaching the escape", [&] { return glue_cut(s.X, s.remaining, esc->at, xj); });
  std::vector<FreeSegment> rest = s.remaining;
  if (esc->at.kind == Location::Kind::Segment) rest.erase(rest.begin() + esc->at.id);
  return Extension{std::move(G), s.i, s.x(s.i), esc->via, std::move(rest), steps, s.crossing,
                   s.X.graph().point(s.attachments.front()), P};
}

std::vector<std::string> extension_failures(const Extension& e) {
  std::vector<std::string> out;
  const Pslg& g = e.G.graph();
  const Simplification simp = simplify(g);
  for (int t = 1; t <= e.j; ++t) {
    const MatchPair& pr = e.crossing.at(static_cast<std::size_t>(t - 1)).pair;
    const Point a = e.P.red(pr.red);
    const Point b = e.P.blue(pr.blue);
    const auto va = g.find_vertex(a);
    const auto vb = g.find_vertex(b);
    const std::string name = "s_" + std::to_string(t);
    if (!va || !vb) {
      out.push_back(name + " is not in the graph");
      continue;
    }
    const bool reflex = is_reflex_vertex(g, *va) && is_reflex_vertex(g, *vb);
    const bool neither = !is_reflex_vertex(g, *va) && !is_reflex_vertex(g, *vb);
    if (t == e.j && !reflex) out.push_back(name + " endpoints are not both reflex");
    if (t < e.j && !neither) out.push_back(name + " has a reflex endpoint");
    for (const Scalar& q : {Scalar(1, 4), Scalar(1, 2), Scalar(3, 4)}) {
      if (locate_in_simplification(simp, lerp(a, b, q)) != PolygonLocation::Outside) {
        out.push_back(name + " meets the simplification at " + to_string(lerp(a, b, q)));
        break;
      }
    }
  }
  if (locate_in_simplification(simp, e.xj) != PolygonLocation::Outside ||
      locate_in_simplification(simp, e.x0) != PolygonLocation::Outside ||
      !open_segment_avoids_simplification(simp, e.xj, e.x0)) {
    out.push_back("the downward ray from x_j meets the simplification");
  }
  return out;
}

NextMatching next_matching(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  Extension ext = build_extension(P, M, l);
  const Gcg full = guaranteed("gluing the remaining segments", [&] { return glue_matching(ext.G, ext.remaining); });
  std::vector<MatchPair> pairs;
  const Pslg& g = full.graph();
  for (const ReflexPair& rp : match_reflex_in_gcg(full)) {
    const int r = g.vertex(rp.red).tag;
    const int b = g.vertex(rp.blue).tag;
    if (r < 0 || b < 0) throw InternalError("a reflex vertex is not an input point");
    pairs.push_back({r, b});
  }
  for (int t = 1; t < ext.j; ++t) pairs.push_back(ext.crossing[static_cast<std::size_t>(t - 1)].pair);
  BRMatching out(std::move(pairs));

  const MatchPair dropped = ext.crossing[static_cast<std::size_t>(ext.j - 1)].pair;
  if (auto v = validate_matching(P, out)) throw InternalError("next matching is invalid: " + v->message);
  if (!compatible(P, M, out)) throw InternalError("next matching is not compatible with its predecessor");
  if (out.contains(dropped)) throw InternalError("next matching keeps s_j");
  const Scalar limit = l.position(ext.xj);
  std::vector<MatchPair> below;
  for (const Crossing& c : crossing_list(P, out, l)) {
    if (l.position(c.at) < limit) below.push_back(c.pair);
  }
  std::vector<MatchPair> want;
  for (int t = 1; t < ext.j; ++t) want.push_back(ext.crossing[static_cast<std::size_t>(t - 1)].pair);
  if (below != want) throw InternalError("next matching changes the crossings below x_j");
  return NextMatching{std::move(out), ext.j, dropped, ext.augment_steps, static_cast<int>(ext.crossing.size())};
}

AvoidCut avoid_cut(const BichromaticPointSet& P, const BRMatching& M, const Line& l) {
  require_valid(P, M);
  if (!is_ham_sandwich_cut(P, l)) throw PreconditionError("the line is not a ham-sandwich cut: " + to_string(l));
  std::vector<Scalar> positions;
  const int n = static_cast<int>(P.n());
  for (int r = 0; r < n; ++r) {
    for (int b = 0; b < n; ++b) {
      if (auto x = segment_line_intersection(Segment(P.red(r), P.blue(b)), l)) positions.push_back(l.position(*x));
    }
  }
  std::sort(positions.begin(), positions.end());
  if (std::adjacent_find(positions.begin(), positions.end()) != positions.end()) {
    throw PreconditionError("the cut passes through a crossing of two red-blue segments");
  }

  AvoidCut out;
  out.sequence.push_back(M);
  out.chi.push_back(chi(P, l, M));
  while (!crossing_list(P, out.sequence.back(), l).empty()) {
    if (!is_chromatic_cut(P, out.sequence.back(), l)) throw InternalError("a crossed ham-sandwich cut is not chromatic");
    NextMatching step = next_matching(P, out.sequence.back(), l);
    ChiMeasure c = chi(P, l, step.matching);
    if (!(c < out.chi.back())) throw InternalError("chi did not decrease");
    out.sequence.push_back(std::move(step.matching));
    out.chi.push_back(std::move(c));
    out.augment_steps.push_back(step.augment_steps);
    out.crossings.push_back(step.crossings);
  }
  return out;
}

Connection connect(const BichromaticPointSet& P, const BRMatching& M) {
  require_valid(P, M);
  Connection out{{}, ham_sandwich_matching(P), {}};
  const CutTree& tree = out.target.tree;

  std::function<std::vector<BRMatching>(int, const BRMatching&)> rec = [&](int id, const BRMatching& Mg) {
    const CutNode& node = tree.node(id);
    if (node.is_leaf()) return std::vector<BRMatching>{Mg};
    const BichromaticPointSet sub = P.subset(node.reds, node.blues);
    AvoidCut ac = avoid_cut(sub, to_local(Mg, node.reds, node.blues), node.cut->line);
    std::vector<BRMatching> seq;
    for (const BRMatching& m : ac.sequence) seq.push_back(to_global(m, node.reds, node.blues));
    out.trace.push_back({id, std::move(ac)});

    const BRMatching last = seq.back();
    const std::vector<BRMatching> a = rec(node.positive, restrict_to(last, tree.node(node.positive).reds));
    const std::vector<BRMatching> b = rec(node.negative, restrict_to(last, tree.node(node.negative).reds));
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t t = 1; t < len; ++t) {
      seq.push_back(merge(a[std::min(t, a.size() - 1)], b[std::min(t, b.size() - 1)]));
    }
    return seq;
  };

  out.sequence = rec(0, M);
  if (out.sequence.back() != out.target.matching) throw InternalError("connection does not end at the target");
  return out;
}

std::vector<BRMatching> connect_pair(const BichromaticPointSet& P, const BRMatching& M, const BRMatching& M2) {
  std::vector<BRMatching> seq = connect(P, M).sequence;
  std::vector<BRMatching> back = connect(P, M2).sequence;
  seq.insert(seq.end(), back.rbegin() + 1, back.rend());
  return seq;
}

std::optional<SequenceViolation> verify_sequence(const BichromaticPointSet& P, const std::vector<BRMatching>& seq) {
  for (std::size_t i = 0; i < seq.size(); ++i) {
    try {
      if (auto v = validate_matching(P, seq[i])) return SequenceViolation{i, v->message};
    } catch (const InvalidMatchingError& e) {
      return SequenceViolation{i, e.what()};
    }
    if (i > 0 && !compatible(P, seq[i - 1], seq[i])) {
      return SequenceViolation{i, "matching " + std::to_string(i) + " is not compatible with matching " +
                                      std::to_string(i - 1)};
    }
  }
  return std::nullopt;
}

}  // namespace bimatch
