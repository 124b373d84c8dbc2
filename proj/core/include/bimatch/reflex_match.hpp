#pragma once

#include <optional>
#include <vector>

#include "bimatch/gcg.hpp"

namespace bimatch {

struct ReflexPolygonInstance {
  std::vector<Point> polygon;  // simple, either orientation
  std::vector<bool> reflex;
  std::vector<std::optional<Color>> colors;  // needed on reflex vertices only
};

// Indices into the instance polygon.
struct ReflexSegment {
  int a;
  int b;

  friend auto operator<=>(const ReflexSegment&, const ReflexSegment&) = default;
};

// Perfect non-crossing matching of the flagged vertices with every segment in
// the closed polygon. Among all such matchings, returns the one whose pairs
// are lexicographically least in boundary order. Throws PreconditionError on
// an odd flagged count.
std::vector<ReflexSegment> match_reflex_in_polygon(const ReflexPolygonInstance& inst);

// Graph vertex ids.
struct ReflexPair {
  int red;
  int blue;

  friend auto operator<=>(const ReflexPair&, const ReflexPair&) = default;
};

// Matches all reflex vertices of g face by face inside the simplification.
// Every pair is bichromatic.
std::vector<ReflexPair> match_reflex_in_gcg(const Gcg& g);

}  // namespace bimatch
