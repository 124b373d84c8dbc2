#pragma once

#include <optional>
#include <vector>

#include "bimatch/matching.hpp"

namespace bimatch {

inline constexpr int kDefaultEnumerationCap = 6;

// Cap from BIMATCH_ENUM_CAP if set to a positive integer, else the default.
int enumeration_cap();

// Every BR-matching of P once. Reds are taken in increasing x; the first
// unmatched red is paired with each admissible blue in index order. Throws
// CapExceededError when n exceeds the cap (enumeration_cap() if absent).
std::vector<BRMatching> enumerate_matchings(const BichromaticPointSet& P, std::optional<int> cap = std::nullopt);

// Nodes are the enumerated matchings; an edge joins two distinct compatible
// matchings.
struct CompatibleGraph {
  std::vector<BRMatching> nodes;
  std::vector<std::vector<int>> adjacency;

  std::optional<int> index_of(const BRMatching& m) const;
  std::size_t num_edges() const;
};

CompatibleGraph build_graph(const BichromaticPointSet& P, std::optional<int> cap = std::nullopt);

// BFS distances from node u (-1 where unreachable).
std::vector<int> distances_from(const CompatibleGraph& g, int u);
std::optional<int> distance(const CompatibleGraph& g, int u, int v);

struct GraphAnalysis {
  bool connected;
  std::optional<int> diameter;  // absent when disconnected
};

GraphAnalysis analyze(const CompatibleGraph& g);

// 4n points in convex position on the unit circle. Consecutive arcs
// P0..P3 of n points each; blues are P0 then P2, reds P1 then P3. M matches
// P0 with P1 and P2 with P3, M2 matches P1 with P2 and P3 with P0, each
// nested so that both are the only matchings of those arc pairs.
struct LowerBoundInstance {
  BichromaticPointSet P;
  BRMatching M;
  BRMatching M2;
};

LowerBoundInstance lower_bound_instance(int n);

}  // namespace bimatch
