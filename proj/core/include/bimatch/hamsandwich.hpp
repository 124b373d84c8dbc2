#pragma once

#include <optional>
#include <vector>

#include "bimatch/matching.hpp"

namespace bimatch {

struct SideCounts {
  int blue_pos = 0;
  int red_pos = 0;
  int blue_neg = 0;
  int red_neg = 0;

  friend bool operator==(const SideCounts&, const SideCounts&) = default;
};

// A line through no point of P with floor(n/2) blue and floor(n/2) red
// points on one of its sides.
struct HamSandwichCut {
  Line line;
  SideCounts counts;
};

// Counts points per side; nullopt if l passes through a point.
std::optional<SideCounts> side_counts(const BichromaticPointSet& P, const Line& l);
bool is_ham_sandwich_cut(const BichromaticPointSet& P, const Line& l);

// Exhaustive candidate scan: every line through two input points perturbed
// into each of its four neighbouring cells (two translations, two small
// rotations about the midpoint), plus vertical lines between consecutive
// x-coordinates. Returns the lexicographically least valid candidate that
// also avoids every crossing point of two bichromatic segments.
HamSandwichCut find_ham_sandwich_cut(const BichromaticPointSet& P);
// All valid candidates from the same scan, sorted.
std::vector<Line> ham_sandwich_cut_candidates(const BichromaticPointSet& P);

struct CutNode {
  // Indices into the point set the tree was built for.
  std::vector<int> reds;
  std::vector<int> blues;
  // Absent on leaves (one red, one blue).
  std::optional<HamSandwichCut> cut;
  int positive = -1;
  int negative = -1;

  bool is_leaf() const { return !cut.has_value(); }
};

class CutTree {
 public:
  const CutNode& root() const { return nodes_.front(); }
  const CutNode& node(int id) const { return nodes_.at(static_cast<std::size_t>(id)); }
  const std::vector<CutNode>& nodes() const { return nodes_; }
  int depth() const;

  // Used by the builder.
  int add(CutNode node);
  CutNode& mutable_node(int id) { return nodes_.at(static_cast<std::size_t>(id)); }

 private:
  std::vector<CutNode> nodes_;
};

struct HamSandwichMatching {
  BRMatching matching;
  CutTree tree;
};

HamSandwichMatching ham_sandwich_matching(const BichromaticPointSet& P);

}  // namespace bimatch
