#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bimatch/gcg.hpp"
#include "bimatch/hamsandwich.hpp"
#include "bimatch/matching.hpp"
#include "bimatch/reflex_match.hpp"

namespace bimatch {

// Free segments and graph vertices stand for input points through their
// tags: red_tag / blue_tag are indices into P.reds() / P.blues().
FreeSegment free_segment(const BichromaticPointSet& P, const MatchPair& pair);

// Construction state while walking up the crossing list s_1..s_k of a
// chromatic cut. "Up" is l.direction(); the left endpoint of s_t lies on the
// Negative side of l.
struct AugmentState {
  BichromaticPointSet P;
  BRMatching M;
  Line cut;
  CrossingList crossing;  // s_t is crossing[t - 1]
  Gcg X;
  int i;  // 1-based index of the current segment
  std::vector<FreeSegment> remaining;
  // Vertex ids in X of x_0 .. x_i; x_0 lies on the enclosing polygon.
  std::vector<int> attachments;

  int k() const { return static_cast<int>(crossing.size()); }
  const Point& x(int t) const;
  // Endpoints of s_t on the Negative / Positive side of the cut.
  Point left_end(int t) const;
  Point right_end(int t) const;
  // Location of x_t in the current configuration.
  Location location_of_x(int t) const;
};

// Checks the five walk invariants at the current index; empty when all hold.
std::vector<std::string> augment_invariant_failures(const AugmentState& s);

// Encloses the segments in an octagon R, attaches s_1 to the bottom crossing
// of the cut with R. Throws PreconditionError unless l is a chromatic cut.
AugmentState init_augment(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

struct Escape {
  enum class Via { Next, Left, Right };
  Via via;
  Location at;
};

// A point above the line through s_i, on s_{i+1} or on the first obstacles
// hit by extending s_i to the left or right, color-visible with x_i. Tried
// in that order.
std::optional<Escape> find_escape(const AugmentState& s);

// Extends s_i to its first obstacles on both sides and attaches x_{i+1} to
// x_i. Throws InternalError if an invariant fails afterwards or i == k.
AugmentState augment_step(const AugmentState& s);

struct Extension {
  Gcg G;
  int j;
  Point xj;
  Escape::Via via;
  std::vector<FreeSegment> remaining;  // segments still unglued
  int augment_steps;
  CrossingList crossing;
  Point x0;
  BichromaticPointSet P;
};

// Throws InternalError if the walk reaches s_k without an escape.
Extension build_extension(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

// Empty when the extension has its three defining properties.
std::vector<std::string> extension_failures(const Extension& e);

struct NextMatching {
  BRMatching matching;
  int j;
  MatchPair dropped;
  int augment_steps;
  int crossings;
};

// One reconfiguration step: a matching compatible with M that keeps
// s_1..s_{j-1}, drops s_j and adds no crossing of l below x_j. The contract
// is checked before returning; a failure throws InternalError.
NextMatching next_matching(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

struct AvoidCut {
  std::vector<BRMatching> sequence;  // starts at M
  std::vector<ChiMeasure> chi;       // chi of each sequence element
  std::vector<int> augment_steps;    // per step
  std::vector<int> crossings;        // |S| per step
};

// Repeats next_matching until no segment crosses l. Requires a ham-sandwich
// cut that passes through no crossing of two red-blue segments.
AvoidCut avoid_cut(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

struct ConnectTrace {
  int node;  // cut tree node the cut belongs to
  AvoidCut steps;
};

struct Connection {
  std::vector<BRMatching> sequence;  // M ... H
  HamSandwichMatching target;
  std::vector<ConnectTrace> trace;
};

// Sequence of pairwise compatible matchings from M to the ham-sandwich
// matching of P. Throws InvalidMatchingError if M is not a BR-matching.
Connection connect(const BichromaticPointSet& P, const BRMatching& M);

// M ... H ... M2, joining connect(P, M) with connect(P, M2) reversed.
std::vector<BRMatching> connect_pair(const BichromaticPointSet& P, const BRMatching& M, const BRMatching& M2);

struct SequenceViolation {
  std::size_t index;
  std::string message;
};

std::optional<SequenceViolation> verify_sequence(const BichromaticPointSet& P, const std::vector<BRMatching>& seq);

}  // namespace bimatch
