#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "bimatch/errors.hpp"
#include "bimatch/geometry.hpp"

namespace bimatch {

// P = B ∪ R with |R| = |B| = n >= 1, in general position.
class BichromaticPointSet {
 public:
  BichromaticPointSet(std::vector<Point> reds, std::vector<Point> blues);
  static BichromaticPointSet from_colored(const std::vector<ColoredPoint>& points);

  std::size_t n() const { return reds_.size(); }
  const Point& red(int i) const { return reds_.at(static_cast<std::size_t>(i)); }
  const Point& blue(int i) const { return blues_.at(static_cast<std::size_t>(i)); }
  const std::vector<Point>& reds() const { return reds_; }
  const std::vector<Point>& blues() const { return blues_; }
  std::vector<ColoredPoint> colored_points() const;

  // Sub-instance on the given indices (order preserved).
  BichromaticPointSet subset(const std::vector<int>& red_ids, const std::vector<int>& blue_ids) const;

 private:
  std::vector<Point> reds_;
  std::vector<Point> blues_;
};

struct MatchPair {
  int red;
  int blue;

  friend auto operator<=>(const MatchPair&, const MatchPair&) = default;
};

// Red/blue index pairs, kept sorted by red index.
class BRMatching {
 public:
  BRMatching() = default;
  explicit BRMatching(std::vector<MatchPair> pairs);

  const std::vector<MatchPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool contains(const MatchPair& p) const;
  // Blue partner of red i, if any.
  std::optional<int> blue_of(int red) const;

  friend auto operator<=>(const BRMatching&, const BRMatching&) = default;

 private:
  std::vector<MatchPair> pairs_;
};

std::string to_string(const BRMatching& m);

Segment segment_of(const BichromaticPointSet& P, const MatchPair& pair);

struct MatchingViolation {
  enum class Kind { NotPerfect, Crossing };
  Kind kind;
  std::string message;
  // NotPerfect: the offending pair(s); Crossing: the two crossing pairs.
  std::vector<MatchPair> witnesses;
};

// std::nullopt means the matching is a valid BR-matching. Throws
// InvalidMatchingError on an index outside [0, n).
std::optional<MatchingViolation> validate_matching(const BichromaticPointSet& P, const BRMatching& M);
// Throws InvalidMatchingError when validate_matching reports a violation.
void require_valid(const BichromaticPointSet& P, const BRMatching& M);

bool compatible(const BichromaticPointSet& P, const BRMatching& M, const BRMatching& M2);

struct Crossing {
  MatchPair pair;
  Point at;
};

// Segments crossing the cut, sorted bottom-to-top along l.direction().
using CrossingList = std::vector<Crossing>;

CrossingList crossing_list(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

// Colour of the endpoint on the Negative side of l ("left endpoint").
Color left_color(const BichromaticPointSet& P, const MatchPair& pair, const Line& l);

bool is_chromatic_cut(const BichromaticPointSet& P, const BRMatching& M, const Line& l);

// C_P: every red-blue segment crossing l, sorted along l.
std::vector<Crossing> crossing_candidates(const BichromaticPointSet& P, const Line& l);

// Binary number over C_P, most significant bit first.
class ChiMeasure {
 public:
  explicit ChiMeasure(std::vector<bool> bits) : bits_(std::move(bits)) {}

  const std::vector<bool>& bits() const { return bits_; }
  std::size_t popcount() const;
  std::string to_string() const;

  friend bool operator==(const ChiMeasure&, const ChiMeasure&) = default;
  friend std::strong_ordering operator<=>(const ChiMeasure& a, const ChiMeasure& b);

 private:
  std::vector<bool> bits_;
};

ChiMeasure chi(const BichromaticPointSet& P, const Line& l, const BRMatching& M);

// Throws PreconditionError when l passes through a point of P.
void require_line_avoids_points(const BichromaticPointSet& P, const Line& l);

}  // namespace bimatch
