#pragma once

#include <fstream>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bimatch/matching.hpp"

namespace bimatch {

// Point file: one "x y color" record per line, color R or B, '#' starts a
// comment. Reds and blues are indexed in file order within their color.
// Syntax problems throw ParseError with the 1-based line number.
std::vector<ColoredPoint> parse_point_records(std::istream& in);
// Also validates the point set (PreconditionError).
BichromaticPointSet parse_points(std::istream& in);
BichromaticPointSet load_points(const std::string& path);
// Canonical form: reds, then blues.
void write_points(std::ostream& out, const BichromaticPointSet& P);

// Matching file: a line "n", then n lines "red blue".
struct MatchingFile {
  int n;
  BRMatching matching;
};

MatchingFile parse_matching(std::istream& in);
MatchingFile load_matching(const std::string& path);
void write_matching(std::ostream& out, int n, const BRMatching& m);

// Sequence file: "SEQ v1 n=<n> steps=<k>", an optional "# points: <path>"
// line, then k matchings of "red blue" lines separated by "--".
struct SequenceFile {
  int n;
  std::optional<std::string> points;
  std::vector<BRMatching> steps;
};

SequenceFile parse_sequence(std::istream& in);
SequenceFile load_sequence(const std::string& path);
void write_sequence(std::ostream& out, const SequenceFile& seq);

// Opens path for reading; throws std::runtime_error naming the path.
std::ifstream open_input(const std::string& path);

}  // namespace bimatch
