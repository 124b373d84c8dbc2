#pragma once

#include <string>
#include <vector>

#include "bimatch/matching.hpp"

namespace bimatch {

// Points as filled circles, the first matching solid, later ones dashed, cut
// lines thin and clipped to the view. Coordinates are printed with six
// significant digits, so the output is for viewing only.
std::string render_svg(const BichromaticPointSet& P, const std::vector<BRMatching>& matchings,
                       const std::vector<Line>& cuts = {});

// Throws std::runtime_error if the file cannot be written.
void write_svg(const std::string& path, const std::string& svg);

// File name for frame i of a sequence render: "<stem>_<i>.svg", zero-padded
// to the width of the largest index (at least 3 digits).
std::string frame_path(const std::string& stem, std::size_t i, std::size_t count);

}  // namespace bimatch
