#pragma once

#include <string>

#include "traintrack/braid.hpp"
#include "traintrack/colour.hpp"
#include "traintrack/diagram.hpp"

namespace traintrack::render {

// Deterministic text picture, read bottom-to-top like the mathematics (the
// last printed line is the input boundary). Trains are labelled dots,
// alpha a merge, beta a split.
std::string render_diagram_ascii(const diagrams::DiagramWord& d, const ColourSet& colours);

// Deterministic standalone SVG of the same picture.
std::string render_diagram_svg(const diagrams::DiagramWord& d, const ColourSet& colours);

// Crossing diagram of a braid word, one row per letter, bottom-to-top.
std::string render_braid_ascii(const braids::ColouredBraid& b, const ColourSet& colours);

std::string render_braid_svg(const braids::ColouredBraid& b, const ColourSet& colours);

} // namespace traintrack::render
