#pragma once

#include <string>

#include "chordforest/diagrams.hpp"

namespace chordforest::svg {

/// Standalone SVG 1.1 drawing: the circle, points 1..2n placed clockwise with
/// point 1 just above the 9 o'clock position, and one straight
/// <line class="chord"> per chord. Output depends only on the diagram.
std::string render(const diagrams::ChordDiagram& d);

}  // namespace chordforest::svg
