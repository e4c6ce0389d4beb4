#pragma once

#include <string>

#include "ford/pipeline.hpp"

namespace ford {

// Boundary-plane picture of the analysis: every enumerated sphere's disk
// (visible solid, invisible dashed), the fundamental parallelogram, and the
// visible edge chords.  Deterministic element order and number formatting.
std::string render_svg(const FordAnalysis& analysis);

}  // namespace ford
