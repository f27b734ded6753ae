#pragma once

#include <cstdint>
#include <random>

#include "traintrack/diagram.hpp"
#include "traintrack/twocells.hpp"

namespace traintrack::randomgen {

using Rng = std::mt19937_64;

// Uniform integer in [lo, hi].
int pick(Rng& rng, int lo, int hi);

// A valid diagram with `levels` levels, inputs in [min_inputs, max_inputs],
// widths kept within [1, width_cap]. Every intermediate choice is uniform
// over the legal (generator, offset) pairs.
diagrams::DiagramWord random_diagram(Rng& rng, const ColourSet& colours, int levels,
                                     int min_inputs = 1, int max_inputs = 4, int width_cap = 6);

// Like random_diagram but with the input count pinned (for composability).
diagrams::DiagramWord random_diagram_with_inputs(Rng& rng, const ColourSet& colours, int levels,
                                                 int inputs, int width_cap = 6);

ColourWord random_word(Rng& rng, const ColourSet& colours, int min_len, int max_len);

braids::ColouredBraid random_braid(Rng& rng, const ColourWord& source, int letters);

// A cell whose source and target both equal canonicalize(d): the embedding
// travels through `waypoints` random jittered frames and returns. Its braid
// is a typically nontrivial loop in the configuration space.
twocells::TrackedTwoCell random_loop_cell(Rng& rng, const diagrams::DiagramWord& d,
                                          int waypoints);

// A small random cell with the given source boundary: a mix of identities,
// whiskered generator cells, loop cells, and short braidings.
twocells::TrackedTwoCell random_cell(Rng& rng, const ColourSet& colours, int inputs,
                                     int max_levels);

} // namespace traintrack::randomgen
