#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

#include "traintrack/braid.hpp"
#include "traintrack/colour.hpp"
#include "traintrack/diagram.hpp"

namespace traintrack::geometry {

// Exact coordinates: all motions are piecewise linear, so every crossing
// time is rational and crossing detection can be decided exactly.
using Rat = boost::multiprecision::cpp_rational;

struct LabelledPoint {
    ColourId colour = -1;
    Rat x;
    Rat y;

    bool operator==(const LabelledPoint& other) const {
        return colour == other.colour && x == other.x && y == other.y;
    }
};

// A finite labelled configuration in the plane. Point identity is positional:
// index k refers to the same train in every keyframe of a path.
struct Configuration {
    std::vector<LabelledPoint> points;

    bool operator==(const Configuration& other) const { return points == other.points; }
};

// Keyframed motion; between consecutive keyframes every point moves linearly.
struct ConfigPath {
    std::vector<Configuration> keyframes; // >= 1; column k = one train throughout

    const Configuration& start() const { return keyframes.front(); }
    const Configuration& end() const { return keyframes.back(); }
};

// Train positions of a canonical word: the train at level t, offset k sits at
// (x, y) = (k + 1, t + 1/2); alpha/beta emit nothing. Point order = canonical
// word order. Throws NotCanonical for non-canonical input.
Configuration embed(const diagrams::DiagramWord& d);

// Same placement rule for an arbitrary (possibly non-canonical) level word.
Configuration layout(const diagrams::DiagramWord& d);

// Colour word read off by the lexicographic (x, y) key; throws KeyCollision
// if two points share a key.
ColourWord linearize(const Configuration& c);

// Sweep the path and emit one Artin letter per key-order swap. Sign: +1 when
// the point whose key increases lies above the other at the swap instant,
// multiplied by `handedness`. Ambiguities (coincident points, equal-y swaps)
// get one deterministic epsilon-perturbation retry; then DegeneratePath.
braids::ColouredBraid braid_of_path(const ConfigPath& path, int handedness = +1);

ConfigPath reverse_path(const ConfigPath& path);

// Glue q after p; endpoint configurations must agree as point sets (columns
// are re-matched by exact position and colour). Throws BoundaryMismatch.
ConfigPath concatenate_paths(const ConfigPath& p, const ConfigPath& q);

// Two-keyframe motion realizing the interchange of levels t and t+1: layouts
// of the word before and after the swap, trains matched by node identity.
// Throws NotSwappable.
ConfigPath interchange_path(const diagrams::DiagramWord& d, int t);

// Motion along a whole interchange route (sequence of swap positions applied
// left to right), trains tracked through every swap.
ConfigPath route_path(const diagrams::DiagramWord& from, const std::vector<int>& swaps);

// Comparison motion from the side-by-side representative of a composite
// (trains of D1 at embed(D1), trains of D2 shifted right by `gap`) to the
// stacked representative (D2's trains lifted by #levels(D1) over D1): lift
// D2 by #levels(D1)+1 staying right, translate left, lower by 1. When
// `gap` <= 0 it defaults to 1 + the max interior width of D1 and D2.
// Both inputs must be canonical and composable.
ConfigPath stacking_path(const diagrams::DiagramWord& d1, const diagrams::DiagramWord& d2,
                         int gap = 0);

// Clearance gap that stacking_path defaults to.
int default_gap(const diagrams::DiagramWord& d1, const diagrams::DiagramWord& d2);

struct Theta {
    ColourWord word;
    Configuration config;
};

// theta(D) = the canonical linearization and embedding of D's isotopy class.
Theta theta(const diagrams::DiagramWord& d);

// --- Path building helpers -------------------------------------------------

ConfigPath constant_path(const Configuration& c);

Configuration translated(const Configuration& c, const Rat& dx, const Rat& dy);

// Reorder the columns of `path` so its start equals `reference` column-for-
// column (matching by exact position and colour); throws BoundaryMismatch if
// the start is not a permutation of `reference`.
ConfigPath align_columns_to(const ConfigPath& path, const Configuration& reference);

// Run two paths simultaneously on a merged time grid, q's points shifted
// right by dx. Point columns: p's first, then q's.
ConfigPath side_by_side(const ConfigPath& p, const ConfigPath& q, const Rat& dx);

// Largest x (resp. y) over all keyframes; zero for trainless paths.
Rat max_x(const ConfigPath& path);
Rat max_y(const ConfigPath& path);

} // namespace traintrack::geometry
