#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "traintrack/braid.hpp"
#include "traintrack/diagram.hpp"
#include "traintrack/geometry.hpp"

namespace traintrack::twocells {

// Global conventions threaded through cell construction and extraction.
struct CellContext {
    int handedness = +1; // sign convention of the extraction sweep
};

// A 2-cell between two diagrams with the same boundary: canonical source and
// target words plus a concrete train motion connecting their embeddings. The
// derived braid of the path IS the cell's identity; the path is one chosen
// representative of it.
struct TrackedTwoCell {
    diagrams::DiagramWord source; // canonical
    diagrams::DiagramWord target; // canonical
    geometry::ConfigPath path;    // from embed(source) to embed(target)
};

TrackedTwoCell identity_cell(const diagrams::DiagramWord& d);

// Path concatenation; throws BoundaryMismatch unless target(u) = source(v).
TrackedTwoCell vcompose(const TrackedTwoCell& u, const TrackedTwoCell& v);

TrackedTwoCell invert_cell(const TrackedTwoCell& u);

// Horizontal pasting along a shared object: unstack D1#D2 side by side, run
// u and v simultaneously with a clearance gap, restack D1'#D2'. Comparison
// routes to/from the canonical embeddings are inserted automatically.
TrackedTwoCell hcompose(const TrackedTwoCell& u, const TrackedTwoCell& v);

// Tensor pasting: side-by-side simultaneous run with an x-shift and
// lift-translate-lower comparisons to the canonical tensor embeddings.
TrackedTwoCell tensor_cells(const TrackedTwoCell& u, const TrackedTwoCell& v);

// The seven generator cells. E: beta#alpha => id_I (counit). A: I alpha =>
// alpha I. B: beta I => I beta. L f: (I f)#alpha => alpha#f. R f: (f I)#alpha
// => alpha#f. Lbar f: beta#(I f) => f#beta. Rbar f: beta#(f I) => f#beta.
// All are trainless or carry exactly one train; their braids are identities.
enum class CellGen { E, A, B, L, R, Lbar, Rbar };

TrackedTwoCell generator_cell(CellGen name, ColourId colour = -1, bool inverse = false);

// The braiding T_{f,g}: f#g => g#f on End(I), assembled as the vertical
// composite of seven whiskered generator-cell steps through
//   f#g => f#(beta#alpha)#g => beta#(I.f)#alpha#g => beta#(I.f)#(g.I)#alpha
//       => beta#(g.I)#(I.f)#alpha => beta#(g.I)#alpha#f => g#(beta#alpha)#f
//       => g#f.
// Multi-letter words ride as serial trains, one whiskered step per letter.
TrackedTwoCell braiding_cell(const ColourWord& f, const ColourWord& g);

// The braid represented by the cell's path; boundary words are asserted to
// equal theta of the source/target diagrams.
braids::ColouredBraid extract_braid(const TrackedTwoCell& cell, const CellContext& ctx = {});

// Serial composite of trains f_1 # ... # f_k on one strand (I -> I).
diagrams::DiagramWord serial_diagram(const ColourWord& word);

// --- Axiom suites -----------------------------------------------------------

struct Failure {
    std::string instance;  // human-readable description of the failing input
    std::string lhs;       // rendered braid or diagram, left-hand side
    std::string rhs;
};

struct Report {
    std::string check;
    std::size_t instances = 0;
    std::vector<Failure> failures;

    bool passed() const { return failures.empty(); }
};

// check in {triangle_left, triangle_right, pentagon_A, interchange,
// naturality_conjugation, cocycle, confluence, weak_unit, contraction}.
// `budget` scales the randomized instance counts; `seed` fixes the RNG.
Report run_axiom_suite(const std::string& check, std::size_t budget, std::uint64_t seed,
                       const ColourSet& colours, const CellContext& ctx = {});

std::vector<std::string> axiom_suite_names();

} // namespace traintrack::twocells
