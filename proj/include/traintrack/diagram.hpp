#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "traintrack/colour.hpp"
#include "traintrack/errors.hpp"

namespace traintrack::diagrams {

// Node species of a train track diagram: trains are (1,1)-valent and carry a
// colour, alpha merges two strands (2,1), beta splits one strand (1,2).
enum class GenKind { Train, Alpha, Beta };

struct Generator {
    GenKind kind = GenKind::Train;
    ColourId colour = -1; // meaningful only for Train

    static Generator train(ColourId c) { return Generator{GenKind::Train, c}; }
    static Generator alpha() { return Generator{GenKind::Alpha, -1}; }
    static Generator beta() { return Generator{GenKind::Beta, -1}; }

    int arity_in() const { return kind == GenKind::Alpha ? 2 : 1; }
    int arity_out() const { return kind == GenKind::Beta ? 2 : 1; }

    bool operator==(const Generator& other) const {
        return kind == other.kind && (kind != GenKind::Train || colour == other.colour);
    }
};

// One occupied height of a level word: a single generator applied at a strand
// offset, identity elsewhere (generic position — one generator per level).
struct Level {
    int offset = 0;
    Generator gen;

    bool operator==(const Level& other) const { return offset == other.offset && gen == other.gen; }
};

// A levelled representative of a plane train track diagram: `inputs` strands
// enter from below, each level rewrites a contiguous strand run. Valid words
// keep every intermediate width >= 1 (the unit object I^0 never appears).
struct DiagramWord {
    int inputs = 1;
    std::vector<Level> levels;

    int outputs() const;
    std::vector<int> widths() const; // widths()[t] = strand count below level t
    bool operator==(const DiagramWord& other) const {
        return inputs == other.inputs && levels == other.levels;
    }
};

// Validating constructor; throws WidthViolation / EmptyObject.
DiagramWord build(int inputs, std::vector<Level> levels);

// Identity diagram on n strands.
DiagramWord identity_diagram(int strands);

// Vertical composition D1 then D2 (D1 at the bottom); throws BoundaryMismatch.
DiagramWord compose(const DiagramWord& d1, const DiagramWord& d2);

// Horizontal juxtaposition: D1's levels first, then D2's shifted right by
// outputs(D1) (the D1-block width once all its levels are emitted).
DiagramWord tensor(const DiagramWord& d1, const DiagramWord& d2);

// --- Interchange structure -------------------------------------------------

// True when levels t and t+1 act on disjoint strand runs and may be swapped.
bool swappable(const DiagramWord& d, int t);

// The word with levels t and t+1 interchanged; throws NotSwappable.
DiagramWord swap_levels(const DiagramWord& d, int t);

// Greedy leftmost-available linear extension of the node dependency order;
// the unique normal form of the interchange class.
DiagramWord canonicalize(const DiagramWord& d);

bool is_canonical(const DiagramWord& d);

// Emission order of original level indices chosen by the canonicalizer.
std::vector<int> canonical_order(const DiagramWord& d);

// Isotopy-class equality: boundaries match and canonical forms are identical.
bool equals(const DiagramWord& d1, const DiagramWord& d2);

// Every interchange-equivalent level word (all linear extensions of the node
// order); throws CapExceeded when the class is larger than `cap`.
std::vector<DiagramWord> enumerate_representatives(const DiagramWord& d, std::size_t cap);

// A sequence of adjacent-level swap positions transforming `from` into `to`
// (both must lie in one interchange class; throws PreconditionViolation).
// Applying the swaps left to right to `from` yields `to` exactly.
std::vector<int> interchange_route(const DiagramWord& from, const DiagramWord& to);

// --- Plane-graph view and contraction --------------------------------------

// Edge identity: birth height and strand position, stable under replay.
// Input-boundary edges are (0, j); the outputs of the node at level t are
// (t+1, s) with s their strand position when created.
struct EdgeId {
    int level = 0;
    int strand = 0;

    bool operator==(const EdgeId& other) const {
        return level == other.level && strand == other.strand;
    }
    auto operator<=>(const EdgeId& other) const = default;
};

struct ContractionStep {
    enum class Kind { EraseUnaryNode, DeleteEdge };
    Kind kind = Kind::DeleteEdge;
    int node = -1;          // original level index, for EraseUnaryNode
    EdgeId edge;            // for DeleteEdge
    std::vector<EdgeId> track; // rightmost complete track in force at this step
};

// The erase/delete sequence of the acyclicity argument, replayable to the
// empty graph with every intermediate graph effective.
struct ContractionCertificate {
    std::vector<ContractionStep> steps;
};

// The mutable plane-graph the contraction loop operates on. Intermediate
// graphs are not level words (deletion strips outputs off alpha/beta nodes),
// so the graph carries explicit ordered adjacency.
class PlaneGraph {
  public:
    explicit PlaneGraph(const DiagramWord& d);

    bool empty() const;
    int alive_nodes() const;
    int alive_edges() const;

    // Walk from the rightmost surviving input edge, leaving every node by its
    // rightmost surviving output edge.
    std::vector<EdgeId> rightmost_track_edges() const;

    // Alive (1,1)-valent nodes on the current rightmost track, in track order.
    std::vector<int> unary_nodes_on_track() const;

    // Endpoint rule: an edge is removable when its lower end is the input
    // boundary or a node with >= 2 surviving outputs AND its upper end is the
    // output boundary or a node with >= 2 surviving inputs.
    bool removable(const EdgeId& e) const;

    // Removable edges of the current rightmost track, in track order.
    std::vector<EdgeId> removable_right_edges() const;

    void erase_unary_node(int node);  // merge the two incident edges (lower id wins)
    void delete_edge(const EdgeId& e);

    bool effective() const; // every alive node keeps >= 1 input and >= 1 output

  private:
    struct Node {
        GenKind kind;
        ColourId colour;
        std::vector<int> ins;  // edge indices in plane order
        std::vector<int> outs;
        bool alive = true;
    };
    struct Edge {
        EdgeId id;
        int lo_node = -1; // -1 = input boundary
        int hi_node = -1; // -1 = output boundary
        bool alive = true;
    };

    int edge_index(const EdgeId& e) const;
    int alive_degree(const std::vector<int>& edges) const;

    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<int> input_edges_;  // plane order along the input boundary
};

// Track of the original diagram: always the rightmost strand at every height.
std::vector<EdgeId> rightmost_complete_track(const DiagramWord& d);

// Lowest removable edge of the rightmost track; requires the caller to have
// no (1,1)-nodes on the track (throws PreconditionViolation otherwise).
std::optional<EdgeId> find_removable_right_edge(const DiagramWord& d);

// Full contraction run per the acyclicity argument; the certificate replays
// to the empty graph. Throws InternalInvariantViolation if the loop stalls.
ContractionCertificate contract(const DiagramWord& d);

// Replays a certificate from scratch, checking applicability, effectiveness
// after every step, and emptiness at the end.
bool validate_certificate(const DiagramWord& d, const ContractionCertificate& cert,
                          std::string* why = nullptr);

} // namespace traintrack::diagrams
