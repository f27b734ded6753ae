#include "traintrack/diagram.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace traintrack::diagrams {

namespace {

// Strand-genealogy analysis of a level word. Strands get token ids; each
// node (= level) records the tokens it consumes and produces, and through
// them its producer nodes. Token ids are internal only.
struct NodeInfo {
    Generator gen;
    std::vector<int> in_tokens;
    std::vector<int> out_tokens;
    std::vector<int> producers; // producer level per input token, -1 = boundary
};

struct Analysis {
    std::vector<NodeInfo> nodes;
    std::vector<int> producer_of_token; // level index or -1
};

Analysis analyze(const DiagramWord& d) {
    Analysis a;
    std::vector<int> frontier(static_cast<std::size_t>(d.inputs));
    std::iota(frontier.begin(), frontier.end(), 0);
    int next_token = d.inputs;
    a.producer_of_token.assign(static_cast<std::size_t>(d.inputs), -1);
    a.nodes.reserve(d.levels.size());
    for (std::size_t t = 0; t < d.levels.size(); ++t) {
        const Level& lv = d.levels[t];
        NodeInfo info;
        info.gen = lv.gen;
        const int in = lv.gen.arity_in();
        const int out = lv.gen.arity_out();
        for (int i = 0; i < in; ++i) {
            int token = frontier[static_cast<std::size_t>(lv.offset + i)];
            info.in_tokens.push_back(token);
            info.producers.push_back(a.producer_of_token[static_cast<std::size_t>(token)]);
        }
        std::vector<int> produced;
        for (int i = 0; i < out; ++i) {
            produced.push_back(next_token);
            a.producer_of_token.push_back(static_cast<int>(t));
            ++next_token;
        }
        info.out_tokens = produced;
        frontier.erase(frontier.begin() + lv.offset, frontier.begin() + lv.offset + in);
        frontier.insert(frontier.begin() + lv.offset, produced.begin(), produced.end());
        a.nodes.push_back(std::move(info));
    }
    return a;
}

// Position of `token` in `frontier`, or -1.
int find_token(const std::vector<int>& frontier, int token) {
    auto it = std::find(frontier.begin(), frontier.end(), token);
    return it == frontier.end() ? -1 : static_cast<int>(it - frontier.begin());
}

// Shared engine for canonicalization and enumeration: a frontier simulation
// that can emit any available node.
struct Emitter {
    const Analysis& a;
    std::vector<int> frontier;
    std::vector<char> emitted;
    std::vector<int> unmet; // producers not yet emitted, per node

    Emitter(const DiagramWord& d, const Analysis& analysis) : a(analysis) {
        frontier.resize(static_cast<std::size_t>(d.inputs));
        std::iota(frontier.begin(), frontier.end(), 0);
        emitted.assign(a.nodes.size(), 0);
        unmet.resize(a.nodes.size(), 0);
        for (std::size_t n = 0; n < a.nodes.size(); ++n) {
            for (int producer : a.nodes[n].producers)
                if (producer >= 0) ++unmet[n];
        }
    }

    std::vector<int> available() const {
        std::vector<int> result;
        for (std::size_t n = 0; n < a.nodes.size(); ++n)
            if (!emitted[n] && unmet[n] == 0) result.push_back(static_cast<int>(n));
        return result;
    }

    // Leftmost input-strand offset of node n in the current frontier; also
    // asserts the node's inputs are contiguous and in order.
    int offset_of(int n) const {
        const NodeInfo& info = a.nodes[static_cast<std::size_t>(n)];
        int first = find_token(frontier, info.in_tokens[0]);
        if (first < 0)
            fail(ErrorCode::InternalInvariantViolation, "available node input not on frontier");
        for (std::size_t i = 1; i < info.in_tokens.size(); ++i) {
            int pos = find_token(frontier, info.in_tokens[i]);
            if (pos != first + static_cast<int>(i))
                fail(ErrorCode::InternalInvariantViolation,
                     "available node inputs not contiguous on frontier");
        }
        return first;
    }

    Level emit(int n) {
        const NodeInfo& info = a.nodes[static_cast<std::size_t>(n)];
        int offset = offset_of(n);
        frontier.erase(frontier.begin() + offset,
                       frontier.begin() + offset + static_cast<int>(info.in_tokens.size()));
        frontier.insert(frontier.begin() + offset, info.out_tokens.begin(),
                        info.out_tokens.end());
        emitted[static_cast<std::size_t>(n)] = 1;
        for (std::size_t m = 0; m < a.nodes.size(); ++m) {
            if (emitted[m]) continue;
            for (int producer : a.nodes[m].producers)
                if (producer == n) --unmet[m];
        }
        return Level{offset, info.gen};
    }
};

void validate(const DiagramWord& d) {
    if (d.inputs < 1) fail(ErrorCode::EmptyObject, "diagrams need at least one input strand");
    int width = d.inputs;
    for (std::size_t t = 0; t < d.levels.size(); ++t) {
        const Level& lv = d.levels[t];
        if (lv.offset < 0 || lv.offset + lv.gen.arity_in() > width)
            fail(ErrorCode::WidthViolation,
                 "level " + std::to_string(t) + ": offset " + std::to_string(lv.offset) +
                     " + arity " + std::to_string(lv.gen.arity_in()) + " exceeds width " +
                     std::to_string(width));
        width += lv.gen.arity_out() - lv.gen.arity_in();
        if (width < 1)
            fail(ErrorCode::EmptyObject,
                 "level " + std::to_string(t) + " leaves zero strands");
    }
}

} // namespace

int DiagramWord::outputs() const {
    int width = inputs;
    for (const Level& lv : levels) width += lv.gen.arity_out() - lv.gen.arity_in();
    return width;
}

std::vector<int> DiagramWord::widths() const {
    std::vector<int> result;
    result.reserve(levels.size() + 1);
    int width = inputs;
    result.push_back(width);
    for (const Level& lv : levels) {
        width += lv.gen.arity_out() - lv.gen.arity_in();
        result.push_back(width);
    }
    return result;
}

DiagramWord build(int inputs, std::vector<Level> levels) {
    DiagramWord d{inputs, std::move(levels)};
    validate(d);
    return d;
}

DiagramWord identity_diagram(int strands) { return build(strands, {}); }

DiagramWord compose(const DiagramWord& d1, const DiagramWord& d2) {
    if (d1.outputs() != d2.inputs)
        fail(ErrorCode::BoundaryMismatch,
             "compose: " + std::to_string(d1.outputs()) + " outputs vs " +
                 std::to_string(d2.inputs) + " inputs");
    std::vector<Level> levels = d1.levels;
    levels.insert(levels.end(), d2.levels.begin(), d2.levels.end());
    return build(d1.inputs, std::move(levels));
}

DiagramWord tensor(const DiagramWord& d1, const DiagramWord& d2) {
    std::vector<Level> levels = d1.levels;
    const int shift = d1.outputs();
    for (const Level& lv : d2.levels) levels.push_back(Level{lv.offset + shift, lv.gen});
    return build(d1.inputs + d2.inputs, std::move(levels));
}

bool swappable(const DiagramWord& d, int t) {
    if (t < 0 || static_cast<std::size_t>(t) + 1 >= d.levels.size()) return false;
    const Level& lower = d.levels[static_cast<std::size_t>(t)];
    const Level& upper = d.levels[static_cast<std::size_t>(t) + 1];
    // Compare the lower node's output run with the upper node's input run,
    // both in width-(t+1) coordinates. Overlap = direct dependency.
    const int lo_begin = lower.offset;
    const int lo_end = lower.offset + lower.gen.arity_out();
    const int up_begin = upper.offset;
    const int up_end = upper.offset + upper.gen.arity_in();
    return up_end <= lo_begin || up_begin >= lo_end;
}

DiagramWord swap_levels(const DiagramWord& d, int t) {
    if (!swappable(d, t))
        fail(ErrorCode::NotSwappable, "levels " + std::to_string(t) + "," +
                                          std::to_string(t + 1) + " overlap or out of range");
    const Level& lower = d.levels[static_cast<std::size_t>(t)];
    const Level& upper = d.levels[static_cast<std::size_t>(t) + 1];
    Level new_lower = upper;
    Level new_upper = lower;
    if (upper.offset + upper.gen.arity_in() <= lower.offset) {
        // Upper node acts entirely left of the lower node's footprint.
        new_upper.offset = lower.offset - upper.gen.arity_in() + upper.gen.arity_out();
    } else {
        // Upper node acts entirely right; shift it back below the lower node.
        new_lower.offset = upper.offset - lower.gen.arity_out() + lower.gen.arity_in();
    }
    DiagramWord result = d;
    result.levels[static_cast<std::size_t>(t)] = new_lower;
    result.levels[static_cast<std::size_t>(t) + 1] = new_upper;
    validate(result);
    return result;
}

std::vector<int> canonical_order(const DiagramWord& d) {
    validate(d);
    Analysis a = analyze(d);
    Emitter em(d, a);
    std::vector<int> order;
    order.reserve(a.nodes.size());
    while (order.size() < a.nodes.size()) {
        std::vector<int> avail = em.available();
        if (avail.empty())
            fail(ErrorCode::InternalInvariantViolation, "dependency order has a cycle");
        int best = -1;
        int best_offset = -1;
        for (int n : avail) {
            int offset = em.offset_of(n);
            if (best < 0 || offset < best_offset) {
                best = n;
                best_offset = offset;
            } else if (offset == best_offset) {
                fail(ErrorCode::InternalInvariantViolation,
                     "two available nodes share a leftmost offset");
            }
        }
        em.emit(best);
        order.push_back(best);
    }
    return order;
}

DiagramWord canonicalize(const DiagramWord& d) {
    validate(d);
    Analysis a = analyze(d);
    Emitter em(d, a);
    std::vector<Level> levels;
    levels.reserve(a.nodes.size());
    while (levels.size() < a.nodes.size()) {
        std::vector<int> avail = em.available();
        if (avail.empty())
            fail(ErrorCode::InternalInvariantViolation, "dependency order has a cycle");
        int best = -1;
        int best_offset = -1;
        for (int n : avail) {
            int offset = em.offset_of(n);
            if (best < 0 || offset < best_offset) {
                best = n;
                best_offset = offset;
            }
        }
        levels.push_back(em.emit(best));
    }
    return build(d.inputs, std::move(levels));
}

bool is_canonical(const DiagramWord& d) { return canonicalize(d) == d; }

bool equals(const DiagramWord& d1, const DiagramWord& d2) {
    if (d1.inputs != d2.inputs || d1.outputs() != d2.outputs()) return false;
    return canonicalize(d1) == canonicalize(d2);
}

namespace {

void enumerate_rec(Emitter& em, const DiagramWord& d, std::vector<Level>& prefix,
                   std::vector<DiagramWord>& out, std::size_t cap) {
    std::vector<int> avail = em.available();
    if (avail.empty()) {
        if (prefix.size() != em.a.nodes.size())
            fail(ErrorCode::InternalInvariantViolation, "enumeration stalled mid-word");
        out.push_back(build(d.inputs, prefix));
        if (out.size() > cap)
            fail(ErrorCode::CapExceeded,
                 "interchange class exceeds cap " + std::to_string(cap));
        return;
    }
    for (int n : avail) {
        std::vector<int> saved_frontier = em.frontier;
        std::vector<char> saved_emitted = em.emitted;
        std::vector<int> saved_unmet = em.unmet;
        prefix.push_back(em.emit(n));
        enumerate_rec(em, d, prefix, out, cap);
        prefix.pop_back();
        em.frontier = std::move(saved_frontier);
        em.emitted = std::move(saved_emitted);
        em.unmet = std::move(saved_unmet);
    }
}

} // namespace

std::vector<DiagramWord> enumerate_representatives(const DiagramWord& d, std::size_t cap) {
    validate(d);
    Analysis a = analyze(d);
    Emitter em(d, a);
    std::vector<Level> prefix;
    std::vector<DiagramWord> out;
    enumerate_rec(em, d, prefix, out, cap);
    return out;
}

std::vector<int> interchange_route(const DiagramWord& from, const DiagramWord& to) {
    if (!equals(from, to))
        fail(ErrorCode::PreconditionViolation,
             "interchange_route endpoints lie in different isotopy classes");
    // Identify nodes across the two words by canonical rank, then perform a
    // selection sort of `from` into `to`'s node order. Every adjacent swap on
    // the way is between incomparable nodes, hence legal.
    const std::vector<int> from_order = canonical_order(from); // rank -> from-level
    const std::vector<int> to_order = canonical_order(to);     // rank -> to-level
    const std::size_t n = from_order.size();
    std::vector<int> rank_of_from(n), rank_of_to(n);
    for (std::size_t r = 0; r < n; ++r) {
        rank_of_from[static_cast<std::size_t>(from_order[r])] = static_cast<int>(r);
        rank_of_to[static_cast<std::size_t>(to_order[r])] = static_cast<int>(r);
    }
    DiagramWord w = from;
    std::vector<int> rank_at(n); // canonical rank of the node at each level of w
    for (std::size_t t = 0; t < n; ++t) rank_at[t] = rank_of_from[t];
    std::vector<int> swaps;
    for (std::size_t i = 0; i < n; ++i) {
        const int want = rank_of_to[i];
        std::size_t j = i;
        while (j < n && rank_at[j] != want) ++j;
        if (j == n)
            fail(ErrorCode::InternalInvariantViolation, "route target node missing");
        for (; j > i; --j) {
            w = swap_levels(w, static_cast<int>(j) - 1);
            std::swap(rank_at[j], rank_at[j - 1]);
            swaps.push_back(static_cast<int>(j) - 1);
        }
    }
    if (!(w == to))
        fail(ErrorCode::InternalInvariantViolation, "interchange route did not reach target");
    return swaps;
}

} // namespace traintrack::diagrams
