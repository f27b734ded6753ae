#include "traintrack/diagram.hpp"

#include <algorithm>
#include <sstream>

namespace traintrack::diagrams {

namespace {

std::string edge_str(const EdgeId& e) {
    return "(" + std::to_string(e.level) + "," + std::to_string(e.strand) + ")";
}

} // namespace

PlaneGraph::PlaneGraph(const DiagramWord& d) {
    // Frontier of edge indices, mirroring the strand run at each height.
    std::vector<int> frontier;
    for (int j = 0; j < d.inputs; ++j) {
        edges_.push_back(Edge{EdgeId{0, j}, -1, -1, true});
        frontier.push_back(static_cast<int>(edges_.size()) - 1);
        input_edges_.push_back(static_cast<int>(edges_.size()) - 1);
    }
    for (std::size_t t = 0; t < d.levels.size(); ++t) {
        const Level& lv = d.levels[t];
        const int in = lv.gen.arity_in();
        const int out = lv.gen.arity_out();
        Node node;
        node.kind = lv.gen.kind;
        node.colour = lv.gen.colour;
        for (int i = 0; i < in; ++i) {
            int e = frontier[static_cast<std::size_t>(lv.offset + i)];
            node.ins.push_back(e);
            edges_[static_cast<std::size_t>(e)].hi_node = static_cast<int>(t);
        }
        std::vector<int> produced;
        for (int i = 0; i < out; ++i) {
            edges_.push_back(
                Edge{EdgeId{static_cast<int>(t) + 1, lv.offset + i}, static_cast<int>(t), -1, true});
            produced.push_back(static_cast<int>(edges_.size()) - 1);
        }
        node.outs = produced;
        frontier.erase(frontier.begin() + lv.offset, frontier.begin() + lv.offset + in);
        frontier.insert(frontier.begin() + lv.offset, produced.begin(), produced.end());
        nodes_.push_back(std::move(node));
    }
}

bool PlaneGraph::empty() const { return alive_nodes() == 0 && alive_edges() == 0; }

int PlaneGraph::alive_nodes() const {
    int n = 0;
    for (const Node& node : nodes_)
        if (node.alive) ++n;
    return n;
}

int PlaneGraph::alive_edges() const {
    int n = 0;
    for (const Edge& edge : edges_)
        if (edge.alive) ++n;
    return n;
}

int PlaneGraph::edge_index(const EdgeId& e) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == e) return static_cast<int>(i);
    return -1;
}

int PlaneGraph::alive_degree(const std::vector<int>& edges) const {
    int n = 0;
    for (int e : edges)
        if (edges_[static_cast<std::size_t>(e)].alive) ++n;
    return n;
}

std::vector<EdgeId> PlaneGraph::rightmost_track_edges() const {
    std::vector<EdgeId> track;
    int cur = -1;
    for (auto it = input_edges_.rbegin(); it != input_edges_.rend(); ++it) {
        if (edges_[static_cast<std::size_t>(*it)].alive) {
            cur = *it;
            break;
        }
    }
    if (cur < 0) {
        if (!empty())
            fail(ErrorCode::InternalInvariantViolation,
                 "non-empty graph without surviving input edges");
        return track;
    }
    track.push_back(edges_[static_cast<std::size_t>(cur)].id);
    while (edges_[static_cast<std::size_t>(cur)].hi_node >= 0) {
        const Node& node = nodes_[static_cast<std::size_t>(edges_[static_cast<std::size_t>(cur)].hi_node)];
        int next = -1;
        for (auto it = node.outs.rbegin(); it != node.outs.rend(); ++it) {
            if (edges_[static_cast<std::size_t>(*it)].alive) {
                next = *it;
                break;
            }
        }
        if (next < 0)
            fail(ErrorCode::InternalInvariantViolation, "alive node without surviving output");
        track.push_back(edges_[static_cast<std::size_t>(next)].id);
        cur = next;
    }
    return track;
}

std::vector<int> PlaneGraph::unary_nodes_on_track() const {
    std::vector<int> result;
    for (const EdgeId& id : rightmost_track_edges()) {
        int e = edge_index(id);
        int hi = edges_[static_cast<std::size_t>(e)].hi_node;
        if (hi < 0) continue;
        const Node& node = nodes_[static_cast<std::size_t>(hi)];
        if (alive_degree(node.ins) == 1 && alive_degree(node.outs) == 1) result.push_back(hi);
    }
    return result;
}

bool PlaneGraph::removable(const EdgeId& e) const {
    int idx = edge_index(e);
    if (idx < 0 || !edges_[static_cast<std::size_t>(idx)].alive) return false;
    const Edge& edge = edges_[static_cast<std::size_t>(idx)];
    bool lo_ok = edge.lo_node < 0 ||
                 alive_degree(nodes_[static_cast<std::size_t>(edge.lo_node)].outs) >= 2;
    bool hi_ok = edge.hi_node < 0 ||
                 alive_degree(nodes_[static_cast<std::size_t>(edge.hi_node)].ins) >= 2;
    return lo_ok && hi_ok;
}

std::vector<EdgeId> PlaneGraph::removable_right_edges() const {
    std::vector<EdgeId> result;
    for (const EdgeId& id : rightmost_track_edges())
        if (removable(id)) result.push_back(id);
    return result;
}

void PlaneGraph::erase_unary_node(int node) {
    if (node < 0 || static_cast<std::size_t>(node) >= nodes_.size() ||
        !nodes_[static_cast<std::size_t>(node)].alive)
        fail(ErrorCode::PreconditionViolation,
             "erase: node " + std::to_string(node) + " is not alive");
    Node& n = nodes_[static_cast<std::size_t>(node)];
    if (alive_degree(n.ins) != 1 || alive_degree(n.outs) != 1)
        fail(ErrorCode::PreconditionViolation,
             "erase: node " + std::to_string(node) + " is not (1,1)-valent");
    int e_in = -1, e_out = -1;
    for (int e : n.ins)
        if (edges_[static_cast<std::size_t>(e)].alive) e_in = e;
    for (int e : n.outs)
        if (edges_[static_cast<std::size_t>(e)].alive) e_out = e;
    // Merge: the lower edge survives and adopts the upper edge's top end.
    Edge& lower = edges_[static_cast<std::size_t>(e_in)];
    Edge& upper = edges_[static_cast<std::size_t>(e_out)];
    lower.hi_node = upper.hi_node;
    if (upper.hi_node >= 0) {
        Node& consumer = nodes_[static_cast<std::size_t>(upper.hi_node)];
        std::replace(consumer.ins.begin(), consumer.ins.end(), e_out, e_in);
    }
    upper.alive = false;
    n.alive = false;
}

void PlaneGraph::delete_edge(const EdgeId& e) {
    int idx = edge_index(e);
    if (idx < 0 || !edges_[static_cast<std::size_t>(idx)].alive)
        fail(ErrorCode::PreconditionViolation, "delete: edge " + edge_str(e) + " is not alive");
    if (!removable(e))
        fail(ErrorCode::PreconditionViolation,
             "delete: edge " + edge_str(e) + " fails the endpoint rule");
    edges_[static_cast<std::size_t>(idx)].alive = false;
}

bool PlaneGraph::effective() const {
    for (const Node& node : nodes_) {
        if (!node.alive) continue;
        if (alive_degree(node.ins) < 1 || alive_degree(node.outs) < 1) return false;
    }
    return true;
}

std::vector<EdgeId> rightmost_complete_track(const DiagramWord& d) {
    return PlaneGraph(d).rightmost_track_edges();
}

std::optional<EdgeId> find_removable_right_edge(const DiagramWord& d) {
    PlaneGraph g(d);
    if (!g.unary_nodes_on_track().empty())
        fail(ErrorCode::PreconditionViolation,
             "rightmost track still carries (1,1)-valent nodes; erase them first");
    std::vector<EdgeId> removable = g.removable_right_edges();
    if (removable.empty()) return std::nullopt;
    return removable.front();
}

ContractionCertificate contract(const DiagramWord& d) {
    PlaneGraph g(d);
    ContractionCertificate cert;
    // Every step kills a node or an edge, so the loop is bounded by their sum.
    const int guard = 4 * (static_cast<int>(d.levels.size()) + d.inputs + 4 * (static_cast<int>(d.levels.size()) + 1));
    int spent = 0;
    while (!g.empty()) {
        for (;;) {
            std::vector<int> unary = g.unary_nodes_on_track();
            if (unary.empty()) break;
            ContractionStep step;
            step.kind = ContractionStep::Kind::EraseUnaryNode;
            step.node = unary.front();
            step.track = g.rightmost_track_edges();
            g.erase_unary_node(step.node);
            cert.steps.push_back(std::move(step));
            if (++spent > guard)
                fail(ErrorCode::InternalInvariantViolation, "contraction loop guard tripped");
        }
        std::vector<EdgeId> removable = g.removable_right_edges();
        if (removable.empty())
            fail(ErrorCode::InternalInvariantViolation,
                 "contraction stalled: no removable edge on the rightmost track");
        ContractionStep step;
        step.kind = ContractionStep::Kind::DeleteEdge;
        step.edge = removable.front();
        step.track = g.rightmost_track_edges();
        g.delete_edge(step.edge);
        cert.steps.push_back(std::move(step));
        if (!g.effective())
            fail(ErrorCode::InternalInvariantViolation, "deletion left a starved node");
        if (++spent > guard)
            fail(ErrorCode::InternalInvariantViolation, "contraction loop guard tripped");
    }
    return cert;
}

bool validate_certificate(const DiagramWord& d, const ContractionCertificate& cert,
                          std::string* why) {
    auto reject = [&](const std::string& reason) {
        if (why) *why = reason;
        return false;
    };
    PlaneGraph g(d);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const ContractionStep& step = cert.steps[i];
        std::ostringstream at;
        at << "step " << i << ": ";
        if (!step.track.empty() && step.track != g.rightmost_track_edges())
            return reject(at.str() + "recorded track disagrees with the replayed graph");
        try {
            if (step.kind == ContractionStep::Kind::EraseUnaryNode) {
                g.erase_unary_node(step.node);
            } else {
                g.delete_edge(step.edge);
            }
        } catch (const TrainTrackError& err) {
            return reject(at.str() + err.what());
        }
        if (!g.effective()) return reject(at.str() + "graph no longer effective");
    }
    if (!g.empty()) return reject("replay finished on a non-empty graph");
    if (why) why->clear();
    return true;
}

} // namespace traintrack::diagrams
