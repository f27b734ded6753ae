#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>
#include <optional>

#include "traintrack/diagram.hpp"
#include "traintrack/random_gen.hpp"

using namespace traintrack;
using diagrams::ContractionCertificate;
using diagrams::ContractionStep;
using diagrams::DiagramWord;
using diagrams::EdgeId;
using diagrams::Generator;
using diagrams::Level;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const TrainTrackError& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

// The worked three-train example whose rightmost track passes through a train
// and whose only removable right edge spans from the level-4 split up to the
// level-11 merge.
DiagramWord figure_diagram() {
    return diagrams::build(
        3, {Level{0, Generator::train(0)}, Level{2, Generator::train(1)},
            Level{1, Generator::beta()}, Level{0, Generator::beta()},
            Level{4, Generator::beta()}, Level{3, Generator::beta()},
            Level{1, Generator::alpha()}, Level{2, Generator::train(0)},
            Level{3, Generator::alpha()}, Level{0, Generator::train(2)},
            Level{1, Generator::alpha()}, Level{2, Generator::alpha()}});
}

} // namespace

TEST_CASE("split-then-merge contracts by cutting the right loop edge first") {
    DiagramWord d = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::alpha()}});
    ContractionCertificate cert = diagrams::contract(d);
    REQUIRE(cert.steps.size() == 4);
    CHECK(cert.steps[0].kind == ContractionStep::Kind::DeleteEdge);
    CHECK(cert.steps[0].edge == EdgeId{1, 1});
    CHECK(cert.steps[1].kind == ContractionStep::Kind::EraseUnaryNode);
    CHECK(cert.steps[1].node == 0);
    CHECK(cert.steps[2].kind == ContractionStep::Kind::EraseUnaryNode);
    CHECK(cert.steps[2].node == 1);
    CHECK(cert.steps[3].kind == ContractionStep::Kind::DeleteEdge);
    CHECK(cert.steps[3].edge == EdgeId{0, 0});
    CHECK(diagrams::validate_certificate(d, cert));

    // The first in-force track hugs the right side of the loop.
    CHECK(cert.steps[0].track ==
          std::vector<EdgeId>{EdgeId{0, 0}, EdgeId{1, 1}, EdgeId{2, 0}});
}

TEST_CASE("identity diagrams contract edge by edge from the right") {
    DiagramWord d = diagrams::identity_diagram(3);
    ContractionCertificate cert = diagrams::contract(d);
    REQUIRE(cert.steps.size() == 3);
    CHECK(cert.steps[0].edge == EdgeId{0, 2});
    CHECK(cert.steps[1].edge == EdgeId{0, 1});
    CHECK(cert.steps[2].edge == EdgeId{0, 0});
    CHECK(diagrams::validate_certificate(d, cert));
}

TEST_CASE("plane graph exposes the rightmost track and removability") {
    DiagramWord d = figure_diagram();
    CHECK(d.widths() == std::vector<int>{3, 3, 3, 4, 5, 6, 7, 6, 6, 5, 5, 4, 3});

    diagrams::PlaneGraph g(d);
    CHECK_FALSE(g.empty());
    CHECK(g.effective());

    std::vector<EdgeId> removable = g.removable_right_edges();
    REQUIRE(removable.size() == 1);
    CHECK(removable.front() == EdgeId{5, 5});

    // The track passes through the level-1 train, so the word-level finder
    // refuses to run until that train is erased.
    std::vector<int> unary = g.unary_nodes_on_track();
    CHECK(std::find(unary.begin(), unary.end(), 1) != unary.end());
    CHECK(code_of([&] { diagrams::find_removable_right_edge(d); }) ==
          ErrorCode::PreconditionViolation);

    // After erasing the blocking train, the finder returns the same edge.
    g.erase_unary_node(1);
    std::vector<EdgeId> after = g.removable_right_edges();
    REQUIRE_FALSE(after.empty());
    CHECK(after.front() == EdgeId{5, 5});

    ContractionCertificate cert = diagrams::contract(d);
    std::string why;
    CHECK(diagrams::validate_certificate(d, cert, &why));
    CHECK(why.empty());
}

TEST_CASE("find_removable_right_edge works on train-free tracks") {
    // A single split: both output edges are removable; the rightmost track
    // runs through the right one.
    DiagramWord d = diagrams::build(1, {Level{0, Generator::beta()}});
    std::optional<EdgeId> edge = diagrams::find_removable_right_edge(d);
    REQUIRE(edge.has_value());
    CHECK(*edge == EdgeId{1, 1});

    // A bare strand: the strand edge itself is removable.
    std::optional<EdgeId> bare = diagrams::find_removable_right_edge(diagrams::identity_diagram(1));
    REQUIRE(bare.has_value());
    CHECK(*bare == EdgeId{0, 0});
}

TEST_CASE("tampered certificates are rejected with a reason") {
    DiagramWord d = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::alpha()}});
    ContractionCertificate cert = diagrams::contract(d);

    ContractionCertificate truncated = cert;
    truncated.steps.pop_back();
    std::string why;
    CHECK_FALSE(diagrams::validate_certificate(d, truncated, &why));
    CHECK_FALSE(why.empty());

    ContractionCertificate wrong_track = cert;
    wrong_track.steps[0].track = {EdgeId{0, 0}};
    CHECK_FALSE(diagrams::validate_certificate(d, wrong_track, &why));

    ContractionCertificate wrong_edge = cert;
    wrong_edge.steps[0].edge = EdgeId{0, 0}; // not removable while the loop is closed
    CHECK_FALSE(diagrams::validate_certificate(d, wrong_edge, &why));

    // Certificates replay against the diagram they came from only.
    CHECK_FALSE(diagrams::validate_certificate(diagrams::identity_diagram(1), cert, &why));
}

TEST_CASE("erase and delete enforce their preconditions") {
    DiagramWord d = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::alpha()}});
    diagrams::PlaneGraph g(d);
    // The split node is (1,2)-valent, not erasable.
    CHECK(code_of([&] { g.erase_unary_node(0); }) == ErrorCode::PreconditionViolation);
    // The input edge's upper end is a split with one surviving input.
    CHECK(code_of([&] { g.delete_edge(EdgeId{0, 0}); }) == ErrorCode::PreconditionViolation);
    g.delete_edge(EdgeId{1, 1});
    CHECK(code_of([&] { g.delete_edge(EdgeId{1, 1}); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("random diagrams contract to valid certificates") {
    randomgen::Rng rng(11);
    ColourSet colours(std::vector<std::string>{"a", "b", "c"});
    for (int i = 0; i < 120; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 10), 1, 4, 7);
        ContractionCertificate cert = diagrams::contract(d);
        std::string why;
        bool ok = diagrams::validate_certificate(d, cert, &why);
        CHECK_MESSAGE(ok, why);
        // Steps are bounded: each one kills a node or an edge.
        CHECK(cert.steps.size() <=
              static_cast<std::size_t>(4 * (static_cast<int>(d.levels.size()) + d.inputs + 8)));
    }
}
