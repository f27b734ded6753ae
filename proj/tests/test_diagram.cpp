#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "traintrack/diagram.hpp"
#include "traintrack/random_gen.hpp"

using namespace traintrack;
using diagrams::DiagramWord;
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

} // namespace

TEST_CASE("build validates widths and records them") {
    DiagramWord d = diagrams::build(1, {Level{0, Generator::beta()}, Level{1, Generator::train(0)},
                                        Level{0, Generator::alpha()}});
    CHECK(d.inputs == 1);
    CHECK(d.outputs() == 1);
    CHECK(d.widths() == std::vector<int>{1, 2, 2, 1});

    CHECK(code_of([] { diagrams::build(0, {}); }) == ErrorCode::EmptyObject);
    CHECK(code_of([] { diagrams::build(1, {Level{0, Generator::alpha()}}); }) ==
          ErrorCode::WidthViolation);
    CHECK(code_of([] { diagrams::build(2, {Level{1, Generator::alpha()}}); }) ==
          ErrorCode::WidthViolation);
    CHECK(code_of([] { diagrams::build(1, {Level{1, Generator::train(0)}}); }) ==
          ErrorCode::WidthViolation);
    CHECK(code_of([] { diagrams::build(2, {Level{-1, Generator::train(0)}}); }) ==
          ErrorCode::WidthViolation);
}

TEST_CASE("compose stacks and checks boundaries") {
    DiagramWord split = diagrams::build(1, {Level{0, Generator::beta()}});
    DiagramWord merge = diagrams::build(2, {Level{0, Generator::alpha()}});
    DiagramWord loop = diagrams::compose(split, merge);
    CHECK(loop.levels == std::vector<Level>{Level{0, Generator::beta()},
                                            Level{0, Generator::alpha()}});
    CHECK(code_of([&] { diagrams::compose(merge, merge); }) == ErrorCode::BoundaryMismatch);
}

TEST_CASE("tensor shifts the right factor by the left block width") {
    DiagramWord left = diagrams::build(1, {Level{0, Generator::beta()}});   // 1 -> 2
    DiagramWord right = diagrams::build(1, {Level{0, Generator::train(3)}});
    DiagramWord t = diagrams::tensor(left, right);
    CHECK(t.inputs == 2);
    CHECK(t.levels == std::vector<Level>{Level{0, Generator::beta()},
                                         Level{2, Generator::train(3)}});
    CHECK(t.outputs() == 3);
}

TEST_CASE("swap_levels adjusts offsets for both relative positions") {
    // Upper level right of the lower one: the upper offset widens by the
    // lower generator's input/output difference.
    DiagramWord d = diagrams::build(3, {Level{0, Generator::alpha()}, Level{1, Generator::train(0)}});
    REQUIRE(diagrams::swappable(d, 0));
    DiagramWord s = diagrams::swap_levels(d, 0);
    CHECK(s.levels == std::vector<Level>{Level{2, Generator::train(0)},
                                         Level{0, Generator::alpha()}});
    // Swapping back returns the original word.
    CHECK(diagrams::swap_levels(s, 0) == d);

    // Upper level left of the lower one: the lower offset adjusts instead.
    DiagramWord e = diagrams::build(3, {Level{2, Generator::train(1)}, Level{0, Generator::alpha()}});
    REQUIRE(diagrams::swappable(e, 0));
    DiagramWord f = diagrams::swap_levels(e, 0);
    CHECK(f.levels == std::vector<Level>{Level{0, Generator::alpha()},
                                         Level{1, Generator::train(1)}});

    DiagramWord overlap =
        diagrams::build(2, {Level{0, Generator::alpha()}, Level{0, Generator::train(0)}});
    CHECK_FALSE(diagrams::swappable(overlap, 0));
    CHECK(code_of([&] { diagrams::swap_levels(overlap, 0); }) == ErrorCode::NotSwappable);
}

TEST_CASE("canonicalize picks the leftmost available node at every step") {
    // Two independent trains: the offset-0 one is emitted first.
    DiagramWord d = diagrams::build(2, {Level{1, Generator::train(1)}, Level{0, Generator::train(0)}});
    CHECK_FALSE(diagrams::is_canonical(d));
    DiagramWord c = diagrams::canonicalize(d);
    CHECK(c.levels == std::vector<Level>{Level{0, Generator::train(0)},
                                         Level{1, Generator::train(1)}});
    CHECK(diagrams::is_canonical(c));
    CHECK(diagrams::canonicalize(c) == c);
    CHECK(diagrams::canonical_order(d) == std::vector<int>{1, 0});

    // A dependency chain admits exactly one order, so it is canonical as is.
    DiagramWord chain = diagrams::build(2, {Level{1, Generator::train(0)},
                                            Level{0, Generator::alpha()}});
    CHECK(diagrams::is_canonical(chain));

    // The beta output is left of the bypassed strand, so beta goes first.
    DiagramWord b = diagrams::build(2, {Level{0, Generator::beta()}, Level{2, Generator::train(0)}});
    CHECK(diagrams::is_canonical(b));
    DiagramWord b2 = diagrams::build(2, {Level{1, Generator::train(0)}, Level{0, Generator::beta()}});
    CHECK(diagrams::canonicalize(b2) == b);
}

TEST_CASE("equals is invariant under interchange and sensitive to boundaries") {
    DiagramWord d = diagrams::build(3, {Level{0, Generator::alpha()}, Level{1, Generator::train(0)}});
    CHECK(diagrams::equals(d, diagrams::swap_levels(d, 0)));
    CHECK_FALSE(diagrams::equals(d, diagrams::identity_diagram(3)));
    CHECK_FALSE(diagrams::equals(diagrams::identity_diagram(2), diagrams::identity_diagram(3)));
    // Same underlying word, different vertical order of dependent levels.
    DiagramWord x = diagrams::build(1, {Level{0, Generator::train(0)}, Level{0, Generator::train(1)}});
    DiagramWord y = diagrams::build(1, {Level{0, Generator::train(1)}, Level{0, Generator::train(0)}});
    CHECK_FALSE(diagrams::equals(x, y));
}

TEST_CASE("enumerate_representatives lists the interchange class") {
    DiagramWord d = diagrams::build(2, {Level{0, Generator::train(0)}, Level{1, Generator::train(1)}});
    std::vector<DiagramWord> reps = diagrams::enumerate_representatives(d, 10);
    CHECK(reps.size() == 2);
    for (const DiagramWord& rep : reps) CHECK(diagrams::equals(rep, d));
    CHECK(code_of([&] { diagrams::enumerate_representatives(d, 1); }) == ErrorCode::CapExceeded);

    // A chain has a single representative.
    DiagramWord chain = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::alpha()}});
    CHECK(diagrams::enumerate_representatives(chain, 10).size() == 1);
}

TEST_CASE("interchange_route lands exactly on the target word") {
    DiagramWord from =
        diagrams::build(2, {Level{1, Generator::train(1)}, Level{0, Generator::train(0)}});
    DiagramWord to =
        diagrams::build(2, {Level{0, Generator::train(0)}, Level{1, Generator::train(1)}});
    std::vector<int> route = diagrams::interchange_route(from, to);
    CHECK(route == std::vector<int>{0});
    CHECK(diagrams::interchange_route(from, from).empty());
    CHECK(code_of([&] {
              diagrams::interchange_route(from, diagrams::identity_diagram(2));
          }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("random words canonicalize consistently along random swap walks") {
    randomgen::Rng rng(7);
    ColourSet colours(std::vector<std::string>{"a", "b", "c"});
    for (int i = 0; i < 200; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 7));
        DiagramWord canon = diagrams::canonicalize(d);
        CHECK(diagrams::is_canonical(canon));
        DiagramWord walk = d;
        for (int step = 0; step < 8; ++step) {
            std::vector<int> legal;
            for (int t = 0; t + 1 < static_cast<int>(walk.levels.size()); ++t)
                if (diagrams::swappable(walk, t)) legal.push_back(t);
            if (legal.empty()) break;
            walk = diagrams::swap_levels(
                walk, legal[static_cast<std::size_t>(randomgen::pick(
                          rng, 0, static_cast<int>(legal.size()) - 1))]);
            CHECK(walk.widths().back() == d.outputs());
        }
        CHECK(diagrams::canonicalize(walk) == canon);
        // The route replays onto the walked representative.
        std::vector<int> route = diagrams::interchange_route(canon, walk);
        DiagramWord replay = canon;
        for (int t : route) replay = diagrams::swap_levels(replay, t);
        CHECK(replay == walk);
    }
}
