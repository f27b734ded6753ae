#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <functional>

#include "traintrack/geometry.hpp"
#include "traintrack/random_gen.hpp"

using namespace traintrack;
using diagrams::DiagramWord;
using diagrams::Generator;
using diagrams::Level;
using geometry::Configuration;
using geometry::ConfigPath;
using geometry::LabelledPoint;
using geometry::Rat;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const TrainTrackError& e) {
        return e.code();
    }
    return static_cast<ErrorCode>(-1);
}

Configuration config(std::vector<LabelledPoint> points) { return Configuration{std::move(points)}; }

// True when `mix` interleaves `first` and `second` preserving both orders.
bool is_shuffle(const ColourWord& mix, const ColourWord& first, const ColourWord& second) {
    std::vector<std::vector<bool>> reach(first.size() + 1,
                                         std::vector<bool>(second.size() + 1, false));
    if (mix.size() != first.size() + second.size()) return false;
    reach[0][0] = true;
    for (std::size_t k = 0; k < mix.size(); ++k) {
        std::vector<std::vector<bool>> next(first.size() + 1,
                                            std::vector<bool>(second.size() + 1, false));
        for (std::size_t i = 0; i <= first.size(); ++i)
            for (std::size_t j = 0; j <= second.size(); ++j) {
                if (!reach[i][j]) continue;
                if (i < first.size() && first[i] == mix[k]) next[i + 1][j] = true;
                if (j < second.size() && second[j] == mix[k]) next[i][j + 1] = true;
            }
        reach = std::move(next);
    }
    return reach[first.size()][second.size()];
}

} // namespace

TEST_CASE("embed places trains on half-integer heights in column order") {
    DiagramWord serial = diagrams::build(1, {Level{0, Generator::train(0)},
                                             Level{0, Generator::train(1)}});
    Configuration c = geometry::embed(serial);
    REQUIRE(c.points.size() == 2);
    CHECK(c.points[0] == LabelledPoint{0, Rat(1), Rat(1, 2)});
    CHECK(c.points[1] == LabelledPoint{1, Rat(1), Rat(3, 2)});
    CHECK(geometry::linearize(c) == ColourWord{0, 1});

    DiagramWord parallel = diagrams::build(2, {Level{0, Generator::train(0)},
                                               Level{1, Generator::train(1)}});
    Configuration p = geometry::embed(parallel);
    CHECK(p.points[0] == LabelledPoint{0, Rat(1), Rat(1, 2)});
    CHECK(p.points[1] == LabelledPoint{1, Rat(2), Rat(3, 2)});

    // A train riding the bypass strand of a split sits one column right.
    DiagramWord conjugated = diagrams::build(
        1, {Level{0, Generator::beta()}, Level{1, Generator::train(0)},
            Level{0, Generator::alpha()}});
    Configuration q = geometry::embed(conjugated);
    REQUIRE(q.points.size() == 1);
    CHECK(q.points[0] == LabelledPoint{0, Rat(2), Rat(3, 2)});

    DiagramWord noncanonical = diagrams::build(
        2, {Level{1, Generator::train(1)}, Level{0, Generator::train(0)}});
    CHECK(code_of([&] { geometry::embed(noncanonical); }) == ErrorCode::NotCanonical);
    CHECK(geometry::layout(noncanonical).points.size() == 2);
}

TEST_CASE("linearize reads the lexicographic key and rejects collisions") {
    Configuration c = config({LabelledPoint{0, Rat(2), Rat(1, 2)},
                              LabelledPoint{1, Rat(1), Rat(5, 2)},
                              LabelledPoint{2, Rat(2), Rat(3, 2)}});
    CHECK(geometry::linearize(c) == ColourWord{1, 0, 2});

    Configuration clash = config({LabelledPoint{0, Rat(1), Rat(1)},
                                  LabelledPoint{1, Rat(1), Rat(1)}});
    CHECK(code_of([&] { geometry::linearize(clash); }) == ErrorCode::KeyCollision);
}

TEST_CASE("theta composes canonicalization, embedding, and linearization") {
    DiagramWord d = diagrams::build(2, {Level{1, Generator::train(1)},
                                        Level{0, Generator::train(0)}});
    geometry::Theta t = geometry::theta(d);
    CHECK(t.word == ColourWord{0, 1});
    CHECK(t.config.points.size() == 2);
    // Interchange representatives share their theta.
    CHECK(geometry::theta(diagrams::swap_levels(d, 0)).word == t.word);
}

TEST_CASE("a double exchange with both passes below reads as a negative full twist") {
    ConfigPath path;
    path.keyframes = {config({LabelledPoint{0, Rat(0), Rat(0)}, LabelledPoint{1, Rat(1), Rat(1)}}),
                      config({LabelledPoint{0, Rat(1), Rat(0)}, LabelledPoint{1, Rat(0), Rat(1)}}),
                      config({LabelledPoint{0, Rat(0), Rat(2)}, LabelledPoint{1, Rat(1), Rat(0)}})};
    braids::ColouredBraid b = geometry::braid_of_path(path);
    CHECK(b.source == ColourWord{0, 1});
    CHECK(b.word == std::vector<braids::BraidLetter>{{1, -1}, {1, -1}});

    // The opposite handedness convention flips every sign.
    braids::ColouredBraid flipped = geometry::braid_of_path(path, -1);
    CHECK(flipped.word == std::vector<braids::BraidLetter>{{1, +1}, {1, +1}});

    // Reversing the motion inverts the braid.
    braids::ColouredBraid back = geometry::braid_of_path(geometry::reverse_path(path));
    CHECK(braids::is_identity(braids::compose_braids(b, back)));

    CHECK(code_of([&] { geometry::braid_of_path(path, 0); }) == ErrorCode::PreconditionViolation);
}

TEST_CASE("an exact interior coincidence is resolved by the deterministic shear") {
    ConfigPath path;
    path.keyframes = {config({LabelledPoint{0, Rat(0), Rat(0)}, LabelledPoint{1, Rat(1), Rat(1)}}),
                      config({LabelledPoint{0, Rat(1), Rat(1)}, LabelledPoint{1, Rat(0), Rat(0)}})};
    braids::ColouredBraid b = geometry::braid_of_path(path);
    // After the shear the second column rides slightly higher, so the
    // key-increasing point passes below.
    CHECK(b.word == std::vector<braids::BraidLetter>{{1, -1}});
}

TEST_CASE("a crossing tuned to the shear epsilon defeats the single retry") {
    const Rat eps(1, 1 << 20);
    ConfigPath path;
    path.keyframes = {config({LabelledPoint{0, Rat(0), Rat(0)}, LabelledPoint{1, Rat(1), Rat(0)},
                              LabelledPoint{2, Rat(10), Rat(0)}, LabelledPoint{3, Rat(11), Rat(0)}}),
                      config({LabelledPoint{0, Rat(1), Rat(0)}, LabelledPoint{1, Rat(0), Rat(0)},
                              LabelledPoint{2, Rat(11), 2 * eps},
                              LabelledPoint{3, Rat(10), Rat(0)}})};
    // Columns 0/1 cross at equal height (forces the retry); after the shear,
    // columns 2/3 cross at equal height instead.
    CHECK(code_of([&] { geometry::braid_of_path(path); }) == ErrorCode::DegeneratePath);
}

TEST_CASE("interchange and route paths track trains through swaps") {
    DiagramWord d = diagrams::build(2, {Level{0, Generator::train(0)},
                                        Level{1, Generator::train(1)}});
    ConfigPath p = geometry::interchange_path(d, 0);
    REQUIRE(p.keyframes.size() == 2);
    // Column identity: train 0 starts at (1, 1/2) and rises to (1, 3/2).
    CHECK(p.keyframes[0].points[0] == LabelledPoint{0, Rat(1), Rat(1, 2)});
    CHECK(p.keyframes[1].points[0] == LabelledPoint{0, Rat(1), Rat(3, 2)});
    CHECK(braids::is_identity(geometry::braid_of_path(p)));

    std::vector<int> route = {0, 0};
    ConfigPath loop = geometry::route_path(d, route);
    REQUIRE(loop.keyframes.size() == 3);
    CHECK(loop.start() == loop.end());
    CHECK(braids::is_identity(geometry::braid_of_path(loop)));

    // A swap across a split shifts the train's column by one.
    DiagramWord e = diagrams::build(2, {Level{0, Generator::beta()},
                                        Level{2, Generator::train(0)}});
    ConfigPath q = geometry::interchange_path(e, 0);
    CHECK(q.keyframes[0].points[0] == LabelledPoint{0, Rat(3), Rat(3, 2)});
    CHECK(q.keyframes[1].points[0] == LabelledPoint{0, Rat(2), Rat(1, 2)});
}

TEST_CASE("stacking two serial trains emits no crossings") {
    DiagramWord d1 = diagrams::build(1, {Level{0, Generator::train(0)}});
    DiagramWord d2 = diagrams::build(1, {Level{0, Generator::train(1)}});
    ConfigPath path = geometry::stacking_path(d1, d2);
    CHECK(geometry::linearize(path.start()) == ColourWord{0, 1});
    braids::ColouredBraid b = geometry::braid_of_path(path);
    CHECK(braids::is_identity(b));
    CHECK(geometry::default_gap(d1, d2) == 2);
}

TEST_CASE("stacking a third train over a pair crosses it past the right column only") {
    DiagramWord d1 = diagrams::build(2, {Level{0, Generator::train(0)},
                                         Level{1, Generator::train(1)}});
    DiagramWord d2 = diagrams::build(2, {Level{0, Generator::train(2)}});
    ConfigPath path = geometry::stacking_path(d1, d2, 3);
    CHECK(geometry::linearize(path.start()) == ColourWord{0, 1, 2});
    braids::ColouredBraid b = geometry::braid_of_path(path);
    braids::ColouredBraid expected{ColourWord{0, 1, 2}, {{2, -1}}};
    CHECK(braids::braids_equal(b, expected));
}

TEST_CASE("the tensor linearization is a shuffle but not plain concatenation") {
    // Left factor with a wide interior, right factor hugging the axis: the
    // right factor's train slides left of the left factor's.
    DiagramWord d1 = diagrams::build(
        1, {Level{0, Generator::beta()}, Level{1, Generator::beta()},
            Level{2, Generator::train(0)}, Level{1, Generator::alpha()},
            Level{0, Generator::alpha()}});
    DiagramWord d2 = diagrams::build(1, {Level{0, Generator::train(2)}});
    CHECK(geometry::theta(d1).word == ColourWord{0});
    CHECK(geometry::theta(d2).word == ColourWord{2});
    CHECK(geometry::theta(diagrams::tensor(d1, d2)).word == ColourWord{2, 0});

    // Trains in disjoint column ranges do concatenate.
    DiagramWord f1 = diagrams::build(1, {Level{0, Generator::train(0)}});
    CHECK(geometry::theta(diagrams::tensor(f1, d2)).word == ColourWord{0, 2});

    randomgen::Rng rng(23);
    ColourSet colours(std::vector<std::string>{"a", "b", "c"});
    for (int i = 0; i < 100; ++i) {
        DiagramWord a = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 5));
        DiagramWord b = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 5));
        CHECK(is_shuffle(geometry::theta(diagrams::tensor(a, b)).word, geometry::theta(a).word,
                         geometry::theta(b).word));
    }
}

TEST_CASE("stacking starts from the juxtaposed canonical embeddings") {
    randomgen::Rng rng(29);
    ColourSet colours(std::vector<std::string>{"a", "b", "c"});
    for (int i = 0; i < 60; ++i) {
        DiagramWord d1 = diagrams::canonicalize(
            randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 5)));
        DiagramWord d2 = diagrams::canonicalize(randomgen::random_diagram_with_inputs(
            rng, colours, randomgen::pick(rng, 0, 5), d1.outputs()));
        ConfigPath path = geometry::stacking_path(d1, d2);
        ColourWord expected = geometry::theta(d1).word;
        ColourWord tail = geometry::theta(d2).word;
        expected.insert(expected.end(), tail.begin(), tail.end());
        CHECK(geometry::linearize(path.start()) == expected);
        // The final frame lays the trains out exactly as the stacked word.
        CHECK(path.end() == geometry::layout(diagrams::compose(d1, d2)));
    }
}

TEST_CASE("stacking requires canonical composable inputs") {
    DiagramWord canonical = diagrams::build(1, {Level{0, Generator::train(0)}});
    DiagramWord noncanonical = diagrams::build(
        2, {Level{1, Generator::train(1)}, Level{0, Generator::train(0)}});
    CHECK(code_of([&] { geometry::stacking_path(noncanonical, noncanonical); }) ==
          ErrorCode::NotCanonical);
    CHECK(code_of([&] {
              geometry::stacking_path(canonical, diagrams::identity_diagram(2));
          }) == ErrorCode::BoundaryMismatch);
}

TEST_CASE("path plumbing: concatenation, alignment, side-by-side grids") {
    Configuration a = config({LabelledPoint{0, Rat(1), Rat(1)}, LabelledPoint{1, Rat(2), Rat(1)}});
    Configuration b = config({LabelledPoint{0, Rat(1), Rat(3)}, LabelledPoint{1, Rat(2), Rat(3)}});
    ConfigPath up{{a, b}};

    // Concatenation rematches columns by exact position and colour.
    Configuration b_swapped =
        config({LabelledPoint{1, Rat(2), Rat(3)}, LabelledPoint{0, Rat(1), Rat(3)}});
    Configuration a_swapped =
        config({LabelledPoint{1, Rat(2), Rat(1)}, LabelledPoint{0, Rat(1), Rat(1)}});
    ConfigPath down{{b_swapped, a_swapped}};
    ConfigPath round = geometry::concatenate_paths(up, down);
    CHECK(round.keyframes.size() == 3);
    CHECK(round.start() == a);
    CHECK(round.end() == a);

    ConfigPath shifted{{geometry::translated(a, Rat(1), Rat(0)), a}};
    CHECK(code_of([&] { geometry::concatenate_paths(up, shifted); }) ==
          ErrorCode::BoundaryMismatch);

    ConfigPath aligned = geometry::align_columns_to(down, b);
    CHECK(aligned.start() == b);
    CHECK(code_of([&] { geometry::align_columns_to(down, a); }) == ErrorCode::BoundaryMismatch);

    // Merged time grid: two segments against one make a three-frame union.
    ConfigPath three{{a, b, a}};
    ConfigPath merged = geometry::side_by_side(up, three, Rat(10));
    CHECK(merged.keyframes.size() == 3);
    CHECK(merged.keyframes[0].points.size() == 4);
    CHECK(merged.keyframes[0].points[2].x == Rat(11));
    CHECK(geometry::max_x(merged) == Rat(12));
    CHECK(geometry::max_y(merged) == Rat(3));

    ConfigPath still = geometry::constant_path(a);
    CHECK(still.keyframes.size() == 1);
    CHECK(geometry::braid_of_path(still).word.empty());
}
