#include <algorithm>
#include <sstream>

#include "traintrack/random_gen.hpp"
#include "traintrack/twocells.hpp"

namespace traintrack::twocells {

namespace {

using diagrams::DiagramWord;
using diagrams::Generator;
using diagrams::Level;
using randomgen::Rng;

std::string word_str(const ColourWord& w, const ColourSet& colours) {
    std::string out = "(";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += colours.name_of(w[i]);
    }
    return out + ")";
}

std::string braid_str(const braids::ColouredBraid& b, const ColourSet& colours) {
    std::string out = word_str(b.source, colours) + " [";
    for (std::size_t i = 0; i < b.word.size(); ++i) {
        if (i) out += " ";
        out += (b.word[i].sign > 0 ? "s" : "S") + std::to_string(b.word[i].index);
    }
    return out + "]";
}

std::string diagram_str(const DiagramWord& d, const ColourSet& colours) {
    std::string out = std::to_string(d.inputs) + ":";
    for (const Level& lv : d.levels) {
        out += " " + std::to_string(lv.offset);
        switch (lv.gen.kind) {
            case diagrams::GenKind::Alpha: out += "a"; break;
            case diagrams::GenKind::Beta: out += "b"; break;
            case diagrams::GenKind::Train: out += "." + colours.name_of(lv.gen.colour); break;
        }
    }
    return out;
}

void check_braids(Report& report, const std::string& instance,
                  const braids::ColouredBraid& lhs, const braids::ColouredBraid& rhs,
                  const ColourSet& colours) {
    ++report.instances;
    if (!braids::braids_equal(lhs, rhs))
        report.failures.push_back(
            Failure{instance, braid_str(lhs, colours), braid_str(rhs, colours)});
}

// All nonempty words over the first `alphabet` colours with length <= max_len.
std::vector<ColourWord> words_up_to(int alphabet, int max_len) {
    std::vector<ColourWord> out;
    std::vector<ColourWord> frontier{{}};
    for (int len = 1; len <= max_len; ++len) {
        std::vector<ColourWord> next;
        for (const ColourWord& w : frontier) {
            for (ColourId c = 0; c < alphabet; ++c) {
                ColourWord e = w;
                e.push_back(c);
                out.push_back(e);
                next.push_back(std::move(e));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

// --- triangle axioms --------------------------------------------------------

// Left triangle: T_{f, g#h} against (T_{f,g} whiskered over H) then
// (G under T_{f,h}).
void check_triangle_left(Report& report, const ColourWord& f, const ColourWord& g,
                         const ColourWord& h, const ColourSet& colours, const CellContext& ctx) {
    ColourWord gh = g;
    gh.insert(gh.end(), h.begin(), h.end());
    TrackedTwoCell lhs = braiding_cell(f, gh);
    TrackedTwoCell rhs =
        vcompose(hcompose(braiding_cell(f, g), identity_cell(serial_diagram(h))),
                 hcompose(identity_cell(serial_diagram(g)), braiding_cell(f, h)));
    check_braids(report,
                 "triangle_left f=" + word_str(f, colours) + " g=" + word_str(g, colours) +
                     " h=" + word_str(h, colours),
                 extract_braid(lhs, ctx), extract_braid(rhs, ctx), colours);
}

// Right triangle: T_{f#g, h} against (F over T_{g,h}) then (T_{f,h} over G).
void check_triangle_right(Report& report, const ColourWord& f, const ColourWord& g,
                          const ColourWord& h, const ColourSet& colours, const CellContext& ctx) {
    ColourWord fg = f;
    fg.insert(fg.end(), g.begin(), g.end());
    TrackedTwoCell lhs = braiding_cell(fg, h);
    TrackedTwoCell rhs =
        vcompose(hcompose(identity_cell(serial_diagram(f)), braiding_cell(g, h)),
                 hcompose(braiding_cell(f, h), identity_cell(serial_diagram(g))));
    check_braids(report,
                 "triangle_right f=" + word_str(f, colours) + " g=" + word_str(g, colours) +
                     " h=" + word_str(h, colours),
                 extract_braid(lhs, ctx), extract_braid(rhs, ctx), colours);
}

void run_triangles(Report& report, bool left, std::size_t budget, Rng& rng,
                   const ColourSet& colours, const CellContext& ctx) {
    const int alphabet = std::min<int>(2, static_cast<int>(colours.size()));
    std::vector<ColourWord> small = words_up_to(alphabet, 2);
    for (const ColourWord& f : small)
        for (const ColourWord& g : small)
            for (const ColourWord& h : small) {
                if (left)
                    check_triangle_left(report, f, g, h, colours, ctx);
                else
                    check_triangle_right(report, f, g, h, colours, ctx);
            }
    for (std::size_t i = 0; i < budget; ++i) {
        ColourWord f = randomgen::random_word(rng, colours, 1, 4);
        ColourWord g = randomgen::random_word(rng, colours, 1, 4);
        ColourWord h = randomgen::random_word(rng, colours, 1, 4);
        if (left)
            check_triangle_left(report, f, g, h, colours, ctx);
        else
            check_triangle_right(report, f, g, h, colours, ctx);
    }
}

// --- pentagon for A ---------------------------------------------------------

void run_pentagon(Report& report, const ColourSet& colours, const CellContext& ctx) {
    auto alpha_word = [](std::vector<int> offsets) {
        std::vector<Level> levels;
        for (int k : offsets) levels.push_back(Level{k, Generator::alpha()});
        return diagrams::build(4, std::move(levels));
    };
    const DiagramWord v1 = alpha_word({0, 0, 0}); // ((12)3)4
    const DiagramWord v2 = alpha_word({0, 1, 0}); // (12)(34)
    const DiagramWord v3 = alpha_word({2, 1, 0}); // 1(2(34))
    const DiagramWord v4 = alpha_word({1, 0, 0}); // (1(23))4
    const DiagramWord v5 = alpha_word({1, 1, 0}); // 1((23)4)

    TrackedTwoCell a = generator_cell(CellGen::A);
    TrackedTwoCell id1 = identity_cell(diagrams::identity_diagram(1));

    // v4 => v1: rewrite the bottom level, whisker the upper two merges.
    TrackedTwoCell e1 = hcompose(tensor_cells(a, id1),
                                 identity_cell(diagrams::build(3, {Level{0, Generator::alpha()},
                                                                   Level{0, Generator::alpha()}})));
    // v5 => v4: rewrite the middle merge.
    TrackedTwoCell e2 = hcompose(
        identity_cell(diagrams::build(4, {Level{1, Generator::alpha()}})),
        hcompose(a, identity_cell(diagrams::build(2, {Level{0, Generator::alpha()}}))));
    // v3 => v5: rewrite the bottom level on the right three strands.
    TrackedTwoCell e3 = hcompose(tensor_cells(id1, a),
                                 identity_cell(diagrams::build(3, {Level{1, Generator::alpha()},
                                                                   Level{0, Generator::alpha()}})));
    // v2 => v1: rewrite the second merge.
    TrackedTwoCell e4 = hcompose(
        identity_cell(diagrams::build(4, {Level{0, Generator::alpha()}})),
        hcompose(a, identity_cell(diagrams::build(2, {Level{0, Generator::alpha()}}))));
    // v3 => v2: rewrite the middle merge under the bottom-right one.
    TrackedTwoCell e5 = hcompose(
        identity_cell(diagrams::build(4, {Level{2, Generator::alpha()}})),
        hcompose(a, identity_cell(diagrams::build(2, {Level{0, Generator::alpha()}}))));

    struct Edge {
        const char* name;
        const TrackedTwoCell* cell;
        const DiagramWord* src;
        const DiagramWord* tgt;
    };
    const Edge edges[] = {{"v4=>v1", &e1, &v4, &v1},
                          {"v5=>v4", &e2, &v5, &v4},
                          {"v3=>v5", &e3, &v3, &v5},
                          {"v2=>v1", &e4, &v2, &v1},
                          {"v3=>v2", &e5, &v3, &v2}};
    for (const Edge& e : edges) {
        ++report.instances;
        if (!(e.cell->source == *e.src) || !(e.cell->target == *e.tgt))
            report.failures.push_back(Failure{std::string("pentagon edge ") + e.name,
                                              diagram_str(e.cell->source, colours),
                                              diagram_str(*e.src, colours)});
    }

    TrackedTwoCell long_side = vcompose(e3, vcompose(e2, e1));
    TrackedTwoCell short_side = vcompose(e5, e4);
    check_braids(report, "pentagon loop", extract_braid(long_side, ctx),
                 extract_braid(short_side, ctx), colours);
    check_braids(report, "pentagon loop closes",
                 extract_braid(vcompose(long_side, invert_cell(short_side)), ctx),
                 braids::identity_braid({}), colours);
}

// --- interchange ------------------------------------------------------------

void run_interchange(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours,
                     const CellContext& ctx) {
    // Diagram level: both bracketings of a composable 2x2 grid agree.
    for (std::size_t i = 0; i < budget; ++i) {
        DiagramWord a = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 4), 1, 3);
        DiagramWord c = randomgen::random_diagram_with_inputs(
            rng, colours, randomgen::pick(rng, 0, 4), a.outputs());
        DiagramWord b = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 4), 1, 3);
        DiagramWord d = randomgen::random_diagram_with_inputs(
            rng, colours, randomgen::pick(rng, 0, 4), b.outputs());
        DiagramWord lhs = diagrams::compose(diagrams::tensor(a, b), diagrams::tensor(c, d));
        DiagramWord rhs = diagrams::tensor(diagrams::compose(a, c), diagrams::compose(b, d));
        ++report.instances;
        if (!diagrams::equals(lhs, rhs))
            report.failures.push_back(Failure{"interchange diagrams #" + std::to_string(i),
                                              diagram_str(lhs, colours),
                                              diagram_str(rhs, colours)});
    }
    // Cell level: hcompose against its two-stage vertical factorization.
    const std::size_t cells = std::max<std::size_t>(1, budget / 2);
    for (std::size_t i = 0; i < cells; ++i) {
        TrackedTwoCell u = randomgen::random_cell(rng, colours, randomgen::pick(rng, 1, 3), 3);
        TrackedTwoCell v = randomgen::random_cell(rng, colours, u.source.outputs(), 3);
        TrackedTwoCell lhs = hcompose(u, v);
        TrackedTwoCell rhs = vcompose(hcompose(u, identity_cell(v.source)),
                                      hcompose(identity_cell(u.target), v));
        check_braids(report, "interchange cells #" + std::to_string(i), extract_braid(lhs, ctx),
                     extract_braid(rhs, ctx), colours);
    }
}

// --- naturality -------------------------------------------------------------

void run_naturality(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours,
                    const CellContext& ctx) {
    for (std::size_t i = 0; i < budget; ++i) {
        ColourWord v = randomgen::random_word(rng, colours, 1, 3);
        ColourWord w = randomgen::random_word(rng, colours, 1, 3);
        braids::ColouredBraid u = randomgen::random_braid(rng, v, randomgen::pick(rng, 0, 4));
        ColourWord v2 = braids::target_of(u);
        braids::ColouredBraid id_w = braids::identity_braid(w);

        braids::ColouredBraid block_lhs = braids::compose_braids(
            braids::tensor_braids(u, id_w), braids::block_braiding(v2, w, ctx.handedness));
        braids::ColouredBraid block_rhs = braids::compose_braids(
            braids::block_braiding(v, w, ctx.handedness), braids::tensor_braids(id_w, u));
        check_braids(report, "naturality block #" + std::to_string(i), block_lhs, block_rhs,
                     colours);

        braids::ColouredBraid cell_lhs = braids::compose_braids(
            braids::tensor_braids(u, id_w), extract_braid(braiding_cell(v2, w), ctx));
        braids::ColouredBraid cell_rhs = braids::compose_braids(
            extract_braid(braiding_cell(v, w), ctx), braids::tensor_braids(id_w, u));
        check_braids(report, "naturality braiding #" + std::to_string(i), cell_lhs, cell_rhs,
                     colours);
    }
}

// --- cocycle and confluence -------------------------------------------------

DiagramWord random_representative(Rng& rng, const DiagramWord& start, int walk) {
    DiagramWord w = start;
    for (int step = 0; step < walk; ++step) {
        std::vector<int> swappable;
        for (int t = 0; t + 1 < static_cast<int>(w.levels.size()); ++t)
            if (diagrams::swappable(w, t)) swappable.push_back(t);
        if (swappable.empty()) break;
        w = diagrams::swap_levels(
            w, swappable[static_cast<std::size_t>(
                   randomgen::pick(rng, 0, static_cast<int>(swappable.size()) - 1))]);
    }
    return w;
}

void run_cocycle(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours,
                 const CellContext& ctx) {
    for (std::size_t i = 0; i < budget; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 2, 6), 1, 3, 5);
        DiagramWord r1 = random_representative(rng, d, 6);
        DiagramWord r2 = random_representative(rng, d, 6);
        DiagramWord mid = random_representative(rng, d, 6);
        std::vector<int> direct = diagrams::interchange_route(r1, r2);
        std::vector<int> via = diagrams::interchange_route(r1, mid);
        std::vector<int> second = diagrams::interchange_route(mid, r2);
        via.insert(via.end(), second.begin(), second.end());
        braids::ColouredBraid lhs =
            geometry::braid_of_path(geometry::route_path(r1, direct), ctx.handedness);
        braids::ColouredBraid rhs =
            geometry::braid_of_path(geometry::route_path(r1, via), ctx.handedness);
        check_braids(report, "cocycle #" + std::to_string(i) + " d=" + diagram_str(d, colours),
                     lhs, rhs, colours);
    }
}

void run_confluence(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours) {
    for (std::size_t i = 0; i < budget; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 1, 8), 1, 3, 5);
        DiagramWord canon = diagrams::canonicalize(d);
        std::vector<DiagramWord> reps;
        try {
            reps = diagrams::enumerate_representatives(d, 4000);
        } catch (const TrainTrackError& e) {
            if (e.code() != ErrorCode::CapExceeded) throw;
            for (int r = 0; r < 60; ++r) reps.push_back(random_representative(rng, d, 10));
        }
        ++report.instances;
        for (const DiagramWord& rep : reps) {
            if (!(diagrams::canonicalize(rep) == canon)) {
                report.failures.push_back(Failure{"confluence #" + std::to_string(i),
                                                  diagram_str(rep, colours),
                                                  diagram_str(canon, colours)});
                break;
            }
        }
    }
}

// --- contraction ------------------------------------------------------------

// The worked contraction figure: a 3-strand diagram with three trains whose
// rightmost track passes through train f, and exactly one removable right
// edge, running from the fourth-level split g0 up to the final merge g1.
void run_contraction_fixture(Report& report, const ColourSet& colours) {
    const ColourId t0 = 0, f = 1 % static_cast<int>(colours.size()),
                   t2 = 2 % static_cast<int>(colours.size());
    DiagramWord d = diagrams::build(
        3, {Level{0, Generator::train(t0)}, Level{2, Generator::train(f)},
            Level{1, Generator::beta()}, Level{0, Generator::beta()},
            Level{4, Generator::beta()}, Level{3, Generator::beta()},
            Level{1, Generator::alpha()}, Level{2, Generator::train(t0)},
            Level{3, Generator::alpha()}, Level{0, Generator::train(t2)},
            Level{1, Generator::alpha()}, Level{2, Generator::alpha()}});
    diagrams::PlaneGraph g(d);
    std::vector<diagrams::EdgeId> removable = g.removable_right_edges();
    ++report.instances;
    if (removable.size() != 1 || !(removable.front() == diagrams::EdgeId{5, 5})) {
        std::string got;
        for (const diagrams::EdgeId& e : removable)
            got += "(" + std::to_string(e.level) + "," + std::to_string(e.strand) + ")";
        report.failures.push_back(Failure{"contraction figure removable edges", got, "(5,5)"});
    }
    // The track must pass through train f (level 1), blocking the word-level
    // removable-edge finder until it is erased.
    std::vector<int> unary = g.unary_nodes_on_track();
    ++report.instances;
    if (std::find(unary.begin(), unary.end(), 1) == unary.end())
        report.failures.push_back(
            Failure{"contraction figure track", "track misses train f", "train f on track"});
    ++report.instances;
    try {
        (void)diagrams::find_removable_right_edge(d);
        report.failures.push_back(Failure{"contraction figure precondition", "no error",
                                          "PreconditionViolation"});
    } catch (const TrainTrackError& e) {
        if (e.code() != ErrorCode::PreconditionViolation)
            report.failures.push_back(
                Failure{"contraction figure precondition", error_code_name(e.code()),
                        "PreconditionViolation"});
    }
    ++report.instances;
    std::string why;
    diagrams::ContractionCertificate cert = diagrams::contract(d);
    if (!diagrams::validate_certificate(d, cert, &why))
        report.failures.push_back(Failure{"contraction figure certificate", why, "valid"});
}

void run_contraction(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours) {
    run_contraction_fixture(report, colours);
    for (std::size_t i = 0; i < budget; ++i) {
        DiagramWord d =
            randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 12), 1, 4, 7);
        ++report.instances;
        try {
            diagrams::ContractionCertificate cert = diagrams::contract(d);
            std::string why;
            if (!diagrams::validate_certificate(d, cert, &why))
                report.failures.push_back(
                    Failure{"contraction #" + std::to_string(i) + " " + diagram_str(d, colours),
                            why, "valid certificate"});
        } catch (const TrainTrackError& e) {
            report.failures.push_back(
                Failure{"contraction #" + std::to_string(i) + " " + diagram_str(d, colours),
                        e.what(), "certificate"});
        }
    }
}

// --- weak unit --------------------------------------------------------------

void run_weak_unit(Report& report, std::size_t budget, Rng& rng, const ColourSet& colours,
                   const CellContext& ctx) {
    const struct {
        CellGen gen;
        const char* name;
    } unit_cells[] = {{CellGen::E, "E"}, {CellGen::A, "A"}, {CellGen::B, "B"}};
    for (const auto& entry : unit_cells) {
        for (bool inverse : {false, true}) {
            TrackedTwoCell cell = generator_cell(entry.gen, -1, inverse);
            braids::ColouredBraid braid = extract_braid(cell, ctx);
            check_braids(report,
                         std::string("unit cell ") + entry.name + (inverse ? " inverse" : ""),
                         braid, braids::identity_braid(braid.source), colours);
        }
    }
    for (std::size_t i = 0; i < budget; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 0, 6), 1, 4);
        DiagramWord padded = diagrams::tensor(d, diagrams::identity_diagram(1));
        ++report.instances;
        if (geometry::theta(d).word != geometry::theta(padded).word)
            report.failures.push_back(Failure{"weak unit theta #" + std::to_string(i),
                                              word_str(geometry::theta(d).word, colours),
                                              word_str(geometry::theta(padded).word, colours)});
    }
    // Hom-level spot check: tensoring with the bare strand preserves and
    // reflects braid equality of parallel cells.
    const TrackedTwoCell pad = identity_cell(diagrams::identity_diagram(1));
    const std::size_t pairs = std::max<std::size_t>(1, budget / 5);
    for (std::size_t i = 0; i < pairs; ++i) {
        DiagramWord d = randomgen::random_diagram(rng, colours, randomgen::pick(rng, 1, 4), 1, 3);
        TrackedTwoCell u1 = randomgen::random_loop_cell(rng, d, randomgen::pick(rng, 1, 2));
        TrackedTwoCell u2 = randomgen::random_loop_cell(rng, d, randomgen::pick(rng, 1, 2));
        bool plain = braids::braids_equal(extract_braid(u1, ctx), extract_braid(u2, ctx));
        bool padded = braids::braids_equal(extract_braid(tensor_cells(u1, pad), ctx),
                                           extract_braid(tensor_cells(u2, pad), ctx));
        ++report.instances;
        if (plain != padded)
            report.failures.push_back(Failure{"weak unit hom #" + std::to_string(i),
                                              plain ? "equal" : "different",
                                              padded ? "equal" : "different"});
    }
}

} // namespace

std::vector<std::string> axiom_suite_names() {
    return {"triangle_left",  "triangle_right",         "pentagon_A",
            "interchange",    "naturality_conjugation", "cocycle",
            "confluence",     "weak_unit",              "contraction",
            "all"};
}

Report run_axiom_suite(const std::string& check, std::size_t budget, std::uint64_t seed,
                       const ColourSet& colours, const CellContext& ctx) {
    Report report;
    report.check = check;
    Rng rng(seed);
    if (check == "triangle_left") {
        run_triangles(report, true, budget, rng, colours, ctx);
    } else if (check == "triangle_right") {
        run_triangles(report, false, budget, rng, colours, ctx);
    } else if (check == "pentagon_A") {
        run_pentagon(report, colours, ctx);
    } else if (check == "interchange") {
        run_interchange(report, budget, rng, colours, ctx);
    } else if (check == "naturality_conjugation") {
        run_naturality(report, budget, rng, colours, ctx);
    } else if (check == "cocycle") {
        run_cocycle(report, budget, rng, colours, ctx);
    } else if (check == "confluence") {
        run_confluence(report, budget, rng, colours);
    } else if (check == "weak_unit") {
        run_weak_unit(report, budget, rng, colours, ctx);
    } else if (check == "contraction") {
        run_contraction(report, budget, rng, colours);
    } else if (check == "all") {
        for (const std::string& name : axiom_suite_names()) {
            if (name == "all") continue;
            Report sub = run_axiom_suite(name, budget, seed, colours, ctx);
            report.instances += sub.instances;
            for (Failure& failure : sub.failures) {
                failure.instance = name + ": " + failure.instance;
                report.failures.push_back(std::move(failure));
            }
        }
    } else {
        fail(ErrorCode::PreconditionViolation, "unknown axiom suite: " + check);
    }
    return report;
}

} // namespace traintrack::twocells
