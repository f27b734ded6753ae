#include "traintrack/random_gen.hpp"

#include <algorithm>

namespace traintrack::randomgen {

using diagrams::DiagramWord;
using diagrams::Generator;
using diagrams::Level;

int pick(Rng& rng, int lo, int hi) {
    if (lo > hi)
        fail(ErrorCode::InternalInvariantViolation,
             "empty pick range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

DiagramWord random_diagram_with_inputs(Rng& rng, const ColourSet& colours, int levels,
                                       int inputs, int width_cap) {
    std::vector<Level> word;
    int width = inputs;
    for (int t = 0; t < levels; ++t) {
        // Legal (generator, offset) pairs at the current width.
        struct Option {
            diagrams::GenKind kind;
            int offset;
        };
        std::vector<Option> options;
        for (int k = 0; k < width; ++k) options.push_back({diagrams::GenKind::Train, k});
        if (width >= 2)
            for (int k = 0; k + 2 <= width; ++k) options.push_back({diagrams::GenKind::Alpha, k});
        if (width + 1 <= width_cap)
            for (int k = 0; k < width; ++k) options.push_back({diagrams::GenKind::Beta, k});
        Option chosen = options[static_cast<std::size_t>(pick(rng, 0, static_cast<int>(options.size()) - 1))];
        Generator gen;
        switch (chosen.kind) {
            case diagrams::GenKind::Train:
                gen = Generator::train(pick(rng, 0, static_cast<int>(colours.size()) - 1));
                break;
            case diagrams::GenKind::Alpha:
                gen = Generator::alpha();
                break;
            case diagrams::GenKind::Beta:
                gen = Generator::beta();
                break;
        }
        word.push_back(Level{chosen.offset, gen});
        width += gen.arity_out() - gen.arity_in();
    }
    return diagrams::build(inputs, std::move(word));
}

DiagramWord random_diagram(Rng& rng, const ColourSet& colours, int levels, int min_inputs,
                           int max_inputs, int width_cap) {
    return random_diagram_with_inputs(rng, colours, levels, pick(rng, min_inputs, max_inputs),
                                      width_cap);
}

ColourWord random_word(Rng& rng, const ColourSet& colours, int min_len, int max_len) {
    ColourWord word(static_cast<std::size_t>(pick(rng, min_len, max_len)));
    for (ColourId& c : word) c = pick(rng, 0, static_cast<int>(colours.size()) - 1);
    return word;
}

braids::ColouredBraid random_braid(Rng& rng, const ColourWord& source, int letters) {
    braids::ColouredBraid b{source, {}};
    const int n = static_cast<int>(source.size());
    if (n < 2) return b;
    for (int i = 0; i < letters; ++i)
        b.word.push_back(braids::BraidLetter{pick(rng, 1, n - 1), pick(rng, 0, 1) ? 1 : -1});
    return b;
}

twocells::TrackedTwoCell random_loop_cell(Rng& rng, const diagrams::DiagramWord& d,
                                          int waypoints) {
    DiagramWord c = diagrams::canonicalize(d);
    geometry::Configuration base = geometry::embed(c);
    geometry::ConfigPath path;
    path.keyframes.push_back(base);
    for (int w = 0; w < waypoints; ++w) {
        geometry::Configuration jittered = base;
        for (geometry::LabelledPoint& p : jittered.points) {
            // Jitter below 1/2 in each axis: half-integer spacing keeps distinct
            // points from ever colliding, while same-column points may cross.
            p.x += geometry::Rat(pick(rng, -8, 8), 17);
            p.y += geometry::Rat(pick(rng, -8, 8), 19);
        }
        path.keyframes.push_back(std::move(jittered));
    }
    path.keyframes.push_back(base);
    return twocells::TrackedTwoCell{c, c, std::move(path)};
}

twocells::TrackedTwoCell random_cell(Rng& rng, const ColourSet& colours, int inputs,
                                     int max_levels) {
    switch (pick(rng, 0, 3)) {
        case 0:
            return twocells::identity_cell(
                random_diagram_with_inputs(rng, colours, pick(rng, 0, max_levels), inputs));
        case 1:
            return random_loop_cell(
                rng, random_diagram_with_inputs(rng, colours, pick(rng, 1, max_levels), inputs),
                pick(rng, 1, 2));
        case 2: {
            // A whiskered generator cell, padded on the right to the requested
            // boundary width.
            const twocells::CellGen gens[] = {twocells::CellGen::E,    twocells::CellGen::A,
                                              twocells::CellGen::B,    twocells::CellGen::L,
                                              twocells::CellGen::R,    twocells::CellGen::Lbar,
                                              twocells::CellGen::Rbar};
            for (int attempt = 0; attempt < 8; ++attempt) {
                twocells::CellGen g = gens[pick(rng, 0, 6)];
                ColourId colour = pick(rng, 0, static_cast<int>(colours.size()) - 1);
                twocells::TrackedTwoCell cell = twocells::generator_cell(g, colour, pick(rng, 0, 1));
                int pad = inputs - cell.source.inputs;
                if (pad < 0) continue;
                if (pad > 0)
                    cell = twocells::tensor_cells(
                        cell, twocells::identity_cell(diagrams::identity_diagram(pad)));
                return cell;
            }
            return twocells::identity_cell(diagrams::identity_diagram(inputs));
        }
        default:
            if (inputs == 1)
                return twocells::braiding_cell(random_word(rng, colours, 1, 2),
                                               random_word(rng, colours, 1, 2));
            return random_loop_cell(
                rng, random_diagram_with_inputs(rng, colours, pick(rng, 1, max_levels), inputs),
                1);
    }
}

} // namespace traintrack::randomgen
