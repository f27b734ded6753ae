#include "traintrack/twocells.hpp"

#include <algorithm>
#include <utility>

namespace traintrack::twocells {

using diagrams::DiagramWord;
using diagrams::Generator;
using diagrams::Level;
using geometry::ConfigPath;
using geometry::Rat;

namespace {

int int_ceil(const Rat& r) {
    boost::multiprecision::cpp_int n = boost::multiprecision::numerator(r);
    boost::multiprecision::cpp_int d = boost::multiprecision::denominator(r);
    boost::multiprecision::cpp_int q = n / d;
    if (n % d != 0 && n > 0) ++q;
    return static_cast<int>(q);
}

// Normalizes a finished cell: start keyframe aligned to embed(source) column
// order, and both endpoints verified against the boundary embeddings.
TrackedTwoCell make_cell(DiagramWord source, DiagramWord target, ConfigPath path) {
    if (source.inputs != target.inputs || source.outputs() != target.outputs())
        fail(ErrorCode::BoundaryMismatch, "a 2-cell needs parallel boundaries");
    TrackedTwoCell cell{std::move(source), std::move(target), {}};
    try {
        cell.path = geometry::align_columns_to(path, geometry::embed(cell.source));
        (void)geometry::align_columns_to(geometry::reverse_path(cell.path),
                                         geometry::embed(cell.target));
    } catch (const TrainTrackError&) {
        fail(ErrorCode::InternalInvariantViolation,
             "cell path endpoints do not match the boundary embeddings");
    }
    return cell;
}

// Clearance for running two cells side by side: beyond every strand width and
// every x-excursion of either path.
int clearance_gap(const TrackedTwoCell& u, const TrackedTwoCell& v) {
    int g = std::max(geometry::default_gap(u.source, v.source),
                     geometry::default_gap(u.target, v.target));
    g = std::max(g, int_ceil(geometry::max_x(u.path)) + 1);
    g = std::max(g, int_ceil(geometry::max_x(v.path)) + 1);
    return g;
}

} // namespace

TrackedTwoCell identity_cell(const DiagramWord& d) {
    DiagramWord c = diagrams::canonicalize(d);
    ConfigPath path = geometry::constant_path(geometry::embed(c));
    DiagramWord target = c;
    return make_cell(std::move(c), std::move(target), std::move(path));
}

TrackedTwoCell vcompose(const TrackedTwoCell& u, const TrackedTwoCell& v) {
    if (!(u.target == v.source))
        fail(ErrorCode::BoundaryMismatch,
             "vcompose: target of the first cell differs from source of the second");
    ConfigPath path = geometry::concatenate_paths(u.path, v.path);
    return make_cell(u.source, v.target, std::move(path));
}

TrackedTwoCell invert_cell(const TrackedTwoCell& u) {
    return make_cell(u.target, u.source, geometry::reverse_path(u.path));
}

TrackedTwoCell hcompose(const TrackedTwoCell& u, const TrackedTwoCell& v) {
    if (u.source.outputs() != v.source.inputs || u.target.outputs() != v.target.inputs)
        fail(ErrorCode::BoundaryMismatch, "hcompose: cells are not composable");
    const DiagramWord concat_src = diagrams::compose(u.source, v.source);
    const DiagramWord concat_tgt = diagrams::compose(u.target, v.target);
    const DiagramWord canon_src = diagrams::canonicalize(concat_src);
    const DiagramWord canon_tgt = diagrams::canonicalize(concat_tgt);
    const int gap = clearance_gap(u, v);

    ConfigPath to_concat =
        geometry::route_path(canon_src, diagrams::interchange_route(canon_src, concat_src));
    ConfigPath unstack = geometry::reverse_path(geometry::stacking_path(u.source, v.source, gap));
    ConfigPath run = geometry::side_by_side(u.path, v.path, Rat(gap));
    ConfigPath restack = geometry::stacking_path(u.target, v.target, gap);
    ConfigPath to_canon =
        geometry::route_path(concat_tgt, diagrams::interchange_route(concat_tgt, canon_tgt));

    ConfigPath whole = geometry::concatenate_paths(to_concat, unstack);
    whole = geometry::concatenate_paths(whole, run);
    whole = geometry::concatenate_paths(whole, restack);
    whole = geometry::concatenate_paths(whole, to_canon);
    return make_cell(canon_src, canon_tgt, std::move(whole));
}

namespace {

// Comparison motion between the side-by-side picture (right factor shifted by
// `shift`) and the tensor-word layout (right factor shifted by (outputs(left),
// #levels(left))): lift to a clear height, translate left, lower into place.
ConfigPath tensor_landing(const DiagramWord& left, const DiagramWord& right, int shift,
                          int height) {
    const geometry::Configuration base1 = geometry::layout(left);
    const geometry::Configuration base2 = geometry::layout(right);
    const Rat q1(left.outputs());
    const Rat l1(static_cast<int>(left.levels.size()));
    auto frame = [&](const Rat& dx, const Rat& dy) {
        geometry::Configuration c = base1;
        geometry::Configuration moved = geometry::translated(base2, dx, dy);
        c.points.insert(c.points.end(), moved.points.begin(), moved.points.end());
        return c;
    };
    ConfigPath path;
    path.keyframes.push_back(frame(Rat(shift), Rat(0)));
    path.keyframes.push_back(frame(Rat(shift), Rat(height)));
    path.keyframes.push_back(frame(q1, Rat(height)));
    path.keyframes.push_back(frame(q1, l1));
    return path;
}

} // namespace

TrackedTwoCell tensor_cells(const TrackedTwoCell& u, const TrackedTwoCell& v) {
    const DiagramWord tensor_src = diagrams::tensor(u.source, v.source);
    const DiagramWord tensor_tgt = diagrams::tensor(u.target, v.target);
    const DiagramWord canon_src = diagrams::canonicalize(tensor_src);
    const DiagramWord canon_tgt = diagrams::canonicalize(tensor_tgt);
    const int shift = clearance_gap(u, v);
    int height = 1 + std::max({static_cast<int>(u.source.levels.size()),
                               static_cast<int>(u.target.levels.size()),
                               static_cast<int>(v.source.levels.size()),
                               static_cast<int>(v.target.levels.size()),
                               int_ceil(geometry::max_y(u.path)),
                               int_ceil(geometry::max_y(v.path))});

    ConfigPath to_tensor =
        geometry::route_path(canon_src, diagrams::interchange_route(canon_src, tensor_src));
    ConfigPath spread =
        geometry::reverse_path(tensor_landing(u.source, v.source, shift, height));
    ConfigPath run = geometry::side_by_side(u.path, v.path, Rat(shift));
    ConfigPath land = tensor_landing(u.target, v.target, shift, height);
    ConfigPath to_canon =
        geometry::route_path(tensor_tgt, diagrams::interchange_route(tensor_tgt, canon_tgt));

    ConfigPath whole = geometry::concatenate_paths(to_tensor, spread);
    whole = geometry::concatenate_paths(whole, run);
    whole = geometry::concatenate_paths(whole, land);
    whole = geometry::concatenate_paths(whole, to_canon);
    return make_cell(canon_src, canon_tgt, std::move(whole));
}

TrackedTwoCell generator_cell(CellGen name, ColourId colour, bool inverse) {
    const bool needs_colour =
        name == CellGen::L || name == CellGen::R || name == CellGen::Lbar || name == CellGen::Rbar;
    if (needs_colour && colour < 0)
        fail(ErrorCode::UnknownCell, "this generator cell needs a train colour");
    DiagramWord src, tgt;
    switch (name) {
        case CellGen::E:
            src = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::alpha()}});
            tgt = diagrams::identity_diagram(1);
            break;
        case CellGen::A:
            src = diagrams::build(3, {Level{1, Generator::alpha()}});
            tgt = diagrams::build(3, {Level{0, Generator::alpha()}});
            break;
        case CellGen::B:
            src = diagrams::build(2, {Level{0, Generator::beta()}});
            tgt = diagrams::build(2, {Level{1, Generator::beta()}});
            break;
        case CellGen::L:
            src = diagrams::build(2, {Level{1, Generator::train(colour)}, Level{0, Generator::alpha()}});
            tgt = diagrams::build(2, {Level{0, Generator::alpha()}, Level{0, Generator::train(colour)}});
            break;
        case CellGen::R:
            src = diagrams::build(2, {Level{0, Generator::train(colour)}, Level{0, Generator::alpha()}});
            tgt = diagrams::build(2, {Level{0, Generator::alpha()}, Level{0, Generator::train(colour)}});
            break;
        case CellGen::Lbar:
            src = diagrams::build(1, {Level{0, Generator::beta()}, Level{1, Generator::train(colour)}});
            tgt = diagrams::build(1, {Level{0, Generator::train(colour)}, Level{0, Generator::beta()}});
            break;
        case CellGen::Rbar:
            src = diagrams::build(1, {Level{0, Generator::beta()}, Level{0, Generator::train(colour)}});
            tgt = diagrams::build(1, {Level{0, Generator::train(colour)}, Level{0, Generator::beta()}});
            break;
        default:
            fail(ErrorCode::UnknownCell, "unknown generator cell");
    }
    if (inverse) std::swap(src, tgt);
    ConfigPath path;
    path.keyframes.push_back(geometry::embed(src));
    path.keyframes.push_back(geometry::embed(tgt));
    return make_cell(std::move(src), std::move(tgt), std::move(path));
}

diagrams::DiagramWord serial_diagram(const ColourWord& word) {
    std::vector<Level> levels;
    levels.reserve(word.size());
    for (ColourId c : word) levels.push_back(Level{0, Generator::train(c)});
    return diagrams::build(1, std::move(levels));
}

TrackedTwoCell braiding_cell(const ColourWord& f, const ColourWord& g) {
    if (f.empty() || g.empty())
        fail(ErrorCode::PreconditionViolation, "braiding_cell needs nonempty colour words");
    const std::size_t k = f.size();
    const std::size_t m = g.size();
    const DiagramWord serial_f = serial_diagram(f);
    const DiagramWord serial_g = serial_diagram(g);

    std::vector<TrackedTwoCell> steps;

    // f#g => f#(beta#alpha)#g
    steps.push_back(hcompose(identity_cell(serial_f),
                             hcompose(generator_cell(CellGen::E, -1, true),
                                      identity_cell(serial_g))));

    // f#beta ~> beta#(I f), one letter at a time from the top of the f-stack.
    for (std::size_t jj = k; jj-- > 0;) {
        std::vector<Level> right_levels;
        for (std::size_t i = jj + 1; i < k; ++i)
            right_levels.push_back(Level{1, Generator::train(f[i])});
        right_levels.push_back(Level{0, Generator::alpha()});
        for (ColourId c : g) right_levels.push_back(Level{0, Generator::train(c)});
        TrackedTwoCell core = hcompose(generator_cell(CellGen::Lbar, f[jj], true),
                                       identity_cell(diagrams::build(2, right_levels)));
        if (jj > 0) {
            ColourWord prefix(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(jj));
            core = hcompose(identity_cell(serial_diagram(prefix)), core);
        }
        steps.push_back(std::move(core));
    }

    // alpha#g ~> (g I)#alpha, letter by letter from the bottom of the g-stack.
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Level> left_levels{Level{0, Generator::beta()}};
        for (ColourId c : f) left_levels.push_back(Level{1, Generator::train(c)});
        for (std::size_t i = 0; i < j; ++i)
            left_levels.push_back(Level{0, Generator::train(g[i])});
        TrackedTwoCell core = generator_cell(CellGen::R, g[j], true);
        if (j + 1 < m) {
            ColourWord suffix(g.begin() + static_cast<std::ptrdiff_t>(j) + 1, g.end());
            core = hcompose(std::move(core), identity_cell(serial_diagram(suffix)));
        }
        core = hcompose(identity_cell(diagrams::build(1, left_levels)), std::move(core));
        steps.push_back(std::move(core));
    }

    // The strict interchange: both middle words share one canonical form.
    steps.push_back(identity_cell(steps.back().target));

    // (I f)#alpha ~> alpha#f, from the top of the f-stack.
    for (std::size_t jj = k; jj-- > 0;) {
        std::vector<Level> left_levels{Level{0, Generator::beta()}};
        for (ColourId c : g) left_levels.push_back(Level{0, Generator::train(c)});
        for (std::size_t i = 0; i < jj; ++i)
            left_levels.push_back(Level{1, Generator::train(f[i])});
        TrackedTwoCell core = generator_cell(CellGen::L, f[jj], false);
        if (jj + 1 < k) {
            ColourWord suffix(f.begin() + static_cast<std::ptrdiff_t>(jj) + 1, f.end());
            core = hcompose(std::move(core), identity_cell(serial_diagram(suffix)));
        }
        core = hcompose(identity_cell(diagrams::build(1, left_levels)), std::move(core));
        steps.push_back(std::move(core));
    }

    // beta#(g I) ~> g#beta, from the bottom of the g-stack.
    for (std::size_t j = 0; j < m; ++j) {
        std::vector<Level> right_levels;
        for (std::size_t i = j + 1; i < m; ++i)
            right_levels.push_back(Level{0, Generator::train(g[i])});
        right_levels.push_back(Level{0, Generator::alpha()});
        for (ColourId c : f) right_levels.push_back(Level{0, Generator::train(c)});
        TrackedTwoCell core = hcompose(generator_cell(CellGen::Rbar, g[j], false),
                                       identity_cell(diagrams::build(2, right_levels)));
        if (j > 0) {
            ColourWord prefix(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(j));
            core = hcompose(identity_cell(serial_diagram(prefix)), core);
        }
        steps.push_back(std::move(core));
    }

    // g#(beta#alpha)#f => g#f
    steps.push_back(hcompose(identity_cell(serial_g),
                             hcompose(generator_cell(CellGen::E, -1, false),
                                      identity_cell(serial_f))));

    TrackedTwoCell result = steps.front();
    for (std::size_t i = 1; i < steps.size(); ++i) result = vcompose(result, steps[i]);
    return result;
}

braids::ColouredBraid extract_braid(const TrackedTwoCell& cell, const CellContext& ctx) {
    braids::ColouredBraid braid = geometry::braid_of_path(cell.path, ctx.handedness);
    if (braid.source != geometry::theta(cell.source).word ||
        braids::target_of(braid) != geometry::theta(cell.target).word)
        fail(ErrorCode::InternalInvariantViolation,
             "extracted braid boundaries differ from the theta words of the cell");
    return braid;
}

} // namespace traintrack::twocells
