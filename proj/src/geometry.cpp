#include "traintrack/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace traintrack::geometry {

namespace {

// Internal signal: the sweep hit a coincidence. braid_of_path catches it,
// perturbs once, and only then surfaces DegeneratePath.
struct Degenerate {
    std::string reason;
};

// Affine motion of one point across one keyframe segment.
struct Motion {
    Rat x0, y0, sx, sy;
    Rat x(const Rat& t) const { return x0 + sx * t; }
    Rat y(const Rat& t) const { return y0 + sy * t; }
};

int cmp(const Rat& a, const Rat& b) { return a < b ? -1 : (b < a ? 1 : 0); }

// Order of two moving points on the interval just after time t: lexicographic
// (x, y) with slope tie-breaks. Zero means identical motion near t.
int cmp_after(const Motion& p, const Motion& q, const Rat& t) {
    if (int c = cmp(p.x(t), q.x(t))) return c;
    if (int c = cmp(p.sx, q.sx)) return c;
    if (int c = cmp(p.y(t), q.y(t))) return c;
    return cmp(p.sy, q.sy);
}

std::vector<int> sorted_by_exact_key(const Configuration& c) {
    std::vector<int> order(c.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const LabelledPoint& pi = c.points[static_cast<std::size_t>(i)];
        const LabelledPoint& pj = c.points[static_cast<std::size_t>(j)];
        if (pi.x != pj.x) return pi.x < pj.x;
        return pi.y < pj.y;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const LabelledPoint& a = c.points[static_cast<std::size_t>(order[k])];
        const LabelledPoint& b = c.points[static_cast<std::size_t>(order[k + 1])];
        if (a.x == b.x && a.y == b.y) throw Degenerate{"coincident sort keys in a keyframe"};
    }
    return order;
}

braids::ColouredBraid sweep(const ConfigPath& path, int handedness) {
    const auto& frames = path.keyframes;
    const std::size_t n = frames.front().points.size();

    std::vector<int> cur = sorted_by_exact_key(frames.front());
    braids::ColouredBraid braid;
    for (int i : cur) braid.source.push_back(frames.front().points[static_cast<std::size_t>(i)].colour);

    for (std::size_t s = 0; s + 1 < frames.size(); ++s) {
        const Configuration& A = frames[s];
        const Configuration& B = frames[s + 1];
        std::vector<Motion> m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m[i].x0 = A.points[i].x;
            m[i].y0 = A.points[i].y;
            m[i].sx = B.points[i].x - A.points[i].x;
            m[i].sy = B.points[i].y - A.points[i].y;
        }

        // Emits the adjacent transpositions turning `cur` into `target`; the
        // sign of each swapped pair reads off their heights at `instant`.
        auto bubble_to = [&](const std::vector<int>& target, const Rat& instant) {
            std::vector<int> rank(n);
            for (std::size_t r = 0; r < n; ++r) rank[static_cast<std::size_t>(target[r])] = static_cast<int>(r);
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t k = 0; k + 1 < n; ++k) {
                    int p = cur[k], q = cur[k + 1];
                    if (rank[static_cast<std::size_t>(p)] <= rank[static_cast<std::size_t>(q)]) continue;
                    Rat yp = m[static_cast<std::size_t>(p)].y(instant);
                    Rat yq = m[static_cast<std::size_t>(q)].y(instant);
                    if (yp == yq) throw Degenerate{"points meet at a crossing instant"};
                    int sign = (yp > yq ? 1 : -1) * handedness;
                    braid.word.push_back(braids::BraidLetter{static_cast<int>(k) + 1, sign});
                    std::swap(cur[k], cur[k + 1]);
                    changed = true;
                }
            }
        };

        // Order just inside the segment (slopes break keyframe x-ties).
        {
            std::vector<int> target = cur;
            std::sort(target.begin(), target.end(), [&](int i, int j) {
                int c = cmp_after(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)], Rat(0));
                if (c == 0) throw Degenerate{"points share an initial trajectory"};
                return c < 0;
            });
            bubble_to(target, Rat(0));
        }

        // Interior events: roots of pairwise x-differences, plus collision
        // checks for pairs sharing x throughout.
        std::set<Rat> times;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                Rat a = m[i].x0 - m[j].x0;
                Rat b = m[i].sx - m[j].sx;
                if (b != 0) {
                    Rat tau = -a / b;
                    if (tau > 0 && tau < 1) times.insert(tau);
                } else if (a == 0) {
                    Rat ya = m[i].y0 - m[j].y0;
                    Rat yb = m[i].sy - m[j].sy;
                    if (ya == 0 && yb == 0) throw Degenerate{"two points travel together"};
                    if (yb != 0) {
                        Rat tau = -ya / yb;
                        if (tau > 0 && tau < 1)
                            throw Degenerate{"points sharing a column cross in height"};
                    }
                }
            }
        }
        for (const Rat& tau : times) {
            std::vector<int> target = cur;
            std::sort(target.begin(), target.end(), [&](int i, int j) {
                int c = cmp_after(m[static_cast<std::size_t>(i)], m[static_cast<std::size_t>(j)], tau);
                if (c == 0) throw Degenerate{"points share a trajectory mid-segment"};
                return c < 0;
            });
            bubble_to(target, tau);
        }

        // Land on the exact keyframe order at t = 1.
        bubble_to(sorted_by_exact_key(B), Rat(1));
    }
    return braid;
}

void validate_path(const ConfigPath& path) {
    if (path.keyframes.empty())
        fail(ErrorCode::PreconditionViolation, "a path needs at least one keyframe");
    const Configuration& first = path.keyframes.front();
    for (const Configuration& frame : path.keyframes) {
        if (frame.points.size() != first.points.size())
            fail(ErrorCode::PreconditionViolation, "keyframes disagree on the number of points");
        for (std::size_t i = 0; i < frame.points.size(); ++i)
            if (frame.points[i].colour != first.points[i].colour)
                fail(ErrorCode::PreconditionViolation,
                     "point column " + std::to_string(i) + " changes colour between keyframes");
    }
}

} // namespace

Configuration layout(const diagrams::DiagramWord& d) {
    Configuration c;
    for (std::size_t t = 0; t < d.levels.size(); ++t) {
        const diagrams::Level& lv = d.levels[t];
        if (lv.gen.kind != diagrams::GenKind::Train) continue;
        LabelledPoint p;
        p.colour = lv.gen.colour;
        p.x = Rat(lv.offset + 1);
        p.y = Rat(2 * static_cast<int>(t) + 1, 2);
        c.points.push_back(std::move(p));
    }
    return c;
}

Configuration embed(const diagrams::DiagramWord& d) {
    if (!diagrams::is_canonical(d))
        fail(ErrorCode::NotCanonical, "embed requires the canonical representative");
    return layout(d);
}

ColourWord linearize(const Configuration& c) {
    std::vector<int> order(c.points.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        const LabelledPoint& pi = c.points[static_cast<std::size_t>(i)];
        const LabelledPoint& pj = c.points[static_cast<std::size_t>(j)];
        if (pi.x != pj.x) return pi.x < pj.x;
        return pi.y < pj.y;
    });
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        const LabelledPoint& a = c.points[static_cast<std::size_t>(order[k])];
        const LabelledPoint& b = c.points[static_cast<std::size_t>(order[k + 1])];
        if (a.x == b.x && a.y == b.y)
            fail(ErrorCode::KeyCollision, "two points share the sort key (" + a.x.str() + ", " +
                                              a.y.str() + ")");
    }
    ColourWord word;
    for (int i : order) word.push_back(c.points[static_cast<std::size_t>(i)].colour);
    return word;
}

braids::ColouredBraid braid_of_path(const ConfigPath& path, int handedness) {
    validate_path(path);
    if (handedness != 1 && handedness != -1)
        fail(ErrorCode::PreconditionViolation, "handedness must be +1 or -1");
    try {
        return sweep(path, handedness);
    } catch (const Degenerate& first) {
        // One deterministic height perturbation: shear column j up by j*eps.
        const Rat eps(1, 1 << 20);
        ConfigPath shifted = path;
        for (Configuration& frame : shifted.keyframes)
            for (std::size_t j = 0; j < frame.points.size(); ++j)
                frame.points[j].y += Rat(static_cast<int>(j)) * eps;
        try {
            return sweep(shifted, handedness);
        } catch (const Degenerate& second) {
            fail(ErrorCode::DegeneratePath,
                 first.reason + "; epsilon retry failed: " + second.reason);
        }
    }
}

ConfigPath reverse_path(const ConfigPath& path) {
    ConfigPath result = path;
    std::reverse(result.keyframes.begin(), result.keyframes.end());
    return result;
}

namespace {

// match[k] = the column of `candidate` equal (colour, x, y) to column k of
// `reference`; bijective or BoundaryMismatch.
std::vector<int> match_columns(const Configuration& reference, const Configuration& candidate) {
    if (reference.points.size() != candidate.points.size())
        fail(ErrorCode::BoundaryMismatch, "configurations have different sizes");
    std::vector<char> used(candidate.points.size(), 0);
    std::vector<int> match(reference.points.size(), -1);
    for (std::size_t k = 0; k < reference.points.size(); ++k) {
        for (std::size_t c = 0; c < candidate.points.size(); ++c) {
            if (used[c]) continue;
            if (candidate.points[c] == reference.points[k]) {
                used[c] = 1;
                match[k] = static_cast<int>(c);
                break;
            }
        }
        if (match[k] < 0)
            fail(ErrorCode::BoundaryMismatch,
                 "no matching point for column " + std::to_string(k));
    }
    return match;
}

} // namespace

ConfigPath align_columns_to(const ConfigPath& path, const Configuration& reference) {
    validate_path(path);
    std::vector<int> match = match_columns(reference, path.start());
    ConfigPath result;
    result.keyframes.reserve(path.keyframes.size());
    for (const Configuration& frame : path.keyframes) {
        Configuration remapped;
        remapped.points.reserve(frame.points.size());
        for (std::size_t k = 0; k < frame.points.size(); ++k)
            remapped.points.push_back(frame.points[static_cast<std::size_t>(match[k])]);
        result.keyframes.push_back(std::move(remapped));
    }
    return result;
}

ConfigPath concatenate_paths(const ConfigPath& p, const ConfigPath& q) {
    validate_path(p);
    validate_path(q);
    ConfigPath tail = align_columns_to(q, p.end());
    ConfigPath result = p;
    result.keyframes.insert(result.keyframes.end(), tail.keyframes.begin() + 1,
                            tail.keyframes.end());
    return result;
}

ConfigPath interchange_path(const diagrams::DiagramWord& d, int t) {
    diagrams::DiagramWord swapped = diagrams::swap_levels(d, t); // throws NotSwappable
    ConfigPath path;
    path.keyframes.resize(2);
    for (std::size_t level = 0; level < d.levels.size(); ++level) {
        if (d.levels[level].gen.kind != diagrams::GenKind::Train) continue;
        std::size_t moved = level;
        if (static_cast<int>(level) == t)
            moved = static_cast<std::size_t>(t) + 1;
        else if (static_cast<int>(level) == t + 1)
            moved = static_cast<std::size_t>(t);
        LabelledPoint before;
        before.colour = d.levels[level].gen.colour;
        before.x = Rat(d.levels[level].offset + 1);
        before.y = Rat(2 * static_cast<int>(level) + 1, 2);
        LabelledPoint after;
        after.colour = before.colour;
        after.x = Rat(swapped.levels[moved].offset + 1);
        after.y = Rat(2 * static_cast<int>(moved) + 1, 2);
        path.keyframes[0].points.push_back(std::move(before));
        path.keyframes[1].points.push_back(std::move(after));
    }
    return path;
}

ConfigPath route_path(const diagrams::DiagramWord& from, const std::vector<int>& swaps) {
    diagrams::DiagramWord w = from;
    std::vector<int> node_at_level(from.levels.size());
    std::iota(node_at_level.begin(), node_at_level.end(), 0);
    std::vector<int> train_nodes;
    for (std::size_t level = 0; level < from.levels.size(); ++level)
        if (from.levels[level].gen.kind == diagrams::GenKind::Train)
            train_nodes.push_back(static_cast<int>(level));

    auto frame_of = [&]() {
        Configuration c;
        for (int node : train_nodes) {
            auto it = std::find(node_at_level.begin(), node_at_level.end(), node);
            std::size_t level = static_cast<std::size_t>(it - node_at_level.begin());
            LabelledPoint p;
            p.colour = from.levels[static_cast<std::size_t>(node)].gen.colour;
            p.x = Rat(w.levels[level].offset + 1);
            p.y = Rat(2 * static_cast<int>(level) + 1, 2);
            c.points.push_back(std::move(p));
        }
        return c;
    };

    ConfigPath path;
    path.keyframes.push_back(frame_of());
    for (int s : swaps) {
        w = diagrams::swap_levels(w, s);
        std::swap(node_at_level[static_cast<std::size_t>(s)],
                  node_at_level[static_cast<std::size_t>(s) + 1]);
        path.keyframes.push_back(frame_of());
    }
    return path;
}

int default_gap(const diagrams::DiagramWord& d1, const diagrams::DiagramWord& d2) {
    int widest = 0;
    for (int w : d1.widths()) widest = std::max(widest, w);
    for (int w : d2.widths()) widest = std::max(widest, w);
    return 1 + widest;
}

ConfigPath stacking_path(const diagrams::DiagramWord& d1, const diagrams::DiagramWord& d2,
                         int gap) {
    if (!diagrams::is_canonical(d1) || !diagrams::is_canonical(d2))
        fail(ErrorCode::NotCanonical, "stacking_path requires canonical factors");
    if (d1.outputs() != d2.inputs)
        fail(ErrorCode::BoundaryMismatch,
             "stacking_path: " + std::to_string(d1.outputs()) + " outputs vs " +
                 std::to_string(d2.inputs) + " inputs");
    const int g = gap > 0 ? gap : default_gap(d1, d2);
    const Rat lift(static_cast<int>(d1.levels.size()) + 1);
    const Configuration base1 = layout(d1);
    const Configuration base2 = layout(d2);

    auto frame = [&](const Rat& dx, const Rat& dy) {
        Configuration c = base1;
        Configuration moved = translated(base2, dx, dy);
        c.points.insert(c.points.end(), moved.points.begin(), moved.points.end());
        return c;
    };

    ConfigPath path;
    path.keyframes.push_back(frame(Rat(g), Rat(0)));
    path.keyframes.push_back(frame(Rat(g), lift));
    path.keyframes.push_back(frame(Rat(0), lift));
    path.keyframes.push_back(frame(Rat(0), lift - 1));
    return path;
}

Theta theta(const diagrams::DiagramWord& d) {
    Configuration config = embed(diagrams::canonicalize(d));
    Theta result;
    result.word = linearize(config);
    result.config = std::move(config);
    return result;
}

ConfigPath constant_path(const Configuration& c) { return ConfigPath{{c}}; }

Configuration translated(const Configuration& c, const Rat& dx, const Rat& dy) {
    Configuration result = c;
    for (LabelledPoint& p : result.points) {
        p.x += dx;
        p.y += dy;
    }
    return result;
}

namespace {

Configuration sample(const ConfigPath& path, const Rat& t) {
    const auto& frames = path.keyframes;
    if (frames.size() == 1) return frames.front();
    const int segments = static_cast<int>(frames.size()) - 1;
    Rat scaled = t * segments;
    boost::multiprecision::cpp_int whole =
        boost::multiprecision::numerator(scaled) / boost::multiprecision::denominator(scaled);
    int idx = static_cast<int>(whole);
    if (idx >= segments) idx = segments - 1;
    if (idx < 0) idx = 0;
    Rat local = scaled - idx;
    const Configuration& A = frames[static_cast<std::size_t>(idx)];
    const Configuration& B = frames[static_cast<std::size_t>(idx) + 1];
    Configuration c = A;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
        c.points[i].x += local * (B.points[i].x - A.points[i].x);
        c.points[i].y += local * (B.points[i].y - A.points[i].y);
    }
    return c;
}

} // namespace

ConfigPath side_by_side(const ConfigPath& p, const ConfigPath& q, const Rat& dx) {
    validate_path(p);
    validate_path(q);
    std::set<Rat> grid;
    const int mp = std::max<int>(1, static_cast<int>(p.keyframes.size()) - 1);
    const int mq = std::max<int>(1, static_cast<int>(q.keyframes.size()) - 1);
    for (int i = 0; i <= mp; ++i) grid.insert(Rat(i, mp));
    for (int j = 0; j <= mq; ++j) grid.insert(Rat(j, mq));
    ConfigPath result;
    for (const Rat& t : grid) {
        Configuration c = sample(p, t);
        Configuration shifted = translated(sample(q, t), dx, Rat(0));
        c.points.insert(c.points.end(), shifted.points.begin(), shifted.points.end());
        result.keyframes.push_back(std::move(c));
    }
    return result;
}

Rat max_x(const ConfigPath& path) {
    Rat best(0);
    for (const Configuration& frame : path.keyframes)
        for (const LabelledPoint& p : frame.points) best = std::max(best, p.x);
    return best;
}

Rat max_y(const ConfigPath& path) {
    Rat best(0);
    for (const Configuration& frame : path.keyframes)
        for (const LabelledPoint& p : frame.points) best = std::max(best, p.y);
    return best;
}

} // namespace traintrack::geometry
