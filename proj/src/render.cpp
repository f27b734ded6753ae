#include "traintrack/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace traintrack::render {

namespace {

using diagrams::DiagramWord;
using diagrams::GenKind;
using diagrams::Level;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                "#ff7f0e", "#8c564b", "#17becf", "#e377c2"};

const char* palette_colour(ColourId id) {
    return kPalette[static_cast<std::size_t>(id) % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

std::string centred(std::string text, int width) {
    if (static_cast<int>(text.size()) > width) text.resize(static_cast<std::size_t>(width));
    int pad = width - static_cast<int>(text.size());
    return std::string(static_cast<std::size_t>(pad / 2), ' ') + text +
           std::string(static_cast<std::size_t>(pad - pad / 2), ' ');
}

int cell_width_for(const ColourSet& colours, const std::vector<ColourId>& used) {
    int cw = 3;
    for (ColourId c : used)
        cw = std::max(cw, 2 + static_cast<int>(colours.name_of(c).size()));
    return cw;
}

std::string gutter(int level, bool blank) {
    std::ostringstream out;
    if (blank)
        out << "    ";
    else
        out << centred(std::to_string(level), 3) << ' ';
    return out.str();
}

// Writes `text` into `row` so that its centre sits at character `centre`.
void put_centred(std::string& row, int centre, const std::string& text) {
    int begin = centre - static_cast<int>(text.size()) / 2;
    for (std::size_t i = 0; i < text.size(); ++i) {
        int at = begin + static_cast<int>(i);
        if (at >= 0 && at < static_cast<int>(row.size())) row[static_cast<std::size_t>(at)] = text[i];
    }
}

} // namespace

std::string render_diagram_ascii(const DiagramWord& d, const ColourSet& colours) {
    std::vector<ColourId> used;
    for (const Level& lv : d.levels)
        if (lv.gen.kind == GenKind::Train) used.push_back(lv.gen.colour);
    const int cw = cell_width_for(colours, used);
    const std::vector<int> widths = d.widths();

    auto strand_row = [&](int width) {
        std::string row = gutter(0, true);
        for (int j = 0; j < width; ++j) {
            if (j) row += ' ';
            row += centred("|", cw);
        }
        return row;
    };
    auto centre_of = [&](int j) { return 4 + j * (cw + 1) + cw / 2; };

    std::ostringstream out;
    const int levels = static_cast<int>(d.levels.size());
    out << strand_row(widths[static_cast<std::size_t>(levels)]) << '\n';
    for (int t = levels - 1; t >= 0; --t) {
        const Level& lv = d.levels[static_cast<std::size_t>(t)];
        std::string row = gutter(t, false);
        for (int j = 0; j < widths[static_cast<std::size_t>(t)]; ++j) {
            if (j) row += ' ';
            row += centred("|", cw);
        }
        switch (lv.gen.kind) {
            case GenKind::Train:
                put_centred(row, centre_of(lv.offset),
                            "(" + colours.name_of(lv.gen.colour) + ")");
                break;
            case GenKind::Alpha:
                put_centred(row, centre_of(lv.offset), " ");
                put_centred(row, centre_of(lv.offset + 1), " ");
                put_centred(row, (centre_of(lv.offset) + centre_of(lv.offset + 1)) / 2, "/\\");
                break;
            case GenKind::Beta:
                put_centred(row, centre_of(lv.offset), "\\/");
                break;
        }
        out << row << '\n' << strand_row(widths[static_cast<std::size_t>(t)]) << '\n';
    }
    return out.str();
}

std::string render_diagram_svg(const DiagramWord& d, const ColourSet& colours) {
    const std::vector<int> widths = d.widths();
    const int levels = static_cast<int>(d.levels.size());
    const int max_width = *std::max_element(widths.begin(), widths.end());
    auto x_of = [](int j) { return 30 + 44 * j; };
    auto y_of = [levels](int h) { return 20 + 36 * (levels - h); };
    const int view_w = x_of(max_width - 1) + 30;
    const int view_h = y_of(levels) + 36 * levels + 20;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view_w << "\" height=\""
        << view_h << "\" viewBox=\"0 0 " << view_w << ' ' << view_h << "\">\n";
    out << "  <g stroke=\"#222\" stroke-width=\"2\" fill=\"none\">\n";
    for (int t = 0; t < levels; ++t) {
        const Level& lv = d.levels[static_cast<std::size_t>(t)];
        const int y_lo = y_of(t);
        const int y_hi = y_of(t + 1);
        const int w = widths[static_cast<std::size_t>(t)];
        for (int j = 0; j < w; ++j) {
            auto line = [&](int upper) {
                out << "    <line x1=\"" << x_of(j) << "\" y1=\"" << y_lo << "\" x2=\""
                    << x_of(upper) << "\" y2=\"" << y_hi << "\"/>\n";
            };
            switch (lv.gen.kind) {
                case GenKind::Train: line(j); break;
                case GenKind::Alpha:
                    line(j <= lv.offset + 1 ? std::min(j, lv.offset) : j - 1);
                    break;
                case GenKind::Beta:
                    if (j == lv.offset) {
                        line(j);
                        line(j + 1);
                    } else {
                        line(j < lv.offset ? j : j + 1);
                    }
                    break;
            }
        }
    }
    out << "  </g>\n";
    for (int t = 0; t < levels; ++t) {
        const Level& lv = d.levels[static_cast<std::size_t>(t)];
        if (lv.gen.kind != GenKind::Train) continue;
        const int cx = x_of(lv.offset);
        const int cy = (y_of(t) + y_of(t + 1)) / 2;
        out << "  <circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"9\" fill=\""
            << palette_colour(lv.gen.colour) << "\"/>\n";
        out << "  <text x=\"" << cx + 13 << "\" y=\"" << cy + 4
            << "\" font-family=\"monospace\" font-size=\"12\">"
            << colours.name_of(lv.gen.colour) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

std::string render_braid_ascii(const braids::ColouredBraid& b, const ColourSet& colours) {
    const int cw = cell_width_for(colours, b.source);
    const int n = static_cast<int>(b.source.size());
    auto name_row = [&](const ColourWord& word) {
        std::string row = gutter(0, true);
        for (int j = 0; j < n; ++j) {
            if (j) row += ' ';
            row += centred(colours.name_of(word[static_cast<std::size_t>(j)]), cw);
        }
        return row;
    };
    auto centre_of = [&](int j) { return 4 + j * (cw + 1) + cw / 2; };

    std::ostringstream out;
    out << name_row(braids::target_of(b)) << '\n';
    for (int r = static_cast<int>(b.word.size()) - 1; r >= 0; --r) {
        const braids::BraidLetter& letter = b.word[static_cast<std::size_t>(r)];
        std::string row = gutter(r + 1, false);
        for (int j = 0; j < n; ++j) {
            if (j) row += ' ';
            row += centred("|", cw);
        }
        const int mid = (centre_of(letter.index - 1) + centre_of(letter.index)) / 2;
        put_centred(row, centre_of(letter.index - 1), " ");
        put_centred(row, centre_of(letter.index), " ");
        put_centred(row, mid, letter.sign > 0 ? "\\+/" : "\\-/");
        out << row << '\n';
    }
    out << name_row(b.source) << '\n';
    return out.str();
}

std::string render_braid_svg(const braids::ColouredBraid& b, const ColourSet& colours) {
    const int n = static_cast<int>(b.source.size());
    const int rows = static_cast<int>(b.word.size());
    auto x_of = [](int j) { return 30 + 44 * j; };
    auto y_of = [rows](int r) { return 24 + 36 * (rows - r); };
    const int view_w = x_of(std::max(n - 1, 0)) + 30;
    const int view_h = y_of(0) + 24;

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << view_w << "\" height=\""
        << view_h << "\" viewBox=\"0 0 " << view_w << ' ' << view_h << "\">\n";
    // Positions of the strand occupying each column, bottom-to-top; colour
    // follows the strand through the crossings.
    ColourWord at = b.source;
    for (int r = 0; r < rows; ++r) {
        const braids::BraidLetter& letter = b.word[static_cast<std::size_t>(r)];
        const int c1 = letter.index - 1;
        const int c2 = letter.index;
        const int y_lo = y_of(r);
        const int y_hi = y_of(r + 1);
        auto strand = [&](int from, int to, ColourId colour, bool halo) {
            if (halo)
                out << "  <line x1=\"" << x_of(from) << "\" y1=\"" << y_lo << "\" x2=\""
                    << x_of(to) << "\" y2=\"" << y_hi
                    << "\" stroke=\"#ffffff\" stroke-width=\"8\"/>\n";
            out << "  <line x1=\"" << x_of(from) << "\" y1=\"" << y_lo << "\" x2=\"" << x_of(to)
                << "\" y2=\"" << y_hi << "\" stroke=\"" << palette_colour(colour)
                << "\" stroke-width=\"2\"/>\n";
        };
        for (int j = 0; j < n; ++j)
            if (j != c1 && j != c2) strand(j, j, at[static_cast<std::size_t>(j)], false);
        // Positive letters take the strand rising from the left over the top.
        const bool left_over = letter.sign > 0;
        strand(left_over ? c2 : c1, left_over ? c1 : c2,
               at[static_cast<std::size_t>(left_over ? c2 : c1)], false);
        strand(left_over ? c1 : c2, left_over ? c2 : c1,
               at[static_cast<std::size_t>(left_over ? c1 : c2)], true);
        std::swap(at[static_cast<std::size_t>(c1)], at[static_cast<std::size_t>(c2)]);
    }
    for (int j = 0; j < n; ++j) {
        out << "  <text x=\"" << x_of(j) - 4 << "\" y=\"" << y_of(0) + 16
            << "\" font-family=\"monospace\" font-size=\"12\">"
            << colours.name_of(b.source[static_cast<std::size_t>(j)]) << "</text>\n";
        out << "  <text x=\"" << x_of(j) - 4 << "\" y=\"" << y_of(rows) - 8
            << "\" font-family=\"monospace\" font-size=\"12\">"
            << colours.name_of(at[static_cast<std::size_t>(j)]) << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

} // namespace traintrack::render
