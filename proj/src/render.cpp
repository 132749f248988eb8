#include "braidmetric/render.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace braidmetric {

namespace {

constexpr double kMargin = 12.0;
constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

// At most two decimals, trailing zeros stripped, for byte-stable output.
std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (!s.empty() && s.back() == '0') s.pop_back();
    if (!s.empty() && s.back() == '.') s.pop_back();
    if (s == "-0") s = "0";
    return s;
}

void check_options(const RenderOptions& opts) {
    if (opts.cell_width <= 0 || opts.cell_height <= 0)
        throw DataError("render cells need positive dimensions");
}

std::string svg_open(double width, double height) {
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(width) + "\" height=\"" +
           num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
}

void line(std::string& out, double x1, double y1, double x2, double y2, const std::string& color,
          double stroke_width) {
    out += "  <line x1=\"" + num(x1) + "\" y1=\"" + num(y1) + "\" x2=\"" + num(x2) + "\" y2=\"" +
           num(y2) + "\" stroke=\"" + color + "\" stroke-width=\"" + num(stroke_width) + "\"/>\n";
}

void text(std::string& out, double x, double y, const std::string& content,
          const std::string& extra) {
    out += "  <text x=\"" + num(x) + "\" y=\"" + num(y) +
           "\" font-family=\"monospace\" font-size=\"9\"" + extra + ">" + content + "</text>\n";
}

const char* strand_color(int name) { return kPalette[(name - 1) % 8]; }

bool in_highlight(const RenderOptions& opts, const NameEntry& e) {
    return std::any_of(opts.highlight_pairs.begin(), opts.highlight_pairs.end(),
                       [&](const auto& pair) { return pair.first == e || pair.second == e; });
}

}  // namespace

std::string render_braid_diagram(const BraidWord& w, const RenderOptions& opts) {
    check_options(opts);
    const int n = w.strand_count();
    const int len = static_cast<int>(w.length());
    const double label_band = opts.show_labels ? 16.0 : 0.0;
    const double width = 2 * kMargin + std::max(len, 1) * opts.cell_width;
    const double height = 2 * kMargin + label_band + (n - 1) * opts.cell_height;
    const auto track_y = [&](int position) {
        return kMargin + label_band + (position - 1) * opts.cell_height;
    };

    const std::vector<StrandState> states = strand_trace(w);
    const std::vector<NameEntry> entries = signed_name_sequence(w).entries;

    std::string out = svg_open(width, height);
    if (len == 0) {
        for (int p = 1; p <= n; ++p)
            line(out, kMargin, track_y(p), width - kMargin, track_y(p), strand_color(p), 1.5);
        out += "</svg>\n";
        return out;
    }

    for (int t = 1; t <= len; ++t) {
        const Letter l = w.letters()[static_cast<std::size_t>(t) - 1];
        const int g = generator_of(l);
        const StrandState& state = states[static_cast<std::size_t>(t) - 1];
        const double x0 = kMargin + (t - 1) * opts.cell_width;
        const double x1 = x0 + opts.cell_width;

        if (in_highlight(opts, entries[static_cast<std::size_t>(t) - 1]))
            out += "  <rect x=\"" + num(x0) + "\" y=\"" + num(kMargin + label_band) + "\" width=\"" +
                   num(opts.cell_width) + "\" height=\"" + num((n - 1) * opts.cell_height) +
                   "\" fill=\"#fff3cd\"/>\n";

        for (int p = 1; p <= n; ++p)
            if (p != g && p != g + 1)
                line(out, x0, track_y(p), x1, track_y(p), strand_color(state.name_at(p)), 1.5);

        // descending: the strand leaving position g; ascending: the one
        // leaving g+1. A positive letter puts the ascending strand on top.
        const double ya = track_y(g), yb = track_y(g + 1);
        const std::string down_color = strand_color(state.name_at(g));
        const std::string up_color = strand_color(state.name_at(g + 1));
        const bool ascending_over = l > 0;
        if (ascending_over) {
            line(out, x0, ya, x0 + 0.35 * opts.cell_width, ya + 0.35 * (yb - ya), down_color, 1.5);
            line(out, x1 - 0.35 * opts.cell_width, yb - 0.35 * (yb - ya), x1, yb, down_color, 1.5);
            line(out, x0, yb, x1, ya, up_color, 1.5);
        } else {
            line(out, x0, yb, x0 + 0.35 * opts.cell_width, yb - 0.35 * (yb - ya), up_color, 1.5);
            line(out, x1 - 0.35 * opts.cell_width, ya + 0.35 * (yb - ya), x1, ya, up_color, 1.5);
            line(out, x0, ya, x1, yb, down_color, 1.5);
        }

        if (opts.show_labels)
            text(out, x0 + opts.cell_width / 2, kMargin + label_band - 5,
                 entries[static_cast<std::size_t>(t) - 1].str(), " text-anchor=\"middle\"");
    }
    out += "</svg>\n";
    return out;
}

std::string render_derivation_chart(const Derivation& d, const RenderOptions& opts) {
    check_options(opts);
    const std::vector<BraidWord> words = validate_derivation(d);
    std::vector<std::vector<NameEntry>> rows;
    rows.reserve(words.size());
    for (std::size_t t = 0; t < words.size(); ++t) {
        if (!words[t].is_positive())
            throw PreconditionError("derivation charts need positive words; word " +
                                    std::to_string(t) + " is not");
        rows.push_back(name_sequence(words[t]).entries);
    }

    const int row_count = static_cast<int>(rows.size());
    const int cols = static_cast<int>(rows.front().size());
    const double label_band = 66.0;
    const double width = 2 * kMargin + std::max(cols, 1) * opts.cell_width;
    const double height = 2 * kMargin + 2 * label_band + (row_count - 1) * opts.cell_height;
    const auto slot_x = [&](int index) { return kMargin + index * opts.cell_width + opts.cell_width / 2; };
    const auto row_y = [&](int t) { return kMargin + label_band + t * opts.cell_height; };

    // slot of every name in every row
    std::vector<std::map<NameEntry, int>> slot(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t)
        for (std::size_t j = 0; j < rows[t].size(); ++j)
            slot[t].emplace(rows[t][j], static_cast<int>(j));

    std::string out = svg_open(width, height);

    std::map<std::pair<int, int>, int> pair_color_index;
    for (const NameEntry& e : rows.front())
        pair_color_index.emplace(std::pair{e.strand_low, e.strand_high},
                                 static_cast<int>(pair_color_index.size()));

    for (const NameEntry& name : rows.front()) {
        std::string points;
        for (int t = 0; t < row_count; ++t) {
            if (t) points += ' ';
            points += num(slot_x(slot[static_cast<std::size_t>(t)].at(name))) + "," + num(row_y(t));
        }
        const char* color =
            kPalette[pair_color_index.at({name.strand_low, name.strand_high}) % 8];
        out += "  <polyline points=\"" + points + "\" fill=\"none\" stroke=\"" + color +
               "\" stroke-width=\"1.5\"><title>" + name.str() + "</title></polyline>\n";
    }

    for (int j = 0; j < cols; ++j) {
        const double x = slot_x(j) + 3;
        text(out, x, row_y(0) - 6, rows.front()[static_cast<std::size_t>(j)].str(),
             " transform=\"rotate(-60 " + num(x) + " " + num(row_y(0) - 6) + ")\"");
        text(out, x, row_y(row_count - 1) + 12, rows.back()[static_cast<std::size_t>(j)].str(),
             " transform=\"rotate(-60 " + num(x) + " " + num(row_y(row_count - 1) + 12) +
                 ")\" text-anchor=\"end\"");
    }

    for (const auto& [first, second] : opts.highlight_pairs) {
        if (!slot.front().count(first) || !slot.front().count(second)) continue;
        for (int t = 0; t + 1 < row_count; ++t) {
            const double a0 = slot_x(slot[static_cast<std::size_t>(t)].at(first));
            const double a1 = slot_x(slot[static_cast<std::size_t>(t) + 1].at(first));
            const double b0 = slot_x(slot[static_cast<std::size_t>(t)].at(second));
            const double b1 = slot_x(slot[static_cast<std::size_t>(t) + 1].at(second));
            if ((a0 - b0) * (a1 - b1) >= 0) continue;
            const double s = (b0 - a0) / ((a1 - a0) - (b1 - b0));
            out += "  <circle cx=\"" + num(a0 + s * (a1 - a0)) + "\" cy=\"" +
                   num(row_y(t) + s * opts.cell_height) +
                   "\" r=\"4\" fill=\"none\" stroke=\"#d62728\" stroke-width=\"1.5\"/>\n";
        }
    }

    out += "</svg>\n";
    return out;
}

}  // namespace braidmetric
