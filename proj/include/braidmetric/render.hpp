#pragma once

#include <string>
#include <utility>
#include <vector>

#include "braidmetric/derivation.hpp"
#include "braidmetric/names.hpp"

namespace braidmetric {

struct RenderOptions {
    double cell_width = 24.0;
    double cell_height = 16.0;
    bool show_labels = false;
    /// Name pairs whose order flips get a crossing marker in charts and
    /// whose columns get a tinted background in braid diagrams.
    std::vector<std::pair<NameEntry, NameEntry>> highlight_pairs;
};

/// SVG braid diagram: one horizontal track per strand position, one column
/// per letter, over/under drawn from the letter sign. With show_labels each
/// column carries its crossing name. Byte-deterministic for fixed inputs;
/// coordinates use at most two decimals.
std::string render_braid_diagram(const BraidWord& w, const RenderOptions& opts = {});

/// SVG separatrix chart of a derivation over positive words: row t lists the
/// name sequence of w_t, and each name is connected across rows by a
/// polyline with straight per-interval segments, so two polylines cross
/// exactly as often as the pair's order flips.
std::string render_derivation_chart(const Derivation& d, const RenderOptions& opts = {});

}  // namespace braidmetric
