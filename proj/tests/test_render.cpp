#include "doctest.h"

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "braidmetric/certify.hpp"
#include "braidmetric/render.hpp"
#include "test_util.hpp"

using namespace braidmetric;
using bmtest::N;
using bmtest::W;

namespace {

std::vector<std::string> text_contents(const std::string& svg) {
    std::vector<std::string> out;
    std::size_t at = 0;
    while ((at = svg.find("<text", at)) != std::string::npos) {
        std::size_t open = svg.find('>', at);
        std::size_t close = svg.find("</text>", open);
        out.push_back(svg.substr(open + 1, close - open - 1));
        at = close;
    }
    return out;
}

struct Polyline {
    NameEntry name;
    std::vector<double> xs;
};

std::vector<Polyline> polylines(const std::string& svg) {
    std::vector<Polyline> out;
    std::size_t at = 0;
    while ((at = svg.find("<polyline points=\"", at)) != std::string::npos) {
        std::size_t open = at + 18;
        std::size_t close = svg.find('"', open);
        Polyline p;
        std::string points = svg.substr(open, close - open);
        for (std::size_t i = 0; i < points.size();) {
            std::size_t comma = points.find(',', i);
            p.xs.push_back(std::stod(points.substr(i, comma - i)));
            std::size_t space = points.find(' ', comma);
            i = space == std::string::npos ? points.size() : space + 1;
        }
        std::size_t title = svg.find("<title>", close);
        std::size_t title_end = svg.find("</title>", title);
        p.name = parse_name_entry(svg.substr(title + 7, title_end - title - 7));
        out.push_back(std::move(p));
        at = close;
    }
    return out;
}

int crossings(const Polyline& a, const Polyline& b) {
    int count = 0;
    for (std::size_t t = 0; t + 1 < a.xs.size(); ++t)
        if ((a.xs[t] - b.xs[t]) * (a.xs[t + 1] - b.xs[t + 1]) < 0) ++count;
    return count;
}

bool has_three_decimals(const std::string& svg) {
    for (std::size_t i = 0; i + 4 < svg.size(); ++i)
        if (svg[i] == '.' && std::isdigit(static_cast<unsigned char>(svg[i + 1])) &&
            std::isdigit(static_cast<unsigned char>(svg[i + 2])) &&
            std::isdigit(static_cast<unsigned char>(svg[i + 3])))
            return true;
    return false;
}

}  // namespace

TEST_CASE("braid diagrams are deterministic byte for byte") {
    RenderOptions opts;
    opts.show_labels = true;
    BraidWord w = family_word(FamilyKind::prop1_left, 2);
    CHECK(render_braid_diagram(w, opts) == render_braid_diagram(w, opts));

    Derivation d = grid_derivation(1);
    CHECK(render_derivation_chart(d) == render_derivation_chart(d));
}

TEST_CASE("empty word renders straight tracks only") {
    std::string svg = render_braid_diagram(W("", 3));
    std::size_t lines = 0, at = 0;
    while ((at = svg.find("<line", at)) != std::string::npos) {
        ++lines;
        at += 5;
    }
    CHECK(lines == 3);
    CHECK(svg.find("<text") == std::string::npos);
}

TEST_CASE("labels carry the crossing names") {
    RenderOptions opts;
    opts.show_labels = true;

    std::string svg = render_braid_diagram(W("1 -1", 2), opts);
    auto labels = text_contents(svg);
    REQUIRE(labels.size() == 2);
    CHECK(labels[0] == "N(1,2,1)");
    CHECK(labels[1] == "N(1,2,1)^-1");

    std::string family = render_braid_diagram(family_word(FamilyKind::prop1_left, 2), opts);
    auto family_labels = text_contents(family);
    auto expected = name_sequence(family_word(FamilyKind::prop1_left, 2)).entries;
    REQUIRE(family_labels.size() == expected.size());
    for (std::size_t i = 0; i < expected.size(); ++i) CHECK(family_labels[i] == expected[i].str());
}

TEST_CASE("over and under strokes differ by letter sign") {
    // one positive and one negative crossing should not emit identical columns
    std::string pos = render_braid_diagram(W("1", 2));
    std::string neg = render_braid_diagram(W("-1", 2));
    CHECK(pos != neg);
}

TEST_CASE("charts have one row per word and one polyline per name") {
    Derivation d = grid_derivation(1);
    std::string svg = render_derivation_chart(d);
    auto lines = polylines(svg);
    REQUIRE(lines.size() == 6);
    for (const Polyline& p : lines) CHECK(p.xs.size() == 5);  // five rows

    std::string single = render_derivation_chart(Derivation{W("1 2 1", 3), {Move::hexagon(1)}});
    for (const Polyline& p : polylines(single)) CHECK(p.xs.size() == 2);

    std::string empty = render_derivation_chart(Derivation{W("1 2", 3), {}});
    for (const Polyline& p : polylines(empty)) CHECK(p.xs.size() == 1);
    CHECK_THROWS_AS(render_derivation_chart(Derivation{W("1 -1", 2), {}}), PreconditionError);
}

TEST_CASE("polyline crossings equal separatrix flip counts") {
    for (const Derivation& d :
         {grid_derivation(1), grid_derivation(2),
          Derivation{W("1 2 1 3 2", 4), {Move::hexagon(1), Move::commutation(3)}}}) {
        SeparatrixReport report = separatrix_report(d);
        auto lines = polylines(render_derivation_chart(d));
        for (std::size_t i = 0; i < lines.size(); ++i)
            for (std::size_t j = i + 1; j < lines.size(); ++j) {
                auto key = canonical_pair(lines[i].name, lines[j].name);
                int expected = report.flip_counts.count(key) ? report.flip_counts.at(key) : 0;
                CHECK(crossings(lines[i], lines[j]) == expected);
            }
    }
}

TEST_CASE("highlighted pairs get one marker per flip") {
    RenderOptions opts;
    opts.highlight_pairs = {{N(1, 3, 1), N(2, 3, 1)}};  // flips twice in the m=1 grid
    std::string svg = render_derivation_chart(grid_derivation(1), opts);
    std::size_t circles = 0, at = 0;
    while ((at = svg.find("<circle", at)) != std::string::npos) {
        ++circles;
        at += 7;
    }
    CHECK(circles == 2);
}

TEST_CASE("coordinates use at most two decimals") {
    RenderOptions odd;
    odd.cell_width = 23.717;
    odd.cell_height = 15.333;
    odd.show_labels = true;
    CHECK_FALSE(has_three_decimals(render_braid_diagram(W("1 2 1 -2", 3), odd)));
    CHECK_FALSE(has_three_decimals(render_derivation_chart(grid_derivation(2), odd)));
}

TEST_CASE("render options are validated") {
    RenderOptions bad;
    bad.cell_width = 0;
    CHECK_THROWS_AS(render_braid_diagram(W("1", 2), bad), DataError);
}
