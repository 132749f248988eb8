#include "braidmetric/derivation.hpp"

#include <algorithm>

namespace braidmetric {

std::vector<BraidWord> validate_derivation(const Derivation& d) {
    std::vector<BraidWord> words;
    words.reserve(d.moves.size() + 1);
    words.push_back(d.start);
    for (std::size_t i = 0; i < d.moves.size(); ++i) {
        const Move& m = d.moves[i];
        if (std::string issue = applicability_issue(words.back(), m); !issue.empty())
            throw PreconditionError("move " + std::to_string(i + 1) + ": " + describe(m) + ": " +
                                    issue);
        words.push_back(apply_move(words.back(), m));
    }
    return words;
}

BraidWord final_word(const Derivation& d) { return validate_derivation(d).back(); }

SeparatrixReport separatrix_report(const Derivation& d) {
    const std::vector<BraidWord> words = validate_derivation(d);
    for (std::size_t t = 0; t < words.size(); ++t)
        if (!words[t].is_positive())
            throw PreconditionError("separatrix report needs positive words; word " +
                                    std::to_string(t) + " is not");

    SeparatrixReport report;
    for (std::size_t t = 0; t < d.moves.size(); ++t) {
        MoveDelta delta = move_delta(words[t], d.moves[t]);
        for (const auto& pair : delta.flipped_pairs) {
            ++report.flip_counts[pair];
            switch (classify_pair(pair.first, pair.second)) {
                case PairClass::disjoint: ++report.disjoint_flips; break;
                case PairClass::shared_median:
                    ++report.median_flips;
                    [[fallthrough]];
                case PairClass::shared: ++report.shared_flips; break;
                case PairClass::identical_pair:
                    throw ConsistencyError("a same-pair flip slipped through move_delta");
            }
        }
    }
    for (const auto& [pair, count] : report.flip_counts)
        report.max_flip_count = std::max(report.max_flip_count, count);
    return report;
}

FamilyKind family_kind_from_string(std::string_view text) {
    if (text == "prop1_left") return FamilyKind::prop1_left;
    if (text == "prop1_right") return FamilyKind::prop1_right;
    if (text == "lcm_right") return FamilyKind::lcm_right;
    throw DataError("unknown family kind '" + std::string(text) + "'");
}

std::string_view to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::prop1_left: return "prop1_left";
        case FamilyKind::prop1_right: return "prop1_right";
        case FamilyKind::lcm_right: return "lcm_right";
    }
    throw ConsistencyError("unhandled FamilyKind");
}

BraidWord family_word(FamilyKind kind, int m) {
    if (m < 1) throw DataError("family words need m >= 1, got " + std::to_string(m));
    std::vector<Letter> letters;
    letters.reserve(static_cast<std::size_t>(6 * m));
    auto power = [&](Letter g, int count) { letters.insert(letters.end(), static_cast<std::size_t>(count), g); };
    auto blocks = [&](Letter outer, Letter inner) {
        for (int j = 0; j < m; ++j) {
            letters.push_back(outer);
            letters.push_back(inner);
            letters.push_back(inner);
            letters.push_back(outer);
        }
    };
    switch (kind) {
        case FamilyKind::prop1_left:
            power(1, 2 * m);
            blocks(2, 1);
            break;
        case FamilyKind::prop1_right:
            blocks(2, 1);
            power(1, 2 * m);
            break;
        case FamilyKind::lcm_right:
            power(2, 2 * m);
            blocks(1, 2);
            break;
    }
    return BraidWord(3, std::move(letters));
}

Derivation grid_derivation(int m) {
    if (m < 1) throw DataError("grid derivation needs m >= 1, got " + std::to_string(m));
    std::vector<Move> moves;
    moves.reserve(static_cast<std::size_t>(4 * m * m));
    // Rightmost 1^2 chunk first; it starts at letter 2k-1 and hops one
    // (2 1 1 2) block per window macro.
    for (int chunk = m; chunk >= 1; --chunk) {
        for (int hop = 0; hop < m; ++hop) {
            int s = 2 * chunk - 1 + 4 * hop;
            moves.push_back(Move::hexagon(s + 1));
            moves.push_back(Move::hexagon(s));
            moves.push_back(Move::hexagon(s + 3));
            moves.push_back(Move::hexagon(s + 2));
        }
    }
    return Derivation{family_word(FamilyKind::prop1_left, m), std::move(moves)};
}

}  // namespace braidmetric
