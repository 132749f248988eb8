#pragma once

#include <map>
#include <utility>
#include <vector>

#include "braidmetric/braid.hpp"
#include "braidmetric/names.hpp"

namespace braidmetric {

/// A start word plus a move list: the trace form of a rewriting between two
/// words. Every result about diagrams in this library is stated on these
/// traces.
struct Derivation {
    BraidWord start;
    std::vector<Move> moves;

    int strand_count() const noexcept { return start.strand_count(); }
    std::size_t length() const noexcept { return moves.size(); }

    bool operator==(const Derivation&) const = default;
};

/// Replays the moves and returns all intermediate words w_0..w_k. Throws
/// PreconditionError at the first inapplicable move, naming its 1-based
/// index and the violated pattern.
std::vector<BraidWord> validate_derivation(const Derivation& d);

/// Last word of validate_derivation.
BraidWord final_word(const Derivation& d);

/// Per-pair order-flip statistics across a derivation. flip_counts maps each
/// unordered name pair (canonical form) to the number of steps that reversed
/// its relative order; a pair of separatrices in the corresponding diagram
/// crosses exactly that often. Totals count flips by pair class, with
/// shared_flips including the median ones.
struct SeparatrixReport {
    std::map<std::pair<NameEntry, NameEntry>, int> flip_counts;
    int disjoint_flips = 0;
    int shared_flips = 0;
    int median_flips = 0;
    int max_flip_count = 0;
};

/// Accumulates move_delta over every step. Requires a valid derivation whose
/// words are all positive.
SeparatrixReport separatrix_report(const Derivation& d);

/// The word families whose distance grows quadratically: on 3 strands,
///   prop1_left(m)  = 1^{2m} (2 1 1 2)^m
///   prop1_right(m) = (2 1 1 2)^m 1^{2m}
///   lcm_right(m)   = 2^{2m} (1 2 2 1)^m
/// all of length 6m. prop1_left and prop1_right are equivalent, as are
/// prop1_left and lcm_right (both complete 1^{2m} resp. 2^{2m} into the same
/// least common right multiple), and each pair lies at distance exactly 4m^2.
enum class FamilyKind { prop1_left, prop1_right, lcm_right };

FamilyKind family_kind_from_string(std::string_view text);
std::string_view to_string(FamilyKind kind);

BraidWord family_word(FamilyKind kind, int m);

/// The explicit derivation of 4m^2 hexagon moves from prop1_left(m) to
/// prop1_right(m). It sweeps each 1^2 chunk rightward past the (2 1 1 2)
/// blocks, rightmost chunk first; one pass of one chunk over one block is
/// the 4-hexagon window macro
///   (1 1 2 1 1 2) -> (1 2 1 2 1 2) -> (2 1 2 2 1 2) -> (2 1 2 1 2 1) -> (2 1 1 2 1 1)
/// which stays inside its 6-letter window.
Derivation grid_derivation(int m);

}  // namespace braidmetric
