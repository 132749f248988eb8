#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "braidmetric/braid.hpp"
#include "braidmetric/derivation.hpp"
#include "braidmetric/names.hpp"

namespace braidmetric {

struct SearchLimits {
    std::size_t max_states = 10'000'000;
    std::size_t max_depth = std::numeric_limits<std::size_t>::max();
    /// Cap on intermediate word length; must be set for the general search,
    /// unused by the positive one.
    std::size_t max_word_length = 0;
};

enum class DistanceStatus { exact, not_equivalent, unknown };

std::string_view to_string(DistanceStatus status);

struct DistanceResult {
    DistanceStatus status = DistanceStatus::unknown;
    std::size_t distance = 0;              // meaningful when exact
    std::optional<Derivation> witness;     // present when exact
    std::string reason;                    // set when unknown

    bool is_exact() const noexcept { return status == DistanceStatus::exact; }
};

enum class Equivalence { equivalent, not_equivalent, unknown };

/// Decides whether two positive words represent the same braid by
/// breadth-first exploration of the class of the first word under hexagon
/// and commutation moves (a finite class: length and alphabet are fixed).
/// Differing lengths or name multisets settle the question without search.
/// Returns unknown only when a limit is hit first.
Equivalence equivalent(const BraidWord& a, const BraidWord& b, const SearchLimits& limits = {});

/// Length of a shortest hexagon/commutation rewriting between two positive
/// words, with a witness derivation of exactly that many moves. Search is
/// breadth-first with neighbor expansion in the fixed move order, so results
/// and witnesses are deterministic.
DistanceResult exact_distance(const BraidWord& a, const BraidWord& b, const SearchLimits& limits = {});

/// Shortest rewriting between arbitrary words using all four move kinds,
/// with intermediate words capped at limits.max_word_length (which must be
/// set and at least as large as both inputs). Only a semi-decision: a capped
/// search that runs out of moves proves nothing, so limits produce unknown.
/// Words with different final permutations or different letter-sign sums are
/// rejected without search.
DistanceResult exact_distance_general(const BraidWord& a, const BraidWord& b, const SearchLimits& limits);

/// Inversion counts between the name sequences of two positive words with
/// equal name multisets, split by strand-set class of the inverted pair:
/// D disjoint, Sh sharing one strand, M the Sh-subset whose common strand is
/// the median value. One commutation flips exactly one disjoint pair and one
/// hexagon exactly three shared pairs of which exactly one is median, so any
/// rewriting needs at least D commutations and max(M, ceil(Sh/3)) hexagons.
struct LowerBoundReport {
    bool multiset_equal = false;
    std::size_t disjoint_inversions = 0;   // D
    std::size_t shared_inversions = 0;     // Sh, includes median pairs
    std::size_t median_inversions = 0;     // M
    std::size_t bound_simple = 0;          // D + M
    std::size_t bound = 0;                 // D + max(M, ceil(Sh/3))
};

/// Counts are all zero with multiset_equal=false when the multisets differ
/// (the words are then not equivalent and no bound applies). Two names of
/// the same strand pair can never invert; seeing that would falsify the rank
/// ordering of name sequences and raises ConsistencyError.
LowerBoundReport lower_bound(const BraidWord& a, const BraidWord& b);

struct RandomPair {
    BraidWord word;
    Derivation derivation;
};

/// Applies `steps` uniformly chosen applicable relation moves (hexagon or
/// commutation) to a positive word. Seeded and reproducible; a word with no
/// applicable move is returned unchanged with an empty trace.
RandomPair random_equivalent_pair(const BraidWord& w, int steps, std::uint64_t seed);

}  // namespace braidmetric
