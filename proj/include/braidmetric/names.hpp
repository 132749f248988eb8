#pragma once

#include <compare>
#include <utility>
#include <vector>

#include "braidmetric/braid.hpp"

namespace braidmetric {

/// The label of one crossing: which two strands (by initial position) cross,
/// for which time, and with which sign. The strand pair is stored in
/// increasing order. Positive words only produce sign +1 and rank >= 1;
/// words with inverse letters can reach rank 0 and below.
struct NameEntry {
    int strand_low = 0;
    int strand_high = 0;
    int rank = 0;
    int sign = +1;

    auto operator<=>(const NameEntry&) const = default;

    /// "N(p,q,a)", with "^-1" appended for sign -1.
    std::string str() const;
};

/// Parses the textual form produced by NameEntry::str.
NameEntry parse_name_entry(std::string_view text);

struct NameSequence {
    int strand_count = 2;
    std::vector<NameEntry> entries;

    bool operator==(const NameSequence&) const = default;

    /// Entries joined by single spaces.
    std::string str() const;
};

/// The crossing-name sequence of a positive word, built left to right: the
/// letter at position t crosses the strands currently at positions (i, i+1),
/// and its rank counts how often that strand pair has crossed before, plus
/// one. Throws PreconditionError on words with inverse letters.
NameSequence name_sequence(const BraidWord& w);

/// Name sequence for arbitrary words. Ranks count crossings algebraically:
/// with L the running linking number of the pair, a positive crossing is
/// ranked L+1 (and increments L), a negative one is ranked L (and decrements
/// L). On positive words this agrees with name_sequence.
NameSequence signed_name_sequence(const BraidWord& w);

/// The order-forgetting view of signed_name_sequence, sorted.
std::vector<NameEntry> name_multiset(const BraidWord& w);

/// How one move rewrites the name sequence.
enum class DeltaShape { reverse_3, reverse_2, insert_pair, delete_pair };

/// The exact effect of one move on the name sequence. The entry range is
/// 1-based and inclusive; for insert_pair it indexes the enlarged sequence,
/// for delete_pair the original one. flipped_pairs holds the unordered entry
/// pairs whose relative order the move reversed, each stored with the
/// smaller entry first.
struct MoveDelta {
    MoveKind kind = MoveKind::hexagon;
    DeltaShape shape = DeltaShape::reverse_3;
    int range_first = 0;
    int range_last = 0;
    std::vector<std::pair<NameEntry, NameEntry>> flipped_pairs;
};

/// Computes the name sequences before and after the move and checks that
/// they differ exactly as the move's shape prescribes: a hexagon reverses
/// the 3 entries at its letter positions, a commutation the 2 entries, a
/// free move inserts or deletes one cancelling adjacent pair and touches
/// nothing else. A mismatch is a ConsistencyError: it would mean the
/// rewriting theory behind the whole metric is wrong, so it aborts loudly
/// rather than returning a patched-up answer.
MoveDelta move_delta(const BraidWord& w, const Move& m);

/// How the strand sets of two names relate. identical_pair means the same
/// strand pair (ranks may differ); shared_median means exactly one common
/// strand which is the median of the three strand values involved.
enum class PairClass { identical_pair, disjoint, shared, shared_median };

PairClass classify_pair(const NameEntry& x, const NameEntry& y);

/// Unordered-pair canonical form: smaller entry first.
std::pair<NameEntry, NameEntry> canonical_pair(const NameEntry& x, const NameEntry& y);

}  // namespace braidmetric
