#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "braidmetric/errors.hpp"

namespace braidmetric {

/// A letter is a nonzero integer: +i is the positive generator of index i
/// (the strand at position i+1 crosses over the strand at position i),
/// -i is its inverse.
using Letter = int;

constexpr int generator_of(Letter l) noexcept { return l < 0 ? -l : l; }
constexpr int sign_of(Letter l) noexcept { return l < 0 ? -1 : +1; }

/// A word over the generators of the braid group on a fixed number of
/// strands. Generator indices are 1-based and must stay below strand_count.
/// Values are immutable after construction.
class BraidWord {
public:
    BraidWord(int strand_count, std::vector<Letter> letters);

    int strand_count() const noexcept { return strand_count_; }
    const std::vector<Letter>& letters() const noexcept { return letters_; }
    std::size_t length() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    /// 1-based letter access.
    Letter letter_at(int pos) const;

    /// True iff no letter is an inverse generator.
    bool is_positive() const noexcept;

    bool operator==(const BraidWord&) const = default;

private:
    int strand_count_;
    std::vector<Letter> letters_;
};

/// Parses whitespace-separated signed integers: token i means the generator
/// of index i, -i its inverse. Without an explicit strand count the word is
/// placed on (max generator index) + 1 strands, at least 2.
BraidWord parse_word(std::string_view text, std::optional<int> strand_count = std::nullopt);

/// Inverse of parse_word up to whitespace normalization (single spaces).
std::string format_word(const BraidWord& w);

/// Which strand sits where. Entry at position k is the initial position
/// ("name") of the strand currently at position k; always a permutation of
/// 1..n.
struct StrandState {
    std::vector<int> position_to_name;

    static StrandState identity(int strand_count);

    int strand_count() const noexcept { return static_cast<int>(position_to_name.size()); }
    int name_at(int position) const;          // 1-based position
    void swap_positions(int position);        // swaps positions (position, position+1)
    bool is_identity() const noexcept;

    bool operator==(const StrandState&) const = default;
};

/// All length+1 states: the identity, then one state per letter read left to
/// right. Both a generator and its inverse swap the same two positions.
std::vector<StrandState> strand_trace(const BraidWord& w);

/// Final entry of strand_trace.
StrandState permutation_of(const BraidWord& w);

/// Elementary rewriting steps, in their fixed enumeration order.
enum class MoveKind { hexagon, commutation, free_delete, free_insert };

/// Which of the two cancelling letters a free insert puts first.
enum class InsertOrder { pos_then_neg, neg_then_pos };

/// One rewriting step at a 1-based letter position:
///   hexagon      (g, h, g) -> (h, g, h) for |g-h| = 1, all three signs equal
///   commutation  swaps adjacent letters with |g-h| >= 2 (any signs)
///   free_delete  removes an adjacent cancelling pair
///   free_insert  inserts a cancelling pair for `generator` at pos
struct Move {
    MoveKind kind = MoveKind::hexagon;
    int pos = 1;
    int generator = 0;                             // free_insert only
    InsertOrder order = InsertOrder::pos_then_neg; // free_insert only

    static Move hexagon(int pos) { return {MoveKind::hexagon, pos, 0, InsertOrder::pos_then_neg}; }
    static Move commutation(int pos) { return {MoveKind::commutation, pos, 0, InsertOrder::pos_then_neg}; }
    static Move free_delete(int pos) { return {MoveKind::free_delete, pos, 0, InsertOrder::pos_then_neg}; }
    static Move free_insert(int pos, int generator, InsertOrder order) {
        return {MoveKind::free_insert, pos, generator, order};
    }

    bool operator==(const Move&) const = default;
};

std::string_view to_string(MoveKind kind);
MoveKind move_kind_from_string(std::string_view text);

/// Short human-readable form, e.g. "hexagon@3" or "free_insert@1(g=2,pn)".
std::string describe(const Move& m);

struct MoveEnumOptions {
    /// Free inserts are only enumerated on request: there is one per
    /// position, generator and order, which is a lot of mostly useless moves.
    bool include_free_inserts = false;
};

/// Empty string when m applies to w, otherwise the violated pattern.
std::string applicability_issue(const BraidWord& w, const Move& m);

bool is_applicable(const BraidWord& w, const Move& m);

/// Every move applicable to w, in ascending (pos, kind) order; free inserts
/// additionally ordered by generator, then pos_then_neg before neg_then_pos.
std::vector<Move> applicable_moves(const BraidWord& w, const MoveEnumOptions& opts = {});

/// Applies one move. Throws PreconditionError naming the violated pattern if
/// the move does not apply. Relation moves preserve the length; free moves
/// change it by exactly 2.
BraidWord apply_move(const BraidWord& w, const Move& m);

/// The move that undoes m, applicable to apply_move(w, m) at the same
/// position: hexagon and commutation are self-inverse, insert and delete
/// invert each other.
Move inverse_move(const BraidWord& w, const Move& m);

}  // namespace braidmetric
