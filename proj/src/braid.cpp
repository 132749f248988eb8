#include "braidmetric/braid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>

namespace braidmetric {

BraidWord::BraidWord(int strand_count, std::vector<Letter> letters)
    : strand_count_(strand_count), letters_(std::move(letters)) {
    if (strand_count_ < 2)
        throw DataError("strand count must be at least 2, got " + std::to_string(strand_count_));
    for (std::size_t i = 0; i < letters_.size(); ++i) {
        int g = generator_of(letters_[i]);
        if (g < 1 || g > strand_count_ - 1)
            throw DataError("letter " + std::to_string(i + 1) + ": generator index " +
                            std::to_string(g) + " out of range [1, " +
                            std::to_string(strand_count_ - 1) + "]");
    }
}

Letter BraidWord::letter_at(int pos) const {
    if (pos < 1 || static_cast<std::size_t>(pos) > letters_.size())
        throw PreconditionError("letter position " + std::to_string(pos) + " out of range");
    return letters_[static_cast<std::size_t>(pos) - 1];
}

bool BraidWord::is_positive() const noexcept {
    return std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l > 0; });
}

BraidWord parse_word(std::string_view text, std::optional<int> strand_count) {
    std::vector<Letter> letters;
    std::size_t i = 0, token_index = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t start = i;
        while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        ++token_index;
        std::string_view token = text.substr(start, i - start);
        int value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc{} || ptr != token.data() + token.size())
            throw DataError("token " + std::to_string(token_index) + " ('" + std::string(token) +
                            "') is not an integer");
        if (value == 0)
            throw DataError("token " + std::to_string(token_index) +
                            " is zero; letters are nonzero signed generator indices");
        letters.push_back(value);
    }

    int max_gen = 1;
    for (Letter l : letters) max_gen = std::max(max_gen, generator_of(l));
    int n = strand_count.value_or(max_gen + 1);
    if (strand_count && *strand_count < max_gen + 1)
        throw DataError("strand count " + std::to_string(*strand_count) +
                        " too small for generator index " + std::to_string(max_gen));
    return BraidWord(n, std::move(letters));
}

std::string format_word(const BraidWord& w) {
    std::string out;
    for (std::size_t i = 0; i < w.letters().size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.letters()[i]);
    }
    return out;
}

StrandState StrandState::identity(int strand_count) {
    StrandState s;
    s.position_to_name.resize(static_cast<std::size_t>(strand_count));
    for (int k = 0; k < strand_count; ++k) s.position_to_name[static_cast<std::size_t>(k)] = k + 1;
    return s;
}

int StrandState::name_at(int position) const {
    if (position < 1 || position > strand_count())
        throw PreconditionError("strand position " + std::to_string(position) + " out of range");
    return position_to_name[static_cast<std::size_t>(position) - 1];
}

void StrandState::swap_positions(int position) {
    if (position < 1 || position > strand_count() - 1)
        throw PreconditionError("cannot swap at position " + std::to_string(position));
    std::swap(position_to_name[static_cast<std::size_t>(position) - 1],
              position_to_name[static_cast<std::size_t>(position)]);
}

bool StrandState::is_identity() const noexcept {
    for (int k = 0; k < strand_count(); ++k)
        if (position_to_name[static_cast<std::size_t>(k)] != k + 1) return false;
    return true;
}

std::vector<StrandState> strand_trace(const BraidWord& w) {
    std::vector<StrandState> states;
    states.reserve(w.length() + 1);
    states.push_back(StrandState::identity(w.strand_count()));
    for (Letter l : w.letters()) {
        StrandState next = states.back();
        next.swap_positions(generator_of(l));
        states.push_back(std::move(next));
    }
    return states;
}

StrandState permutation_of(const BraidWord& w) {
    StrandState state = StrandState::identity(w.strand_count());
    for (Letter l : w.letters()) state.swap_positions(generator_of(l));
    return state;
}

std::string_view to_string(MoveKind kind) {
    switch (kind) {
        case MoveKind::hexagon: return "hexagon";
        case MoveKind::commutation: return "commutation";
        case MoveKind::free_delete: return "free_delete";
        case MoveKind::free_insert: return "free_insert";
    }
    throw ConsistencyError("unhandled MoveKind");
}

MoveKind move_kind_from_string(std::string_view text) {
    if (text == "hexagon") return MoveKind::hexagon;
    if (text == "commutation") return MoveKind::commutation;
    if (text == "free_delete") return MoveKind::free_delete;
    if (text == "free_insert") return MoveKind::free_insert;
    throw DataError("unknown move kind '" + std::string(text) + "'");
}

std::string describe(const Move& m) {
    std::string out = std::string(to_string(m.kind)) + "@" + std::to_string(m.pos);
    if (m.kind == MoveKind::free_insert)
        out += "(g=" + std::to_string(m.generator) + "," +
               (m.order == InsertOrder::pos_then_neg ? "pn" : "np") + ")";
    return out;
}

std::string applicability_issue(const BraidWord& w, const Move& m) {
    const auto& ls = w.letters();
    int len = static_cast<int>(ls.size());
    auto at = [&](int pos) { return ls[static_cast<std::size_t>(pos) - 1]; };

    switch (m.kind) {
        case MoveKind::hexagon: {
            if (m.pos < 1 || m.pos + 2 > len)
                return "needs three letters starting at pos " + std::to_string(m.pos);
            Letter a = at(m.pos), b = at(m.pos + 1), c = at(m.pos + 2);
            if (generator_of(a) != generator_of(c) ||
                std::abs(generator_of(a) - generator_of(b)) != 1)
                return "letters must match (g, h, g) with |g-h| = 1";
            if (sign_of(a) != sign_of(b) || sign_of(b) != sign_of(c))
                return "all three letters must carry the same sign";
            return {};
        }
        case MoveKind::commutation: {
            if (m.pos < 1 || m.pos + 1 > len)
                return "needs two letters starting at pos " + std::to_string(m.pos);
            if (std::abs(generator_of(at(m.pos)) - generator_of(at(m.pos + 1))) < 2)
                return "letters must use generators at distance >= 2";
            return {};
        }
        case MoveKind::free_delete: {
            if (m.pos < 1 || m.pos + 1 > len)
                return "needs two letters starting at pos " + std::to_string(m.pos);
            if (at(m.pos) != -at(m.pos + 1)) return "letters must be a cancelling pair";
            return {};
        }
        case MoveKind::free_insert: {
            if (m.pos < 1 || m.pos > len + 1)
                return "insert position must lie in [1, length+1]";
            if (m.generator < 1 || m.generator > w.strand_count() - 1)
                return "insert generator " + std::to_string(m.generator) + " out of range";
            return {};
        }
    }
    throw ConsistencyError("unhandled MoveKind");
}

bool is_applicable(const BraidWord& w, const Move& m) { return applicability_issue(w, m).empty(); }

std::vector<Move> applicable_moves(const BraidWord& w, const MoveEnumOptions& opts) {
    std::vector<Move> moves;
    int len = static_cast<int>(w.length());
    for (int pos = 1; pos <= len + 1; ++pos) {
        for (Move m : {Move::hexagon(pos), Move::commutation(pos), Move::free_delete(pos)})
            if (is_applicable(w, m)) moves.push_back(m);
        if (opts.include_free_inserts)
            for (int g = 1; g <= w.strand_count() - 1; ++g)
                for (InsertOrder order : {InsertOrder::pos_then_neg, InsertOrder::neg_then_pos})
                    moves.push_back(Move::free_insert(pos, g, order));
    }
    return moves;
}

BraidWord apply_move(const BraidWord& w, const Move& m) {
    if (std::string issue = applicability_issue(w, m); !issue.empty())
        throw PreconditionError(describe(m) + ": " + issue);

    std::vector<Letter> ls = w.letters();
    std::size_t i = static_cast<std::size_t>(m.pos) - 1;
    switch (m.kind) {
        case MoveKind::hexagon: {
            // (g, h, g) -> (h, g, h), signs carried along
            int s = sign_of(ls[i]);
            int g = generator_of(ls[i]), h = generator_of(ls[i + 1]);
            ls[i] = s * h;
            ls[i + 1] = s * g;
            ls[i + 2] = s * h;
            break;
        }
        case MoveKind::commutation:
            std::swap(ls[i], ls[i + 1]);
            break;
        case MoveKind::free_delete:
            ls.erase(ls.begin() + static_cast<std::ptrdiff_t>(i),
                     ls.begin() + static_cast<std::ptrdiff_t>(i) + 2);
            break;
        case MoveKind::free_insert: {
            Letter first = m.order == InsertOrder::pos_then_neg ? m.generator : -m.generator;
            ls.insert(ls.begin() + static_cast<std::ptrdiff_t>(i), {first, -first});
            break;
        }
    }
    return BraidWord(w.strand_count(), std::move(ls));
}

Move inverse_move(const BraidWord& w, const Move& m) {
    if (std::string issue = applicability_issue(w, m); !issue.empty())
        throw PreconditionError(describe(m) + ": " + issue);
    switch (m.kind) {
        case MoveKind::hexagon:
        case MoveKind::commutation:
            return m;
        case MoveKind::free_insert:
            return Move::free_delete(m.pos);
        case MoveKind::free_delete: {
            Letter first = w.letter_at(m.pos);
            return Move::free_insert(m.pos, generator_of(first),
                                     first > 0 ? InsertOrder::pos_then_neg
                                               : InsertOrder::neg_then_pos);
        }
    }
    throw ConsistencyError("unhandled MoveKind");
}

}  // namespace braidmetric
