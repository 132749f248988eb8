#include "braidmetric/names.hpp"

#include <algorithm>
#include <charconv>
#include <map>

namespace braidmetric {

std::string NameEntry::str() const {
    std::string out = "N(" + std::to_string(strand_low) + "," + std::to_string(strand_high) +
                      "," + std::to_string(rank) + ")";
    if (sign < 0) out += "^-1";
    return out;
}

NameEntry parse_name_entry(std::string_view text) {
    auto fail = [&]() -> DataError {
        return DataError("bad name '" + std::string(text) + "', expected N(p,q,a) or N(p,q,a)^-1");
    };
    std::string_view rest = text;
    int sign = +1;
    if (rest.size() >= 3 && rest.substr(rest.size() - 3) == "^-1") {
        sign = -1;
        rest.remove_suffix(3);
    }
    if (rest.size() < 4 || rest.front() != 'N' || rest[1] != '(' || rest.back() != ')') throw fail();
    rest = rest.substr(2, rest.size() - 3);

    int values[3];
    for (int k = 0; k < 3; ++k) {
        std::size_t comma = k < 2 ? rest.find(',') : rest.size();
        if (comma == std::string_view::npos) throw fail();
        std::string_view field = rest.substr(0, comma);
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), values[k]);
        if (ec != std::errc{} || ptr != field.data() + field.size()) throw fail();
        if (k < 2) rest.remove_prefix(comma + 1);
    }
    if (values[0] < 1 || values[1] <= values[0]) throw fail();
    return NameEntry{values[0], values[1], values[2], sign};
}

std::string NameSequence::str() const {
    std::string out;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ' ';
        out += entries[i].str();
    }
    return out;
}

NameSequence signed_name_sequence(const BraidWord& w) {
    NameSequence seq;
    seq.strand_count = w.strand_count();
    seq.entries.reserve(w.length());

    StrandState state = StrandState::identity(w.strand_count());
    std::map<std::pair<int, int>, int> linking;  // running algebraic crossing count per pair
    for (Letter l : w.letters()) {
        int i = generator_of(l);
        int p = state.name_at(i), q = state.name_at(i + 1);
        if (p > q) std::swap(p, q);
        int& count = linking[{p, q}];
        if (l > 0) {
            seq.entries.push_back(NameEntry{p, q, count + 1, +1});
            ++count;
        } else {
            seq.entries.push_back(NameEntry{p, q, count, -1});
            --count;
        }
        state.swap_positions(i);
    }
    return seq;
}

NameSequence name_sequence(const BraidWord& w) {
    if (!w.is_positive())
        throw PreconditionError(
            "name_sequence is defined on positive words only; use signed_name_sequence");
    return signed_name_sequence(w);
}

std::vector<NameEntry> name_multiset(const BraidWord& w) {
    std::vector<NameEntry> entries = signed_name_sequence(w).entries;
    std::sort(entries.begin(), entries.end());
    return entries;
}

PairClass classify_pair(const NameEntry& x, const NameEntry& y) {
    if (x.strand_low == y.strand_low && x.strand_high == y.strand_high)
        return PairClass::identical_pair;
    int common = 0, common_strand = 0;
    for (int a : {x.strand_low, x.strand_high})
        for (int b : {y.strand_low, y.strand_high})
            if (a == b) {
                ++common;
                common_strand = a;
            }
    if (common == 0) return PairClass::disjoint;
    if (common != 1) throw ConsistencyError("entries share two strands but are not the same pair");
    // three distinct strands involved; is the common one the median?
    int lo = std::min(std::min(x.strand_low, y.strand_low), std::min(x.strand_high, y.strand_high));
    int hi = std::max(std::max(x.strand_low, y.strand_low), std::max(x.strand_high, y.strand_high));
    return (common_strand != lo && common_strand != hi) ? PairClass::shared_median
                                                        : PairClass::shared;
}

std::pair<NameEntry, NameEntry> canonical_pair(const NameEntry& x, const NameEntry& y) {
    return x <= y ? std::pair{x, y} : std::pair{y, x};
}

namespace {

void require(bool ok, const Move& m, const std::string& detail) {
    if (!ok)
        throw ConsistencyError("move delta of " + describe(m) +
                               " does not have its prescribed shape: " + detail);
}

// before[i] must equal after[i + shift] outside [skip_first, skip_last] (1-based, on `before`).
void check_untouched(const std::vector<NameEntry>& before, const std::vector<NameEntry>& after,
                     int skip_first, int skip_last, int shift, const Move& m) {
    for (int i = 1; i <= static_cast<int>(before.size()); ++i) {
        if (i >= skip_first && i <= skip_last) continue;
        int j = i > skip_last ? i + shift : i;
        require(after[static_cast<std::size_t>(j) - 1] == before[static_cast<std::size_t>(i) - 1],
                m, "entry " + std::to_string(i) + " changed outside the affected range");
    }
}

}  // namespace

MoveDelta move_delta(const BraidWord& w, const Move& m) {
    const std::vector<NameEntry> before = signed_name_sequence(w).entries;
    const std::vector<NameEntry> after = signed_name_sequence(apply_move(w, m)).entries;

    MoveDelta delta;
    delta.kind = m.kind;
    switch (m.kind) {
        case MoveKind::hexagon:
        case MoveKind::commutation: {
            const int span = m.kind == MoveKind::hexagon ? 3 : 2;
            delta.shape = span == 3 ? DeltaShape::reverse_3 : DeltaShape::reverse_2;
            delta.range_first = m.pos;
            delta.range_last = m.pos + span - 1;
            require(before.size() == after.size(), m, "length changed under a relation move");
            check_untouched(before, after, delta.range_first, delta.range_last, 0, m);
            for (int k = 0; k < span; ++k)
                require(after[static_cast<std::size_t>(m.pos) - 1 + static_cast<std::size_t>(k)] ==
                            before[static_cast<std::size_t>(m.pos) - 1 +
                                   static_cast<std::size_t>(span - 1 - k)],
                        m, "affected entries are not reversed");

            const auto* range = &before[static_cast<std::size_t>(m.pos) - 1];
            for (int a = 0; a < span; ++a)
                for (int b = a + 1; b < span; ++b)
                    delta.flipped_pairs.push_back(canonical_pair(range[a], range[b]));

            if (span == 2) {
                require(classify_pair(range[0], range[1]) == PairClass::disjoint, m,
                        "commuted entries must involve four distinct strands");
            } else {
                int medians = 0;
                for (const auto& [x, y] : delta.flipped_pairs) {
                    PairClass cls = classify_pair(x, y);
                    require(cls == PairClass::shared || cls == PairClass::shared_median, m,
                            "hexagon entries must pairwise share exactly one strand");
                    medians += cls == PairClass::shared_median;
                }
                require(medians == 1, m, "hexagon must flip exactly one median pair");
            }
            break;
        }
        case MoveKind::free_insert:
        case MoveKind::free_delete: {
            const bool inserting = m.kind == MoveKind::free_insert;
            delta.shape = inserting ? DeltaShape::insert_pair : DeltaShape::delete_pair;
            delta.range_first = m.pos;
            delta.range_last = m.pos + 1;
            const auto& longer = inserting ? after : before;
            const auto& shorter = inserting ? before : after;
            require(longer.size() == shorter.size() + 2, m, "length must change by two");
            check_untouched(shorter, longer, m.pos, m.pos - 1, 2, m);
            const NameEntry& first = longer[static_cast<std::size_t>(m.pos) - 1];
            const NameEntry& second = longer[static_cast<std::size_t>(m.pos)];
            require(first.strand_low == second.strand_low &&
                        first.strand_high == second.strand_high && first.rank == second.rank &&
                        first.sign == -second.sign,
                    m, "affected entries must form a cancelling pair");
            break;
        }
    }
    return delta;
}

}  // namespace braidmetric
