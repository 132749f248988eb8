#include "braidmetric/metric.hpp"

#include <algorithm>
#include <cstring>
#include <map>
#include <numeric>
#include <random>
#include <unordered_map>

namespace braidmetric {

std::string_view to_string(DistanceStatus status) {
    switch (status) {
        case DistanceStatus::exact: return "exact";
        case DistanceStatus::not_equivalent: return "not_equivalent";
        case DistanceStatus::unknown: return "unknown";
    }
    throw ConsistencyError("unhandled DistanceStatus");
}

namespace {

void require_same_strand_count(const BraidWord& a, const BraidWord& b) {
    if (a.strand_count() != b.strand_count())
        throw DataError("strand counts differ: " + std::to_string(a.strand_count()) + " vs " +
                        std::to_string(b.strand_count()));
}

void require_positive(const BraidWord& w, const char* which) {
    if (!w.is_positive())
        throw PreconditionError(std::string(which) +
                                " word is not positive; use the general-word search");
}

// Letter sequences are the canonical visited-set keys; two bytes per letter.
std::string key_of(const BraidWord& w) {
    std::string key(w.length() * 2, '\0');
    for (std::size_t i = 0; i < w.length(); ++i) {
        auto v = static_cast<std::int16_t>(w.letters()[i]);
        std::memcpy(key.data() + 2 * i, &v, 2);
    }
    return key;
}

struct SearchOutcome {
    enum class Kind { found, exhausted, limited } kind;
    std::size_t depth = 0;
    std::vector<Move> path;
    std::string reason;
};

// Single-source breadth-first search over the move graph, expanding
// neighbors in the fixed enumeration order so distances, ties and witness
// paths come out identical on every run.
SearchOutcome shortest_path_search(const BraidWord& from, const BraidWord& to, bool general,
                                   const SearchLimits& limits, bool want_path) {
    if (from.strand_count() > 32767)
        throw DataError("strand count too large for the search key encoding");

    struct Provenance {
        std::int64_t parent;
        Move via;
    };
    std::vector<BraidWord> words;
    std::vector<Provenance> provenance;
    std::unordered_map<std::string, std::size_t> visited;

    const std::string target_key = key_of(to);
    auto build_path = [&](std::size_t index) {
        std::vector<Move> path;
        for (std::int64_t at = static_cast<std::int64_t>(index); provenance[static_cast<std::size_t>(at)].parent >= 0;
             at = provenance[static_cast<std::size_t>(at)].parent)
            path.push_back(provenance[static_cast<std::size_t>(at)].via);
        std::reverse(path.begin(), path.end());
        return path;
    };

    words.push_back(from);
    provenance.push_back({-1, Move{}});
    visited.emplace(key_of(from), 0);

    const MoveEnumOptions enum_opts{.include_free_inserts = general};
    std::size_t layer_begin = 0, layer_end = 1, depth = 0;
    while (layer_begin < layer_end) {
        if (depth + 1 > limits.max_depth)
            return {SearchOutcome::Kind::limited, depth, {}, "max_depth"};
        for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
            const BraidWord current = words[idx];  // copy: words grows while we expand
            for (const Move& m : applicable_moves(current, enum_opts)) {
                if (m.kind == MoveKind::free_insert &&
                    current.length() + 2 > limits.max_word_length)
                    continue;
                BraidWord next = apply_move(current, m);
                std::string key = key_of(next);
                auto [it, inserted] = visited.emplace(std::move(key), words.size());
                if (!inserted) continue;
                const bool is_target = it->first == target_key;
                if (!is_target && words.size() >= limits.max_states)
                    return {SearchOutcome::Kind::limited, depth, {}, "max_states"};
                words.push_back(std::move(next));
                provenance.push_back({static_cast<std::int64_t>(idx), m});
                if (is_target)
                    return {SearchOutcome::Kind::found, depth + 1,
                            want_path ? build_path(words.size() - 1) : std::vector<Move>{},
                            {}};
            }
        }
        layer_begin = layer_end;
        layer_end = words.size();
        ++depth;
    }
    return {SearchOutcome::Kind::exhausted, depth, {}, {}};
}

DistanceResult exact_result(const BraidWord& start, std::size_t depth, std::vector<Move> path) {
    DistanceResult r;
    r.status = DistanceStatus::exact;
    r.distance = depth;
    r.witness = Derivation{start, std::move(path)};
    return r;
}

DistanceResult status_result(DistanceStatus status, std::string reason = {}) {
    DistanceResult r;
    r.status = status;
    r.reason = std::move(reason);
    return r;
}

int letter_sign_sum(const BraidWord& w) {
    return std::accumulate(w.letters().begin(), w.letters().end(), 0,
                           [](int acc, Letter l) { return acc + sign_of(l); });
}

}  // namespace

Equivalence equivalent(const BraidWord& a, const BraidWord& b, const SearchLimits& limits) {
    require_same_strand_count(a, b);
    require_positive(a, "first");
    require_positive(b, "second");
    if (a == b) return Equivalence::equivalent;
    if (a.length() != b.length()) return Equivalence::not_equivalent;
    if (name_multiset(a) != name_multiset(b)) return Equivalence::not_equivalent;

    SearchOutcome outcome = shortest_path_search(a, b, /*general=*/false, limits, false);
    switch (outcome.kind) {
        case SearchOutcome::Kind::found: return Equivalence::equivalent;
        case SearchOutcome::Kind::exhausted: return Equivalence::not_equivalent;
        case SearchOutcome::Kind::limited: return Equivalence::unknown;
    }
    throw ConsistencyError("unhandled search outcome");
}

DistanceResult exact_distance(const BraidWord& a, const BraidWord& b, const SearchLimits& limits) {
    require_same_strand_count(a, b);
    require_positive(a, "first");
    require_positive(b, "second");
    if (a == b) return exact_result(a, 0, {});
    if (a.length() != b.length()) return status_result(DistanceStatus::not_equivalent);
    if (name_multiset(a) != name_multiset(b)) return status_result(DistanceStatus::not_equivalent);

    SearchOutcome outcome = shortest_path_search(a, b, /*general=*/false, limits, true);
    switch (outcome.kind) {
        case SearchOutcome::Kind::found:
            return exact_result(a, outcome.depth, std::move(outcome.path));
        case SearchOutcome::Kind::exhausted: return status_result(DistanceStatus::not_equivalent);
        case SearchOutcome::Kind::limited:
            return status_result(DistanceStatus::unknown, outcome.reason);
    }
    throw ConsistencyError("unhandled search outcome");
}

DistanceResult exact_distance_general(const BraidWord& a, const BraidWord& b,
                                      const SearchLimits& limits) {
    require_same_strand_count(a, b);
    if (limits.max_word_length == 0)
        throw DataError("the general search needs limits.max_word_length set");
    if (std::max(a.length(), b.length()) > limits.max_word_length)
        throw DataError("max_word_length is smaller than an input word");
    if (a == b) return exact_result(a, 0, {});
    if (!(permutation_of(a) == permutation_of(b)))
        return status_result(DistanceStatus::not_equivalent);
    if (letter_sign_sum(a) != letter_sign_sum(b))
        return status_result(DistanceStatus::not_equivalent);

    SearchOutcome outcome = shortest_path_search(a, b, /*general=*/true, limits, true);
    switch (outcome.kind) {
        case SearchOutcome::Kind::found:
            return exact_result(a, outcome.depth, std::move(outcome.path));
        case SearchOutcome::Kind::exhausted:
            // Running out of moves under a length cap proves nothing.
            return status_result(DistanceStatus::unknown, "length_capped_class_exhausted");
        case SearchOutcome::Kind::limited:
            return status_result(DistanceStatus::unknown, outcome.reason);
    }
    throw ConsistencyError("unhandled search outcome");
}

LowerBoundReport lower_bound(const BraidWord& a, const BraidWord& b) {
    require_same_strand_count(a, b);
    require_positive(a, "first");
    require_positive(b, "second");

    LowerBoundReport report;
    if (name_multiset(a) != name_multiset(b)) return report;
    report.multiset_equal = true;

    const std::vector<NameEntry> first = name_sequence(a).entries;
    const std::vector<NameEntry> second = name_sequence(b).entries;

    // Align: position of each first-sequence entry inside the second one.
    std::map<NameEntry, int> where;
    for (std::size_t j = 0; j < second.size(); ++j) {
        if (!where.emplace(second[j], static_cast<int>(j)).second)
            throw ConsistencyError("duplicate entry in a positive name sequence");
    }
    std::vector<int> other_pos(first.size());
    for (std::size_t i = 0; i < first.size(); ++i) other_pos[i] = where.at(first[i]);

    for (std::size_t i = 0; i < first.size(); ++i) {
        for (std::size_t j = i + 1; j < first.size(); ++j) {
            if (other_pos[i] < other_pos[j]) continue;  // same relative order
            switch (classify_pair(first[i], first[j])) {
                case PairClass::identical_pair:
                    throw ConsistencyError("entries of one strand pair inverted; rank order broken");
                case PairClass::disjoint: ++report.disjoint_inversions; break;
                case PairClass::shared_median:
                    ++report.median_inversions;
                    [[fallthrough]];
                case PairClass::shared: ++report.shared_inversions; break;
            }
        }
    }
    report.bound_simple = report.disjoint_inversions + report.median_inversions;
    report.bound = report.disjoint_inversions +
                   std::max(report.median_inversions, (report.shared_inversions + 2) / 3);
    return report;
}

RandomPair random_equivalent_pair(const BraidWord& w, int steps, std::uint64_t seed) {
    if (steps < 0) throw DataError("steps must be nonnegative");
    require_positive(w, "start");

    // Plain modulo reduction keeps the draw sequence identical across
    // platforms; distribution classes do not promise that.
    std::mt19937_64 rng(seed);
    BraidWord current = w;
    std::vector<Move> applied;
    applied.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        std::vector<Move> options = applicable_moves(current);
        if (options.empty()) break;
        const Move& m = options[static_cast<std::size_t>(rng() % options.size())];
        current = apply_move(current, m);
        applied.push_back(m);
    }
    return RandomPair{std::move(current), Derivation{w, std::move(applied)}};
}

}  // namespace braidmetric
