#include "doctest.h"

#include <algorithm>
#include <random>

#include "braidmetric/names.hpp"
#include "test_util.hpp"

using namespace braidmetric;
using bmtest::N;
using bmtest::W;

namespace {

// the two name rows of the quadratic family at m = 2, frozen
const std::vector<NameEntry> kLeftRow = {N(1, 2, 1), N(1, 2, 2), N(1, 2, 3), N(1, 2, 4),
                                         N(2, 3, 1), N(1, 3, 1), N(1, 3, 2), N(2, 3, 2),
                                         N(2, 3, 3), N(1, 3, 3), N(1, 3, 4), N(2, 3, 4)};
const std::vector<NameEntry> kRightRow = {N(2, 3, 1), N(1, 3, 1), N(1, 3, 2), N(2, 3, 2),
                                          N(2, 3, 3), N(1, 3, 3), N(1, 3, 4), N(2, 3, 4),
                                          N(1, 2, 1), N(1, 2, 2), N(1, 2, 3), N(1, 2, 4)};

}  // namespace

TEST_CASE("name_sequence of the quadratic family words") {
    CHECK(name_sequence(W("1 1 1 1 2 1 1 2 2 1 1 2", 3)).entries == kLeftRow);
    CHECK(name_sequence(W("2 1 1 2 2 1 1 2 1 1 1 1", 3)).entries == kRightRow);
}

TEST_CASE("name_sequence basics") {
    CHECK(name_sequence(W("", 3)).entries.empty());
    CHECK(name_sequence(W("1 2 1", 3)).entries ==
          std::vector<NameEntry>{N(1, 2, 1), N(1, 3, 1), N(2, 3, 1)});
    CHECK(name_sequence(W("1 1 2 1 1 2", 3)).entries ==
          std::vector<NameEntry>{N(1, 2, 1), N(1, 2, 2), N(2, 3, 1), N(1, 3, 1), N(1, 3, 2),
                                 N(2, 3, 2)});
    CHECK_THROWS_AS(name_sequence(W("1 -1", 2)), PreconditionError);
}

TEST_CASE("signed_name_sequence ranks crossings algebraically") {
    SUBCASE("a sequence that dips below rank zero") {
        CHECK(signed_name_sequence(W("1 -2 -2 -2 2 1", 3)).entries ==
              std::vector<NameEntry>{N(1, 2, 1), N(1, 3, 0, -1), N(1, 3, -1, -1), N(1, 3, -2, -1),
                                     N(1, 3, -2), N(1, 2, 2)});
    }
    SUBCASE("a crossing and its undo cancel at the same rank") {
        CHECK(signed_name_sequence(W("1 -1", 2)).entries ==
              std::vector<NameEntry>{N(1, 2, 1), N(1, 2, 1, -1)});
    }
    SUBCASE("agrees with name_sequence on positive words") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 300; ++i) {
            BraidWord w = bmtest::random_positive_word(rng, 2 + static_cast<int>(rng() % 4), 12);
            CHECK(signed_name_sequence(w) == name_sequence(w));
        }
    }
}

TEST_CASE("name_multiset forgets the order") {
    auto a = name_multiset(W("1 2 1", 3));
    auto b = name_multiset(W("2 1 2", 3));
    CHECK(a == b);
    CHECK(a == std::vector<NameEntry>{N(1, 2, 1), N(1, 3, 1), N(2, 3, 1)});
    CHECK(name_sequence(W("1 2 1", 3)).entries != name_sequence(W("2 1 2", 3)).entries);
    CHECK(name_multiset(W("", 2)).empty());
}

TEST_CASE("name text form round trips") {
    CHECK(N(1, 2, 1).str() == "N(1,2,1)");
    CHECK(N(1, 3, -2, -1).str() == "N(1,3,-2)^-1");
    CHECK(parse_name_entry("N(1,2,1)") == N(1, 2, 1));
    CHECK(parse_name_entry("N(1,3,-2)^-1") == N(1, 3, -2, -1));
    CHECK(signed_name_sequence(W("1 -2 -2 -2 2 1", 3)).str() ==
          "N(1,2,1) N(1,3,0)^-1 N(1,3,-1)^-1 N(1,3,-2)^-1 N(1,3,-2) N(1,2,2)");
    CHECK_THROWS_AS(parse_name_entry("N(2,1,1)"), DataError);
    CHECK_THROWS_AS(parse_name_entry("M(1,2,1)"), DataError);
    CHECK_THROWS_AS(parse_name_entry("N(1,2)"), DataError);
}

TEST_CASE("classify_pair") {
    CHECK(classify_pair(N(1, 2, 1), N(1, 2, 5)) == PairClass::identical_pair);
    CHECK(classify_pair(N(1, 2, 1), N(3, 4, 1)) == PairClass::disjoint);
    CHECK(classify_pair(N(1, 2, 1), N(2, 3, 1)) == PairClass::shared_median);
    CHECK(classify_pair(N(1, 2, 1), N(1, 3, 1)) == PairClass::shared);   // shares the minimum
    CHECK(classify_pair(N(1, 3, 1), N(2, 3, 1)) == PairClass::shared);   // shares the maximum
    CHECK(classify_pair(N(2, 4, 1), N(3, 4, 2)) == PairClass::shared);
    CHECK(classify_pair(N(1, 4, 1), N(2, 4, 1)) == PairClass::shared);
    CHECK(classify_pair(N(2, 3, 1), N(2, 5, 1)) == PairClass::shared);  // 2 is the minimum
    CHECK(classify_pair(N(1, 3, 1), N(3, 5, 1)) == PairClass::shared_median);
}

TEST_CASE("move_delta: hexagon reverses three entries") {
    MoveDelta delta = move_delta(W("1 2 1", 3), Move::hexagon(1));
    CHECK(delta.shape == DeltaShape::reverse_3);
    CHECK(delta.range_first == 1);
    CHECK(delta.range_last == 3);
    CHECK(name_sequence(W("2 1 2", 3)).entries ==
          std::vector<NameEntry>{N(2, 3, 1), N(1, 3, 1), N(1, 2, 1)});

    REQUIRE(delta.flipped_pairs.size() == 3);
    auto flipped = delta.flipped_pairs;
    std::sort(flipped.begin(), flipped.end());
    CHECK(flipped == std::vector<std::pair<NameEntry, NameEntry>>{
                         {N(1, 2, 1), N(1, 3, 1)},
                         {N(1, 2, 1), N(2, 3, 1)},
                         {N(1, 3, 1), N(2, 3, 1)}});

    // exactly one flipped pair shares the median strand, one the minimum, one the maximum
    int medians = 0;
    for (const auto& [x, y] : delta.flipped_pairs)
        medians += classify_pair(x, y) == PairClass::shared_median;
    CHECK(medians == 1);
}

TEST_CASE("move_delta: commutation reverses two disjoint entries") {
    MoveDelta delta = move_delta(W("1 3", 4), Move::commutation(1));
    CHECK(delta.shape == DeltaShape::reverse_2);
    CHECK(delta.range_first == 1);
    CHECK(delta.range_last == 2);
    REQUIRE(delta.flipped_pairs.size() == 1);
    CHECK(delta.flipped_pairs.front() == std::pair{N(1, 2, 1), N(3, 4, 1)});
    CHECK(classify_pair(N(1, 2, 1), N(3, 4, 1)) == PairClass::disjoint);
    CHECK(signed_name_sequence(W("3 1", 4)).entries ==
          std::vector<NameEntry>{N(3, 4, 1), N(1, 2, 1)});
}

TEST_CASE("move_delta: free moves insert or delete a cancelling pair") {
    MoveDelta del = move_delta(W("1 -1", 2), Move::free_delete(1));
    CHECK(del.shape == DeltaShape::delete_pair);
    CHECK(del.range_first == 1);
    CHECK(del.range_last == 2);
    CHECK(del.flipped_pairs.empty());

    MoveDelta ins = move_delta(W("2 2", 3), Move::free_insert(2, 1, InsertOrder::neg_then_pos));
    CHECK(ins.shape == DeltaShape::insert_pair);
    CHECK(ins.range_first == 2);
    CHECK(ins.range_last == 3);
    CHECK(ins.flipped_pairs.empty());
}

TEST_CASE("move_delta conforms to the reversal law on random words") {
    std::mt19937_64 rng(20240601);
    for (int i = 0; i < 400; ++i) {
        BraidWord w = bmtest::random_signed_word(rng, 2 + static_cast<int>(rng() % 4), 10);
        auto moves = applicable_moves(w, {.include_free_inserts = true});
        if (moves.empty()) continue;
        const Move& m = moves[rng() % moves.size()];
        MoveDelta delta = move_delta(w, m);  // throws ConsistencyError on shape violation
        switch (m.kind) {
            case MoveKind::hexagon: CHECK(delta.flipped_pairs.size() == 3); break;
            case MoveKind::commutation: CHECK(delta.flipped_pairs.size() == 1); break;
            default: CHECK(delta.flipped_pairs.empty());
        }
        for (const auto& [x, y] : delta.flipped_pairs)
            CHECK(classify_pair(x, y) != PairClass::identical_pair);
    }
}

TEST_CASE("rank order: same-pair entries appear in increasing rank") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        BraidWord w = bmtest::random_positive_word(rng, 2 + static_cast<int>(rng() % 4), 14);
        auto entries = name_sequence(w).entries;
        for (std::size_t a = 0; a < entries.size(); ++a)
            for (std::size_t b = a + 1; b < entries.size(); ++b)
                if (classify_pair(entries[a], entries[b]) == PairClass::identical_pair)
                    CHECK(entries[a].rank < entries[b].rank);
    }
}

TEST_CASE("multiset invariance under relation moves") {
    std::mt19937_64 rng(5150);
    for (int i = 0; i < 300; ++i) {
        BraidWord w = bmtest::random_positive_word(rng, 2 + static_cast<int>(rng() % 4), 12);
        auto moves = applicable_moves(w);
        if (moves.empty()) continue;
        const Move& m = moves[rng() % moves.size()];
        CHECK(name_multiset(apply_move(w, m)) == name_multiset(w));
    }
}

TEST_CASE("strand parity: an odd crossing count swaps the pair") {
    std::mt19937_64 rng(4096);
    for (int i = 0; i < 200; ++i) {
        BraidWord w = bmtest::random_positive_word(rng, 2 + static_cast<int>(rng() % 4), 12);
        StrandState last = permutation_of(w);
        const int n = w.strand_count();
        std::vector<int> final_position(static_cast<std::size_t>(n) + 1);
        for (int pos = 1; pos <= n; ++pos)
            final_position[static_cast<std::size_t>(last.name_at(pos))] = pos;

        auto entries = name_sequence(w).entries;
        for (int p = 1; p <= n; ++p)
            for (int q = p + 1; q <= n; ++q) {
                auto crossings = std::count_if(entries.begin(), entries.end(), [&](const NameEntry& e) {
                    return e.strand_low == p && e.strand_high == q;
                });
                bool swapped = final_position[static_cast<std::size_t>(p)] >
                               final_position[static_cast<std::size_t>(q)];
                CHECK(swapped == (crossings % 2 == 1));
            }
    }
}
