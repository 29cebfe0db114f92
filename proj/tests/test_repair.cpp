#include <doctest.h>

#include <algorithm>

#include "ringaug/error.hpp"
#include "ringaug/metrics.hpp"
#include "ringaug/repair.hpp"
#include "test_support.hpp"

using namespace ringaug;

namespace {

SurvivorSequence make_sequence(int n, const std::vector<int>& indices) {
    SurvivorSequence seq;
    seq.n = n;
    for (int k : indices) {
        seq.survivors.push_back({k, {static_cast<double>(k), 0.0}});
    }
    return seq;
}

}  // namespace

TEST_CASE("full survival reproduces the chain unchanged") {
    const auto seq = make_sequence(8, {1, 2, 3, 4, 5, 6, 7, 8});
    const auto repaired = repair(seq);
    REQUIRE(repaired.size() == 8);
    const auto indices = repaired.original_indices();
    for (int t = 0; t < 8; ++t) CHECK(indices[static_cast<size_t>(t)] == t + 1);
}

TEST_CASE("gaps are bridged in survivor order") {
    // Hand-simulation for J = (1,2,3,6,7,8), n = 8: the walk emits edges
    // (1,2) (2,3) (3,6) (6,7) (7,8) (8,1); (3,6) bridges the gap and (8,1)
    // closes the cycle.
    const auto seq = make_sequence(8, {1, 2, 3, 6, 7, 8});
    const auto repaired = repair(seq);
    REQUIRE(repaired.size() == 6);
    const auto indices = repaired.original_indices();
    const std::vector<int> expected{1, 2, 3, 6, 7, 8};
    CHECK(indices == expected);
    // Edge set check via consecutive pairs (cyclic).
    std::vector<std::pair<int, int>> edges;
    for (size_t t = 0; t < indices.size(); ++t) {
        edges.emplace_back(indices[t], indices[(t + 1) % indices.size()]);
    }
    CHECK(std::count(edges.begin(), edges.end(), std::pair<int, int>{3, 6}) == 1);
    CHECK(std::count(edges.begin(), edges.end(), std::pair<int, int>{8, 1}) == 1);
}

TEST_CASE("empty and degenerate survivor sets are rejected") {
    CHECK_THROWS_AS(repair(make_sequence(8, {})), EmptyPolygonError);
    CHECK_THROWS_AS(repair(make_sequence(8, {5})), DegeneratePolygonError);
    CHECK_THROWS_AS(repair(make_sequence(8, {2, 7})), DegeneratePolygonError);
}

TEST_CASE("repair_with_clips: no clips equals repair") {
    const auto seq = make_sequence(8, {1, 2, 3, 6, 7, 8});
    const auto a = repair(seq);
    const auto b = repair_with_clips(seq, {});
    REQUIRE(a.size() == b.size());
    for (int i = 0; i < a.size(); ++i) {
        CHECK(a.entries[static_cast<size_t>(i)].original_index ==
              b.entries[static_cast<size_t>(i)].original_index);
    }
}

TEST_CASE("repair_with_clips inserts a single clip inside its gap") {
    const auto seq = make_sequence(8, {1, 2, 3, 6, 7, 8});
    ClipVertex clip;
    clip.position = {0.0, 5.0};
    clip.source_edge = 4;
    clip.edge_param = 0.5;
    clip.between = {3, 6};
    const auto repaired = repair_with_clips(seq, {clip});
    REQUIRE(repaired.size() == 7);
    CHECK(repaired.entries[2].original_index == 3);
    CHECK(repaired.entries[3].kind == RepairedEntry::Kind::Clip);
    CHECK(repaired.entries[3].position.x == 0.0);
    CHECK(repaired.entries[3].position.y == 5.0);
    CHECK(repaired.entries[4].original_index == 6);
}

TEST_CASE("clips in one gap are ordered by (edge, parameter)") {
    const auto seq = make_sequence(8, {1, 2, 3, 6, 7, 8});
    ClipVertex late;
    late.position = {2.0, 0.0};
    late.source_edge = 4;
    late.edge_param = 0.8;
    late.between = {3, 6};
    ClipVertex early;
    early.position = {1.0, 0.0};
    early.source_edge = 4;
    early.edge_param = 0.2;
    early.between = {3, 6};
    const auto repaired = repair_with_clips(seq, {late, early});
    REQUIRE(repaired.size() == 8);
    CHECK(repaired.entries[3].edge_param == 0.2);
    CHECK(repaired.entries[4].edge_param == 0.8);
}

TEST_CASE("a clip naming a non-gap pair is rejected") {
    const auto seq = make_sequence(8, {1, 2, 3, 6, 7, 8});
    ClipVertex bad;
    bad.source_edge = 4;
    bad.edge_param = 0.5;
    bad.between = {2, 6};  // not consecutive survivors
    CHECK_THROWS_AS(repair_with_clips(seq, {bad}), InconsistencyError);
}

TEST_CASE("order preservation: rotating to the minimum yields ascending indices") {
    SplitMix64 rng(77);
    for (int iter = 0; iter < 50; ++iter) {
        const int n = 8 + static_cast<int>(rng.next_in(0, 56));
        std::vector<int> indices;
        for (int i = 1; i <= n; ++i) {
            if (rng.next_bool(0.6)) indices.push_back(i);
        }
        if (static_cast<int>(indices.size()) < 3) continue;
        const auto repaired = repair(make_sequence(n, indices));
        auto got = repaired.original_indices();
        // Closure: the walk returns to the start after exactly m edges.
        CHECK(got.size() == indices.size());
        auto rotated = got;
        std::rotate(rotated.begin(), std::min_element(rotated.begin(), rotated.end()),
                    rotated.end());
        CHECK(std::is_sorted(rotated.begin(), rotated.end()));
        // Metric closure: relaxed adjacency of any repair output is perfect.
        CHECK(cap_order(n, got) == 1.0);
    }
}

TEST_CASE("repair is idempotent on gap-free chains") {
    const auto seq = make_sequence(5, {1, 2, 3, 4, 5});
    const auto once = repair(seq);
    SurvivorSequence again;
    again.n = 5;
    for (const auto& e : once.entries) again.survivors.push_back({e.original_index, e.position});
    const auto twice = repair(again);
    CHECK(twice.original_indices() == once.original_indices());
}

TEST_CASE("partition is recomputed from surviving outer entries") {
    // Ring n = 10, L = 5. Outer survivors 1,2,4,5; inner survivors 6,8,9.
    SurvivorSequence seq = make_sequence(10, {1, 2, 4, 5, 6, 8, 9});
    const auto repaired = repair_with_clips(seq, {}, 5);
    REQUIRE(repaired.partition.has_value());
    CHECK(*repaired.partition == 4);

    const auto poly = to_ring_polygon(repaired);
    CHECK(poly.is_ring());
    CHECK(poly.size() == 7);
}

TEST_CASE("partition is dropped when a side collapses") {
    // All inner vertices gone.
    const auto repaired = repair_with_clips(make_sequence(10, {1, 2, 3, 4, 5}), {}, 5);
    CHECK(!repaired.partition.has_value());
    CHECK(!to_ring_polygon(repaired).is_ring());

    // Only two outer survivors.
    const auto repaired2 =
        repair_with_clips(make_sequence(10, {1, 2, 6, 7, 8, 9}), {}, 5);
    CHECK(!repaired2.partition.has_value());
}
