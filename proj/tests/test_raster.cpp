#include <doctest.h>

#include <set>

#include "ringaug/raster.hpp"
#include "ringaug/rng.hpp"
#include "test_support.hpp"

using namespace ringaug;

TEST_CASE("rasterized ring fills outer minus hole") {
    const auto mask = rasterize(testutil::example_ring(), 64, 64);
    CHECK(mask.count() == 900 - 100);
    CHECK(mask == testutil::oracle_rasterize(testutil::example_ring(), 64, 64));
}

TEST_CASE("rasterized square has exact area") {
    RingPolygon square;
    square.vertices = {{0, 0}, {8, 0}, {8, 8}, {0, 8}};
    const auto mask = rasterize(square, 16, 16);
    CHECK(mask.count() == 64);
    CHECK(mask == testutil::oracle_rasterize(square, 16, 16));
}

TEST_CASE("polygon outside the frame rasterizes to an empty mask") {
    RingPolygon far;
    far.vertices = {{100, 100}, {120, 100}, {120, 120}, {100, 120}};
    CHECK(rasterize(far, 32, 32).count() == 0);
}

TEST_CASE("rasterize matches the per-pixel parity oracle on random polygons") {
    SplitMix64 rng(0x5EED0001);
    for (int iter = 0; iter < 60; ++iter) {
        const int w = 16 + static_cast<int>(rng.next_in(0, 112));
        const int h = 16 + static_cast<int>(rng.next_in(0, 112));
        const auto poly = testutil::random_star_polygon(rng, 64, w, h);
        CHECK(rasterize(poly, w, h) == testutil::oracle_rasterize(poly, w, h));
    }
}

TEST_CASE("rasterize matches the oracle on random rings") {
    SplitMix64 rng(0x5EED0002);
    for (int iter = 0; iter < 20; ++iter) {
        auto ring = testutil::example_ring();
        const double jx = rng.next_in(-5.0, 15.0);
        const double jy = rng.next_in(-5.0, 15.0);
        for (auto& v : ring.vertices) {
            v.x += jx;
            v.y += jy;
        }
        CHECK(rasterize(ring, 72, 72) == testutil::oracle_rasterize(ring, 72, 72));
    }
}

TEST_CASE("boundary extraction: empty mask gives no chains") {
    CHECK(extract_boundary(BinaryMask(8, 8)).empty());
}

TEST_CASE("boundary extraction: 3x3 block gives one chain of its 8 border pixels") {
    BinaryMask mask(8, 8);
    for (int y = 2; y <= 4; ++y) {
        for (int x = 2; x <= 4; ++x) mask.set(x, y, true);
    }
    const auto chains = extract_boundary(mask);
    REQUIRE(chains.size() == 1);
    CHECK(chains[0].points.size() == 8);
    CHECK(!chains[0].is_hole);

    const auto expected = testutil::oracle_border_pixels(mask);
    std::set<std::pair<int, int>> chain_set, oracle_set;
    for (const auto& p : chains[0].points) chain_set.insert({p.x, p.y});
    for (const auto& p : expected) oracle_set.insert({p.x, p.y});
    CHECK(chain_set == oracle_set);
}

TEST_CASE("boundary extraction: ring mask gives outer and hole chains") {
    const auto mask = rasterize(testutil::example_ring(), 64, 64);
    const auto chains = extract_boundary(mask);
    REQUIRE(chains.size() == 2);
    CHECK(!chains[0].is_hole);
    CHECK(chains[1].is_hole);

    // Chain count equals the component count of the border-pixel set, and the
    // chains exactly cover it.
    const auto border = testutil::oracle_border_pixels(mask);
    CHECK(testutil::oracle_component_count(border, true) == 2);
    std::set<std::pair<int, int>> covered, expected;
    for (const auto& chain : chains) {
        for (const auto& p : chain.points) covered.insert({p.x, p.y});
    }
    for (const auto& p : border) expected.insert({p.x, p.y});
    CHECK(covered == expected);
}

TEST_CASE("every chain point is a border pixel and consecutive points are 8-adjacent") {
    SplitMix64 rng(0x5EED0003);
    for (int iter = 0; iter < 25; ++iter) {
        const auto poly = testutil::random_star_polygon(rng, 32, 48, 48);
        const auto mask = rasterize(poly, 48, 48);
        const auto border = testutil::oracle_border_pixels(mask);
        std::set<std::pair<int, int>> border_set;
        for (const auto& p : border) border_set.insert({p.x, p.y});

        for (const auto& chain : extract_boundary(mask)) {
            REQUIRE(!chain.points.empty());
            for (size_t i = 0; i < chain.points.size(); ++i) {
                const auto& p = chain.points[i];
                CHECK(border_set.count({p.x, p.y}) == 1);
                const auto& q = chain.points[(i + 1) % chain.points.size()];
                if (chain.points.size() > 1) {
                    CHECK(std::max(std::abs(p.x - q.x), std::abs(p.y - q.y)) <= 1);
                }
            }
        }
    }
}

TEST_CASE("topology of empty, full, and ring masks") {
    BinaryMask empty(16, 16);
    auto t = topology(empty);
    CHECK(t.components == 0);
    CHECK(t.holes == 0);

    BinaryMask full(16, 16);
    for (auto& b : full.bits) b = 1;
    t = topology(full);
    CHECK(t.components == 1);
    CHECK(t.holes == 0);

    const auto ring_mask = rasterize(testutil::example_ring(), 64, 64);
    t = topology(ring_mask);
    CHECK(t.components == 1);
    CHECK(t.holes == 1);
    const auto [oc, oh] = testutil::oracle_topology(ring_mask);
    CHECK(t.components == oc);
    CHECK(t.holes == oh);
}

TEST_CASE("topology matches the oracle on random masks") {
    SplitMix64 rng(0x5EED0004);
    for (int iter = 0; iter < 20; ++iter) {
        BinaryMask mask(24, 24);
        for (auto& b : mask.bits) b = rng.next_bool(0.45) ? 1 : 0;
        const auto t = topology(mask);
        const auto [oc, oh] = testutil::oracle_topology(mask);
        CHECK(t.components == oc);
        CHECK(t.holes == oh);
    }
}

TEST_CASE("border_pixels matches the direct definition and chain point set") {
    SplitMix64 rng(0x5EED0005);
    for (int iter = 0; iter < 15; ++iter) {
        const auto poly = testutil::random_star_polygon(rng, 24, 40, 40);
        const auto mask = rasterize(poly, 40, 40);
        const auto direct = testutil::oracle_border_pixels(mask);
        const auto got = border_pixels(mask);
        REQUIRE(got.size() == direct.size());
        for (size_t i = 0; i < got.size(); ++i) CHECK(got[i] == direct[i]);

        std::set<std::pair<int, int>> from_chains;
        for (const auto& chain : extract_boundary(mask)) {
            for (const auto& p : chain.points) from_chains.insert({p.x, p.y});
        }
        std::set<std::pair<int, int>> from_pixels;
        for (const auto& p : got) from_pixels.insert({p.x, p.y});
        CHECK(from_chains == from_pixels);
    }
}
