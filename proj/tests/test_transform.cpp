#include <doctest.h>

#include <cmath>

#include "ringaug/error.hpp"
#include "ringaug/transform.hpp"
#include "test_support.hpp"

using namespace ringaug;

TEST_CASE("identity plan leaves points untouched") {
    const auto plan = make_identity(100, 100);
    const Point2 p = apply_point(plan, {7.5, 3.25});
    CHECK(p.x == 7.5);
    CHECK(p.y == 3.25);
}

TEST_CASE("90-degree rotation about the center of a 100x100 frame") {
    // Hand matrix: exact cos = 0, sin = 1 about (49.5, 49.5).
    AffinePlan hand = make_identity(100, 100);
    hand.a = 0.0;
    hand.b = -1.0;
    hand.d = 1.0;
    hand.e = 0.0;
    hand.c = 49.5 - (hand.a * 49.5 + hand.b * 49.5);
    hand.f = 49.5 - (hand.d * 49.5 + hand.e * 49.5);
    const Point2 exact = apply_point(hand, {0.0, 0.0});
    CHECK(exact.x == 99.0);
    CHECK(exact.y == 0.0);

    const auto plan = make_rotation(90.0, 100, 100);
    const Point2 p = apply_point(plan, {0.0, 0.0});
    CHECK(p.x == doctest::Approx(99.0).epsilon(1e-12));
    CHECK(p.y == doctest::Approx(0.0).scale(100).epsilon(1e-12));
}

TEST_CASE("horizontal flip maps x to (w-1) - x") {
    const auto plan = make_hflip(100, 50);
    const Point2 p = apply_point(plan, {10.0, 20.0});
    CHECK(p.x == 89.0);
    CHECK(p.y == 20.0);
}

TEST_CASE("sampling stays within the configured ranges") {
    AugmentationSpec rotation;
    rotation.kind = AugmentationKind::Rotation;
    AugmentationSpec scaling;
    scaling.kind = AugmentationKind::Scaling;
    SplitMix64 seeds(42);
    for (int i = 0; i < 200; ++i) {
        const std::uint64_t seed = seeds.next_u64();
        const auto rot = sample(rotation, seed, 256, 256);
        // Recover the angle from the matrix.
        const double angle = std::atan2(rot.d, rot.a) * 180.0 / 3.14159265358979323846;
        CHECK(angle >= -30.0);
        CHECK(angle <= 30.0);

        const auto sc = sample(scaling, seed, 256, 256);
        CHECK(sc.a >= 0.7);
        CHECK(sc.a <= 1.3);
        CHECK(sc.a == sc.e);
    }
}

TEST_CASE("sampling is deterministic in (spec, seed)") {
    AugmentationSpec spec;
    spec.kind = AugmentationKind::RotationCropping;
    const auto a = sample(spec, 123456789, 512, 512);
    const auto b = sample(spec, 123456789, 512, 512);
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK(a.c == b.c);
    CHECK(a.d == b.d);
    CHECK(a.e == b.e);
    CHECK(a.f == b.f);
    CHECK(a.crop_window->x0 == b.crop_window->x0);
}

TEST_CASE("invalid ranges are rejected") {
    AugmentationSpec spec;
    spec.angle_min = 10.0;
    spec.angle_max = -10.0;
    CHECK_THROWS_AS(spec.check(), ConfigError);

    AugmentationSpec crop;
    crop.crop_min = 0.0;
    CHECK_THROWS_AS(crop.check(), ConfigError);
}

TEST_CASE("invert: identity and translation") {
    const auto id_inv = invert(make_identity(64, 64));
    CHECK(id_inv.a == 1.0);
    CHECK(id_inv.c == 0.0);
    CHECK(id_inv.kind == PlanKind::Identity);

    const auto t_inv = invert(make_translation(5.5, -2.25, 64, 64));
    CHECK(t_inv.c == -5.5);
    CHECK(t_inv.f == 2.25);
}

TEST_CASE("invert round-trips random plans within 1e-9") {
    SplitMix64 rng(0xABCD);
    for (int iter = 0; iter < 100; ++iter) {
        AffinePlan plan = make_identity(512, 512);
        plan.a = rng.next_in(-2.0, 2.0);
        plan.b = rng.next_in(-2.0, 2.0);
        plan.d = rng.next_in(-2.0, 2.0);
        plan.e = rng.next_in(-2.0, 2.0);
        plan.c = rng.next_in(-100.0, 100.0);
        plan.f = rng.next_in(-100.0, 100.0);
        if (std::abs(plan.det()) < 0.05) continue;
        const auto inv = invert(plan);
        for (int k = 0; k < 100; ++k) {
            const Point2 p{rng.next_in(0.0, 512.0), rng.next_in(0.0, 512.0)};
            const Point2 back = apply_point(inv, apply_point(plan, p));
            CHECK(std::abs(back.x - p.x) < 1e-9);
            CHECK(std::abs(back.y - p.y) < 1e-9);
        }
    }
}

TEST_CASE("invert rejects singular matrices") {
    AffinePlan plan = make_identity(32, 32);
    plan.a = 1.0;
    plan.b = 2.0;
    plan.d = 0.5;
    plan.e = 1.0;  // det = 0
    CHECK_THROWS_AS(invert(plan), DegenerateTransformError);
}

TEST_CASE("warp with identity is bit-identical") {
    const auto mask = rasterize(testutil::example_ring(), 64, 64);
    CHECK(warp_mask(mask, make_identity(64, 64)) == mask);
}

TEST_CASE("horizontal flip warp reverses every row") {
    const auto mask = rasterize(testutil::example_ring(), 64, 64);
    const auto flipped = warp_mask(mask, make_hflip(64, 64));
    for (int y = 0; y < 64; ++y) {
        for (int x = 0; x < 64; ++x) {
            CHECK(flipped.get(x, y) == mask.get(63 - x, y));
        }
    }
}

TEST_CASE("90-degree warp matches per-pixel inverse mapping") {
    // Asymmetric 8x8 pattern.
    BinaryMask mask(8, 8);
    mask.set(1, 0, true);
    mask.set(2, 0, true);
    mask.set(1, 1, true);
    mask.set(5, 3, true);
    mask.set(6, 7, true);
    const auto plan = make_rotation(90.0, 8, 8);
    const auto warped = warp_mask(mask, plan);

    const auto inv = invert(plan);
    for (int py = 0; py < 8; ++py) {
        for (int px = 0; px < 8; ++px) {
            const double sx = inv.a * px + inv.b * py + inv.c;
            const double sy = inv.d * px + inv.e * py + inv.f;
            const int rx = static_cast<int>(std::floor(sx + 0.5));
            const int ry = static_cast<int>(std::floor(sy + 0.5));
            const bool expect =
                rx >= 0 && ry >= 0 && rx < 8 && ry < 8 && mask.get(rx, ry);
            CHECK(warped.get(px, py) == expect);
        }
    }
}

TEST_CASE("warp-then-rasterize tracks rasterize-then-transform") {
    SplitMix64 rng(0x1234);
    for (int iter = 0; iter < 5; ++iter) {
        const auto ring = testutil::example_ring();
        RingPolygon big;
        big.partition = ring.partition;
        for (const auto& v : ring.vertices) {
            big.vertices.push_back({v.x * 8.0 + 60.0, v.y * 8.0 + 60.0});
        }
        const auto plan = make_rotation(rng.next_in(-30.0, 30.0), 512, 512);
        const auto a = warp_mask(rasterize(big, 512, 512), plan);
        const auto b = rasterize(apply_polygon(plan, big), 512, 512);
        CHECK(mask_iou(a, b) >= 0.98);
    }
}

TEST_CASE("crop maps its window onto the output frame") {
    const auto plan = make_crop(10.0, 20.0, 50.0, 25.0, 100, 50);
    const Point2 tl = apply_point(plan, {10.0, 20.0});
    CHECK(tl.x == doctest::Approx(0.0));
    CHECK(tl.y == doctest::Approx(0.0));
    const Point2 br = apply_point(plan, {60.0, 45.0});
    CHECK(br.x == doctest::Approx(100.0));
    CHECK(br.y == doctest::Approx(50.0));
    REQUIRE(plan.crop_window.has_value());
    CHECK(plan.crop_window->x0 == 10.0);
    CHECK(plan.crop_window->y1 == 45.0);
}
