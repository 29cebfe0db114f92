#pragma once

#include <cstdint>
#include <vector>

#include "ringaug/polygon.hpp"
#include "ringaug/project.hpp"
#include "ringaug/transform.hpp"

namespace ringaug {

enum class RingFamily {
    Rectangle,         // rectangle with a rectangular hole
    LShape,            // orthogonal L outline with a rectangular hole
    RandomOrthogonal,  // rectangle with random rectangular notches
};

enum class BridgePlacement {
    TopMidpoint,  // extra outer vertex at the top-edge midpoint; the chain
                  // jumps from there to the nearest inner vertex
    FirstVertex,  // chain jumps from the last listed outer corner
};

// Generator settings for the synthetic ring corpus used by tests, benchmarks
// and examples. Output is deterministic in `seed`.
struct SyntheticRingSpec {
    int count = 0;
    int frame_width = 512;
    int frame_height = 512;
    RingFamily family = RingFamily::Rectangle;
    double outer_ratio_min = 0.30;  // outer size as a fraction of the frame
    double outer_ratio_max = 0.62;
    double hole_ratio_min = 0.25;   // hole size as a fraction of the outer size
    double hole_ratio_max = 0.45;
    BridgePlacement bridge = BridgePlacement::TopMidpoint;
    std::uint64_t seed = 0;

    void check() const;  // throws ConfigError on infeasible settings
};

// Generates `count` valid rings. Outer boundaries are wound with positive
// shoelace sign, inner boundaries negative; every hole encloses at least one
// pixel center at the target frame size.
std::vector<RingPolygon> generate_corpus(const SyntheticRingSpec& spec);

// Coordinate-space augmentation with no connectivity handling: transforms
// every vertex, drops the ones outside the output frame, inserts nothing.
// Output order is the surviving original order.
std::vector<Point2> naive_vertex_transform(const RingPolygon& poly,
                                           const AffinePlan& plan);

// Same, but keeping original indices (used to score the naive pipeline).
std::vector<IndexedVertex> naive_vertex_transform_indexed(const RingPolygon& poly,
                                                          const AffinePlan& plan);

// Document-level emulation of preprocessing pipelines that transform vertex
// coordinates, split the chain wherever consecutive vertices were lost, and
// re-normalize each resulting piece to a fixed orientation. On a ring this
// reproduces the classic failure: once the connector vertices are clipped
// away, the annotation decays into independent outer/inner polygons and the
// re-oriented inner piece reverses its traversal order.
std::vector<std::vector<IndexedVertex>> naive_fragment_pipeline(
    const RingPolygon& poly, const AffinePlan& plan);

// Mask-space augmentation that forgets vertices entirely: rasterize, warp,
// re-extract boundary contours. One dense pixel-aligned vertex sequence per
// mask border, with no index provenance. A ring always re-extracts as at
// least two sequences (outer border, hole border).
std::vector<std::vector<Point2>> mask_contour_reextract(const RingPolygon& poly,
                                                        const AffinePlan& plan);

}  // namespace ringaug
