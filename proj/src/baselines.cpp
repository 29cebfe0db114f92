#include "ringaug/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ringaug/error.hpp"
#include "ringaug/raster.hpp"
#include "ringaug/rng.hpp"

namespace ringaug {

void SyntheticRingSpec::check() const {
    if (count < 0) throw ConfigError("corpus count must be >= 0");
    if (frame_width < 64 || frame_height < 64) {
        throw ConfigError("corpus frame must be at least 64x64");
    }
    if (outer_ratio_min > outer_ratio_max) throw ConfigError("outer ratio range inverted");
    if (outer_ratio_min < 0.2 || outer_ratio_max > 0.85) {
        throw ConfigError("outer ratio must lie inside [0.2, 0.85]");
    }
    if (hole_ratio_min > hole_ratio_max) throw ConfigError("hole ratio range inverted");
    if (hole_ratio_min <= 0.0 || hole_ratio_max >= 1.0) {
        throw ConfigError("hole ratio must lie strictly inside (0, 1)");
    }
}

namespace {

constexpr const char* kLabels[] = {"wall", "corridor", "courtyard"};

// Rotates a closed loop so it starts at the vertex nearest to `anchor`.
std::vector<Point2> rotate_to_nearest(std::vector<Point2> loop, Point2 anchor) {
    size_t best = 0;
    double best_d2 = squared_distance(loop[0], anchor);
    for (size_t i = 1; i < loop.size(); ++i) {
        const double d2 = squared_distance(loop[i], anchor);
        if (d2 < best_d2) {
            best_d2 = d2;
            best = i;
        }
    }
    std::rotate(loop.begin(), loop.begin() + static_cast<long>(best), loop.end());
    return loop;
}

// Inner rectangle as a negatively wound loop: TL, BL, BR, TR.
std::vector<Point2> inner_rect_loop(const Rect& r) {
    return {{r.x0, r.y0}, {r.x0, r.y1}, {r.x1, r.y1}, {r.x1, r.y0}};
}

struct OuterShape {
    std::vector<Point2> loop;  // positively wound, bridge vertex last
    Rect hole_bounds;          // где the hole may be placed
    Point2 bridge;             // the bridge vertex (= loop.back())
};

OuterShape make_rectangle(SplitMix64& rng, double w, double h, double lo, double hi) {
    const double sw = rng.next_in(lo, hi) * w;
    const double sh = rng.next_in(lo, hi) * h;
    const double x0 = rng.next_in(0.06 * w, w - sw - 0.06 * w);
    const double y0 = rng.next_in(0.06 * h, h - sh - 0.06 * h);
    const double x1 = x0 + sw, y1 = y0 + sh;
    const Point2 mid{(x0 + x1) / 2.0, y0};
    OuterShape shape;
    shape.loop = {{x1, y0}, {x1, y1}, {x0, y1}, {x0, y0}, mid};
    shape.hole_bounds = Rect{x0, y0, x1, y1};
    shape.bridge = mid;
    return shape;
}

OuterShape make_lshape(SplitMix64& rng, double w, double h, double lo, double hi) {
    const double sw = rng.next_in(std::max(lo, 0.36), hi) * w;
    const double sh = rng.next_in(std::max(lo, 0.36), hi) * h;
    const double x0 = rng.next_in(0.06 * w, w - sw - 0.06 * w);
    const double y0 = rng.next_in(0.06 * h, h - sh - 0.06 * h);
    const double x1 = x0 + sw, y1 = y0 + sh;
    // Notch removed from the top-right corner.
    const double xm = x0 + rng.next_in(0.45, 0.65) * sw;
    const double ym = y0 + rng.next_in(0.25, 0.4) * sh;
    const Point2 mid{(x0 + xm) / 2.0, y0};
    OuterShape shape;
    shape.loop = {{xm, y0}, {xm, ym}, {x1, ym}, {x1, y1}, {x0, y1}, {x0, y0}, mid};
    shape.hole_bounds = Rect{x0, ym, x1, y1};  // the full-width lower part
    shape.bridge = mid;
    return shape;
}

OuterShape make_orthogonal(SplitMix64& rng, double w, double h, double lo, double hi) {
    const double sw = rng.next_in(std::max(lo, 0.36), hi) * w;
    const double sh = rng.next_in(std::max(lo, 0.36), hi) * h;
    const double x0 = rng.next_in(0.06 * w, w - sw - 0.06 * w);
    const double y0 = rng.next_in(0.06 * h, h - sh - 0.06 * h);
    const double x1 = x0 + sw, y1 = y0 + sh;

    // Notches cut downward into the right 60% of the top edge; the bridge
    // vertex sits on the untouched left part.
    const int notches = 1 + static_cast<int>(rng.next_in(0.0, 3.0));
    OuterShape shape;
    std::vector<Point2> top;
    double cursor = x0 + 0.4 * sw;
    for (int k = 0; k < notches; ++k) {
        const double remaining = x1 - cursor;
        if (remaining < 0.12 * sw) break;
        const double a = cursor + rng.next_in(0.02, 0.2) * sw;
        const double b = a + rng.next_in(0.05, 0.15) * sw;
        if (b >= x1 - 0.02 * sw) break;
        const double depth = rng.next_in(0.08, 0.22) * sh;
        top.push_back({a, y0});
        top.push_back({a, y0 + depth});
        top.push_back({b, y0 + depth});
        top.push_back({b, y0});
        cursor = b;
    }
    const Point2 mid{x0 + 0.2 * sw, y0};
    shape.loop.clear();
    for (const auto& p : top) shape.loop.push_back(p);
    shape.loop.push_back({x1, y0});
    shape.loop.push_back({x1, y1});
    shape.loop.push_back({x0, y1});
    shape.loop.push_back({x0, y0});
    shape.loop.push_back(mid);
    shape.hole_bounds = Rect{x0, y0 + 0.3 * sh, x1, y1};
    shape.bridge = mid;
    return shape;
}

}  // namespace

std::vector<RingPolygon> generate_corpus(const SyntheticRingSpec& spec) {
    spec.check();
    std::vector<RingPolygon> corpus;
    corpus.reserve(static_cast<size_t>(spec.count));
    const double w = spec.frame_width, h = spec.frame_height;
    const double gap = std::max(8.0, 0.015 * std::min(w, h));  // outer-to-hole clearance

    for (int i = 0; i < spec.count; ++i) {
        SplitMix64 rng(derive_stream(spec.seed, "corpus", static_cast<std::uint64_t>(i)));
        OuterShape shape;
        const double lo = spec.outer_ratio_min, hi = spec.outer_ratio_max;
        switch (spec.family) {
            case RingFamily::Rectangle: shape = make_rectangle(rng, w, h, lo, hi); break;
            case RingFamily::LShape: shape = make_lshape(rng, w, h, lo, hi); break;
            case RingFamily::RandomOrthogonal:
                shape = make_orthogonal(rng, w, h, lo, hi);
                break;
        }

        const Rect hb = shape.hole_bounds;
        const double avail_w = hb.width() - 2.0 * gap;
        const double avail_h = hb.height() - 2.0 * gap;
        const double ratio = rng.next_in(spec.hole_ratio_min, spec.hole_ratio_max);
        double hw = std::min(ratio * hb.width(), avail_w);
        double hh = std::min(ratio * hb.height(), avail_h);
        hw = std::max(hw, 3.0);
        hh = std::max(hh, 3.0);
        if (hw > avail_w || hh > avail_h) {
            throw ConfigError("generate_corpus: frame too small for the hole clearance");
        }
        const double hx0 = hb.x0 + gap + rng.next_in(0.0, avail_w - hw);
        const double hy0 = hb.y0 + gap + rng.next_in(0.0, avail_h - hh);
        auto inner =
            rotate_to_nearest(inner_rect_loop(Rect{hx0, hy0, hx0 + hw, hy0 + hh}),
                              (spec.bridge == BridgePlacement::TopMidpoint)
                                  ? shape.bridge
                                  : shape.loop.front());

        RingPolygon ring;
        ring.vertices = shape.loop;
        ring.vertices.insert(ring.vertices.end(), inner.begin(), inner.end());
        // Integer coordinates, as annotation tools emit. Sizes and clearances
        // are large enough that rounding cannot collapse an edge.
        for (auto& v : ring.vertices) {
            v.x = std::round(v.x);
            v.y = std::round(v.y);
        }
        ring.partition = static_cast<int>(shape.loop.size());
        ring.label = kLabels[i % 3];
        corpus.push_back(std::move(ring));
    }
    return corpus;
}

std::vector<IndexedVertex> naive_vertex_transform_indexed(const RingPolygon& poly,
                                                          const AffinePlan& plan) {
    std::vector<IndexedVertex> out;
    const Rect frame{0.0, 0.0, static_cast<double>(plan.out_width),
                     static_cast<double>(plan.out_height)};
    for (int i = 1; i <= poly.size(); ++i) {
        const Point2 q = apply_point(plan, poly.vertex(i));
        if (frame.contains(q)) out.push_back({i, q});
    }
    return out;
}

std::vector<Point2> naive_vertex_transform(const RingPolygon& poly,
                                           const AffinePlan& plan) {
    std::vector<Point2> out;
    for (const auto& v : naive_vertex_transform_indexed(poly, plan)) {
        out.push_back(v.position);
    }
    return out;
}

std::vector<std::vector<IndexedVertex>> naive_fragment_pipeline(
    const RingPolygon& poly, const AffinePlan& plan) {
    const auto survivors = naive_vertex_transform_indexed(poly, plan);
    std::vector<std::vector<IndexedVertex>> fragments;
    if (survivors.empty()) return fragments;
    const int n = poly.size();
    const int m = static_cast<int>(survivors.size());

    // Break the cyclic survivor sequence wherever the original successor
    // relation fails; each maximal intact run becomes its own polygon.
    std::vector<int> breaks;  // positions t where (k_t -> k_{t+1}) is broken
    for (int t = 0; t < m; ++t) {
        const int k = survivors[static_cast<size_t>(t)].original_index;
        const int k_next = survivors[static_cast<size_t>((t + 1) % m)].original_index;
        if (k_next != (k % n) + 1) breaks.push_back(t);
    }

    if (breaks.empty()) {
        fragments.push_back(survivors);
    } else {
        for (size_t b = 0; b < breaks.size(); ++b) {
            const int start = (breaks[b] + 1) % m;
            const int stop = breaks[(b + 1) % breaks.size()];
            std::vector<IndexedVertex> frag;
            for (int t = start;; t = (t + 1) % m) {
                frag.push_back(survivors[static_cast<size_t>(t)]);
                if (t == stop) break;
            }
            fragments.push_back(std::move(frag));
        }
    }

    // Orientation normalization, as dataset tooling applies to standalone
    // polygons: every piece is re-wound to positive signed area. A hole
    // boundary that fragmented off arrives negatively wound and gets reversed.
    for (auto& frag : fragments) {
        if (frag.size() < 3) continue;
        std::vector<Point2> pts;
        pts.reserve(frag.size());
        for (const auto& v : frag) pts.push_back(v.position);
        if (signed_area2(pts) < 0.0) std::reverse(frag.begin(), frag.end());
    }
    return fragments;
}

std::vector<std::vector<Point2>> mask_contour_reextract(const RingPolygon& poly,
                                                        const AffinePlan& plan) {
    const BinaryMask mask = rasterize(poly, plan.src_width, plan.src_height);
    const BinaryMask warped = warp_mask(mask, plan);
    std::vector<std::vector<Point2>> sequences;
    for (const auto& chain : extract_boundary(warped)) {
        std::vector<Point2> seq;
        seq.reserve(chain.points.size());
        for (const auto& p : chain.points) {
            seq.push_back({static_cast<double>(p.x), static_cast<double>(p.y)});
        }
        sequences.push_back(std::move(seq));
    }
    return sequences;
}

}  // namespace ringaug
