#include "ringaug/project.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "ringaug/error.hpp"

namespace ringaug {

BoundaryIndex::BoundaryIndex(const std::vector<PixelPoint>& pixels, int cell_size)
    : points_(pixels), cell_(std::max(1, cell_size)) {
    if (points_.empty()) return;
    minx_ = points_[0].x;
    miny_ = points_[0].y;
    int maxx = minx_, maxy = miny_;
    for (const auto& p : points_) {
        minx_ = std::min(minx_, p.x);
        miny_ = std::min(miny_, p.y);
        maxx = std::max(maxx, p.x);
        maxy = std::max(maxy, p.y);
    }
    gx_ = (maxx - minx_) / cell_ + 1;
    gy_ = (maxy - miny_) / cell_ + 1;

    std::vector<int> counts(static_cast<size_t>(gx_) * gy_ + 1, 0);
    auto cell_of = [&](const PixelPoint& p) {
        return ((p.y - miny_) / cell_) * gx_ + (p.x - minx_) / cell_;
    };
    for (const auto& p : points_) ++counts[static_cast<size_t>(cell_of(p)) + 1];
    for (size_t i = 1; i < counts.size(); ++i) counts[i] += counts[i - 1];
    cell_start_ = counts;
    cell_items_.resize(points_.size());
    std::vector<int> cursor(cell_start_.begin(), cell_start_.end() - 1);
    for (int i = 0; i < static_cast<int>(points_.size()); ++i) {
        cell_items_[static_cast<size_t>(
            cursor[static_cast<size_t>(cell_of(points_[static_cast<size_t>(i)]))]++)] = i;
    }
}

BoundaryIndex::Hit BoundaryIndex::nearest_hit(Point2 q) const {
    // Expanding ring search over grid cells. A candidate found at ring r can
    // only be beaten by cells up to one ring further out, so widen once past
    // the current best radius and stop.
    Hit best{std::numeric_limits<double>::infinity(), 0, 0};
    auto consider = [&](int idx) {
        const PixelPoint& p = points_[static_cast<size_t>(idx)];
        const double dx = q.x - p.x;
        const double dy = q.y - p.y;
        const double d2 = dx * dx + dy * dy;
        if (d2 < best.d2 || (d2 == best.d2 && (p.y < best.y || (p.y == best.y && p.x < best.x)))) {
            best = {d2, p.y, p.x};
        }
    };
    const int cqx = std::clamp(static_cast<int>(std::floor((q.x - minx_) / cell_)), 0, gx_ - 1);
    const int cqy = std::clamp(static_cast<int>(std::floor((q.y - miny_) / cell_)), 0, gy_ - 1);
    const int max_ring = std::max(gx_, gy_);
    for (int r = 0; r <= max_ring; ++r) {
        if (std::isfinite(best.d2)) {
            // Cells at ring distance r are at least (r-1)*cell away from q.
            const double ring_min = (r - 1.0) * cell_;
            if (ring_min > 0 && ring_min * ring_min > best.d2) break;
        }
        for (int cy = cqy - r; cy <= cqy + r; ++cy) {
            if (cy < 0 || cy >= gy_) continue;
            for (int cx = cqx - r; cx <= cqx + r; ++cx) {
                if (cx < 0 || cx >= gx_) continue;
                if (std::max(std::abs(cx - cqx), std::abs(cy - cqy)) != r) continue;
                const size_t c = static_cast<size_t>(cy) * gx_ + cx;
                for (int k = cell_start_[c]; k < cell_start_[c + 1]; ++k) {
                    consider(cell_items_[static_cast<size_t>(k)]);
                }
            }
        }
    }
    return best;
}

Point2 BoundaryIndex::nearest(Point2 q) const {
    if (empty()) throw DomainError("BoundaryIndex::nearest on empty boundary");
    const Hit h = nearest_hit(q);
    return {static_cast<double>(h.x), static_cast<double>(h.y)};
}

double BoundaryIndex::nearest_distance(Point2 q) const {
    if (empty()) throw DomainError("BoundaryIndex::nearest_distance on empty boundary");
    return std::sqrt(nearest_hit(q).d2);
}

SurvivorSequence project_vertices(const RingPolygon& poly, const AffinePlan& plan,
                                  const BinaryMask& warped, double tol) {
    if (tol <= 0.0) throw DomainError("project_vertices: tol must be positive");
    SurvivorSequence seq;
    seq.n = poly.size();

    const auto border = border_pixels(warped);
    if (border.empty()) return seq;  // nothing survived; not an error
    const BoundaryIndex index(border);

    const Rect frame{0.0, 0.0, static_cast<double>(plan.out_width),
                     static_cast<double>(plan.out_height)};
    for (int i = 1; i <= seq.n; ++i) {
        const Point2 q = apply_point(plan, poly.vertex(i));
        if (!frame.contains(q)) continue;
        const auto hit = index.nearest(q);
        if (squared_distance(q, hit) <= tol * tol) {
            seq.survivors.push_back({i, hit});
        }
    }
    return seq;
}

namespace {

struct SideCrossing {
    double t;
    int axis;     // 0 = vertical side (x fixed), 1 = horizontal side
    double coord; // the fixed coordinate of that side
};

}  // namespace

std::vector<ClipVertex> clip_intersections(const RingPolygon& poly,
                                           const AffinePlan& plan,
                                           const Rect& clip_rect) {
    std::vector<ClipVertex> out;
    const int n = poly.size();
    if (n < 2) return out;

    for (int i = 1; i <= n; ++i) {
        const int j = successor(i, n);
        const Point2 a = apply_point(plan, poly.vertex(i));
        const Point2 b = apply_point(plan, poly.vertex(j));
        const double dx = b.x - a.x, dy = b.y - a.y;

        // Liang-Barsky: parametric interval of the segment inside the rect.
        double t_enter = 0.0, t_exit = 1.0;
        SideCrossing enter_side{0.0, -1, 0.0}, exit_side{1.0, -1, 0.0};
        bool reject = false;
        auto clip_axis = [&](double p, double q, int axis, double coord) {
            // Moving by p per unit t; side satisfied when p*t <= q.
            if (p == 0.0) {
                if (q < 0.0) reject = true;
                return;
            }
            const double t = q / p;
            if (p < 0.0) {
                if (t > t_enter) {
                    t_enter = t;
                    enter_side = {t, axis, coord};
                }
            } else {
                if (t < t_exit) {
                    t_exit = t;
                    exit_side = {t, axis, coord};
                }
            }
        };
        clip_axis(-dx, a.x - clip_rect.x0, 0, clip_rect.x0);
        clip_axis(dx, clip_rect.x1 - a.x, 0, clip_rect.x1);
        clip_axis(-dy, a.y - clip_rect.y0, 1, clip_rect.y0);
        clip_axis(dy, clip_rect.y1 - a.y, 1, clip_rect.y1);
        if (reject || t_enter >= t_exit) continue;

        auto emit = [&](const SideCrossing& s) {
            if (s.axis < 0 || s.t <= 0.0 || s.t >= 1.0) return;
            Point2 p{a.x + s.t * dx, a.y + s.t * dy};
            // Pin the crossing onto its side exactly.
            if (s.axis == 0) p.x = s.coord; else p.y = s.coord;
            out.push_back({p, i, s.t, {i, j}});
        };
        emit(enter_side);
        emit(exit_side);
    }
    return out;
}

std::vector<ClipVertex> bind_clips_to_gaps(const SurvivorSequence& survivors,
                                           std::vector<ClipVertex> clips) {
    std::vector<ClipVertex> bound;
    const int m = survivors.m();
    if (m == 0 || clips.empty()) return bound;
    const int n = survivors.n;

    // Gap t covers source edges k_t .. k_{t+1}-1 (cyclically).
    auto cyclic_offset = [n](int from, int to) { return ((to - from) % n + n) % n; };
    for (auto& clip : clips) {
        bool duplicate = false;
        for (const auto& s : survivors.survivors) {
            if (squared_distance(clip.position, s.position) < 0.25) {
                duplicate = true;
                break;
            }
        }
        if (duplicate) continue;

        int best_t = -1;
        for (int t = 0; t < m; ++t) {
            const int k_t = survivors.survivors[static_cast<size_t>(t)].original_index;
            const int k_next =
                survivors.survivors[static_cast<size_t>((t + 1) % m)].original_index;
            const int span = (m == 1) ? n : cyclic_offset(k_t, k_next);
            if (cyclic_offset(k_t, clip.source_edge) < span) {
                best_t = t;
                break;
            }
        }
        if (best_t < 0) continue;  // unreachable: gap spans cover the whole cycle
        const int k_t = survivors.survivors[static_cast<size_t>(best_t)].original_index;
        const int k_next =
            survivors.survivors[static_cast<size_t>((best_t + 1) % m)].original_index;
        clip.between = {k_t, k_next};
        bound.push_back(clip);
    }
    return bound;
}

}  // namespace ringaug
