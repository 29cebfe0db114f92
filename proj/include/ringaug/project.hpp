#pragma once

#include <vector>

#include "ringaug/polygon.hpp"
#include "ringaug/raster.hpp"
#include "ringaug/transform.hpp"

namespace ringaug {

// A vertex that survived augmentation: its 1-based index in the source chain
// plus its position after transform and boundary snapping.
struct IndexedVertex {
    int original_index = 0;
    Point2 position;
};

// Vertices that remain valid after augmentation, in original chain order.
struct SurvivorSequence {
    std::vector<IndexedVertex> survivors;  // original_index strictly increasing
    int n = 0;                             // source vertex count

    int m() const { return static_cast<int>(survivors.size()); }
};

// A new vertex created where a transformed chain edge crosses the clip
// rectangle border.
struct ClipVertex {
    Point2 position;             // on the clip rectangle border
    int source_edge = 0;         // 1-based edge index i for edge (p_i, p_succ(i))
    double edge_param = 0.0;     // in [0, 1] along the transformed source edge
    std::pair<int, int> between{0, 0};  // survivor gap (k_t, k_{t+1}) it falls in
};

// Grid-bucketed nearest-neighbor index over mask border pixels. Border points
// live at their integer pixel coordinates (the BoundaryChain convention);
// ties resolve to the smallest (y, x). Lookup is expected O(1) and results
// always equal the brute-force nearest point.
class BoundaryIndex {
public:
    BoundaryIndex() = default;
    explicit BoundaryIndex(const std::vector<PixelPoint>& pixels, int cell_size = 16);

    bool empty() const { return points_.empty(); }

    // Nearest border point to q, at its integer pixel coordinates.
    // Preconditions: !empty().
    Point2 nearest(Point2 q) const;
    double nearest_distance(Point2 q) const;

private:
    struct Hit { double d2; int y; int x; };
    Hit nearest_hit(Point2 q) const;

    std::vector<PixelPoint> points_;
    int cell_ = 16;
    int gx_ = 0, gy_ = 0;          // grid extent in cells
    int minx_ = 0, miny_ = 0;      // pixel coordinate of grid origin
    std::vector<int> cell_start_;  // CSR layout over points_
    std::vector<int> cell_items_;
};

// Projects polygon vertices through the plan onto the warped mask boundary.
// Vertex i survives iff its transformed position lies inside the output frame
// rectangle [0, out_w] x [0, out_h] and within `tol` pixels of a border point
// of `warped`; its surviving position is that nearest border point.
// An empty warped mask yields an empty sequence.
SurvivorSequence project_vertices(const RingPolygon& poly, const AffinePlan& plan,
                                  const BinaryMask& warped, double tol = 3.0);

// Intersections of transformed chain edges with the clip rectangle border,
// computed analytically (Liang-Barsky parameters). Each crossing is emitted
// with its source edge and parametric position; crossings on one edge are
// ordered by the parameter. `between` is left as the edge endpoints until
// bind_clips_to_gaps resolves it against a survivor sequence.
std::vector<ClipVertex> clip_intersections(const RingPolygon& poly,
                                           const AffinePlan& plan,
                                           const Rect& clip_rect);

// Assigns every clip vertex to the survivor gap its source edge falls in and
// drops clips within 0.5 px of a surviving snapped vertex. Clips are dropped
// entirely when no vertices survived.
std::vector<ClipVertex> bind_clips_to_gaps(const SurvivorSequence& survivors,
                                           std::vector<ClipVertex> clips);

}  // namespace ringaug
