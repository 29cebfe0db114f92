#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ringaug/polygon.hpp"
#include "ringaug/project.hpp"

namespace ringaug {

// One entry of a repaired chain: either a surviving original vertex (with its
// source index) or an inserted clip vertex.
struct RepairedEntry {
    enum class Kind { Original, Clip };
    Kind kind = Kind::Original;
    int original_index = 0;   // 1-based; 0 for clips
    Point2 position;
    int source_edge = 0;      // clips only
    double edge_param = 0.0;  // clips only
};

// Closed cyclic chain rebuilt from the survivors. Original entries appear in
// strictly increasing original-index order; the edge from the last entry back
// to the first is implied.
struct RepairedPolygon {
    std::vector<RepairedEntry> entries;
    int source_n = 0;
    std::optional<int> partition;  // recomputed; absent when a side collapsed
    std::string label;

    int size() const { return static_cast<int>(entries.size()); }
    std::vector<int> original_indices() const;  // in chain order, skipping clips
    std::vector<Point2> positions() const;
};

// Reconnects the surviving vertices into a single closed chain, walking the
// survivor sequence in order and adding the directed edge from each survivor
// to the next (wrapping from the last back to the first). Where consecutive
// survivors are also consecutive source indices the edge coincides with an
// original edge; elsewhere it bridges the gap left by deleted vertices.
// Runs in O(m).
//
// Throws EmptyPolygonError for m = 0 and DegeneratePolygonError for m in
// {1, 2}; the caller decides the drop-or-keep policy for those.
RepairedPolygon repair(const SurvivorSequence& survivors);

// Steady-state form: writes into `out`, reusing its entry storage. Used where
// repair runs in a tight loop (benchmark driver, batch sweeps).
void repair_reuse(const SurvivorSequence& survivors, RepairedPolygon& out);

// Same, with clip vertices inserted inside their survivor gaps. Multiple
// clips in one gap are ordered by (source edge, edge parameter). Every clip's
// `between` pair must be a consecutive survivor pair (see bind_clips_to_gaps);
// anything else throws InconsistencyError.
RepairedPolygon repair_with_clips(const SurvivorSequence& survivors,
                                  const std::vector<ClipVertex>& clips);

// Recomputes the ring partition for a repaired chain: entries on the outer
// side are originals with index <= L plus clips on source edges <= L. The
// partition is set only when both sides keep at least 3 entries; otherwise
// the result is a plain polygon.
RepairedPolygon repair_with_clips(const SurvivorSequence& survivors,
                                  const std::vector<ClipVertex>& clips,
                                  std::optional<int> source_partition);

// The repaired chain as a polygon annotation.
RingPolygon to_ring_polygon(const RepairedPolygon& repaired);

}  // namespace ringaug
