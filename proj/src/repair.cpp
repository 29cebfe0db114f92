#include "ringaug/repair.hpp"

#include <algorithm>
#include <string>

#include "ringaug/error.hpp"

namespace ringaug {

std::vector<int> RepairedPolygon::original_indices() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) {
        if (e.kind == RepairedEntry::Kind::Original) out.push_back(e.original_index);
    }
    return out;
}

std::vector<Point2> RepairedPolygon::positions() const {
    std::vector<Point2> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.position);
    return out;
}

namespace {

// Core walk, writing into a caller-owned polygon so repeated calls reuse the
// entry storage. Clips are resolved to gap slots by binary search over the
// ascending survivor indices, then merged into the walk in slot order.
void repair_into(const SurvivorSequence& survivors,
                 const std::vector<ClipVertex>& clips,
                 std::optional<int> source_partition, RepairedPolygon& out) {
    const int m = survivors.m();
    if (m == 0) throw EmptyPolygonError("repair: no surviving vertices");
    if (m <= 2) {
        throw DegeneratePolygonError("repair: only " + std::to_string(m) +
                                     " surviving vertices");
    }
    const int n = survivors.n;
    auto cyclic_offset = [n](int from, int to) { return ((to - from) % n + n) % n; };

    struct SlottedClip {
        int slot;
        int offset;  // cyclic edge offset from the gap start
        const ClipVertex* clip;
    };
    std::vector<SlottedClip> slotted;
    if (!clips.empty()) {
        slotted.reserve(clips.size());
        for (const auto& clip : clips) {
            // Locate k_t among the survivors.
            int lo = 0, hi = m - 1, slot = -1;
            while (lo <= hi) {
                const int mid = (lo + hi) / 2;
                const int k = survivors.survivors[static_cast<size_t>(mid)].original_index;
                if (k == clip.between.first) {
                    slot = mid;
                    break;
                }
                (k < clip.between.first) ? lo = mid + 1 : hi = mid - 1;
            }
            const bool consecutive =
                slot >= 0 &&
                survivors.survivors[static_cast<size_t>((slot + 1) % m)].original_index ==
                    clip.between.second;
            if (!consecutive) {
                throw InconsistencyError(
                    "repair_with_clips: clip references (" +
                    std::to_string(clip.between.first) + ", " +
                    std::to_string(clip.between.second) +
                    "), which is not a consecutive survivor pair");
            }
            slotted.push_back(
                {slot, cyclic_offset(clip.between.first, clip.source_edge), &clip});
        }
        std::sort(slotted.begin(), slotted.end(),
                  [](const SlottedClip& a, const SlottedClip& b) {
                      if (a.slot != b.slot) return a.slot < b.slot;
                      if (a.offset != b.offset) return a.offset < b.offset;
                      return a.clip->edge_param < b.clip->edge_param;
                  });
    }

    out.entries.clear();
    out.entries.reserve(static_cast<size_t>(m) + clips.size());
    out.source_n = n;
    out.partition.reset();

    // The walk: each survivor, then the clips sitting in its gap. Where the
    // successor relation already held the emitted edge coincides with an
    // original edge; elsewhere it bridges the deleted stretch.
    size_t next_clip = 0;
    for (int t = 0; t < m; ++t) {
        const auto& s = survivors.survivors[static_cast<size_t>(t)];
        out.entries.push_back({RepairedEntry::Kind::Original, s.original_index,
                               s.position, 0, 0.0});
        for (; next_clip < slotted.size() && slotted[next_clip].slot == t; ++next_clip) {
            const ClipVertex& clip = *slotted[next_clip].clip;
            out.entries.push_back({RepairedEntry::Kind::Clip, 0, clip.position,
                                   clip.source_edge, clip.edge_param});
        }
    }

    if (source_partition) {
        // Outer side: surviving originals with index <= L plus clips on source
        // edges <= L (the bridge edge L counts outer). The partition is kept
        // only when the chain splits cleanly into an outer prefix and inner
        // suffix and both sides keep at least 3 entries; clips landing in the
        // wrap-around gap can break that split, in which case the result is a
        // plain polygon.
        const int L = *source_partition;
        int outer_entries = 0;
        bool monotone = true;
        bool seen_inner = false;
        for (const auto& e : out.entries) {
            const bool outer = (e.kind == RepairedEntry::Kind::Original)
                                   ? e.original_index <= L
                                   : e.source_edge <= L;
            if (outer) {
                if (seen_inner) {
                    monotone = false;
                    break;
                }
                ++outer_entries;
            } else {
                seen_inner = true;
            }
        }
        const int inner_entries = out.size() - outer_entries;
        if (monotone && outer_entries >= 3 && inner_entries >= 3) {
            out.partition = outer_entries;
        }
    }
}

}  // namespace

RepairedPolygon repair(const SurvivorSequence& survivors) {
    RepairedPolygon out;
    repair_into(survivors, {}, std::nullopt, out);
    return out;
}

void repair_reuse(const SurvivorSequence& survivors, RepairedPolygon& out) {
    repair_into(survivors, {}, std::nullopt, out);
}

RepairedPolygon repair_with_clips(const SurvivorSequence& survivors,
                                  const std::vector<ClipVertex>& clips) {
    RepairedPolygon out;
    repair_into(survivors, clips, std::nullopt, out);
    return out;
}

RepairedPolygon repair_with_clips(const SurvivorSequence& survivors,
                                  const std::vector<ClipVertex>& clips,
                                  std::optional<int> source_partition) {
    RepairedPolygon out;
    repair_into(survivors, clips, source_partition, out);
    return out;
}

RingPolygon to_ring_polygon(const RepairedPolygon& repaired) {
    RingPolygon poly;
    poly.vertices = repaired.positions();
    poly.partition = repaired.partition;
    poly.label = repaired.label;
    return poly;
}

}  // namespace ringaug
