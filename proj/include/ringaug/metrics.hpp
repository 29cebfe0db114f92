#pragma once

#include <string>
#include <vector>

#include "ringaug/polygon.hpp"
#include "ringaug/transform.hpp"

namespace ringaug {

// Cyclic adjacency preservation of one polygon instance.
//
// cap_strict scores each surviving pair against the original successor
// relation, so any index gap counts as a break. cap_order scores against the
// successor within the survivor set, so vertex removal alone is not
// penalized, only reordering. Both are reported; they answer different
// questions about the same chain.
struct CapReport {
    double cap_strict = 0.0;
    double cap_order = 0.0;
    int n = 0;                       // original vertex count
    int m = 0;                       // matched survivor count
    int unmatched_new_vertices = 0;  // augmented vertices with no original
};

// (1/m) sum over consecutive pairs (cyclically, k_{m+1} := k_1) of
// [k_{t+1} == (k_t mod n) + 1].
// Throws UndefinedMetricError on an empty sequence, InvalidSequenceError when
// an index leaves [1, n] or n < 1.
double cap_strict(int n, const std::vector<int>& seq);

// Same shape, but the expected successor of k is the smallest index of the
// survivor set cyclically after k. Entries must be distinct.
double cap_order(int n, const std::vector<int>& seq);

struct MatchResult {
    std::vector<int> indices;  // matched original indices, augmented order
    int unmatched = 0;         // augmented vertices left unmatched
};

// Greedy one-to-one nearest-neighbor matching of augmented vertices to the
// transformed original vertices. Candidate pairs within `tol` pixels are
// processed in ascending distance order (ties by augmented then original
// index), each side matched at most once.
MatchResult match_indices(const RingPolygon& original, const AffinePlan& plan,
                          const std::vector<Point2>& augmented, double tol = 3.0);

enum class CapField { Strict, Order };

// Arithmetic mean of the chosen field. Throws UndefinedMetricError when empty.
double mean_cap(const std::vector<CapReport>& reports, CapField field);

// One scored instance, as serialized by the reporting commands.
struct CapRow {
    std::string file;
    std::string label;
    CapReport report;
};

std::string cap_rows_to_csv(const std::vector<CapRow>& rows);

}  // namespace ringaug
