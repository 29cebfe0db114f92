#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ringaug/geometry.hpp"

namespace ringaug {

// Polygon annotation stored as one ordered vertex chain p_1..p_n.
//
// A plain region is just the chain. A ring-type region (a region with one
// interior hole) stores both boundaries in the same chain: the first
// `partition` vertices are the outer boundary, the rest the inner boundary.
// Vertex indices are 1-based everywhere in the public interface.
struct RingPolygon {
    std::vector<Point2> vertices;
    std::optional<int> partition;  // L = number of outer-boundary vertices
    std::string label;

    int size() const { return static_cast<int>(vertices.size()); }
    bool is_ring() const { return partition.has_value(); }

    // 1-based vertex access.
    const Point2& vertex(int index1) const;
};

// The two chain edges that stitch the boundaries of a ring together:
// bridge = (L, L+1) from last outer to first inner vertex,
// closure = (n, 1) from last inner vertex back to the start.
struct RingEdges {
    std::pair<int, int> bridge;
    std::pair<int, int> closure;
};

// Cyclic successor on {1..n}: succ(i) = (i mod n) + 1.
// Throws DomainError when i is outside [1, n] or n < 1.
int successor(int i, int n);

// Derives bridge/closure indices for a ring. Throws NotARingError on a plain
// polygon.
RingEdges ring_edges(const RingPolygon& poly);

// Splits a ring chain into (outer, inner) vertex sequences.
// Throws NotARingError when no partition is present.
std::pair<std::vector<Point2>, std::vector<Point2>>
split_boundaries(const RingPolygon& poly);

enum class Violation {
    TooFewVertices,       // n < 3 for a plain polygon
    PartitionOutOfRange,  // partition present but not in [3, n-3]
    DegenerateEdge,       // consecutive vertices equal (including wrap)
    NonFiniteVertex,      // NaN or infinity
    ContainmentFailure,   // an inner vertex outside the outer boundary
};

struct ValidationIssue {
    Violation kind;
    int index;  // 1-based vertex index the issue refers to (0 = whole polygon)
    std::string message;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool ok() const { return issues.empty(); }
};

// Checks every structural invariant and reports all violations found.
// Containment uses ray casting with on-edge points counted as inside.
ValidationReport validate(const RingPolygon& poly);

const char* violation_name(Violation v);

}  // namespace ringaug
