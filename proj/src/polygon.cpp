#include "ringaug/polygon.hpp"

#include <string>

#include "ringaug/error.hpp"

namespace ringaug {

const Point2& RingPolygon::vertex(int index1) const {
    if (index1 < 1 || index1 > size()) {
        throw DomainError("vertex index " + std::to_string(index1) +
                          " outside [1, " + std::to_string(size()) + "]");
    }
    return vertices[static_cast<size_t>(index1 - 1)];
}

int successor(int i, int n) {
    if (n < 1) throw DomainError("successor: n must be >= 1, got " + std::to_string(n));
    if (i < 1 || i > n) {
        throw DomainError("successor: index " + std::to_string(i) + " outside [1, " +
                          std::to_string(n) + "]");
    }
    return (i % n) + 1;
}

RingEdges ring_edges(const RingPolygon& poly) {
    if (!poly.is_ring()) throw NotARingError("ring_edges: polygon has no partition");
    const int L = *poly.partition;
    return RingEdges{{L, L + 1}, {poly.size(), 1}};
}

std::pair<std::vector<Point2>, std::vector<Point2>>
split_boundaries(const RingPolygon& poly) {
    if (!poly.is_ring()) throw NotARingError("split_boundaries: polygon has no partition");
    const int n = poly.size();
    const int L = *poly.partition;
    if (L < 3 || L > n - 3) {
        throw NotARingError("split_boundaries: partition " + std::to_string(L) +
                            " outside [3, " + std::to_string(n - 3) + "]");
    }
    std::vector<Point2> outer(poly.vertices.begin(), poly.vertices.begin() + L);
    std::vector<Point2> inner(poly.vertices.begin() + L, poly.vertices.end());
    return {std::move(outer), std::move(inner)};
}

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::TooFewVertices: return "too-few-vertices";
        case Violation::PartitionOutOfRange: return "partition-out-of-range";
        case Violation::DegenerateEdge: return "degenerate-edge";
        case Violation::NonFiniteVertex: return "non-finite-vertex";
        case Violation::ContainmentFailure: return "containment-failure";
    }
    return "unknown";
}

ValidationReport validate(const RingPolygon& poly) {
    ValidationReport report;
    const int n = poly.size();
    auto add = [&](Violation kind, int index, std::string msg) {
        report.issues.push_back({kind, index, std::move(msg)});
    };

    for (int i = 0; i < n; ++i) {
        if (!poly.vertices[static_cast<size_t>(i)].finite()) {
            add(Violation::NonFiniteVertex, i + 1,
                "vertex " + std::to_string(i + 1) + " is not finite");
        }
    }

    bool partition_ok = false;
    if (poly.partition) {
        const int L = *poly.partition;
        if (L < 3 || L > n - 3) {
            add(Violation::PartitionOutOfRange, 0,
                "partition " + std::to_string(L) + " outside [3, " +
                    std::to_string(n - 3) + "] for n = " + std::to_string(n));
        } else {
            partition_ok = true;
        }
    } else if (n < 3) {
        add(Violation::TooFewVertices, 0,
            "polygon has " + std::to_string(n) + " vertices, need at least 3");
    }

    // Zero-length edges. The wrap edge of a plain chain is (n, 1); for a ring
    // both boundary loops wrap separately, matching how they rasterize.
    auto check_loop_edges = [&](int first1, int last1) {
        for (int i = first1; i <= last1; ++i) {
            const int j = (i == last1) ? first1 : i + 1;
            if (poly.vertices[static_cast<size_t>(i - 1)] ==
                poly.vertices[static_cast<size_t>(j - 1)]) {
                add(Violation::DegenerateEdge, i,
                    "zero-length edge between vertices " + std::to_string(i) +
                        " and " + std::to_string(j));
            }
        }
    };
    if (partition_ok) {
        check_loop_edges(1, *poly.partition);
        check_loop_edges(*poly.partition + 1, n);
    } else if (n >= 2) {
        check_loop_edges(1, n);
    }

    if (partition_ok) {
        const auto [outer, inner] = split_boundaries(poly);
        for (size_t k = 0; k < inner.size(); ++k) {
            if (!inner[k].finite()) continue;
            if (!point_in_loop_or_boundary(outer, inner[k])) {
                add(Violation::ContainmentFailure,
                    *poly.partition + static_cast<int>(k) + 1,
                    "inner vertex " +
                        std::to_string(*poly.partition + static_cast<int>(k) + 1) +
                        " lies outside the outer boundary");
            }
        }
    }

    return report;
}

}  // namespace ringaug
