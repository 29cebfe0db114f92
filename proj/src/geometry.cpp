#include "ringaug/geometry.hpp"

namespace ringaug {

double signed_area2(const std::vector<Point2>& loop) {
    double acc = 0.0;
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        acc += cross(loop[j], loop[i]);
    }
    return acc;
}

bool point_in_loop(const std::vector<Point2>& loop, Point2 p) {
    // Half-open crossing rule: an edge counts iff exactly one endpoint is
    // strictly above the ray, and the crossing lies strictly right of p.
    bool inside = false;
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = loop[i];
        const Point2 b = loop[j];
        if ((a.y > p.y) != (b.y > p.y)) {
            const double xc = (b.x - a.x) * (p.y - a.y) / (b.y - a.y) + a.x;
            if (p.x < xc) inside = !inside;
        }
    }
    return inside;
}

namespace {

bool on_segment(Point2 a, Point2 b, Point2 p, double eps) {
    const Point2 ab = b - a;
    const Point2 ap = p - a;
    const double len2 = dot(ab, ab);
    if (len2 == 0.0) return squared_distance(a, p) <= eps * eps;
    const double c = cross(ab, ap);
    if (c * c > eps * eps * len2) return false;
    const double t = dot(ap, ab) / len2;
    return t >= -eps && t <= 1.0 + eps;
}

}  // namespace

bool point_in_loop_or_boundary(const std::vector<Point2>& loop, Point2 p,
                               double boundary_eps) {
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        if (on_segment(loop[j], loop[i], p, boundary_eps)) return true;
    }
    return point_in_loop(loop, p);
}

}  // namespace ringaug
