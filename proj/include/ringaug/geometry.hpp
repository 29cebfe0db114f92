#pragma once

#include <cmath>
#include <vector>

namespace ringaug {

// Point in image coordinates: origin top-left, x rightward, y downward.
struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(double s, Point2 p) { return {s * p.x, s * p.y}; }
    friend bool operator==(Point2 a, Point2 b) { return a.x == b.x && a.y == b.y; }

    bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double squared_distance(Point2 a, Point2 b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}
inline double distance(Point2 a, Point2 b) { return std::sqrt(squared_distance(a, b)); }

// Axis-aligned rectangle, [x0, x1] x [y0, y1].
struct Rect {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    bool contains(Point2 p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    friend bool operator==(const Rect& a, const Rect& b) {
        return a.x0 == b.x0 && a.y0 == b.y0 && a.x1 == b.x1 && a.y1 == b.y1;
    }
};

// Twice the signed area of a closed loop (shoelace). Positive means the loop
// runs with increasing angle in the x-right/y-down frame.
double signed_area2(const std::vector<Point2>& loop);

// Even-odd point-in-polygon test against one closed loop. A point exactly on
// an edge is resolved by the half-open crossing rule, not reported specially.
bool point_in_loop(const std::vector<Point2>& loop, Point2 p);

// Ray-casting containment with points on the boundary counted as inside.
bool point_in_loop_or_boundary(const std::vector<Point2>& loop, Point2 p,
                               double boundary_eps = 1e-9);

}  // namespace ringaug
