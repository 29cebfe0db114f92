#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringaug/polygon.hpp"

namespace ringaug {

// Row-major binary grid.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> bits;  // 0/1, size = width * height

    BinaryMask() = default;
    BinaryMask(int w, int h) : width(w), height(h), bits(static_cast<size_t>(w) * h, 0) {}

    bool get(int x, int y) const { return bits[static_cast<size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { bits[static_cast<size_t>(y) * width + x] = v ? 1 : 0; }
    bool in_frame(int x, int y) const { return x >= 0 && y >= 0 && x < width && y < height; }
    std::size_t count() const;

    friend bool operator==(const BinaryMask& a, const BinaryMask& b) {
        return a.width == b.width && a.height == b.height && a.bits == b.bits;
    }
};

struct PixelPoint {
    int x = 0;
    int y = 0;
    friend bool operator==(PixelPoint a, PixelPoint b) { return a.x == b.x && a.y == b.y; }
};

// Ordered pixel trace along one mask border. Consecutive points are
// 8-connected; the trace is closed (last point 8-adjacent to the first).
struct BoundaryChain {
    std::vector<PixelPoint> points;
    bool is_hole = false;  // true when the chain follows a hole border
};

// Rasterizes a polygon: pixel (px, py) is set iff its center
// (px + 0.5, py + 0.5) has odd even-odd crossing parity. A partitioned chain
// contributes two closed loops (outer and inner) to the parity, so a valid
// ring fills the outer region minus the hole. Geometry outside the frame is
// clipped by the frame.
BinaryMask rasterize(const RingPolygon& poly, int width, int height);

// Border following over 8-connected foreground (4-connected background).
// Produces one chain per border: outer borders and hole borders.
std::vector<BoundaryChain> extract_boundary(const BinaryMask& mask);

// All set pixels with a 4-connected background (or out-of-frame) neighbor.
std::vector<PixelPoint> border_pixels(const BinaryMask& mask);

struct MaskTopology {
    int components = 0;  // 8-connected foreground regions
    int holes = 0;       // 4-connected background regions not touching the frame
};

MaskTopology topology(const BinaryMask& mask);

// Intersection-over-union of two same-sized masks. Empty/empty -> 1.
double mask_iou(const BinaryMask& a, const BinaryMask& b);

// Binary PGM (P5) debug dump. Throws IoError on failure.
void write_pgm(const BinaryMask& mask, const std::string& path);

}  // namespace ringaug
