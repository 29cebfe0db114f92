#include "ringaug/raster.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "ringaug/error.hpp"

namespace ringaug {

std::size_t BinaryMask::count() const {
    return static_cast<std::size_t>(
        std::accumulate(bits.begin(), bits.end(), std::size_t{0}));
}

namespace {

// Gathers the even-odd crossings of one closed loop with the scanline
// y = const. The crossing rule and arithmetic are the same half-open form as
// point_in_loop, so a scanline fill and a per-pixel test agree bit for bit.
void gather_crossings(const std::vector<Point2>& loop, double y,
                      std::vector<double>& out) {
    const size_t n = loop.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point2 a = loop[i];
        const Point2 b = loop[j];
        if ((a.y > y) != (b.y > y)) {
            out.push_back((b.x - a.x) * (y - a.y) / (b.y - a.y) + a.x);
        }
    }
}

}  // namespace

BinaryMask rasterize(const RingPolygon& poly, int width, int height) {
    if (width < 1 || height < 1) {
        throw DomainError("rasterize: frame must be at least 1x1");
    }
    BinaryMask mask(width, height);
    const int n = poly.size();
    if (n == 0) return mask;

    // A partitioned chain contributes its two boundary loops; a plain chain
    // is one loop. Parity over the union realizes outer-minus-hole.
    std::vector<std::vector<Point2>> loops;
    if (poly.is_ring() && *poly.partition >= 1 && *poly.partition < n) {
        const int L = *poly.partition;
        loops.emplace_back(poly.vertices.begin(), poly.vertices.begin() + L);
        loops.emplace_back(poly.vertices.begin() + L, poly.vertices.end());
    } else {
        loops.push_back(poly.vertices);
    }

    std::vector<double> xs;
    for (int py = 0; py < height; ++py) {
        const double y = py + 0.5;
        xs.clear();
        for (const auto& loop : loops) gather_crossings(loop, y, xs);
        if (xs.empty()) continue;
        std::sort(xs.begin(), xs.end());
        // Inside spans are [xs[2k], xs[2k+1]) over pixel centers px + 0.5.
        for (size_t k = 0; k + 1 < xs.size(); k += 2) {
            int px_lo = static_cast<int>(std::ceil(xs[k] - 0.5));
            int px_hi = static_cast<int>(std::ceil(xs[k + 1] - 0.5));  // exclusive
            // ceil can land one off when the span endpoint sits exactly on a
            // pixel center; nudge so the half-open rule holds exactly.
            while (px_lo - 1 >= 0 && (px_lo - 1) + 0.5 >= xs[k]) --px_lo;
            while (px_lo + 0.5 < xs[k]) ++px_lo;
            while (px_hi - 1 >= 0 && (px_hi - 1) + 0.5 >= xs[k + 1]) --px_hi;
            while (px_hi + 0.5 < xs[k + 1]) ++px_hi;
            px_lo = std::max(px_lo, 0);
            px_hi = std::min(px_hi, width);
            for (int px = px_lo; px < px_hi; ++px) mask.set(px, py, true);
        }
    }
    return mask;
}

std::vector<PixelPoint> border_pixels(const BinaryMask& mask) {
    std::vector<PixelPoint> out;
    const int w = mask.width, h = mask.height;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (!mask.get(x, y)) continue;
            const bool border = (x == 0 || !mask.get(x - 1, y)) ||
                                (x == w - 1 || !mask.get(x + 1, y)) ||
                                (y == 0 || !mask.get(x, y - 1)) ||
                                (y == h - 1 || !mask.get(x, y + 1));
            if (border) out.push_back({x, y});
        }
    }
    return out;
}

namespace {

// 8-neighborhood in clockwise screen order starting from west.
constexpr int kDx8[8] = {-1, -1, 0, 1, 1, 1, 0, -1};
constexpr int kDy8[8] = {0, -1, -1, -1, 0, 1, 1, 1};

int direction_between(int from_x, int from_y, int to_x, int to_y) {
    const int dx = to_x - from_x, dy = to_y - from_y;
    for (int d = 0; d < 8; ++d) {
        if (kDx8[d] == dx && kDy8[d] == dy) return d;
    }
    return -1;
}

}  // namespace

// Border following after Suzuki & Abe: one trace per outer border and per
// hole border, with pixels marked so every border is traced exactly once.
std::vector<BoundaryChain> extract_boundary(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    std::vector<BoundaryChain> chains;
    if (w == 0 || h == 0) return chains;

    std::vector<int> f(static_cast<size_t>(w) * h, 0);
    for (size_t i = 0; i < f.size(); ++i) f[i] = mask.bits[i] ? 1 : 0;
    auto value = [&](int x, int y) -> int {
        return (x < 0 || y < 0 || x >= w || y >= h) ? 0 : f[static_cast<size_t>(y) * w + x];
    };
    auto store = [&](int x, int y, int v) { f[static_cast<size_t>(y) * w + x] = v; };

    int nbd = 1;
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            const int fij = value(x, y);
            if (fij == 0) continue;
            const bool outer_start = (fij == 1 && value(x - 1, y) == 0);
            const bool hole_start = (fij >= 1 && value(x + 1, y) == 0);
            if (!outer_start && !hole_start) continue;

            ++nbd;
            BoundaryChain chain;
            chain.is_hole = !outer_start;

            // Clockwise search from the start neighbor for the first set pixel.
            const int dir0 = outer_start ? 0 : 4;
            int d1 = -1;
            for (int k = 0; k < 8; ++k) {
                const int d = (dir0 + k) % 8;
                if (value(x + kDx8[d], y + kDy8[d]) != 0) {
                    d1 = d;
                    break;
                }
            }
            if (d1 < 0) {  // isolated pixel
                store(x, y, -nbd);
                chain.points.push_back({x, y});
                chains.push_back(std::move(chain));
                continue;
            }

            const int first_x = x + kDx8[d1], first_y = y + kDy8[d1];
            int prev_x = first_x, prev_y = first_y;  // (i2, j2)
            int cur_x = x, cur_y = y;                // (i3, j3)
            while (true) {
                // Counterclockwise search around cur, starting just past prev.
                const int dir_prev = direction_between(cur_x, cur_y, prev_x, prev_y);
                bool east_examined_zero = false;
                int d_next = -1;
                for (int k = 1; k <= 8; ++k) {
                    const int d = (dir_prev - k + 16) % 8;
                    const int nx = cur_x + kDx8[d], ny = cur_y + kDy8[d];
                    if (value(nx, ny) != 0) {
                        d_next = d;
                        break;
                    }
                    if (d == 4) east_examined_zero = true;
                }
                if (east_examined_zero) {
                    store(cur_x, cur_y, -nbd);
                } else if (value(cur_x, cur_y) == 1) {
                    store(cur_x, cur_y, nbd);
                }
                chain.points.push_back({cur_x, cur_y});

                const int nxt_x = cur_x + kDx8[d_next], nxt_y = cur_y + kDy8[d_next];
                if (nxt_x == x && nxt_y == y && cur_x == first_x && cur_y == first_y) {
                    break;
                }
                prev_x = cur_x;
                prev_y = cur_y;
                cur_x = nxt_x;
                cur_y = nxt_y;
            }
            chains.push_back(std::move(chain));
        }
    }
    return chains;
}

MaskTopology topology(const BinaryMask& mask) {
    const int w = mask.width, h = mask.height;
    MaskTopology result;
    if (w == 0 || h == 0) return result;

    std::vector<std::uint8_t> seen(static_cast<size_t>(w) * h, 0);
    std::vector<int> stack;
    auto idx = [&](int x, int y) { return static_cast<size_t>(y) * w + x; };

    auto flood = [&](int sx, int sy, bool foreground, bool eight) {
        stack.clear();
        stack.push_back(static_cast<int>(idx(sx, sy)));
        seen[idx(sx, sy)] = 1;
        bool touches_frame = false;
        while (!stack.empty()) {
            const int cur = stack.back();
            stack.pop_back();
            const int cx = cur % w, cy = cur / w;
            if (cx == 0 || cy == 0 || cx == w - 1 || cy == h - 1) touches_frame = true;
            for (int d = 0; d < 8; ++d) {
                if (!eight && (d % 2 == 1)) continue;  // odd entries are diagonals
                const int nx = cx + kDx8[d], ny = cy + kDy8[d];
                if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                if (seen[idx(nx, ny)]) continue;
                if (mask.get(nx, ny) != foreground) continue;
                seen[idx(nx, ny)] = 1;
                stack.push_back(static_cast<int>(idx(nx, ny)));
            }
        }
        return touches_frame;
    };

    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            if (seen[idx(x, y)]) continue;
            if (mask.get(x, y)) {
                ++result.components;
                flood(x, y, true, true);
            } else {
                const bool touches = flood(x, y, false, false);
                if (!touches) ++result.holes;
            }
        }
    }
    return result;
}

double mask_iou(const BinaryMask& a, const BinaryMask& b) {
    if (a.width != b.width || a.height != b.height) {
        throw DomainError("mask_iou: size mismatch");
    }
    std::size_t inter = 0, uni = 0;
    for (size_t i = 0; i < a.bits.size(); ++i) {
        const bool av = a.bits[i] != 0, bv = b.bits[i] != 0;
        inter += (av && bv) ? 1 : 0;
        uni += (av || bv) ? 1 : 0;
    }
    return uni == 0 ? 1.0 : static_cast<double>(inter) / static_cast<double>(uni);
}

void write_pgm(const BinaryMask& mask, const std::string& path) {
    std::FILE* fp = std::fopen(path.c_str(), "wb");
    if (!fp) throw IoError("write_pgm: cannot open " + path);
    std::fprintf(fp, "P5\n%d %d\n255\n", mask.width, mask.height);
    std::vector<unsigned char> row(static_cast<size_t>(mask.width));
    for (int y = 0; y < mask.height; ++y) {
        for (int x = 0; x < mask.width; ++x) {
            row[static_cast<size_t>(x)] = mask.get(x, y) ? 255 : 0;
        }
        std::fwrite(row.data(), 1, row.size(), fp);
    }
    if (std::fclose(fp) != 0) throw IoError("write_pgm: failed writing " + path);
}

}  // namespace ringaug
