#include <array>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include <zlib.h>

#include "ringaug/error.hpp"
#include "ringaug/pipeline.hpp"
#include "ringaug/raster.hpp"

namespace ringaug {

namespace {

struct Rgb {
    std::uint8_t r, g, b;
};

constexpr Rgb kOuterColor{0x22, 0x8B, 0x22};   // green
constexpr Rgb kInnerColor{0xD0, 0x20, 0x20};   // red
constexpr Rgb kFillColor{0x80, 0x80, 0x00};    // olive
constexpr Rgb kBridgeColor{0x1E, 0x60, 0xD0};  // blue connector highlight

std::string rgb_hex(Rgb c) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", c.r, c.g, c.b);
    return buf;
}

void svg_polyline(std::ostream& os, const std::vector<Point2>& pts, bool closed,
                  const std::string& stroke, double width) {
    os << "  <polyline points=\"";
    for (const auto& p : pts) os << p.x << ',' << p.y << ' ';
    if (closed && !pts.empty()) os << pts.front().x << ',' << pts.front().y;
    os << "\" fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << width
       << "\"/>\n";
}

// Minimal PNG encoder: 8-bit RGB, one IDAT, zlib-compressed.
void write_png(const std::vector<Rgb>& pixels, int w, int h, const std::string& path) {
    std::vector<unsigned char> raw;
    raw.reserve(static_cast<size_t>(h) * (static_cast<size_t>(w) * 3 + 1));
    for (int y = 0; y < h; ++y) {
        raw.push_back(0);  // filter type none
        for (int x = 0; x < w; ++x) {
            const Rgb& c = pixels[static_cast<size_t>(y) * w + x];
            raw.push_back(c.r);
            raw.push_back(c.g);
            raw.push_back(c.b);
        }
    }
    uLongf compressed_size = compressBound(static_cast<uLong>(raw.size()));
    std::vector<unsigned char> compressed(compressed_size);
    if (compress2(compressed.data(), &compressed_size, raw.data(),
                  static_cast<uLong>(raw.size()), 6) != Z_OK) {
        throw RenderError("png: zlib compression failed");
    }
    compressed.resize(compressed_size);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw RenderError("png: cannot open " + path);
    auto be32 = [](std::uint32_t v) {
        return std::array<unsigned char, 4>{static_cast<unsigned char>(v >> 24),
                                            static_cast<unsigned char>(v >> 16),
                                            static_cast<unsigned char>(v >> 8),
                                            static_cast<unsigned char>(v)};
    };
    auto chunk = [&](const char* type, const unsigned char* data, std::size_t len) {
        const auto len_be = be32(static_cast<std::uint32_t>(len));
        out.write(reinterpret_cast<const char*>(len_be.data()), 4);
        std::uint32_t crc = crc32(0, reinterpret_cast<const Bytef*>(type), 4);
        out.write(type, 4);
        if (len > 0) {
            crc = crc32(crc, data, static_cast<uInt>(len));
            out.write(reinterpret_cast<const char*>(data), static_cast<std::streamsize>(len));
        }
        const auto crc_be = be32(crc);
        out.write(reinterpret_cast<const char*>(crc_be.data()), 4);
    };

    static const unsigned char signature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
    out.write(reinterpret_cast<const char*>(signature), 8);
    unsigned char ihdr[13];
    const auto wbe = be32(static_cast<std::uint32_t>(w));
    const auto hbe = be32(static_cast<std::uint32_t>(h));
    std::memcpy(ihdr, wbe.data(), 4);
    std::memcpy(ihdr + 4, hbe.data(), 4);
    ihdr[8] = 8;   // bit depth
    ihdr[9] = 2;   // color type RGB
    ihdr[10] = 0;  // compression
    ihdr[11] = 0;  // filter
    ihdr[12] = 0;  // interlace
    chunk("IHDR", ihdr, sizeof(ihdr));
    chunk("IDAT", compressed.data(), compressed.size());
    chunk("IEND", nullptr, 0);
    if (!out) throw RenderError("png: failed writing " + path);
}

}  // namespace

void render_overlay(const AnnotationDocument& doc, const std::string& svg_path,
                    const std::string& png_path) {
    if (doc.width < 1 || doc.height < 1) {
        throw RenderError("render: document has no image size");
    }
    for (const auto& poly : doc.polygons) {
        const ValidationReport report = validate(poly);
        if (!report.ok()) {
            throw RenderError("render: invalid annotation (" +
                              report.issues.front().message + ")");
        }
    }

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << doc.width
        << ' ' << doc.height << "\" width=\"" << doc.width << "\" height=\""
        << doc.height << "\">\n";
    svg << "  <rect width=\"" << doc.width << "\" height=\"" << doc.height
        << "\" fill=\"white\"/>\n";

    for (const auto& poly : doc.polygons) {
        if (poly.is_ring()) {
            const auto [outer, inner] = split_boundaries(poly);
            // Region fill uses the even-odd rule over both loops.
            svg << "  <path fill-rule=\"evenodd\" fill=\"" << rgb_hex(kFillColor)
                << "\" fill-opacity=\"0.35\" stroke=\"none\" d=\"";
            auto path_loop = [&](const std::vector<Point2>& loop) {
                for (size_t i = 0; i < loop.size(); ++i) {
                    svg << (i == 0 ? "M " : "L ") << loop[i].x << ' ' << loop[i].y << ' ';
                }
                svg << "Z ";
            };
            path_loop(outer);
            path_loop(inner);
            svg << "\"/>\n";
            svg_polyline(svg, outer, true, rgb_hex(kOuterColor), 1.5);
            svg_polyline(svg, inner, true, rgb_hex(kInnerColor), 1.5);
            // Bridge and closure edges of the stored chain.
            const RingEdges edges = ring_edges(poly);
            for (const auto& [from, to] : {edges.bridge, edges.closure}) {
                const Point2 a = poly.vertex(from);
                const Point2 b = poly.vertex(to);
                svg << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
                    << "\" y2=\"" << b.y << "\" stroke=\"" << rgb_hex(kBridgeColor)
                    << "\" stroke-width=\"1.2\" stroke-dasharray=\"3,2\"/>\n";
            }
        } else {
            svg << "  <path fill=\"" << rgb_hex(kFillColor)
                << "\" fill-opacity=\"0.35\" stroke=\"none\" d=\"";
            for (size_t i = 0; i < poly.vertices.size(); ++i) {
                svg << (i == 0 ? "M " : "L ") << poly.vertices[i].x << ' '
                    << poly.vertices[i].y << ' ';
            }
            svg << "Z\"/>\n";
            svg_polyline(svg, poly.vertices, true, rgb_hex(kOuterColor), 1.5);
        }
        for (const auto& v : poly.vertices) {
            svg << "  <circle cx=\"" << v.x << "\" cy=\"" << v.y
                << "\" r=\"1.8\" fill=\"black\"/>\n";
        }
    }
    svg << "</svg>\n";

    std::ofstream out(svg_path, std::ios::binary);
    if (!out) throw RenderError("render: cannot open " + svg_path);
    out << svg.str();
    if (!out) throw RenderError("render: failed writing " + svg_path);

    if (png_path.empty()) return;

    // Raster version: olive region fill, boundary pixels in the line colors.
    std::vector<Rgb> pixels(static_cast<size_t>(doc.width) * doc.height,
                            Rgb{0xFF, 0xFF, 0xFF});
    for (const auto& poly : doc.polygons) {
        const BinaryMask mask = rasterize(poly, doc.width, doc.height);
        for (int y = 0; y < doc.height; ++y) {
            for (int x = 0; x < doc.width; ++x) {
                if (mask.get(x, y)) {
                    pixels[static_cast<size_t>(y) * doc.width + x] = kFillColor;
                }
            }
        }
        for (const auto& chain : extract_boundary(mask)) {
            const Rgb color = chain.is_hole ? kInnerColor : kOuterColor;
            for (const auto& p : chain.points) {
                pixels[static_cast<size_t>(p.y) * doc.width + p.x] = color;
            }
        }
    }
    write_png(pixels, doc.width, doc.height, png_path);
}

}  // namespace ringaug
