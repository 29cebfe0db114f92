#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ringaug/polygon.hpp"
#include "ringaug/transform.hpp"

namespace ringaug {

enum class AnnotationFormat {
    Native,           // this tool's JSON schema
    CocoSingleChain,  // COCO-style file, rings carried as one chain + key
    LabelMe,          // LabelMe shapes with a custom partition field
};

const char* format_name(AnnotationFormat f);
AnnotationFormat format_from_name(const std::string& name);

// One annotation file: an image reference plus its polygons. Ring partitions
// travel in the per-annotation "ring_partition" key in every format; a chain
// without the key is a plain polygon.
struct AnnotationDocument {
    std::string image_path;
    int width = 0;
    int height = 0;
    std::vector<RingPolygon> polygons;
    AnnotationFormat format = AnnotationFormat::Native;

    // Lint: indices (0-based) of polygons with vertices outside
    // [0, width] x [0, height]. Populated by readers; never a rejection.
    std::vector<int> out_of_bounds;
};

// Reads an annotation file, auto-detecting the format from its structure.
// Throws ParseError (malformed JSON, with position), FormatError (valid JSON,
// wrong shape, e.g. odd-length coordinate array), UnsupportedFormatError, or
// IoError.
AnnotationDocument read_annotations(const std::string& path);
AnnotationDocument read_annotations(const std::string& path, AnnotationFormat format);

// Writes a document. Coordinates round-trip exactly (shortest decimal that
// parses back to the same double). Returns warnings for information lost or
// embedded as custom keys (e.g. ring partitions in foreign formats).
std::vector<std::string> write_annotations(const AnnotationDocument& doc,
                                           const std::string& path,
                                           AnnotationFormat format);

// Export interop: rings as COCO multi-polygon segmentations (outer loop and
// inner loop as separate coordinate arrays under one annotation).
void write_coco_multipolygon(const AnnotationDocument& doc, const std::string& path);

// Pipeline configuration, read from a JSON file. Omitted fields keep the
// defaults below; an omitted augmentation list means all six families.
struct PipelineConfig {
    std::vector<AugmentationSpec> augmentations;
    int samples_per_image = 5;
    std::uint64_t seed = 0;
    double tolerance = 3.0;          // projection + matching tolerance, pixels
    bool keep_degenerate = false;    // false: skip sample; true: warn and keep
    AnnotationFormat format = AnnotationFormat::Native;

    void check() const;  // throws ConfigError
    static PipelineConfig defaults();
};

PipelineConfig read_pipeline_config(const std::string& path);

}  // namespace ringaug
