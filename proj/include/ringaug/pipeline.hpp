#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ringaug/io.hpp"
#include "ringaug/metrics.hpp"
#include "ringaug/repair.hpp"

namespace ringaug {

// What happened to one input polygon within one augmented sample.
struct PolygonRecord {
    int source_index = 0;            // position in the input document
    std::string label;
    int n = 0;                       // source vertex count
    int m = 0;                       // survivors
    int clips = 0;                   // inserted clip vertices
    std::string action;              // "repaired" | "skipped" | "kept"
    std::optional<int> output_index; // position in the output document
};

struct SampleRecord {
    std::string input_file;   // file name relative to the input directory
    std::string output_file;  // file name relative to the output directory
    int sample_index = 0;     // 1-based
    std::uint64_t stream_seed = 0;
    AffinePlan plan;
    std::vector<PolygonRecord> polygons;
    bool written = false;
};

struct RunManifest {
    std::uint64_t master_seed = 0;
    int samples_per_image = 0;
    std::vector<SampleRecord> entries;                      // sorted (input, sample)
    std::vector<std::pair<std::string, std::string>> failures;  // (file, error)
};

// Augments one document with one plan: rasterize -> warp -> project -> clip ->
// repair, per polygon. Degenerate results (fewer than 3 survivors) follow the
// keep/skip policy; under "skip" the whole sample is dropped (out_doc absent).
struct SampleResult {
    std::optional<AnnotationDocument> out_doc;
    std::vector<PolygonRecord> polygons;
};
SampleResult augment_document(const AnnotationDocument& doc, const AffinePlan& plan,
                              double tol, bool keep_degenerate);

// Batch driver: every annotation file in input_dir, samples_per_image draws
// each, written into output_dir along with "manifest.json". Deterministic in
// (config, input) regardless of `jobs`. Throws IoError when directories are
// unusable; per-file failures are recorded, not thrown.
RunManifest run_augment(const std::string& input_dir, const std::string& output_dir,
                        const PipelineConfig& config, int jobs = 1);

void write_manifest(const RunManifest& manifest, const std::string& path);
RunManifest read_manifest(const std::string& path);

struct CapAggregate {
    double mean_strict = 0.0;
    double mean_order = 0.0;
    int count = 0;
};

struct CapRunResult {
    std::vector<CapRow> rows;
    CapAggregate overall;
    std::map<std::string, CapAggregate> per_label;
    std::vector<std::string> unpaired;  // inputs the manifest could not pair
};

// Scores augmented annotations against their originals via index matching.
// `strict` turns unpaired files into a failure (nonzero CLI exit).
CapRunResult run_cap(const std::string& original_dir, const std::string& augmented_dir,
                     const std::string& manifest_path, double tol, bool strict);

void write_cap_reports(const CapRunResult& result, const std::string& json_path,
                       const std::string& csv_path);

// Overlay rendering: outer boundaries green, inner red, vertices as dots,
// bridge/closure edges highlighted. Writes SVG, and a PNG raster when
// png_path is non-empty. Throws RenderError on invalid annotations.
void render_overlay(const AnnotationDocument& doc, const std::string& svg_path,
                    const std::string& png_path);

struct BenchRow {
    std::size_t m = 0;
    double ns_per_vertex = 0.0;
};

struct BenchResult {
    std::vector<BenchRow> rows;
    double ratio = 1.0;     // max/min ns-per-vertex across sizes
    bool linear = true;     // ratio <= 2 (only checked with 2+ sizes)
};

// Times repair on synthesized survivor sequences of the given sizes.
BenchResult run_bench(const std::vector<std::size_t>& sizes);

struct ValidateResult {
    int files = 0;
    int polygons = 0;
    std::vector<std::string> problems;  // human-readable, one per finding
};

// Structural validation plus raster topology over a directory of annotations.
ValidateResult run_validate(const std::string& dir);

}  // namespace ringaug
