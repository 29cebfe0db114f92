#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ringaug/error.hpp"
#include "ringaug/io.hpp"
#include "ringaug/pipeline.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

int do_augment(const std::string& config_path, const std::string& input_dir,
               const std::string& output_dir, std::uint64_t* seed_override,
               int* samples_override, double* tol_override,
               std::string* format_override, std::string* degenerate_override,
               int jobs) {
    ringaug::PipelineConfig config = config_path.empty()
                                         ? ringaug::PipelineConfig::defaults()
                                         : ringaug::read_pipeline_config(config_path);
    if (seed_override) config.seed = *seed_override;
    if (samples_override) config.samples_per_image = *samples_override;
    if (tol_override) config.tolerance = *tol_override;
    if (format_override) config.format = ringaug::format_from_name(*format_override);
    if (degenerate_override) {
        if (*degenerate_override == "skip") {
            config.keep_degenerate = false;
        } else if (*degenerate_override == "keep") {
            config.keep_degenerate = true;
        } else {
            std::fprintf(stderr, "error: --degenerate must be skip or keep\n");
            return kExitUsage;
        }
    }

    const ringaug::RunManifest manifest =
        ringaug::run_augment(input_dir, output_dir, config, jobs);
    int written = 0, skipped = 0;
    for (const auto& entry : manifest.entries) {
        entry.written ? ++written : ++skipped;
    }
    std::printf("augment: %zu inputs, %d samples written, %d skipped, %zu failures\n",
                manifest.entries.size() / std::max(1, manifest.samples_per_image),
                written, skipped, manifest.failures.size());
    for (const auto& [file, error] : manifest.failures) {
        std::fprintf(stderr, "  %s: %s\n", file.c_str(), error.c_str());
    }
    return manifest.failures.empty() ? kExitOk : kExitData;
}

int do_cap(const std::string& original_dir, const std::string& augmented_dir,
           const std::string& manifest_path, const std::string& out_prefix,
           double tol, bool strict) {
    const std::string manifest = manifest_path.empty()
                                     ? (std::filesystem::path(augmented_dir) /
                                        "manifest.json").string()
                                     : manifest_path;
    const ringaug::CapRunResult result =
        ringaug::run_cap(original_dir, augmented_dir, manifest, tol, strict);
    ringaug::write_cap_reports(result, out_prefix + ".json", out_prefix + ".csv");
    std::printf("cap: %d instances, mean cap_strict %.6f, mean cap_order %.6f\n",
                result.overall.count, result.overall.mean_strict,
                result.overall.mean_order);
    for (const auto& [label, agg] : result.per_label) {
        std::printf("  %-12s n=%-5d strict %.6f order %.6f\n", label.c_str(),
                    agg.count, agg.mean_strict, agg.mean_order);
    }
    if (!result.unpaired.empty()) {
        std::fprintf(stderr, "cap: %zu unpaired outputs skipped\n",
                     result.unpaired.size());
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topology-preserving augmentation for ring-type polygon annotations"};
    app.require_subcommand(1);

    std::string config_path, input_dir, output_dir;
    std::uint64_t seed = 0;
    int samples = 0;
    double tol = 0.0;
    std::string format, degenerate;
    int jobs = 1;
    bool strict = false;

    auto* augment = app.add_subcommand("augment", "Augment a directory of annotations");
    augment->add_option("--config", config_path, "pipeline config JSON");
    augment->add_option("input", input_dir, "input annotation directory")->required();
    augment->add_option("output", output_dir, "output directory")->required();
    auto* seed_opt = augment->add_option("--seed", seed, "master seed");
    auto* samples_opt = augment->add_option("--samples", samples, "samples per image");
    auto* tol_opt = augment->add_option("--tol", tol, "projection tolerance, pixels");
    auto* format_opt = augment->add_option(
        "--format", format, "output format: coco-single-chain|labelme|native");
    auto* degen_opt = augment->add_option("--degenerate", degenerate,
                                          "degenerate-sample policy: skip|keep");
    augment->add_option("--jobs", jobs, "worker threads");

    std::string cap_original, cap_augmented, cap_manifest, cap_out = "cap_report";
    double cap_tol = 3.0;
    auto* cap = app.add_subcommand("cap", "Score augmented annotations against originals");
    cap->add_option("original", cap_original, "original annotation directory")->required();
    cap->add_option("augmented", cap_augmented, "augmented annotation directory")->required();
    cap->add_option("--manifest", cap_manifest, "manifest path (default: augmented/manifest.json)");
    cap->add_option("--out", cap_out, "report file prefix");
    cap->add_option("--tol", cap_tol, "matching tolerance, pixels");
    cap->add_flag("--strict", strict, "fail on unpaired files");

    std::string validate_dir;
    auto* validate_cmd = app.add_subcommand("validate", "Validate annotations and mask topology");
    validate_cmd->add_option("dir", validate_dir, "annotation directory")->required();

    std::string render_input, render_output;
    bool render_no_png = false;
    auto* render = app.add_subcommand("render", "Render an annotation overlay (SVG + PNG)");
    render->add_option("annotation", render_input, "annotation file")->required();
    render->add_option("output", render_output, "output SVG path")->required();
    render->add_flag("--no-png", render_no_png, "skip the PNG raster");

    std::vector<std::size_t> bench_sizes;
    auto* bench = app.add_subcommand("bench", "Time connectivity repair at several sizes");
    bench->add_option("sizes", bench_sizes, "survivor counts to time")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (augment->parsed()) {
            return do_augment(config_path, input_dir, output_dir,
                              seed_opt->count() ? &seed : nullptr,
                              samples_opt->count() ? &samples : nullptr,
                              tol_opt->count() ? &tol : nullptr,
                              format_opt->count() ? &format : nullptr,
                              degen_opt->count() ? &degenerate : nullptr, jobs);
        }
        if (cap->parsed()) {
            return do_cap(cap_original, cap_augmented, cap_manifest, cap_out, cap_tol,
                          strict);
        }
        if (validate_cmd->parsed()) {
            const ringaug::ValidateResult result = ringaug::run_validate(validate_dir);
            std::printf("validate: %d files, %d polygons, %zu problems\n", result.files,
                        result.polygons, result.problems.size());
            for (const auto& p : result.problems) {
                std::fprintf(stderr, "  %s\n", p.c_str());
            }
            return result.problems.empty() ? kExitOk : kExitData;
        }
        if (render->parsed()) {
            const ringaug::AnnotationDocument doc = ringaug::read_annotations(render_input);
            std::string png_path;
            if (!render_no_png) {
                png_path = std::filesystem::path(render_output)
                               .replace_extension(".png").string();
            }
            ringaug::render_overlay(doc, render_output, png_path);
            std::printf("render: wrote %s%s%s\n", render_output.c_str(),
                        png_path.empty() ? "" : " and ", png_path.c_str());
            return kExitOk;
        }
        if (bench->parsed()) {
            const ringaug::BenchResult result = ringaug::run_bench(bench_sizes);
            std::printf("%12s %16s\n", "m", "ns/vertex");
            for (const auto& row : result.rows) {
                std::printf("%12zu %16.2f\n", row.m, row.ns_per_vertex);
            }
            if (result.rows.size() >= 2) {
                std::printf("max/min ratio: %.3f (%s)\n", result.ratio,
                            result.linear ? "linear" : "NOT linear");
            }
            return kExitOk;
        }
    } catch (const ringaug::ConfigError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const ringaug::Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitData;
    }
    return kExitUsage;
}
