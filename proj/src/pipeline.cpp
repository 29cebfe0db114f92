#include "ringaug/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include <json.hpp>

#include "ringaug/baselines.hpp"
#include "ringaug/error.hpp"
#include "ringaug/raster.hpp"
#include "ringaug/rng.hpp"

namespace ringaug {

namespace fs = std::filesystem;
using nlohmann::json;

SampleResult augment_document(const AnnotationDocument& doc, const AffinePlan& plan,
                              double tol, bool keep_degenerate) {
    SampleResult result;
    AnnotationDocument out;
    out.image_path = doc.image_path;
    out.width = plan.out_width;
    out.height = plan.out_height;
    out.format = doc.format;

    bool skip_sample = false;
    for (int pi = 0; pi < static_cast<int>(doc.polygons.size()); ++pi) {
        const RingPolygon& poly = doc.polygons[static_cast<size_t>(pi)];
        PolygonRecord record;
        record.source_index = pi;
        record.label = poly.label;
        record.n = poly.size();

        const BinaryMask mask = rasterize(poly, doc.width, doc.height);
        const BinaryMask warped = warp_mask(mask, plan);
        const SurvivorSequence survivors = project_vertices(poly, plan, warped, tol);
        record.m = survivors.m();

        if (survivors.m() < 3) {
            record.action = "skipped";
            result.polygons.push_back(record);
            if (!keep_degenerate) skip_sample = true;
            continue;
        }

        const Rect frame{0.0, 0.0, static_cast<double>(plan.out_width),
                         static_cast<double>(plan.out_height)};
        auto clips = bind_clips_to_gaps(survivors,
                                        clip_intersections(poly, plan, frame));
        record.clips = static_cast<int>(clips.size());
        RepairedPolygon repaired =
            repair_with_clips(survivors, clips, poly.partition);
        repaired.label = poly.label;

        record.action = "repaired";
        record.output_index = static_cast<int>(out.polygons.size());
        out.polygons.push_back(to_ring_polygon(repaired));
        result.polygons.push_back(record);
    }

    if (!skip_sample) result.out_doc = std::move(out);
    return result;
}

namespace {

json plan_to_json(const AffinePlan& plan) {
    json j;
    j["kind"] = plan_kind_name(plan.kind);
    j["matrix"] = {plan.a, plan.b, plan.c, plan.d, plan.e, plan.f};
    j["src"] = {plan.src_width, plan.src_height};
    j["out"] = {plan.out_width, plan.out_height};
    if (plan.crop_window) {
        j["crop_window"] = {plan.crop_window->x0, plan.crop_window->y0,
                            plan.crop_window->x1, plan.crop_window->y1};
    }
    return j;
}

AffinePlan plan_from_json(const json& j) {
    AffinePlan plan;
    const auto& m = j.at("matrix");
    plan.a = m.at(0).get<double>();
    plan.b = m.at(1).get<double>();
    plan.c = m.at(2).get<double>();
    plan.d = m.at(3).get<double>();
    plan.e = m.at(4).get<double>();
    plan.f = m.at(5).get<double>();
    plan.src_width = j.at("src").at(0).get<int>();
    plan.src_height = j.at("src").at(1).get<int>();
    plan.out_width = j.at("out").at(0).get<int>();
    plan.out_height = j.at("out").at(1).get<int>();
    if (j.contains("crop_window")) {
        const auto& c = j.at("crop_window");
        plan.crop_window = Rect{c.at(0).get<double>(), c.at(1).get<double>(),
                                c.at(2).get<double>(), c.at(3).get<double>()};
    }
    for (PlanKind k : {PlanKind::Identity, PlanKind::Rotation, PlanKind::Scale,
                       PlanKind::Crop, PlanKind::RotationCrop, PlanKind::Translation,
                       PlanKind::HFlip, PlanKind::VFlip, PlanKind::Composite}) {
        if (j.at("kind").get<std::string>() == plan_kind_name(k)) plan.kind = k;
    }
    return plan;
}

std::vector<std::string> list_annotation_files(const std::string& dir) {
    if (!fs::is_directory(dir)) throw IoError(dir + " is not a directory");
    std::vector<std::string> names;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (entry.path().extension() == ".json" &&
            entry.path().filename() != "manifest.json") {
            names.push_back(entry.path().filename().string());
        }
    }
    std::sort(names.begin(), names.end());
    return names;
}

std::string sample_output_name(const std::string& input_name, int sample_index) {
    const fs::path p(input_name);
    return p.stem().string() + "__aug" + std::to_string(sample_index) + ".json";
}

}  // namespace

RunManifest run_augment(const std::string& input_dir, const std::string& output_dir,
                        const PipelineConfig& config, int jobs) {
    config.check();
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    fs::create_directories(output_dir);

    const auto files = list_annotation_files(input_dir);

    struct Task {
        int file_index;
        int sample_index;  // 1-based
    };
    std::vector<Task> tasks;
    for (int fi = 0; fi < static_cast<int>(files.size()); ++fi) {
        for (int s = 1; s <= config.samples_per_image; ++s) tasks.push_back({fi, s});
    }

    std::vector<SampleRecord> records(tasks.size());
    std::vector<std::pair<std::string, std::string>> failures;
    std::mutex failures_mutex;

    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (;;) {
            const size_t t = cursor.fetch_add(1);
            if (t >= tasks.size()) break;
            const Task task = tasks[t];
            const std::string& name = files[static_cast<size_t>(task.file_index)];
            SampleRecord& record = records[t];
            record.input_file = name;
            record.sample_index = task.sample_index;
            record.output_file = sample_output_name(name, task.sample_index);
            try {
                const AnnotationDocument doc =
                    read_annotations((fs::path(input_dir) / name).string());
                // One independent stream per (file, sample); a worker pool
                // cannot reorder anything observable.
                const std::uint64_t stream = derive_stream(
                    config.seed, name, static_cast<std::uint64_t>(task.sample_index));
                record.stream_seed = stream;
                SplitMix64 rng(stream);
                const auto& spec = config.augmentations[static_cast<size_t>(
                    rng.next_u64() % config.augmentations.size())];
                const AffinePlan plan =
                    sample(spec, rng.next_u64(), doc.width, doc.height);
                record.plan = plan;

                SampleResult sample_result =
                    augment_document(doc, plan, config.tolerance, config.keep_degenerate);
                record.polygons = std::move(sample_result.polygons);
                if (sample_result.out_doc) {
                    write_annotations(*sample_result.out_doc,
                                      (fs::path(output_dir) / record.output_file).string(),
                                      config.format);
                    record.written = true;
                }
            } catch (const Error& e) {
                std::lock_guard<std::mutex> lock(failures_mutex);
                failures.emplace_back(name, e.what());
            }
        }
    };

    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int k = 0; k < jobs; ++k) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    RunManifest manifest;
    manifest.master_seed = config.seed;
    manifest.samples_per_image = config.samples_per_image;
    manifest.entries = std::move(records);  // already in (file, sample) order
    std::sort(failures.begin(), failures.end());
    manifest.failures = std::move(failures);
    write_manifest(manifest, (fs::path(output_dir) / "manifest.json").string());
    return manifest;
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
    json j;
    j["version"] = 1;
    j["master_seed"] = manifest.master_seed;
    j["samples_per_image"] = manifest.samples_per_image;
    json entries = json::array();
    for (const auto& record : manifest.entries) {
        json e;
        e["input"] = record.input_file;
        e["output"] = record.output_file;
        e["sample"] = record.sample_index;
        e["stream_seed"] = record.stream_seed;
        e["plan"] = plan_to_json(record.plan);
        e["written"] = record.written;
        json polys = json::array();
        for (const auto& p : record.polygons) {
            json pj;
            pj["source_index"] = p.source_index;
            pj["label"] = p.label;
            pj["n"] = p.n;
            pj["m"] = p.m;
            pj["clips"] = p.clips;
            pj["action"] = p.action;
            if (p.output_index) pj["output_index"] = *p.output_index;
            polys.push_back(std::move(pj));
        }
        e["polygons"] = std::move(polys);
        entries.push_back(std::move(e));
    }
    j["entries"] = std::move(entries);
    json fails = json::array();
    for (const auto& [file, error] : manifest.failures) {
        fails.push_back({{"file", file}, {"error", error}});
    }
    j["failures"] = std::move(fails);

    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write manifest " + path);
    out << j.dump(2) << '\n';
}

RunManifest read_manifest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open manifest " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(path + ": " + e.what());
    }
    RunManifest manifest;
    manifest.master_seed = j.value("master_seed", 0ull);
    manifest.samples_per_image = j.value("samples_per_image", 0);
    for (const json& e : j.at("entries")) {
        SampleRecord record;
        record.input_file = e.at("input").get<std::string>();
        record.output_file = e.at("output").get<std::string>();
        record.sample_index = e.at("sample").get<int>();
        record.stream_seed = e.at("stream_seed").get<std::uint64_t>();
        record.plan = plan_from_json(e.at("plan"));
        record.written = e.value("written", false);
        for (const json& pj : e.at("polygons")) {
            PolygonRecord p;
            p.source_index = pj.at("source_index").get<int>();
            p.label = pj.value("label", std::string{});
            p.n = pj.at("n").get<int>();
            p.m = pj.at("m").get<int>();
            p.clips = pj.value("clips", 0);
            p.action = pj.value("action", std::string{});
            if (pj.contains("output_index")) p.output_index = pj.at("output_index").get<int>();
            record.polygons.push_back(std::move(p));
        }
        manifest.entries.push_back(std::move(record));
    }
    if (j.contains("failures")) {
        for (const json& f : j.at("failures")) {
            manifest.failures.emplace_back(f.value("file", std::string{}),
                                           f.value("error", std::string{}));
        }
    }
    return manifest;
}

namespace {

void accumulate(CapAggregate& agg, const CapReport& report) {
    agg.mean_strict += report.cap_strict;
    agg.mean_order += report.cap_order;
    ++agg.count;
}

void finalize(CapAggregate& agg) {
    if (agg.count > 0) {
        agg.mean_strict /= agg.count;
        agg.mean_order /= agg.count;
    }
}

}  // namespace

CapRunResult run_cap(const std::string& original_dir, const std::string& augmented_dir,
                     const std::string& manifest_path, double tol, bool strict) {
    const RunManifest manifest = read_manifest(manifest_path);
    CapRunResult result;

    for (const auto& record : manifest.entries) {
        if (!record.written) continue;
        const fs::path original_path = fs::path(original_dir) / record.input_file;
        const fs::path augmented_path = fs::path(augmented_dir) / record.output_file;
        if (!fs::exists(original_path) || !fs::exists(augmented_path)) {
            result.unpaired.push_back(record.output_file);
            continue;
        }
        const AnnotationDocument original = read_annotations(original_path.string());
        const AnnotationDocument augmented = read_annotations(augmented_path.string());

        for (const auto& p : record.polygons) {
            if (!p.output_index) continue;
            if (p.source_index >= static_cast<int>(original.polygons.size()) ||
                *p.output_index >= static_cast<int>(augmented.polygons.size())) {
                result.unpaired.push_back(record.output_file);
                continue;
            }
            const RingPolygon& src = original.polygons[static_cast<size_t>(p.source_index)];
            const RingPolygon& aug = augmented.polygons[static_cast<size_t>(*p.output_index)];
            const MatchResult match = match_indices(src, record.plan, aug.vertices, tol);
            if (match.indices.empty()) continue;

            CapRow row;
            row.file = record.output_file;
            row.label = p.label;
            row.report.n = src.size();
            row.report.m = static_cast<int>(match.indices.size());
            row.report.unmatched_new_vertices = match.unmatched;
            row.report.cap_strict = cap_strict(src.size(), match.indices);
            row.report.cap_order = cap_order(src.size(), match.indices);
            accumulate(result.overall, row.report);
            accumulate(result.per_label[row.label], row.report);
            result.rows.push_back(std::move(row));
        }
    }
    finalize(result.overall);
    for (auto& [label, agg] : result.per_label) finalize(agg);

    if (strict && !result.unpaired.empty()) {
        throw IoError("cap: " + std::to_string(result.unpaired.size()) +
                      " unpaired augmented files");
    }
    return result;
}

void write_cap_reports(const CapRunResult& result, const std::string& json_path,
                       const std::string& csv_path) {
    json j;
    json rows = json::array();
    for (const auto& row : result.rows) {
        rows.push_back({{"file", row.file},
                        {"class", row.label},
                        {"n", row.report.n},
                        {"m", row.report.m},
                        {"cap_strict", row.report.cap_strict},
                        {"cap_order", row.report.cap_order},
                        {"unmatched", row.report.unmatched_new_vertices}});
    }
    j["instances"] = std::move(rows);
    j["overall"] = {{"mean_cap_strict", result.overall.mean_strict},
                    {"mean_cap_order", result.overall.mean_order},
                    {"count", result.overall.count}};
    json per_class = json::object();
    for (const auto& [label, agg] : result.per_label) {
        per_class[label] = {{"mean_cap_strict", agg.mean_strict},
                            {"mean_cap_order", agg.mean_order},
                            {"count", agg.count}};
    }
    j["per_class"] = std::move(per_class);
    j["unpaired"] = result.unpaired;

    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw IoError("cannot write " + json_path);
    out << j.dump(2) << '\n';

    std::ofstream csv(csv_path, std::ios::binary);
    if (!csv) throw IoError("cannot write " + csv_path);
    csv << cap_rows_to_csv(result.rows);
}

BenchResult run_bench(const std::vector<std::size_t>& sizes) {
    if (sizes.empty()) throw ConfigError("bench: need at least one size");
    BenchResult result;

    for (const std::size_t m : sizes) {
        // Survivor sequence with gaps: odd indices of a 2m-cycle, positions on
        // a circle, so repair exercises its gap path throughout.
        SurvivorSequence seq;
        seq.n = static_cast<int>(2 * m);
        seq.survivors.reserve(m);
        for (std::size_t t = 0; t < m; ++t) {
            const double angle = 6.283185307179586 * static_cast<double>(t) /
                                 static_cast<double>(m);
            seq.survivors.push_back({static_cast<int>(2 * t + 1),
                                     {std::cos(angle), std::sin(angle)}});
        }

        // Steady state: warm once, then repeat into reused storage until the
        // sample is long enough for a stable per-vertex figure.
        RepairedPolygon out;
        repair_reuse(seq, out);
        volatile std::size_t sink = out.entries.size();
        const auto start = std::chrono::steady_clock::now();
        long reps = 0;
        double elapsed_ns = 0.0;
        do {
            repair_reuse(seq, out);
            sink = out.entries.size();
            ++reps;
            elapsed_ns = std::chrono::duration<double, std::nano>(
                             std::chrono::steady_clock::now() - start).count();
        } while (elapsed_ns < 1e8 || reps < 3);
        (void)sink;
        result.rows.push_back(
            {m, elapsed_ns / (static_cast<double>(reps) * static_cast<double>(m))});
    }

    if (result.rows.size() >= 2) {
        double lo = result.rows[0].ns_per_vertex, hi = lo;
        for (const auto& row : result.rows) {
            lo = std::min(lo, row.ns_per_vertex);
            hi = std::max(hi, row.ns_per_vertex);
        }
        result.ratio = hi / lo;
        result.linear = result.ratio <= 2.0;
    }
    return result;
}

ValidateResult run_validate(const std::string& dir) {
    ValidateResult result;
    for (const auto& name : list_annotation_files(dir)) {
        ++result.files;
        AnnotationDocument doc;
        try {
            doc = read_annotations((fs::path(dir) / name).string());
        } catch (const Error& e) {
            result.problems.push_back(name + ": " + e.what());
            continue;
        }
        for (size_t pi = 0; pi < doc.polygons.size(); ++pi) {
            ++result.polygons;
            const auto& poly = doc.polygons[pi];
            const ValidationReport report = validate(poly);
            for (const auto& issue : report.issues) {
                result.problems.push_back(name + " polygon " + std::to_string(pi) +
                                          ": " + issue.message);
            }
            if (report.ok() && poly.is_ring() && doc.width > 0 && doc.height > 0) {
                const MaskTopology topo =
                    topology(rasterize(poly, doc.width, doc.height));
                if (topo.components != 1 || topo.holes != 1) {
                    result.problems.push_back(
                        name + " polygon " + std::to_string(pi) + ": ring rasterizes to " +
                        std::to_string(topo.components) + " components, " +
                        std::to_string(topo.holes) + " holes");
                }
            }
        }
        for (int oob : doc.out_of_bounds) {
            result.problems.push_back(name + " polygon " + std::to_string(oob) +
                                      ": vertices outside the image frame");
        }
    }
    return result;
}

}  // namespace ringaug
