#include "ringaug/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "ringaug/error.hpp"

namespace ringaug {

using nlohmann::json;

const char* format_name(AnnotationFormat f) {
    switch (f) {
        case AnnotationFormat::Native: return "native";
        case AnnotationFormat::CocoSingleChain: return "coco-single-chain";
        case AnnotationFormat::LabelMe: return "labelme";
    }
    return "unknown";
}

AnnotationFormat format_from_name(const std::string& name) {
    if (name == "native") return AnnotationFormat::Native;
    if (name == "coco-single-chain") return AnnotationFormat::CocoSingleChain;
    if (name == "labelme") return AnnotationFormat::LabelMe;
    throw UnsupportedFormatError("unknown annotation format: " + name);
}

namespace {

json load_json(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        // e.what() carries the byte offset and a description.
        throw ParseError(path + ": " + e.what());
    }
}

void save_json(const json& j, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw IoError("failed writing " + path);
}

double number_at(const json& j, const char* context) {
    if (!j.is_number()) throw FormatError(std::string(context) + ": expected a number");
    return j.get<double>();
}

std::vector<Point2> decode_flat_coords(const json& arr, const char* context) {
    if (!arr.is_array()) throw FormatError(std::string(context) + ": expected an array");
    if (arr.size() % 2 != 0) {
        throw FormatError(std::string(context) + ": odd-length coordinate array (" +
                          std::to_string(arr.size()) + " values)");
    }
    std::vector<Point2> pts;
    pts.reserve(arr.size() / 2);
    for (size_t i = 0; i < arr.size(); i += 2) {
        pts.push_back({number_at(arr[i], context), number_at(arr[i + 1], context)});
    }
    return pts;
}

json encode_flat_coords(const std::vector<Point2>& pts) {
    json arr = json::array();
    for (const auto& p : pts) {
        arr.push_back(p.x);
        arr.push_back(p.y);
    }
    return arr;
}

std::optional<int> read_partition(const json& obj) {
    if (!obj.contains("ring_partition")) return std::nullopt;
    const json& v = obj.at("ring_partition");
    if (!v.is_number_integer()) {
        throw FormatError("ring_partition must be an integer");
    }
    return v.get<int>();
}

AnnotationDocument read_native(const json& j, const std::string& path) {
    AnnotationDocument doc;
    doc.format = AnnotationFormat::Native;
    if (!j.contains("image") || !j.at("image").is_object()) {
        throw FormatError(path + ": missing \"image\" object");
    }
    const json& img = j.at("image");
    doc.image_path = img.value("path", std::string{});
    doc.width = img.value("width", 0);
    doc.height = img.value("height", 0);
    if (!j.contains("annotations") || !j.at("annotations").is_array()) {
        throw FormatError(path + ": missing \"annotations\" array");
    }
    for (const json& a : j.at("annotations")) {
        RingPolygon poly;
        poly.label = a.value("label", std::string{});
        poly.vertices = decode_flat_coords(a.at("points"), "points");
        poly.partition = read_partition(a);
        doc.polygons.push_back(std::move(poly));
    }
    return doc;
}

AnnotationDocument read_coco(const json& j, const std::string& path) {
    AnnotationDocument doc;
    doc.format = AnnotationFormat::CocoSingleChain;
    if (!j.contains("images") || !j.at("images").is_array() || j.at("images").empty()) {
        throw FormatError(path + ": missing non-empty \"images\" array");
    }
    const json& img = j.at("images").at(0);
    doc.image_path = img.value("file_name", std::string{});
    doc.width = img.value("width", 0);
    doc.height = img.value("height", 0);

    std::map<int, std::string> categories;
    if (j.contains("categories")) {
        for (const json& c : j.at("categories")) {
            categories[c.value("id", 0)] = c.value("name", std::string{});
        }
    }
    if (!j.contains("annotations") || !j.at("annotations").is_array()) {
        throw FormatError(path + ": missing \"annotations\" array");
    }
    for (const json& a : j.at("annotations")) {
        if (!a.contains("segmentation") || !a.at("segmentation").is_array()) {
            throw FormatError(path + ": annotation without segmentation array");
        }
        const auto partition = read_partition(a);
        std::string label;
        if (auto it = categories.find(a.value("category_id", 0)); it != categories.end()) {
            label = it->second;
        }
        // Each coordinate array is one chain. The single-chain convention
        // carries rings in one array plus the partition key; files with
        // several arrays decode to one plain polygon per array.
        const json& seg = a.at("segmentation");
        for (size_t s = 0; s < seg.size(); ++s) {
            RingPolygon poly;
            poly.label = label;
            poly.vertices = decode_flat_coords(seg[s], "segmentation");
            if (seg.size() == 1) poly.partition = partition;
            doc.polygons.push_back(std::move(poly));
        }
    }
    return doc;
}

AnnotationDocument read_labelme(const json& j, const std::string& path) {
    AnnotationDocument doc;
    doc.format = AnnotationFormat::LabelMe;
    doc.image_path = j.value("imagePath", std::string{});
    doc.width = j.value("imageWidth", 0);
    doc.height = j.value("imageHeight", 0);
    if (!j.contains("shapes") || !j.at("shapes").is_array()) {
        throw FormatError(path + ": missing \"shapes\" array");
    }
    for (const json& s : j.at("shapes")) {
        RingPolygon poly;
        poly.label = s.value("label", std::string{});
        if (!s.contains("points") || !s.at("points").is_array()) {
            throw FormatError(path + ": shape without points");
        }
        for (const json& p : s.at("points")) {
            if (!p.is_array() || p.size() != 2) {
                throw FormatError(path + ": labelme point must be an [x, y] pair");
            }
            poly.vertices.push_back({number_at(p[0], "points"), number_at(p[1], "points")});
        }
        poly.partition = read_partition(s);
        doc.polygons.push_back(std::move(poly));
    }
    return doc;
}

void lint_bounds(AnnotationDocument& doc) {
    doc.out_of_bounds.clear();
    for (size_t i = 0; i < doc.polygons.size(); ++i) {
        for (const auto& v : doc.polygons[i].vertices) {
            if (v.x < 0.0 || v.y < 0.0 || v.x > doc.width || v.y > doc.height) {
                doc.out_of_bounds.push_back(static_cast<int>(i));
                break;
            }
        }
    }
}

}  // namespace

AnnotationDocument read_annotations(const std::string& path) {
    const json j = load_json(path);
    if (!j.is_object()) throw FormatError(path + ": top level must be an object");
    AnnotationFormat format;
    if (j.contains("shapes")) {
        format = AnnotationFormat::LabelMe;
    } else if (j.contains("images") && j.contains("annotations")) {
        format = AnnotationFormat::CocoSingleChain;
    } else if (j.contains("image") && j.contains("annotations")) {
        format = AnnotationFormat::Native;
    } else {
        throw UnsupportedFormatError(path + ": unrecognized annotation structure");
    }
    AnnotationDocument doc;
    switch (format) {
        case AnnotationFormat::Native: doc = read_native(j, path); break;
        case AnnotationFormat::CocoSingleChain: doc = read_coco(j, path); break;
        case AnnotationFormat::LabelMe: doc = read_labelme(j, path); break;
    }
    lint_bounds(doc);
    return doc;
}

AnnotationDocument read_annotations(const std::string& path, AnnotationFormat format) {
    const json j = load_json(path);
    if (!j.is_object()) throw FormatError(path + ": top level must be an object");
    AnnotationDocument doc;
    switch (format) {
        case AnnotationFormat::Native: doc = read_native(j, path); break;
        case AnnotationFormat::CocoSingleChain: doc = read_coco(j, path); break;
        case AnnotationFormat::LabelMe: doc = read_labelme(j, path); break;
    }
    lint_bounds(doc);
    return doc;
}

std::vector<std::string> write_annotations(const AnnotationDocument& doc,
                                           const std::string& path,
                                           AnnotationFormat format) {
    std::vector<std::string> warnings;
    json j;
    switch (format) {
        case AnnotationFormat::Native: {
            j["image"] = {{"path", doc.image_path},
                          {"width", doc.width},
                          {"height", doc.height}};
            json anns = json::array();
            for (const auto& poly : doc.polygons) {
                json a;
                a["label"] = poly.label;
                a["points"] = encode_flat_coords(poly.vertices);
                if (poly.partition) a["ring_partition"] = *poly.partition;
                anns.push_back(std::move(a));
            }
            j["annotations"] = std::move(anns);
            break;
        }
        case AnnotationFormat::CocoSingleChain: {
            j["images"] = json::array({{{"id", 1},
                                        {"file_name", doc.image_path},
                                        {"width", doc.width},
                                        {"height", doc.height}}});
            std::map<std::string, int> category_ids;
            json categories = json::array();
            json anns = json::array();
            int next_ann = 1;
            for (const auto& poly : doc.polygons) {
                auto [it, inserted] = category_ids.try_emplace(
                    poly.label, static_cast<int>(category_ids.size()) + 1);
                if (inserted) {
                    categories.push_back({{"id", it->second}, {"name", poly.label}});
                }
                json a;
                a["id"] = next_ann++;
                a["image_id"] = 1;
                a["category_id"] = it->second;
                a["segmentation"] = json::array({encode_flat_coords(poly.vertices)});
                if (poly.partition) {
                    a["ring_partition"] = *poly.partition;
                    warnings.push_back("ring partition for \"" + poly.label +
                                       "\" embedded as custom key ring_partition");
                }
                anns.push_back(std::move(a));
            }
            j["annotations"] = std::move(anns);
            j["categories"] = std::move(categories);
            break;
        }
        case AnnotationFormat::LabelMe: {
            j["version"] = "5.0.1";
            j["imagePath"] = doc.image_path;
            j["imageWidth"] = doc.width;
            j["imageHeight"] = doc.height;
            j["imageData"] = nullptr;
            json shapes = json::array();
            for (const auto& poly : doc.polygons) {
                json s;
                s["label"] = poly.label;
                s["shape_type"] = "polygon";
                json pts = json::array();
                for (const auto& p : poly.vertices) {
                    pts.push_back(json::array({p.x, p.y}));
                }
                s["points"] = std::move(pts);
                if (poly.partition) {
                    s["ring_partition"] = *poly.partition;
                    warnings.push_back("ring partition for \"" + poly.label +
                                       "\" embedded as custom key ring_partition");
                }
                shapes.push_back(std::move(s));
            }
            j["shapes"] = std::move(shapes);
            break;
        }
    }
    save_json(j, path);
    return warnings;
}

void write_coco_multipolygon(const AnnotationDocument& doc, const std::string& path) {
    json j;
    j["images"] = json::array({{{"id", 1},
                                {"file_name", doc.image_path},
                                {"width", doc.width},
                                {"height", doc.height}}});
    std::map<std::string, int> category_ids;
    json categories = json::array();
    json anns = json::array();
    int next_ann = 1;
    for (const auto& poly : doc.polygons) {
        auto [it, inserted] = category_ids.try_emplace(
            poly.label, static_cast<int>(category_ids.size()) + 1);
        if (inserted) categories.push_back({{"id", it->second}, {"name", poly.label}});
        json seg = json::array();
        if (poly.is_ring() && *poly.partition >= 1 && *poly.partition < poly.size()) {
            const auto [outer, inner] = split_boundaries(poly);
            seg.push_back(encode_flat_coords(outer));
            seg.push_back(encode_flat_coords(inner));
        } else {
            seg.push_back(encode_flat_coords(poly.vertices));
        }
        anns.push_back({{"id", next_ann++},
                        {"image_id", 1},
                        {"category_id", it->second},
                        {"segmentation", std::move(seg)}});
    }
    j["annotations"] = std::move(anns);
    j["categories"] = std::move(categories);
    save_json(j, path);
}

void PipelineConfig::check() const {
    if (samples_per_image < 1) throw ConfigError("samples_per_image must be >= 1");
    if (tolerance <= 0.0) throw ConfigError("tolerance must be positive");
    if (augmentations.empty()) throw ConfigError("augmentation list is empty");
    for (const auto& spec : augmentations) spec.check();
}

PipelineConfig PipelineConfig::defaults() {
    PipelineConfig config;
    for (AugmentationKind kind :
         {AugmentationKind::Rotation, AugmentationKind::Scaling,
          AugmentationKind::Cropping, AugmentationKind::RotationCropping,
          AugmentationKind::Translation, AugmentationKind::Flipping}) {
        AugmentationSpec spec;
        spec.kind = kind;
        config.augmentations.push_back(spec);
    }
    return config;
}

PipelineConfig read_pipeline_config(const std::string& path) {
    const json j = load_json(path);
    if (!j.is_object()) throw FormatError(path + ": config must be a JSON object");
    PipelineConfig config = PipelineConfig::defaults();
    config.samples_per_image = j.value("samples_per_image", config.samples_per_image);
    config.seed = j.value("seed", config.seed);
    config.tolerance = j.value("tolerance", config.tolerance);
    if (j.contains("degenerate")) {
        const std::string policy = j.at("degenerate").get<std::string>();
        if (policy == "skip") {
            config.keep_degenerate = false;
        } else if (policy == "keep") {
            config.keep_degenerate = true;
        } else {
            throw ConfigError("degenerate policy must be \"skip\" or \"keep\"");
        }
    }
    if (j.contains("format")) {
        config.format = format_from_name(j.at("format").get<std::string>());
    }
    if (j.contains("augmentations")) {
        config.augmentations.clear();
        for (const json& a : j.at("augmentations")) {
            AugmentationSpec spec;
            spec.kind = augmentation_kind_from_name(a.value("kind", std::string{}));
            auto range = [&](const char* key, double& lo, double& hi) {
                if (!a.contains(key)) return;
                const json& r = a.at(key);
                if (!r.is_array() || r.size() != 2) {
                    throw ConfigError(std::string(key) + " must be [min, max]");
                }
                lo = r[0].get<double>();
                hi = r[1].get<double>();
            };
            range("angle", spec.angle_min, spec.angle_max);
            range("scale", spec.scale_min, spec.scale_max);
            range("crop_scale", spec.crop_min, spec.crop_max);
            range("shift", spec.shift_min, spec.shift_max);
            spec.flip_probability = a.value("flip_probability", spec.flip_probability);
            config.augmentations.push_back(spec);
        }
    }
    config.check();
    return config;
}

}  // namespace ringaug
