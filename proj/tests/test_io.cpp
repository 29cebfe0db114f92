#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ringaug/baselines.hpp"
#include "ringaug/error.hpp"
#include "ringaug/io.hpp"
#include "test_support.hpp"

using namespace ringaug;
namespace fs = std::filesystem;

namespace {

fs::path temp_dir() {
    const fs::path dir = fs::temp_directory_path() / "ringaug_io_tests";
    fs::create_directories(dir);
    return dir;
}

bool documents_equal(const AnnotationDocument& a, const AnnotationDocument& b) {
    if (a.image_path != b.image_path || a.width != b.width || a.height != b.height) {
        return false;
    }
    if (a.polygons.size() != b.polygons.size()) return false;
    for (size_t i = 0; i < a.polygons.size(); ++i) {
        const auto& pa = a.polygons[i];
        const auto& pb = b.polygons[i];
        if (pa.label != pb.label || pa.partition != pb.partition) return false;
        if (pa.vertices.size() != pb.vertices.size()) return false;
        for (size_t v = 0; v < pa.vertices.size(); ++v) {
            if (!(pa.vertices[v] == pb.vertices[v])) return false;
        }
    }
    return true;
}

AnnotationDocument sample_document() {
    AnnotationDocument doc;
    doc.image_path = "floor_001.png";
    doc.width = 512;
    doc.height = 512;
    auto ring = testutil::example_ring();
    for (auto& v : ring.vertices) {
        v.x = v.x * 7.25 + 0.125;  // non-integral coordinates
        v.y = v.y * 7.25 + 0.0625;
    }
    doc.polygons.push_back(ring);
    RingPolygon simple;
    simple.label = "corridor";
    simple.vertices = {{1.5, 2.25}, {100.125, 2.25}, {50.0, 90.0}};
    doc.polygons.push_back(simple);
    return doc;
}

}  // namespace

TEST_CASE("COCO-style flat coordinates decode to a simple polygon") {
    const auto dir = temp_dir();
    const auto path = (dir / "coco_simple.json").string();
    std::ofstream out(path);
    out << R"({"images":[{"id":1,"file_name":"a.png","width":64,"height":64}],
"annotations":[{"id":1,"image_id":1,"category_id":1,
"segmentation":[[0,0, 10,0, 10,10, 0,10]]}],
"categories":[{"id":1,"name":"wall"}]})";
    out.close();
    const auto doc = read_annotations(path);
    REQUIRE(doc.polygons.size() == 1);
    CHECK(doc.polygons[0].size() == 4);
    CHECK(!doc.polygons[0].is_ring());
    CHECK(doc.polygons[0].label == "wall");
}

TEST_CASE("ring_partition key turns a chain into a ring") {
    const auto dir = temp_dir();
    const auto path = (dir / "coco_ring.json").string();
    std::ofstream out(path);
    out << R"({"images":[{"id":1,"file_name":"a.png","width":64,"height":64}],
"annotations":[{"id":1,"image_id":1,"category_id":1,"ring_partition":4,
"segmentation":[[10,10, 40,10, 40,40, 10,40, 20,20, 20,30, 30,30, 30,20]]}],
"categories":[{"id":1,"name":"wall"}]})";
    out.close();
    const auto doc = read_annotations(path);
    REQUIRE(doc.polygons.size() == 1);
    CHECK(doc.polygons[0].is_ring());
    CHECK(*doc.polygons[0].partition == 4);
    CHECK(doc.polygons[0].size() == 8);
}

TEST_CASE("truncated files raise a parse error, never partial documents") {
    const auto dir = temp_dir();
    const auto full_path = (dir / "full.json").string();
    write_annotations(sample_document(), full_path, AnnotationFormat::Native);
    std::ifstream in(full_path, std::ios::binary);
    const std::string content((std::istreambuf_iterator<char>(in)),
                              std::istreambuf_iterator<char>());
    for (size_t cut : {content.size() / 4, content.size() / 2, content.size() - 3}) {
        const auto cut_path = (dir / "cut.json").string();
        std::ofstream out(cut_path, std::ios::binary);
        out << content.substr(0, cut);
        out.close();
        CHECK_THROWS_AS(read_annotations(cut_path), ParseError);
    }
}

TEST_CASE("odd-length coordinate arrays are a format error") {
    const auto dir = temp_dir();
    const auto path = (dir / "odd.json").string();
    std::ofstream out(path);
    out << R"({"image":{"path":"a","width":8,"height":8},
"annotations":[{"label":"x","points":[1,2,3]}]})";
    out.close();
    CHECK_THROWS_AS(read_annotations(path), FormatError);
}

TEST_CASE("unknown structures are an unsupported-format error") {
    const auto dir = temp_dir();
    const auto path = (dir / "mystery.json").string();
    std::ofstream out(path);
    out << R"({"whatever": 3})";
    out.close();
    CHECK_THROWS_AS(read_annotations(path), UnsupportedFormatError);
}

TEST_CASE("read-write-read fixpoint on all three formats") {
    const auto dir = temp_dir();
    const auto doc = sample_document();
    for (AnnotationFormat format : {AnnotationFormat::Native,
                                    AnnotationFormat::CocoSingleChain,
                                    AnnotationFormat::LabelMe}) {
        const auto path = (dir / (std::string("fix_") + format_name(format))).string() +
                          ".json";
        const auto warnings = write_annotations(doc, path, format);
        if (format != AnnotationFormat::Native) CHECK(!warnings.empty());
        const auto read_back = read_annotations(path);
        CHECK(read_back.format == format);
        CHECK(documents_equal(doc, read_back));

        // Second cycle reproduces the file byte-for-byte.
        const auto path2 = path + ".again";
        write_annotations(read_back, path2, format);
        std::ifstream f1(path, std::ios::binary), f2(path2, std::ios::binary);
        const std::string s1((std::istreambuf_iterator<char>(f1)),
                             std::istreambuf_iterator<char>());
        const std::string s2((std::istreambuf_iterator<char>(f2)),
                             std::istreambuf_iterator<char>());
        CHECK(s1 == s2);
    }
}

TEST_CASE("empty documents round-trip") {
    const auto dir = temp_dir();
    AnnotationDocument doc;
    doc.image_path = "empty.png";
    doc.width = 32;
    doc.height = 32;
    const auto path = (dir / "empty.json").string();
    write_annotations(doc, path, AnnotationFormat::Native);
    const auto read_back = read_annotations(path);
    CHECK(read_back.polygons.empty());
    CHECK(read_back.width == 32);
}

TEST_CASE("out-of-bounds vertices are linted, not rejected") {
    const auto dir = temp_dir();
    AnnotationDocument doc;
    doc.image_path = "oob.png";
    doc.width = 32;
    doc.height = 32;
    RingPolygon poly;
    poly.vertices = {{-5, 0}, {10, 0}, {10, 10}};
    doc.polygons.push_back(poly);
    const auto path = (dir / "oob.json").string();
    write_annotations(doc, path, AnnotationFormat::Native);
    const auto read_back = read_annotations(path);
    REQUIRE(read_back.out_of_bounds.size() == 1);
    CHECK(read_back.out_of_bounds[0] == 0);
}

TEST_CASE("COCO multi-polygon export splits ring loops") {
    const auto dir = temp_dir();
    AnnotationDocument doc;
    doc.image_path = "multi.png";
    doc.width = 64;
    doc.height = 64;
    doc.polygons.push_back(testutil::example_ring());
    const auto path = (dir / "multi.json").string();
    write_coco_multipolygon(doc, path);
    // Reading it back yields two plain polygons (outer loop, inner loop).
    const auto read_back = read_annotations(path);
    REQUIRE(read_back.polygons.size() == 2);
    CHECK(read_back.polygons[0].size() == 4);
    CHECK(read_back.polygons[1].size() == 4);
    CHECK(!read_back.polygons[0].is_ring());
}

TEST_CASE("pipeline config: defaults and overrides") {
    const auto dir = temp_dir();
    const auto path = (dir / "config.json").string();
    std::ofstream out(path);
    out << R"({"seed": 99, "samples_per_image": 3, "degenerate": "keep",
"augmentations": [{"kind": "rotation", "angle": [-15, 15]},
                  {"kind": "flipping", "flip_probability": 0.25}]})";
    out.close();
    const auto config = read_pipeline_config(path);
    CHECK(config.seed == 99);
    CHECK(config.samples_per_image == 3);
    CHECK(config.keep_degenerate);
    REQUIRE(config.augmentations.size() == 2);
    CHECK(config.augmentations[0].angle_min == -15.0);
    CHECK(config.augmentations[1].flip_probability == 0.25);

    CHECK(PipelineConfig::defaults().augmentations.size() == 6);
}

TEST_CASE("pipeline config: bad values are config errors") {
    const auto dir = temp_dir();
    const auto path = (dir / "bad_config.json").string();
    std::ofstream out(path);
    out << R"({"samples_per_image": 0})";
    out.close();
    CHECK_THROWS_AS(read_pipeline_config(path), ConfigError);

    const auto path2 = (dir / "bad_range.json").string();
    std::ofstream out2(path2);
    out2 << R"({"augmentations": [{"kind": "rotation", "angle": [20, -20]}]})";
    out2.close();
    CHECK_THROWS_AS(read_pipeline_config(path2), ConfigError);
}
