#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "ringaug/geometry.hpp"
#include "ringaug/raster.hpp"
#include "ringaug/rng.hpp"

namespace ringaug {

enum class PlanKind {
    Identity,
    Rotation,
    Scale,
    Crop,
    RotationCrop,
    Translation,
    HFlip,
    VFlip,
    Composite,
};

// A sampled geometric transform from source frame to output frame.
//
// The 2x3 matrix maps source pixel coordinates (x, y) to destination:
//   x' = a*x + b*y + c
//   y' = d*x + e*y + f
// Rotation and scaling are about the image center ((w-1)/2, (h-1)/2), the
// convention under which a horizontal flip is exactly x' = (w-1) - x and a
// warped mask row-reverses bit-for-bit.
//
// Cropping is folded into the matrix (window translated to the origin, then
// scaled up to the output frame), so one matrix covers compound transforms;
// `crop_window` keeps the sampled window, in the coordinates of the pre-crop
// destination frame, for reporting and inspection.
struct AffinePlan {
    double a = 1, b = 0, c = 0;
    double d = 0, e = 1, f = 0;
    int src_width = 0, src_height = 0;
    int out_width = 0, out_height = 0;
    std::optional<Rect> crop_window;
    PlanKind kind = PlanKind::Identity;

    double det() const { return a * e - b * d; }
};

enum class AugmentationKind {
    Rotation,
    Scaling,
    Cropping,
    RotationCropping,
    Translation,
    Flipping,
};

// Parameter ranges for one augmentation family. Defaults:
//   rotation angle      [-30, 30] degrees
//   scale factor        [0.7, 1.3]
//   crop scale          [0.6, 1.0]
//   translation ratio   [-0.1, 0.1] per axis
//   flip probability    0.5 per axis (horizontal and vertical, independent)
struct AugmentationSpec {
    AugmentationKind kind = AugmentationKind::Rotation;
    double angle_min = -30.0, angle_max = 30.0;     // degrees
    double scale_min = 0.7, scale_max = 1.3;
    double crop_min = 0.6, crop_max = 1.0;
    double shift_min = -0.1, shift_max = 0.1;       // fraction of frame size
    double flip_probability = 0.5;

    // Throws ConfigError when a range is inverted or crop bounds leave (0, 1].
    void check() const;
};

const char* plan_kind_name(PlanKind k);
const char* augmentation_kind_name(AugmentationKind k);
AugmentationKind augmentation_kind_from_name(const std::string& name);

AffinePlan make_identity(int w, int h);
AffinePlan make_rotation(double degrees, int w, int h);
AffinePlan make_scale(double factor, int w, int h);
AffinePlan make_translation(double dx, double dy, int w, int h);
AffinePlan make_hflip(int w, int h);
AffinePlan make_vflip(int w, int h);
// Maps the window [x0, x0+cw] x [y0, y0+ch] onto the full output frame.
AffinePlan make_crop(double x0, double y0, double cw, double ch, int w, int h);
// after(before(p)); source frame of `before`, output frame of `after`.
AffinePlan compose(const AffinePlan& after, const AffinePlan& before);

// Draws one transform from the spec's ranges. Deterministic in (spec, seed).
AffinePlan sample(const AugmentationSpec& spec, std::uint64_t seed, int w, int h);

Point2 apply_point(const AffinePlan& plan, Point2 p);

// Applies the plan to every vertex of a polygon, keeping partition and label.
RingPolygon apply_polygon(const AffinePlan& plan, const RingPolygon& poly);

// Throws DegenerateTransformError when the matrix is singular.
AffinePlan invert(const AffinePlan& plan);

// Nearest-neighbor inverse-mapped warp: destination pixel (px, py) is set iff
// the inverse image of (px, py), rounded to the nearest pixel, is an in-frame
// set pixel of the source.
BinaryMask warp_mask(const BinaryMask& mask, const AffinePlan& plan);

}  // namespace ringaug
