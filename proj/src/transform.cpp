#include "ringaug/transform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ringaug/error.hpp"

namespace ringaug {

void AugmentationSpec::check() const {
    auto ordered = [](double lo, double hi) { return lo <= hi; };
    if (!ordered(angle_min, angle_max) || !ordered(scale_min, scale_max) ||
        !ordered(crop_min, crop_max) || !ordered(shift_min, shift_max)) {
        throw ConfigError("augmentation range has min > max");
    }
    if (crop_min <= 0.0 || crop_max > 1.0) {
        throw ConfigError("crop scale must lie in (0, 1]");
    }
    if (scale_min <= 0.0) throw ConfigError("scale factor must be positive");
    if (flip_probability < 0.0 || flip_probability > 1.0) {
        throw ConfigError("flip probability must lie in [0, 1]");
    }
}

const char* plan_kind_name(PlanKind k) {
    switch (k) {
        case PlanKind::Identity: return "identity";
        case PlanKind::Rotation: return "rotation";
        case PlanKind::Scale: return "scale";
        case PlanKind::Crop: return "crop";
        case PlanKind::RotationCrop: return "rotation+crop";
        case PlanKind::Translation: return "translation";
        case PlanKind::HFlip: return "hflip";
        case PlanKind::VFlip: return "vflip";
        case PlanKind::Composite: return "composite";
    }
    return "unknown";
}

const char* augmentation_kind_name(AugmentationKind k) {
    switch (k) {
        case AugmentationKind::Rotation: return "rotation";
        case AugmentationKind::Scaling: return "scaling";
        case AugmentationKind::Cropping: return "cropping";
        case AugmentationKind::RotationCropping: return "rotation_cropping";
        case AugmentationKind::Translation: return "translation";
        case AugmentationKind::Flipping: return "flipping";
    }
    return "unknown";
}

AugmentationKind augmentation_kind_from_name(const std::string& name) {
    if (name == "rotation") return AugmentationKind::Rotation;
    if (name == "scaling") return AugmentationKind::Scaling;
    if (name == "cropping") return AugmentationKind::Cropping;
    if (name == "rotation_cropping") return AugmentationKind::RotationCropping;
    if (name == "translation") return AugmentationKind::Translation;
    if (name == "flipping") return AugmentationKind::Flipping;
    throw ConfigError("unknown augmentation kind: " + name);
}

namespace {

AffinePlan base_plan(int w, int h, PlanKind kind) {
    AffinePlan p;
    p.src_width = w;
    p.src_height = h;
    p.out_width = w;
    p.out_height = h;
    p.kind = kind;
    return p;
}

}  // namespace

AffinePlan make_identity(int w, int h) { return base_plan(w, h, PlanKind::Identity); }

AffinePlan make_rotation(double degrees, int w, int h) {
    const double th = degrees * std::numbers::pi / 180.0;
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
    AffinePlan p = base_plan(w, h, PlanKind::Rotation);
    p.a = std::cos(th);
    p.b = -std::sin(th);
    p.d = std::sin(th);
    p.e = std::cos(th);
    p.c = cx - p.a * cx - p.b * cy;
    p.f = cy - p.d * cx - p.e * cy;
    return p;
}

AffinePlan make_scale(double factor, int w, int h) {
    const double cx = (w - 1) / 2.0, cy = (h - 1) / 2.0;
    AffinePlan p = base_plan(w, h, PlanKind::Scale);
    p.a = factor;
    p.e = factor;
    p.c = cx - factor * cx;
    p.f = cy - factor * cy;
    return p;
}

AffinePlan make_translation(double dx, double dy, int w, int h) {
    AffinePlan p = base_plan(w, h, PlanKind::Translation);
    p.c = dx;
    p.f = dy;
    return p;
}

AffinePlan make_hflip(int w, int h) {
    AffinePlan p = base_plan(w, h, PlanKind::HFlip);
    p.a = -1.0;
    p.c = w - 1.0;
    return p;
}

AffinePlan make_vflip(int w, int h) {
    AffinePlan p = base_plan(w, h, PlanKind::VFlip);
    p.e = -1.0;
    p.f = h - 1.0;
    return p;
}

AffinePlan make_crop(double x0, double y0, double cw, double ch, int w, int h) {
    if (cw <= 0.0 || ch <= 0.0) throw ConfigError("crop window must have positive size");
    AffinePlan p = base_plan(w, h, PlanKind::Crop);
    p.a = w / cw;
    p.e = h / ch;
    p.c = -x0 * p.a;
    p.f = -y0 * p.e;
    p.crop_window = Rect{x0, y0, x0 + cw, y0 + ch};
    return p;
}

AffinePlan compose(const AffinePlan& after, const AffinePlan& before) {
    AffinePlan p;
    p.a = after.a * before.a + after.b * before.d;
    p.b = after.a * before.b + after.b * before.e;
    p.c = after.a * before.c + after.b * before.f + after.c;
    p.d = after.d * before.a + after.e * before.d;
    p.e = after.d * before.b + after.e * before.e;
    p.f = after.d * before.c + after.e * before.f + after.f;
    p.src_width = before.src_width;
    p.src_height = before.src_height;
    p.out_width = after.out_width;
    p.out_height = after.out_height;
    p.crop_window = after.crop_window ? after.crop_window : before.crop_window;
    p.kind = PlanKind::Composite;
    return p;
}

AffinePlan sample(const AugmentationSpec& spec, std::uint64_t seed, int w, int h) {
    spec.check();
    SplitMix64 rng(seed);
    switch (spec.kind) {
        case AugmentationKind::Rotation:
            return make_rotation(rng.next_in(spec.angle_min, spec.angle_max), w, h);
        case AugmentationKind::Scaling:
            return make_scale(rng.next_in(spec.scale_min, spec.scale_max), w, h);
        case AugmentationKind::Cropping: {
            const double r = rng.next_in(spec.crop_min, spec.crop_max);
            const double cw = r * w, ch = r * h;
            const double x0 = rng.next_in(0.0, w - cw);
            const double y0 = rng.next_in(0.0, h - ch);
            return make_crop(x0, y0, cw, ch, w, h);
        }
        case AugmentationKind::RotationCropping: {
            const double angle = rng.next_in(spec.angle_min, spec.angle_max);
            const double r = rng.next_in(spec.crop_min, spec.crop_max);
            const double cw = r * w, ch = r * h;
            const double x0 = rng.next_in(0.0, w - cw);
            const double y0 = rng.next_in(0.0, h - ch);
            AffinePlan p = compose(make_crop(x0, y0, cw, ch, w, h),
                                   make_rotation(angle, w, h));
            p.kind = PlanKind::RotationCrop;
            return p;
        }
        case AugmentationKind::Translation: {
            const double dx = rng.next_in(spec.shift_min, spec.shift_max) * w;
            const double dy = rng.next_in(spec.shift_min, spec.shift_max) * h;
            return make_translation(dx, dy, w, h);
        }
        case AugmentationKind::Flipping: {
            const bool flip_h = rng.next_bool(spec.flip_probability);
            const bool flip_v = rng.next_bool(spec.flip_probability);
            if (flip_h && flip_v) {
                AffinePlan p = compose(make_vflip(w, h), make_hflip(w, h));
                p.kind = PlanKind::Composite;
                return p;
            }
            if (flip_h) return make_hflip(w, h);
            if (flip_v) return make_vflip(w, h);
            return make_identity(w, h);
        }
    }
    throw ConfigError("unhandled augmentation kind");
}

Point2 apply_point(const AffinePlan& plan, Point2 p) {
    return {plan.a * p.x + plan.b * p.y + plan.c,
            plan.d * p.x + plan.e * p.y + plan.f};
}

RingPolygon apply_polygon(const AffinePlan& plan, const RingPolygon& poly) {
    RingPolygon out = poly;
    for (auto& v : out.vertices) v = apply_point(plan, v);
    return out;
}

AffinePlan invert(const AffinePlan& plan) {
    const double det = plan.det();
    if (std::abs(det) < 1e-12) {
        throw DegenerateTransformError("invert: matrix determinant " +
                                       std::to_string(det) + " is singular");
    }
    AffinePlan inv;
    inv.a = plan.e / det;
    inv.b = -plan.b / det;
    inv.d = -plan.d / det;
    inv.e = plan.a / det;
    inv.c = -(inv.a * plan.c + inv.b * plan.f);
    inv.f = -(inv.d * plan.c + inv.e * plan.f);
    inv.src_width = plan.out_width;
    inv.src_height = plan.out_height;
    inv.out_width = plan.src_width;
    inv.out_height = plan.src_height;
    switch (plan.kind) {
        case PlanKind::Identity:
        case PlanKind::HFlip:
        case PlanKind::VFlip:
            inv.kind = plan.kind;  // self-inverse
            break;
        default:
            inv.kind = PlanKind::Composite;
            break;
    }
    return inv;
}

BinaryMask warp_mask(const BinaryMask& mask, const AffinePlan& plan) {
    const AffinePlan inv = invert(plan);
    BinaryMask out(plan.out_width, plan.out_height);
    for (int py = 0; py < out.height; ++py) {
        const double bx = inv.b * py + inv.c;
        const double by = inv.e * py + inv.f;
        for (int px = 0; px < out.width; ++px) {
            const int rx = static_cast<int>(std::floor(inv.a * px + bx + 0.5));
            const int ry = static_cast<int>(std::floor(inv.d * px + by + 0.5));
            if (mask.in_frame(rx, ry) && mask.get(rx, ry)) out.set(px, py, true);
        }
    }
    return out;
}

}  // namespace ringaug
