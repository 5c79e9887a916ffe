#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "spinemorph/geometry.hpp"
#include "spinemorph/image.hpp"

namespace spinemorph {

inline constexpr int kVertebraCount = 17;
inline constexpr int kCornersPerVertebra = 4;
inline constexpr int kLandmarkCount = kVertebraCount * kCornersPerVertebra; // 68

// Corner order within each vertebra, top vertebra first.
enum class Corner { top_left = 0, top_right = 1, bottom_left = 2, bottom_right = 3 };

// 68 ordered corner landmarks (17 vertebrae x 4 corners) in pixel
// coordinates of the image they annotate.
struct LandmarkSet {
    std::array<Point, kLandmarkCount> points{};
    int image_width = 0;
    int image_height = 0;

    Point corner(int vertebra, Corner c) const {
        return points[static_cast<std::size_t>(vertebra) * kCornersPerVertebra +
                      static_cast<std::size_t>(c)];
    }
    Point& corner(int vertebra, Corner c) {
        return points[static_cast<std::size_t>(vertebra) * kCornersPerVertebra +
                      static_cast<std::size_t>(c)];
    }

    // Enforces: 68 points grouped as vertebrae with TL,TR,BL,BR corner roles
    // (top corners above bottom ones, left corners left of right ones, which
    // admits vertebra tilts up to 45 degrees) and all coordinates inside
    // [0, width) x [0, height). Throws DataError naming the first violation.
    void validate() const;

    // Corner-role checks only, without the canvas-bounds requirement.
    // Augmented landmark sets may legitimately leave the canvas.
    void validate_corner_order() const;
};

// (PT, MT, TL) Cobb angles in degrees.
struct AngleTriple {
    double pt_deg = 0.0;
    double mt_deg = 0.0;
    double tl_deg = 0.0;

    void validate() const; // each component in [0, 180)
};

struct SampleRecord {
    ImageU8 image;
    std::optional<LandmarkSet> landmarks;
    std::optional<AngleTriple> angles_deg;
    enum class Split { train, test } split = Split::train;
    std::string source_id;
    std::string provenance; // processing notes, not persisted in manifests
};

struct PreprocessConfig {
    int target_height = 512;
    int target_width = 256;
    double crop_margin_fraction = 0.10;
    bool equalize = true;

    void validate() const;
};

struct AugmentationConfig {
    double flip_prob = 0.5;
    double rotation_min_deg = -25.0;
    double rotation_max_deg = 25.0;
    double scale_min = 0.85;
    double scale_max = 1.25;
    std::uint64_t seed = 0;

    void validate() const;
};

const char* split_name(SampleRecord::Split split);
SampleRecord::Split split_from_name(const std::string& name);

} // namespace spinemorph
