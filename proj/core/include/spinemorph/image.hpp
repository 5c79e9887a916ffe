#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

namespace spinemorph {

// 8-bit grayscale raster, row-major.
struct ImageU8 {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    ImageU8() = default;
    ImageU8(int w, int h, std::uint8_t fill = 0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    bool empty() const { return width <= 0 || height <= 0 || data.empty(); }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    bool operator==(const ImageU8&) const = default;
};

// 8-bit interleaved RGB raster, row-major.
struct ImageRGB {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // 3 bytes per pixel, R,G,B

    ImageRGB() = default;
    ImageRGB(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, 0) {}

    std::uint8_t* pixel(int x, int y) { return &data[(static_cast<std::size_t>(y) * width + x) * 3]; }
    const std::uint8_t* pixel(int x, int y) const {
        return &data[(static_cast<std::size_t>(y) * width + x) * 3];
    }
};

// Binary grid with values in {0,1}; same layout conventions as ImageU8.
struct Mask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data;

    Mask() = default;
    Mask(int w, int h) : width(w), height(h), data(static_cast<std::size_t>(w) * h, 0) {}

    bool empty() const { return width <= 0 || height <= 0; }
    std::uint8_t& at(int x, int y) { return data[static_cast<std::size_t>(y) * width + x]; }
    std::uint8_t at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
    std::size_t count() const;
    bool operator==(const Mask&) const = default;
};

// PNG/JPEG IO. Loaders convert to single-channel 8-bit; savers write PNG.
ImageU8 load_image_gray(const std::filesystem::path& path);
void save_image_gray(const ImageU8& image, const std::filesystem::path& path);
void save_image_rgb(const ImageRGB& image, const std::filesystem::path& path);

// Masks persist as 0/255 PNG; loading maps anything >= 128 to 1.
Mask load_mask_png(const std::filesystem::path& path);
void save_mask_png(const Mask& mask, const std::filesystem::path& path);

} // namespace spinemorph
