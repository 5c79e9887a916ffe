#include "spinemorph/image.hpp"

#include <numeric>

#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>

#include "spinemorph/error.hpp"

namespace spinemorph {

std::size_t Mask::count() const {
    return std::accumulate(data.begin(), data.end(), std::size_t{0});
}

ImageU8 load_image_gray(const std::filesystem::path& path) {
    cv::Mat m = cv::imread(path.string(), cv::IMREAD_GRAYSCALE);
    if (m.empty())
        throw DataError("cannot read image: " + path.string());
    ImageU8 img(m.cols, m.rows);
    for (int y = 0; y < m.rows; ++y) {
        const std::uint8_t* row = m.ptr<std::uint8_t>(y);
        std::copy(row, row + m.cols, img.data.begin() + static_cast<std::size_t>(y) * m.cols);
    }
    return img;
}

void save_image_gray(const ImageU8& image, const std::filesystem::path& path) {
    if (image.empty())
        throw DataError("refusing to save empty image: " + path.string());
    cv::Mat m(image.height, image.width, CV_8UC1, const_cast<std::uint8_t*>(image.data.data()));
    if (!cv::imwrite(path.string(), m))
        throw DataError("cannot write image: " + path.string());
}

void save_image_rgb(const ImageRGB& image, const std::filesystem::path& path) {
    // imwrite expects BGR ordering.
    cv::Mat bgr(image.height, image.width, CV_8UC3);
    for (int y = 0; y < image.height; ++y) {
        std::uint8_t* row = bgr.ptr<std::uint8_t>(y);
        for (int x = 0; x < image.width; ++x) {
            const std::uint8_t* px = image.pixel(x, y);
            row[3 * x + 0] = px[2];
            row[3 * x + 1] = px[1];
            row[3 * x + 2] = px[0];
        }
    }
    if (!cv::imwrite(path.string(), bgr))
        throw DataError("cannot write image: " + path.string());
}

Mask load_mask_png(const std::filesystem::path& path) {
    ImageU8 img = load_image_gray(path);
    Mask m(img.width, img.height);
    for (std::size_t i = 0; i < img.data.size(); ++i)
        m.data[i] = img.data[i] >= 128 ? 1 : 0;
    return m;
}

void save_mask_png(const Mask& mask, const std::filesystem::path& path) {
    ImageU8 img(mask.width, mask.height);
    for (std::size_t i = 0; i < mask.data.size(); ++i)
        img.data[i] = mask.data[i] ? 255 : 0;
    save_image_gray(img, path);
}

} // namespace spinemorph
