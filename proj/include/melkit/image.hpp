#ifndef MELKIT_IMAGE_HPP
#define MELKIT_IMAGE_HPP

#include <cstdint>
#include <vector>

namespace melkit {

/// Row-major RGB raster; each channel is a real in [0,1] (converted from
/// 8-bit on load). Pixel (x,y) has its center at continuous coordinate (x,y),
/// which is the sampling grid used by bilinear interpolation throughout.
struct ImageRGB {
    int width = 0;
    int height = 0;
    std::vector<double> data; // width*height*3, RGB interleaved

    ImageRGB() = default;
    ImageRGB(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h * 3, fill) {}

    double& at(int x, int y, int c) {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    double at(int x, int y, int c) const {
        return data[(static_cast<std::size_t>(y) * width + x) * 3 + c];
    }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
};

/// Row-major boolean mask; true = lesion foreground.
struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> data; // 0 or 1

    BinaryMask() = default;
    BinaryMask(int w, int h, bool fill = false)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill ? 1 : 0) {}

    bool at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x] != 0; }
    void set(int x, int y, bool v) { data[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0; }
    std::size_t pixel_count() const { return static_cast<std::size_t>(width) * height; }
    std::size_t foreground_count() const;
};

/// Row-major soft (probability) mask with values in [0,1].
struct SoftMask {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    SoftMask() = default;
    SoftMask(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<std::size_t>(w) * h, fill) {}

    double at(int x, int y) const { return data[static_cast<std::size_t>(y) * width + x]; }
};

/// Deterministic center-aligned bilinear resize with edge clamping.
/// Throws Errc::value when a target dimension is < 1.
ImageRGB resize_bilinear(const ImageRGB& img, int w, int h);

/// Binarize a soft mask: pixel true iff value >= t. t must lie in (0,1).
BinaryMask threshold_soft_mask(const SoftMask& m, double t);

/// Bilinear sample at continuous (x,y); coordinates are clamped to the image.
void sample_bilinear_clamped(const ImageRGB& img, double x, double y, double out[3]);

} // namespace melkit

#endif
