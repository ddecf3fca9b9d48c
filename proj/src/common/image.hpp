#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace vitscope {

/// Dense channel-major pixel tensor (c, y, x), double precision. All model
/// and augmentation math runs on this type; 8-bit conversion happens only
/// at the file boundary.
struct Image {
    int channels = 0;
    int height = 0;
    int width = 0;
    std::vector<double> data;

    Image() = default;
    Image(int c, int h, int w, double fill = 0.0)
        : channels(c), height(h), width(w),
          data(static_cast<size_t>(c) * h * w, fill) {}

    double& at(int c, int y, int x) {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }
    double at(int c, int y, int x) const {
        return data[(static_cast<size_t>(c) * height + y) * width + x];
    }

    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }

    bool same_shape(const Image& o) const {
        return channels == o.channels && height == o.height && width == o.width;
    }
};

/// Per-channel input normalization (x/255 -> [0,1] -> (x-mean)/std) declared
/// by each model adapter. Also provides the valid normalized range and the
/// normalized encodings of black and of the dataset mean color.
struct Preprocess {
    std::array<double, 3> mean{0.0, 0.0, 0.0};
    std::array<double, 3> std{1.0, 1.0, 1.0};

    double lo(int c) const { return (0.0 - mean[c]) / std[c]; }
    double hi(int c) const { return (1.0 - mean[c]) / std[c]; }
    double black(int c) const { return lo(c); }
    double mean_color(int c) const { return 0.0; } // (mean - mean)/std

    Image normalize(const Image& unit) const;   // [0,1] -> normalized
    Image denormalize(const Image& norm) const; // normalized -> [0,1], clamped
};

Image clamp_per_channel(const Image& img, const Preprocess& pre);
double min_value(const Image& img);
double max_value(const Image& img);
bool all_finite(const Image& img);

/// Bilinear resize to (out_h, out_w); align-corners-false convention.
Image resize_bilinear(const Image& img, int out_h, int out_w);

/// Center crop to (out_h, out_w); image must be at least that large.
Image center_crop(const Image& img, int out_h, int out_w);

/// Standard eval transform: resize shorter side to `resize_to`, center crop
/// to (crop, crop). Returns the same mapping applied to box coordinates via
/// map_box_* helpers in robustness.
Image resize_center_crop(const Image& img, int resize_to, int crop);

} // namespace vitscope
