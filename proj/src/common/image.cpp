#include "common/image.hpp"

#include <algorithm>
#include <cmath>

namespace vitscope {

Image Preprocess::normalize(const Image& unit) const {
    Image out = unit;
    for (int c = 0; c < out.channels; ++c) {
        const double m = mean[c], s = std[c];
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x)
                out.at(c, y, x) = (out.at(c, y, x) - m) / s;
    }
    return out;
}

Image Preprocess::denormalize(const Image& norm) const {
    Image out = norm;
    for (int c = 0; c < out.channels; ++c) {
        const double m = mean[c], s = std[c];
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x)
                out.at(c, y, x) = std::clamp(out.at(c, y, x) * s + m, 0.0, 1.0);
    }
    return out;
}

Image clamp_per_channel(const Image& img, const Preprocess& pre) {
    Image out = img;
    for (int c = 0; c < out.channels; ++c) {
        const double lo = pre.lo(c), hi = pre.hi(c);
        for (int y = 0; y < out.height; ++y)
            for (int x = 0; x < out.width; ++x)
                out.at(c, y, x) = std::clamp(out.at(c, y, x), lo, hi);
    }
    return out;
}

double min_value(const Image& img) {
    double v = img.data.empty() ? 0.0 : img.data[0];
    for (double d : img.data) v = std::min(v, d);
    return v;
}

double max_value(const Image& img) {
    double v = img.data.empty() ? 0.0 : img.data[0];
    for (double d : img.data) v = std::max(v, d);
    return v;
}

bool all_finite(const Image& img) {
    for (double d : img.data)
        if (!std::isfinite(d)) return false;
    return true;
}

Image resize_bilinear(const Image& img, int out_h, int out_w) {
    if (img.height == out_h && img.width == out_w) return img;
    Image out(img.channels, out_h, out_w);
    const double sy = static_cast<double>(img.height) / out_h;
    const double sx = static_cast<double>(img.width) / out_w;
    for (int c = 0; c < img.channels; ++c) {
        for (int y = 0; y < out_h; ++y) {
            double fy = (y + 0.5) * sy - 0.5;
            fy = std::clamp(fy, 0.0, static_cast<double>(img.height - 1));
            int y0 = static_cast<int>(std::floor(fy));
            int y1 = std::min(y0 + 1, img.height - 1);
            double wy = fy - y0;
            for (int x = 0; x < out_w; ++x) {
                double fx = (x + 0.5) * sx - 0.5;
                fx = std::clamp(fx, 0.0, static_cast<double>(img.width - 1));
                int x0 = static_cast<int>(std::floor(fx));
                int x1 = std::min(x0 + 1, img.width - 1);
                double wx = fx - x0;
                double v = (1 - wy) * ((1 - wx) * img.at(c, y0, x0) + wx * img.at(c, y0, x1)) +
                           wy * ((1 - wx) * img.at(c, y1, x0) + wx * img.at(c, y1, x1));
                out.at(c, y, x) = v;
            }
        }
    }
    return out;
}

Image center_crop(const Image& img, int out_h, int out_w) {
    const int oy = (img.height - out_h) / 2;
    const int ox = (img.width - out_w) / 2;
    Image out(img.channels, out_h, out_w);
    for (int c = 0; c < img.channels; ++c)
        for (int y = 0; y < out_h; ++y)
            for (int x = 0; x < out_w; ++x)
                out.at(c, y, x) = img.at(c, y + oy, x + ox);
    return out;
}

Image resize_center_crop(const Image& img, int resize_to, int crop) {
    int rh, rw;
    if (img.height <= img.width) {
        rh = resize_to;
        rw = static_cast<int>(std::round(static_cast<double>(img.width) * resize_to / img.height));
    } else {
        rw = resize_to;
        rh = static_cast<int>(std::round(static_cast<double>(img.height) * resize_to / img.width));
    }
    return center_crop(resize_bilinear(img, rh, rw), crop, crop);
}

} // namespace vitscope
