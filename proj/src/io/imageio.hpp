#pragma once

#include <string>

#include "common/image.hpp"

namespace vitscope {

/// Reads a raster file (.png, .ppm, .jpg/.jpeg) into a 3-channel unit-range
/// image. Grayscale inputs are replicated to 3 channels.
/// Throws DataError on unreadable or unsupported files.
Image read_image(const std::string& path);

/// Writes a unit-range image ([0,1], values clamped) as 8-bit RGB. The
/// format follows the extension (.png or .ppm). Output bytes are a pure
/// function of the pixel data, so identical images produce identical files.
void write_image(const std::string& path, const Image& unit);

Image read_ppm(const std::string& path);
void write_ppm(const std::string& path, const Image& unit);
Image read_png(const std::string& path);
void write_png(const std::string& path, const Image& unit);
Image read_jpeg(const std::string& path);

} // namespace vitscope
