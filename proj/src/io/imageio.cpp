#include "io/imageio.hpp"

#include <jpeglib.h>
#include <png.h>

#include <algorithm>
#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

#include "common/error.hpp"

namespace vitscope {

namespace {

uint8_t to_byte(double v) {
    return static_cast<uint8_t>(std::clamp(std::lround(v * 255.0), 0L, 255L));
}

std::string lower_ext(const std::string& path) {
    auto dot = path.rfind('.');
    if (dot == std::string::npos) return "";
    std::string ext = path.substr(dot + 1);
    std::transform(ext.begin(), ext.end(), ext.begin(), ::tolower);
    return ext;
}

Image from_rgb8(const std::vector<uint8_t>& rgb, int h, int w, int src_channels) {
    Image img(3, h, w);
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x)
            for (int c = 0; c < 3; ++c) {
                int sc = src_channels == 1 ? 0 : c;
                img.at(c, y, x) = rgb[(static_cast<size_t>(y) * w + x) * src_channels + sc] / 255.0;
            }
    return img;
}

struct FileCloser {
    void operator()(FILE* f) const {
        if (f) fclose(f);
    }
};
using FilePtr = std::unique_ptr<FILE, FileCloser>;

} // namespace

Image read_ppm(const std::string& path) {
    FilePtr f(fopen(path.c_str(), "rb"));
    if (!f) throw DataError("cannot open image: " + path);
    char magic[3] = {0};
    int w = 0, h = 0, maxval = 0;
    if (fscanf(f.get(), "%2s %d %d %d", magic, &w, &h, &maxval) != 4 ||
        std::strcmp(magic, "P6") != 0 || maxval != 255 || w <= 0 || h <= 0)
        throw DataError("unsupported ppm header: " + path);
    fgetc(f.get()); // single whitespace after header
    std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3);
    if (fread(rgb.data(), 1, rgb.size(), f.get()) != rgb.size())
        throw DataError("truncated ppm: " + path);
    return from_rgb8(rgb, h, w, 3);
}

void write_ppm(const std::string& path, const Image& unit) {
    FilePtr f(fopen(path.c_str(), "wb"));
    if (!f) throw DataError("cannot write image: " + path);
    fprintf(f.get(), "P6\n%d %d\n255\n", unit.width, unit.height);
    std::vector<uint8_t> row(static_cast<size_t>(unit.width) * 3);
    for (int y = 0; y < unit.height; ++y) {
        for (int x = 0; x < unit.width; ++x)
            for (int c = 0; c < 3; ++c)
                row[x * 3 + c] = to_byte(unit.at(std::min(c, unit.channels - 1), y, x));
        fwrite(row.data(), 1, row.size(), f.get());
    }
}

Image read_png(const std::string& path) {
    FilePtr f(fopen(path.c_str(), "rb"));
    if (!f) throw DataError("cannot open image: " + path);
    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw InternalError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw DataError("invalid png: " + path);
    }
    png_init_io(png, f.get());
    png_read_info(png, info);
    png_set_expand(png);
    png_set_strip_16(png);
    png_set_strip_alpha(png);
    png_set_gray_to_rgb(png);
    png_read_update_info(png, info);
    const int w = png_get_image_width(png, info);
    const int h = png_get_image_height(png, info);
    std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3);
    std::vector<png_bytep> rows(h);
    for (int y = 0; y < h; ++y) rows[y] = rgb.data() + static_cast<size_t>(y) * w * 3;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return from_rgb8(rgb, h, w, 3);
}

void write_png(const std::string& path, const Image& unit) {
    FilePtr f(fopen(path.c_str(), "wb"));
    if (!f) throw DataError("cannot write image: " + path);
    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    png_infop info = png ? png_create_info_struct(png) : nullptr;
    if (!png || !info) {
        png_destroy_write_struct(&png, &info);
        throw InternalError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw DataError("png write failed: " + path);
    }
    png_init_io(png, f.get());
    // Fixed settings keep output bytes reproducible run to run.
    png_set_compression_level(png, 6);
    png_set_IHDR(png, info, unit.width, unit.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<uint8_t> row(static_cast<size_t>(unit.width) * 3);
    for (int y = 0; y < unit.height; ++y) {
        for (int x = 0; x < unit.width; ++x)
            for (int c = 0; c < 3; ++c)
                row[x * 3 + c] = to_byte(unit.at(std::min(c, unit.channels - 1), y, x));
        png_write_row(png, row.data());
    }
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

namespace {

struct JpegErrorMgr {
    jpeg_error_mgr pub;
    jmp_buf setjmp_buffer;
};

void jpeg_error_exit(j_common_ptr cinfo) {
    auto* err = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
    longjmp(err->setjmp_buffer, 1);
}

} // namespace

Image read_jpeg(const std::string& path) {
    FilePtr f(fopen(path.c_str(), "rb"));
    if (!f) throw DataError("cannot open image: " + path);
    jpeg_decompress_struct cinfo;
    JpegErrorMgr jerr;
    cinfo.err = jpeg_std_error(&jerr.pub);
    jerr.pub.error_exit = jpeg_error_exit;
    if (setjmp(jerr.setjmp_buffer)) {
        jpeg_destroy_decompress(&cinfo);
        throw DataError("invalid jpeg: " + path);
    }
    jpeg_create_decompress(&cinfo);
    jpeg_stdio_src(&cinfo, f.get());
    jpeg_read_header(&cinfo, TRUE);
    cinfo.out_color_space = JCS_RGB;
    jpeg_start_decompress(&cinfo);
    const int w = cinfo.output_width;
    const int h = cinfo.output_height;
    std::vector<uint8_t> rgb(static_cast<size_t>(w) * h * 3);
    while (cinfo.output_scanline < cinfo.output_height) {
        JSAMPROW rowp = rgb.data() + static_cast<size_t>(cinfo.output_scanline) * w * 3;
        jpeg_read_scanlines(&cinfo, &rowp, 1);
    }
    jpeg_finish_decompress(&cinfo);
    jpeg_destroy_decompress(&cinfo);
    return from_rgb8(rgb, h, w, 3);
}

Image read_image(const std::string& path) {
    const std::string ext = lower_ext(path);
    if (ext == "png") return read_png(path);
    if (ext == "ppm") return read_ppm(path);
    if (ext == "jpg" || ext == "jpeg") return read_jpeg(path);
    throw DataError("unsupported image format: " + path);
}

void write_image(const std::string& path, const Image& unit) {
    const std::string ext = lower_ext(path);
    if (ext == "png") return write_png(path, unit);
    if (ext == "ppm") return write_ppm(path, unit);
    throw DataError("unsupported output image format: " + path);
}

} // namespace vitscope
