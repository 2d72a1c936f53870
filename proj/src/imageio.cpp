#include "flakelab/imageio.hpp"

#include <jpeglib.h>
#include <png.h>

#include <cmath>
#include <csetjmp>
#include <cstdio>
#include <cstring>
#include <memory>
#include <vector>

namespace flakelab::io {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

FilePtr open_file(const std::filesystem::path& path, const char* mode) {
  FilePtr f(std::fopen(path.c_str(), mode));
  require(f != nullptr, "cannot open file: " + path.string());
  return f;
}

bool is_png(std::FILE* f) {
  unsigned char magic[8] = {};
  const size_t got = std::fread(magic, 1, 8, f);
  std::rewind(f);
  return got == 8 && png_sig_cmp(magic, 0, 8) == 0;
}

RgbImageU8 from_interleaved(const std::vector<unsigned char>& rgb, int width,
                            int height) {
  RgbImageU8 out(height, width);
  for (int y = 0; y < height; ++y) {
    const unsigned char* row = rgb.data() + static_cast<size_t>(y) * width * 3;
    for (int x = 0; x < width; ++x) {
      out.r(y, x) = row[3 * x + 0];
      out.g(y, x) = row[3 * x + 1];
      out.b(y, x) = row[3 * x + 2];
    }
  }
  return out;
}

RgbImageU8 read_png_file(std::FILE* f, const std::string& name) {
  png_structp png =
      png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    throw Error("libpng info init failed");
  }
  std::vector<unsigned char> interleaved;
  std::vector<png_bytep> rows;
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    throw Error("corrupt PNG: " + name);
  }
  png_init_io(png, f);
  png_read_info(png, info);

  const png_uint_32 width = png_get_image_width(png, info);
  const png_uint_32 height = png_get_image_height(png, info);
  const int color_type = png_get_color_type(png, info);
  const int bit_depth = png_get_bit_depth(png, info);

  if (bit_depth == 16) png_set_strip_16(png);
  if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
  if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8)
    png_set_expand_gray_1_2_4_to_8(png);
  if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
  if (color_type == PNG_COLOR_TYPE_GRAY ||
      color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
    png_set_gray_to_rgb(png);
  png_set_strip_alpha(png);
  png_read_update_info(png, info);

  interleaved.resize(static_cast<size_t>(width) * height * 3);
  rows.resize(height);
  for (png_uint_32 y = 0; y < height; ++y)
    rows[y] = interleaved.data() + static_cast<size_t>(y) * width * 3;
  png_read_image(png, rows.data());
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return from_interleaved(interleaved, static_cast<int>(width),
                          static_cast<int>(height));
}

struct JpegErrorMgr {
  jpeg_error_mgr base;
  std::jmp_buf jump;
};

void jpeg_error_exit(j_common_ptr cinfo) {
  auto* mgr = reinterpret_cast<JpegErrorMgr*>(cinfo->err);
  std::longjmp(mgr->jump, 1);
}

RgbImageU8 read_jpeg_file(std::FILE* f, const std::string& name) {
  jpeg_decompress_struct cinfo{};
  JpegErrorMgr err{};
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_decompress(&cinfo);
    throw Error("corrupt JPEG: " + name);
  }
  jpeg_create_decompress(&cinfo);
  jpeg_stdio_src(&cinfo, f);
  jpeg_read_header(&cinfo, TRUE);
  cinfo.out_color_space = JCS_RGB;
  jpeg_start_decompress(&cinfo);

  const int width = static_cast<int>(cinfo.output_width);
  const int height = static_cast<int>(cinfo.output_height);
  std::vector<unsigned char> interleaved(static_cast<size_t>(width) * height *
                                         3);
  while (cinfo.output_scanline < cinfo.output_height) {
    unsigned char* row =
        interleaved.data() +
        static_cast<size_t>(cinfo.output_scanline) * width * 3;
    jpeg_read_scanlines(&cinfo, &row, 1);
  }
  jpeg_finish_decompress(&cinfo);
  jpeg_destroy_decompress(&cinfo);
  return from_interleaved(interleaved, width, height);
}

}  // namespace

RgbImageU8 read_image(const std::filesystem::path& path) {
  FilePtr f = open_file(path, "rb");
  if (is_png(f.get())) return read_png_file(f.get(), path.string());
  return read_jpeg_file(f.get(), path.string());
}

std::pair<int, int> read_image_size(const std::filesystem::path& path) {
  const RgbImageU8 img = read_image(path);
  return {static_cast<int>(img.width()), static_cast<int>(img.height())};
}

void write_png(const std::filesystem::path& path, const RgbImageU8& image) {
  require(image.width() > 0 && image.height() > 0, "empty image");
  FilePtr f = open_file(path, "wb");
  png_structp png =
      png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  require(png != nullptr, "libpng init failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    throw Error("libpng info init failed");
  }
  const int width = static_cast<int>(image.width());
  const int height = static_cast<int>(image.height());
  std::vector<unsigned char> interleaved(static_cast<size_t>(width) * height *
                                         3);
  std::vector<png_bytep> rows(height);
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    throw Error("PNG write failed: " + path.string());
  }
  png_init_io(png, f.get());
  // Fixed settings keep output bytes a pure function of the pixels.
  png_set_compression_level(png, 1);
  png_set_filter(png, 0, PNG_FILTER_SUB);
  png_set_IHDR(png, info, width, height, 8, PNG_COLOR_TYPE_RGB,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT,
               PNG_FILTER_TYPE_DEFAULT);
  for (int y = 0; y < height; ++y) {
    unsigned char* row = interleaved.data() + static_cast<size_t>(y) * width * 3;
    for (int x = 0; x < width; ++x) {
      row[3 * x + 0] = image.r(y, x);
      row[3 * x + 1] = image.g(y, x);
      row[3 * x + 2] = image.b(y, x);
    }
    rows[y] = row;
  }
  png_set_rows(png, info, rows.data());
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
}

void write_jpeg(const std::filesystem::path& path, const RgbImageU8& image,
                int quality) {
  FilePtr f = open_file(path, "wb");
  jpeg_compress_struct cinfo{};
  JpegErrorMgr err{};
  cinfo.err = jpeg_std_error(&err.base);
  err.base.error_exit = jpeg_error_exit;
  if (setjmp(err.jump)) {
    jpeg_destroy_compress(&cinfo);
    throw Error("JPEG write failed: " + path.string());
  }
  jpeg_create_compress(&cinfo);
  jpeg_stdio_dest(&cinfo, f.get());
  cinfo.image_width = static_cast<JDIMENSION>(image.width());
  cinfo.image_height = static_cast<JDIMENSION>(image.height());
  cinfo.input_components = 3;
  cinfo.in_color_space = JCS_RGB;
  jpeg_set_defaults(&cinfo);
  jpeg_set_quality(&cinfo, quality, TRUE);
  jpeg_start_compress(&cinfo, TRUE);
  std::vector<unsigned char> row(static_cast<size_t>(image.width()) * 3);
  while (cinfo.next_scanline < cinfo.image_height) {
    const int y = static_cast<int>(cinfo.next_scanline);
    for (int x = 0; x < image.width(); ++x) {
      row[3 * x + 0] = image.r(y, x);
      row[3 * x + 1] = image.g(y, x);
      row[3 * x + 2] = image.b(y, x);
    }
    unsigned char* ptr = row.data();
    jpeg_write_scanlines(&cinfo, &ptr, 1);
  }
  jpeg_finish_compress(&cinfo);
  jpeg_destroy_compress(&cinfo);
}

RgbImageU8 quantize(const RgbImageF& image) {
  RgbImageU8 out(image.height(), image.width());
  const auto q = [](float v) -> std::uint8_t {
    const float scaled = std::round(v * 255.0f);
    return static_cast<std::uint8_t>(std::min(255.0f, std::max(0.0f, scaled)));
  };
  for (Eigen::Index y = 0; y < image.height(); ++y)
    for (Eigen::Index x = 0; x < image.width(); ++x) {
      out.r(y, x) = q(image.r(y, x));
      out.g(y, x) = q(image.g(y, x));
      out.b(y, x) = q(image.b(y, x));
    }
  return out;
}

}  // namespace flakelab::io
