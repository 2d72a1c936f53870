#pragma once

#include <filesystem>

#include "flakelab/core.hpp"

namespace flakelab::io {

//! Reads a PNG or JPEG image (by file magic, not extension) into 8-bit RGB.
RgbImageU8 read_image(const std::filesystem::path& path);

//! Writes an 8-bit RGB PNG. Output bytes are deterministic for equal pixels.
void write_png(const std::filesystem::path& path, const RgbImageU8& image);

//! Writes a JPEG (quality 0-100); used for fixtures and interop tests.
void write_jpeg(const std::filesystem::path& path, const RgbImageU8& image,
                int quality = 90);

//! Reads only the dimensions (width, height) of a PNG/JPEG file.
std::pair<int, int> read_image_size(const std::filesystem::path& path);

//! Quantizes a float image in [0,1] to 8-bit with round-to-nearest.
RgbImageU8 quantize(const RgbImageF& image);

}  // namespace flakelab::io
