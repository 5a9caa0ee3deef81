#pragma once

#include <filesystem>

#include "dptv/image.hpp"

namespace dptv {

struct LoadedImage {
  ImageU16 pixels;
  int bit_depth = 8;  // 8 or 16

  ImageF as_float() const { return to_float(pixels, bit_depth); }
};

/// 8/16-bit single-channel PNG. Color or palette inputs are rejected; the
/// pipeline deals in grayscale sensor data only.
void write_png(const std::filesystem::path& path, const ImageU16& img, int bit_depth);
void write_png(const std::filesystem::path& path, const ImageF& img, int bit_depth = 8);
LoadedImage read_png(const std::filesystem::path& path);

/// Binary PGM (P5), maxval 255 or 65535.
void write_pgm(const std::filesystem::path& path, const ImageU16& img, int bit_depth);
LoadedImage read_pgm(const std::filesystem::path& path);

/// Dispatch on extension (.png / .pgm).
LoadedImage read_image(const std::filesystem::path& path);
ImageF read_image_float(const std::filesystem::path& path);

}  // namespace dptv
