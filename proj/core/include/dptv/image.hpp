#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dptv/types.hpp"

namespace dptv {

/// Row-major single-channel raster. Float images hold values in [0, 1];
/// integer images hold quantized sensor counts.
template <typename T>
class Image {
 public:
  Image() = default;
  Image(int width, int height, T fill = T{})
      : width_(width), height_(height), pixels_(static_cast<std::size_t>(width) * height, fill) {
    if (width <= 0 || height <= 0) {
      throw std::invalid_argument("image dimensions must be positive");
    }
  }

  int width() const { return width_; }
  int height() const { return height_; }
  bool empty() const { return pixels_.empty(); }
  std::size_t size() const { return pixels_.size(); }

  T& at(int x, int y) {
    assert(in_bounds(x, y));
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }
  const T& at(int x, int y) const {
    assert(in_bounds(x, y));
    return pixels_[static_cast<std::size_t>(y) * width_ + x];
  }

  bool in_bounds(int x, int y) const { return x >= 0 && x < width_ && y >= 0 && y < height_; }

  T* data() { return pixels_.data(); }
  const T* data() const { return pixels_.data(); }
  std::vector<T>& pixels() { return pixels_; }
  const std::vector<T>& pixels() const { return pixels_; }

  void fill(T value) { std::fill(pixels_.begin(), pixels_.end(), value); }

  friend bool operator==(const Image& a, const Image& b) {
    return a.width_ == b.width_ && a.height_ == b.height_ && a.pixels_ == b.pixels_;
  }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<T> pixels_;
};

using ImageF = Image<float>;
using ImageU8 = Image<std::uint8_t>;
using ImageU16 = Image<std::uint16_t>;

/// Bilinear sample at index coordinates (pixel centers at integers),
/// clamped to the image border.
inline float bilinear_sample(const ImageF& img, double x, double y) {
  const double cx = std::clamp(x, 0.0, static_cast<double>(img.width() - 1));
  const double cy = std::clamp(y, 0.0, static_cast<double>(img.height() - 1));
  const int x0 = static_cast<int>(std::floor(cx));
  const int y0 = static_cast<int>(std::floor(cy));
  const int x1 = std::min(x0 + 1, img.width() - 1);
  const int y1 = std::min(y0 + 1, img.height() - 1);
  const double fx = cx - x0;
  const double fy = cy - y0;
  const double top = (1.0 - fx) * img.at(x0, y0) + fx * img.at(x1, y0);
  const double bottom = (1.0 - fx) * img.at(x0, y1) + fx * img.at(x1, y1);
  return static_cast<float>((1.0 - fy) * top + fy * bottom);
}

/// Bilinear resize (half-pixel-aligned sampling grid).
ImageF resize_bilinear(const ImageF& img, int out_width, int out_height);

/// Resample the (continuous-coordinate) region `box` of `img` onto an
/// out_size x out_size grid. Used for snippet standardization and for
/// cropping detections for classification.
ImageF crop_resampled(const ImageF& img, const Box& box, int out_size);

ImageF flip_horizontal(const ImageF& img);
ImageF flip_vertical(const ImageF& img);

/// Round-half-up quantization of a [0, 1] image to the given bit depth
/// (8 or 16). Values outside [0, 1] are clamped first.
ImageU16 quantize(const ImageF& img, int bit_depth);

/// Back-conversion of quantized counts to [0, 1] floats.
ImageF to_float(const ImageU16& img, int bit_depth);

/// In-place additive Gaussian noise followed by a clamp to [0, 1].
void add_gaussian_noise(ImageF& img, double sigma, class Rng& rng);

}  // namespace dptv
