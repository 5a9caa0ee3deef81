#include "dptv/image.hpp"

#include "dptv/rng.hpp"

namespace dptv {

ImageF resize_bilinear(const ImageF& img, int out_width, int out_height) {
  if (out_width <= 0 || out_height <= 0) {
    throw std::invalid_argument("resize target must be positive");
  }
  ImageF out(out_width, out_height);
  const double sx = static_cast<double>(img.width()) / out_width;
  const double sy = static_cast<double>(img.height()) / out_height;
  for (int oy = 0; oy < out_height; ++oy) {
    const double src_y = (oy + 0.5) * sy - 0.5;
    for (int ox = 0; ox < out_width; ++ox) {
      const double src_x = (ox + 0.5) * sx - 0.5;
      out.at(ox, oy) = bilinear_sample(img, src_x, src_y);
    }
  }
  return out;
}

ImageF crop_resampled(const ImageF& img, const Box& box, int out_size) {
  if (!box.valid()) throw std::invalid_argument("crop box is degenerate");
  if (out_size <= 0) throw std::invalid_argument("crop target must be positive");
  ImageF out(out_size, out_size);
  const double sx = box.width() / out_size;
  const double sy = box.height() / out_size;
  for (int oy = 0; oy < out_size; ++oy) {
    // Continuous coordinate of the output pixel center mapped into the box,
    // then shifted to index coordinates for sampling.
    const double src_y = box.y_min + (oy + 0.5) * sy - 0.5;
    for (int ox = 0; ox < out_size; ++ox) {
      const double src_x = box.x_min + (ox + 0.5) * sx - 0.5;
      out.at(ox, oy) = bilinear_sample(img, src_x, src_y);
    }
  }
  return out;
}

ImageF flip_horizontal(const ImageF& img) {
  ImageF out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.at(x, y) = img.at(img.width() - 1 - x, y);
    }
  }
  return out;
}

ImageF flip_vertical(const ImageF& img) {
  ImageF out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.at(x, y) = img.at(x, img.height() - 1 - y);
    }
  }
  return out;
}

ImageU16 quantize(const ImageF& img, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw std::invalid_argument("bit depth must be 8 or 16");
  }
  const double maxval = bit_depth == 8 ? 255.0 : 65535.0;
  ImageU16 out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double v = std::clamp(static_cast<double>(img.at(x, y)), 0.0, 1.0);
      out.at(x, y) = static_cast<std::uint16_t>(std::floor(v * maxval + 0.5));
    }
  }
  return out;
}

ImageF to_float(const ImageU16& img, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw std::invalid_argument("bit depth must be 8 or 16");
  }
  const float maxval = bit_depth == 8 ? 255.0f : 65535.0f;
  ImageF out(img.width(), img.height());
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      out.at(x, y) = static_cast<float>(img.at(x, y)) / maxval;
    }
  }
  return out;
}

void add_gaussian_noise(ImageF& img, double sigma, Rng& rng) {
  if (sigma <= 0.0) return;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      const double v = img.at(x, y) + rng.normal(0.0, sigma);
      img.at(x, y) = static_cast<float>(std::clamp(v, 0.0, 1.0));
    }
  }
}

}  // namespace dptv
