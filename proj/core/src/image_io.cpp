#include "dptv/image_io.hpp"

#include <png.h>

#include <cstdio>
#include <cstring>
#include <fstream>
#include <memory>
#include <stdexcept>
#include <vector>

namespace dptv {

namespace {

struct FileCloser {
  void operator()(std::FILE* f) const {
    if (f) std::fclose(f);
  }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

[[noreturn]] void fail(const std::filesystem::path& path, const std::string& what) {
  throw std::runtime_error(path.string() + ": " + what);
}

}  // namespace

void write_png(const std::filesystem::path& path, const ImageU16& img, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw std::invalid_argument("png bit depth must be 8 or 16");
  }
  if (img.empty()) throw std::invalid_argument("cannot write empty image");

  FilePtr file(std::fopen(path.string().c_str(), "wb"));
  if (!file) fail(path, "cannot open for writing");

  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_write_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_write_struct(&png, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    fail(path, "png write error");
  }

  png_init_io(png, file.get());
  png_set_IHDR(png, info, img.width(), img.height(), bit_depth, PNG_COLOR_TYPE_GRAY,
               PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  png_write_info(png, info);

  const int w = img.width();
  if (bit_depth == 8) {
    std::vector<png_byte> row(static_cast<std::size_t>(w));
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < w; ++x) row[x] = static_cast<png_byte>(img.at(x, y) & 0xFF);
      png_write_row(png, row.data());
    }
  } else {
    // PNG stores 16-bit samples big-endian.
    std::vector<png_byte> row(static_cast<std::size_t>(w) * 2);
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < w; ++x) {
        row[2 * x] = static_cast<png_byte>(img.at(x, y) >> 8);
        row[2 * x + 1] = static_cast<png_byte>(img.at(x, y) & 0xFF);
      }
      png_write_row(png, row.data());
    }
  }
  png_write_end(png, info);
  png_destroy_write_struct(&png, &info);
}

void write_png(const std::filesystem::path& path, const ImageF& img, int bit_depth) {
  write_png(path, quantize(img, bit_depth), bit_depth);
}

LoadedImage read_png(const std::filesystem::path& path) {
  FilePtr file(std::fopen(path.string().c_str(), "rb"));
  if (!file) fail(path, "cannot open for reading");

  png_byte header[8];
  if (std::fread(header, 1, 8, file.get()) != 8 || png_sig_cmp(header, 0, 8) != 0) {
    fail(path, "not a PNG file");
  }

  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
  if (!png) fail(path, "png_create_read_struct failed");
  png_infop info = png_create_info_struct(png);
  if (!info) {
    png_destroy_read_struct(&png, nullptr, nullptr);
    fail(path, "png_create_info_struct failed");
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "png read error");
  }

  png_init_io(png, file.get());
  png_set_sig_bytes(png, 8);
  png_read_info(png, info);

  const int color_type = png_get_color_type(png, info);
  int depth = png_get_bit_depth(png, info);
  if (color_type != PNG_COLOR_TYPE_GRAY) {
    png_destroy_read_struct(&png, &info, nullptr);
    fail(path, "only grayscale PNG images are supported");
  }
  if (depth < 8) {
    png_set_expand_gray_1_2_4_to_8(png);
    depth = 8;
  }
  png_read_update_info(png, info);

  const int width = static_cast<int>(png_get_image_width(png, info));
  const int height = static_cast<int>(png_get_image_height(png, info));
  LoadedImage result;
  result.bit_depth = depth;
  result.pixels = ImageU16(width, height);

  std::vector<png_byte> row(png_get_rowbytes(png, info));
  for (int y = 0; y < height; ++y) {
    png_read_row(png, row.data(), nullptr);
    if (depth == 8) {
      for (int x = 0; x < width; ++x) result.pixels.at(x, y) = row[x];
    } else {
      for (int x = 0; x < width; ++x) {
        result.pixels.at(x, y) =
            static_cast<std::uint16_t>((row[2 * x] << 8) | row[2 * x + 1]);
      }
    }
  }
  png_read_end(png, nullptr);
  png_destroy_read_struct(&png, &info, nullptr);
  return result;
}

void write_pgm(const std::filesystem::path& path, const ImageU16& img, int bit_depth) {
  if (bit_depth != 8 && bit_depth != 16) {
    throw std::invalid_argument("pgm bit depth must be 8 or 16");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) fail(path, "cannot open for writing");
  const int maxval = bit_depth == 8 ? 255 : 65535;
  out << "P5\n" << img.width() << " " << img.height() << "\n" << maxval << "\n";
  if (bit_depth == 8) {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        out.put(static_cast<char>(img.at(x, y) & 0xFF));
      }
    }
  } else {
    for (int y = 0; y < img.height(); ++y) {
      for (int x = 0; x < img.width(); ++x) {
        out.put(static_cast<char>(img.at(x, y) >> 8));
        out.put(static_cast<char>(img.at(x, y) & 0xFF));
      }
    }
  }
  if (!out) fail(path, "short write");
}

LoadedImage read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(path, "cannot open for reading");
  std::string magic;
  in >> magic;
  if (magic != "P5") fail(path, "not a binary PGM file");
  int width = 0, height = 0, maxval = 0;
  auto read_header_int = [&](int& value) {
    // Skip whitespace and '#' comment lines between header tokens.
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '#') {
      if (c == '#') {
        std::string line;
        std::getline(in, line);
      } else {
        in.get();
      }
      c = in.peek();
    }
    in >> value;
  };
  read_header_int(width);
  read_header_int(height);
  read_header_int(maxval);
  in.get();  // single whitespace after maxval
  if (!in || width <= 0 || height <= 0 || (maxval != 255 && maxval != 65535)) {
    fail(path, "unsupported PGM header");
  }

  LoadedImage result;
  result.bit_depth = maxval == 255 ? 8 : 16;
  result.pixels = ImageU16(width, height);
  if (maxval == 255) {
    std::vector<char> row(static_cast<std::size_t>(width));
    for (int y = 0; y < height; ++y) {
      in.read(row.data(), width);
      for (int x = 0; x < width; ++x) {
        result.pixels.at(x, y) = static_cast<std::uint8_t>(row[x]);
      }
    }
  } else {
    std::vector<char> row(static_cast<std::size_t>(width) * 2);
    for (int y = 0; y < height; ++y) {
      in.read(row.data(), static_cast<std::streamsize>(row.size()));
      for (int x = 0; x < width; ++x) {
        const auto hi = static_cast<std::uint8_t>(row[2 * x]);
        const auto lo = static_cast<std::uint8_t>(row[2 * x + 1]);
        result.pixels.at(x, y) = static_cast<std::uint16_t>((hi << 8) | lo);
      }
    }
  }
  if (!in) fail(path, "truncated PGM payload");
  return result;
}

LoadedImage read_image(const std::filesystem::path& path) {
  const auto ext = path.extension().string();
  if (ext == ".png") return read_png(path);
  if (ext == ".pgm") return read_pgm(path);
  fail(path, "unsupported image extension (expected .png or .pgm)");
}

ImageF read_image_float(const std::filesystem::path& path) {
  return read_image(path).as_float();
}

}  // namespace dptv
