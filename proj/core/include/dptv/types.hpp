#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dptv {

/// Phase classes of a particle image. Tracers cover both the empty and the
/// speckle morphology; the dispersed phase carries unidirectional fringes.
enum class ParticleClass { Tracer, Dispersed, Unknown };

std::string_view to_string(ParticleClass cls);
ParticleClass particle_class_from_string(std::string_view text);

/// Axis-aligned box, continuous pixel coordinates. A pixel (i, j) covers the
/// unit square [i, i+1) x [j, j+1); a box spanning a whole W x H image is
/// therefore (0, 0, W, H).
struct Box {
  double x_min = 0.0;
  double y_min = 0.0;
  double x_max = 0.0;
  double y_max = 0.0;

  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double center_x() const { return 0.5 * (x_min + x_max); }
  double center_y() const { return 0.5 * (y_min + y_max); }
  bool valid() const { return x_min < x_max && y_min < y_max; }

  Box clipped(double w, double h) const;
  Box translated(double dx, double dy) const {
    return {x_min + dx, y_min + dy, x_max + dx, y_max + dy};
  }
  Box scaled(double factor) const {
    return {x_min * factor, y_min * factor, x_max * factor, y_max * factor};
  }
  /// Mirror across the vertical axis of a w-wide canvas: x_min -> w - x_max.
  Box flipped_horizontal(double w) const { return {w - x_max, y_min, w - x_min, y_max}; }
  Box flipped_vertical(double h) const { return {x_min, h - y_max, x_max, h - y_min}; }

  bool contains(const Box& other) const {
    return other.x_min >= x_min && other.y_min >= y_min && other.x_max <= x_max &&
           other.y_max <= y_max;
  }
};

/// Intersection over union of two boxes. Symmetric, in [0, 1]; 1 iff the
/// boxes are identical and 0 iff their interiors are disjoint.
double iou(const Box& a, const Box& b);

/// Detector output: box, predicted class (Unknown for class-agnostic
/// detectors) and a confidence score in [0, 1].
struct Detection {
  Box box;
  ParticleClass cls = ParticleClass::Unknown;
  double confidence = 0.0;
  double class_confidence = 0.0;
};

/// Ground-truth record: box, class, and (for composed datasets) the index of
/// the source snippet within its pool.
struct Annotation {
  Box box;
  ParticleClass cls = ParticleClass::Tracer;
  int source_snippet = -1;
};

/// Raised for malformed or inconsistent configuration input; the CLI maps
/// this to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace dptv
