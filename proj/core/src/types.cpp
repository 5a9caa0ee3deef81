#include "dptv/types.hpp"

#include <algorithm>

#include "dptv/hash.hpp"

namespace dptv {

std::string_view to_string(ParticleClass cls) {
  switch (cls) {
    case ParticleClass::Tracer: return "tracer";
    case ParticleClass::Dispersed: return "dispersed";
    case ParticleClass::Unknown: return "unknown";
  }
  return "unknown";
}

ParticleClass particle_class_from_string(std::string_view text) {
  if (text == "tracer") return ParticleClass::Tracer;
  if (text == "dispersed") return ParticleClass::Dispersed;
  if (text == "unknown") return ParticleClass::Unknown;
  throw std::invalid_argument("unknown particle class: '" + std::string(text) + "'");
}

Box Box::clipped(double w, double h) const {
  return {std::clamp(x_min, 0.0, w), std::clamp(y_min, 0.0, h), std::clamp(x_max, 0.0, w),
          std::clamp(y_max, 0.0, h)};
}

double iou(const Box& a, const Box& b) {
  const double ix = std::min(a.x_max, b.x_max) - std::max(a.x_min, b.x_min);
  const double iy = std::min(a.y_max, b.y_max) - std::max(a.y_min, b.y_min);
  if (ix <= 0.0 || iy <= 0.0) return 0.0;
  const double inter = ix * iy;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

std::string hex_digest(std::uint64_t value, int digits) {
  static const char* kHex = "0123456789abcdef";
  std::string out;
  for (int i = digits - 1; i >= 0; --i) {
    out.push_back(kHex[(value >> (4 * i)) & 0xF]);
  }
  return out;
}

}  // namespace dptv
