#pragma once

#include <cstdint>
#include <vector>

#include "dptv/image.hpp"
#include "dptv/rng.hpp"
#include "dptv/types.hpp"

namespace dptv::optics {

/// Morphology of a defocused particle image: a uniform disc (one glare
/// point), unidirectional interference fringes (two collinear glare points)
/// or an irregular speckle texture (many randomly placed glare points).
enum class Pattern { Empty, Regular, Speckle };

std::string_view to_string(Pattern p);
Pattern pattern_from_string(std::string_view text);
ParticleClass label_for(Pattern p);

/// One coherent point source on the particle surface. The aperture offset is
/// dimensionless in [-1, 1]^2; its direction sets the fringe normal and its
/// length sets the fringe frequency of the plane wave this point contributes
/// (kCyclesPerUnitOffset cycles across the particle-image diameter at unit
/// offset).
struct GlarePoint {
  double offset_x = 0.0;
  double offset_y = 0.0;
  double amplitude = 1.0;
  double phase = 0.0;  // radians
};

inline constexpr double kCyclesPerUnitOffset = 6.0;
inline constexpr int kDefaultSpecklePoints = 12;

struct GlarePointConfig {
  std::vector<GlarePoint> points;

  /// One glare point at the aperture center: uniform (empty) disc.
  static GlarePointConfig single();
  /// Two glare points placed symmetrically on a line through the origin so
  /// that their interference produces exactly `fringe_count` cosine cycles
  /// across the diameter, with fringe normal at `direction` radians.
  /// `relative_phase` shifts the fringes laterally.
  static GlarePointConfig collinear_pair(double fringe_count, double direction,
                                         double relative_phase = 0.0);
  /// `count` >= 3 glare points at pseudo-random offsets with random phases.
  static GlarePointConfig random_points(int count, Rng& rng);

  /// Enforces the per-pattern invariants (point count, collinearity, offsets
  /// inside [-1,1]^2, nonnegative amplitudes with at least one positive).
  void validate(Pattern pattern) const;
};

/// Full description of one simulated particle image.
struct ParticleImageSpec {
  double center_x = 0.0;  // px, sub-pixel
  double center_y = 0.0;
  double diameter_px = 3.0;       // d_PI
  double particle_size_um = 0.0;  // physical particle size; metadata only
  Pattern pattern = Pattern::Empty;
  GlarePointConfig glare = GlarePointConfig::single();
  double fringe_count = 0.0;      // N_f, cycles per diameter; Regular only
  double fringe_direction = 0.0;  // radians
  double peak_intensity = 1.0;    // [0, 1]

  void validate() const;

  /// Tight square of side diameter_px around the center.
  Box tight_bbox() const {
    const double r = 0.5 * diameter_px;
    return {center_x - r, center_y - r, center_x + r, center_y + r};
  }

  static ParticleImageSpec empty(double cx, double cy, double d_pi, double peak = 1.0);
  static ParticleImageSpec regular(double cx, double cy, double d_pi, double fringe_count,
                                   double direction, double peak = 1.0,
                                   double relative_phase = 0.0);
  static ParticleImageSpec speckle(double cx, double cy, double d_pi, Rng& rng,
                                   int points = kDefaultSpecklePoints, double peak = 1.0);
};

struct SensorModel {
  int width = 600;
  int height = 600;
  int bit_depth = 8;  // 8 or 16
  double background = 0.0;
  double noise_sigma = 0.0;

  void validate() const;
};

struct SceneParticle {
  ParticleImageSpec spec;
  ParticleClass label = ParticleClass::Tracer;
};

struct SceneSpec {
  SensorModel sensor;
  std::vector<SceneParticle> particles;
  std::uint64_t seed = 0;

  void validate() const;
};

/// Renders a single particle image into an out_size x out_size snippet with
/// the disc centered; values in [0, 1], zero outside the disc, raised-cosine
/// rim taper of width 1 px.
ImageF render_particle_image(const ParticleImageSpec& spec, int out_size);

/// Snippet render plus sensor background and Gaussian noise, as the
/// extraction pipeline would see it.
ImageF render_snippet_with_sensor(const ParticleImageSpec& spec, int out_size,
                                  double background, double noise_sigma, Rng& rng);

struct SceneRender {
  ImageU16 image;  // quantized to sensor bit depth
  int bit_depth = 8;
  std::vector<Annotation> annotations;
};

/// Deterministic scene composite: particles blended additively onto the
/// background, clamped, noised from the scene seed, then quantized
/// (round half up). One annotation per particle, bbox clipped to the sensor.
SceneRender render_scene(const SceneSpec& scene);

/// The pre-quantization float canvas of render_scene (noise included).
ImageF render_scene_float(const SceneSpec& scene);

/// Ground truth for spectral tests; `spec` must be a Regular pattern.
double expected_fringe_count(const ParticleImageSpec& spec);

}  // namespace dptv::optics
