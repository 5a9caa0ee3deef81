#pragma once

#include <complex>
#include <vector>

namespace dptv::fft {

using Complex = std::complex<double>;

/// In-place discrete Fourier transform of arbitrary length. Power-of-two
/// lengths use the iterative radix-2 algorithm; other lengths go through the
/// Bluestein chirp-z construction. The forward transform is unnormalized;
/// the inverse divides by the length.
void transform(std::vector<Complex>& data, bool inverse = false);

/// In-place 2-D transform of a row-major width x height complex buffer.
void transform_2d(std::vector<Complex>& data, int width, int height, bool inverse = false);

}  // namespace dptv::fft
