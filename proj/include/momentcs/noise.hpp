#ifndef MOMENTCS_NOISE_HPP
#define MOMENTCS_NOISE_HPP

#include <cstdint>

#include "momentcs/image.hpp"

namespace momentcs {

/// Additive white Gaussian noise at standard deviation ratio * 255.
/// The generator is mt19937_64 driving an explicit Box-Muller transform
/// (see README), so one seed always reproduces the same noise field.
struct NoiseSpec {
  double ratio = 0.0;
  std::uint64_t seed = 0;
  bool clamp_output = true;

  NoiseSpec(double ratio, std::uint64_t seed, bool clamp_output = true);

  double sigma() const { return ratio * 255.0; }
};

/// out(i,j) = clamp(img(i,j) + n(i,j), 0, 255) with n i.i.d.
/// Normal(0, sigma^2), drawn in row-major pixel order. Setting clamp_output
/// to false skips the clamp.
GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec);

}  // namespace momentcs

#endif
