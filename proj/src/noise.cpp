#include "momentcs/noise.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace momentcs {

namespace {

// Standard-normal draws: mt19937_64 uniforms through an explicit
// Box-Muller transform. std::normal_distribution is implementation
// defined, this sequence is not.
class GaussianSampler {
 public:
  explicit GaussianSampler(std::uint64_t seed) : rng_(seed) {}

  double next() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 = (static_cast<double>(rng_() >> 11) + 1.0) * 0x1.0p-53;  // (0, 1]
    const double u2 = static_cast<double>(rng_() >> 11) * 0x1.0p-53;          // [0, 1)
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * M_PI * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  std::mt19937_64 rng_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace

NoiseSpec::NoiseSpec(double ratio_, std::uint64_t seed_, bool clamp_output_)
    : ratio(ratio_), seed(seed_), clamp_output(clamp_output_) {
  if (!(ratio_ >= 0.0 && ratio_ <= 1.0))
    throw std::invalid_argument("NoiseSpec: ratio must lie in [0, 1]");
}

GrayImage add_gaussian_noise(const GrayImage& img, const NoiseSpec& spec) {
  GaussianSampler gauss(spec.seed);
  const double sigma = spec.sigma();
  GrayImage out(img.width, img.height);
  for (long i = 0; i < img.pixel_count(); ++i) {  // row-major draw order
    double v = img.pixels[static_cast<size_t>(i)] + sigma * gauss.next();
    if (spec.clamp_output) v = std::clamp(v, 0.0, 255.0);
    out.pixels[static_cast<size_t>(i)] = v;
  }
  return out;
}

}  // namespace momentcs
