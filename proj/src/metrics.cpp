#include "momentcs/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace momentcs {

double psnr(const GrayImage& reference, const GrayImage& test, double max_value) {
  if (!reference.same_size(test))
    throw std::invalid_argument("psnr: image dimensions differ");
  if (!(max_value > 0.0))
    throw std::invalid_argument("psnr: max_value must be positive");
  double sq = 0.0;
  for (long i = 0; i < reference.pixel_count(); ++i) {
    const double d = reference.pixels[static_cast<size_t>(i)] - test.pixels[static_cast<size_t>(i)];
    sq += d * d;
  }
  const double mse = sq / static_cast<double>(reference.pixel_count());
  if (mse == 0.0) return std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(max_value * max_value / mse);
}

WindowStats ssim_window_stats(const GrayImage& a, const GrayImage& b,
                              int window, int row, int col) {
  const double n = static_cast<double>(window) * window;
  WindowStats s;
  for (int i = 0; i < window; ++i)
    for (int j = 0; j < window; ++j) {
      s.mean_a += a.at(row + i, col + j);
      s.mean_b += b.at(row + i, col + j);
    }
  s.mean_a /= n;
  s.mean_b /= n;
  // Central moments in a second pass; shifting both images by a constant
  // must leave these untouched.
  for (int i = 0; i < window; ++i)
    for (int j = 0; j < window; ++j) {
      const double da = a.at(row + i, col + j) - s.mean_a;
      const double db = b.at(row + i, col + j) - s.mean_b;
      s.var_a += da * da;
      s.var_b += db * db;
      s.covar += da * db;
    }
  s.var_a /= n;
  s.var_b /= n;
  s.covar /= n;
  return s;
}

double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg) {
  if (!a.same_size(b)) throw std::invalid_argument("ssim: image dimensions differ");
  if (cfg.window < 1 || cfg.window > a.width || cfg.window > a.height)
    throw std::invalid_argument("ssim: window must fit inside both images");
  if (!(cfg.c1 > 0.0) || !(cfg.c2 > 0.0))
    throw std::invalid_argument("ssim: stabilizer constants must be positive");

  double total = 0.0;
  long windows = 0;
  for (int r = 0; r + cfg.window <= a.height; ++r) {
    for (int c = 0; c + cfg.window <= a.width; ++c) {
      const WindowStats s = ssim_window_stats(a, b, cfg.window, r, c);
      const double num = (2.0 * s.mean_a * s.mean_b + cfg.c1) * (2.0 * s.covar + cfg.c2);
      const double den = (s.mean_a * s.mean_a + s.mean_b * s.mean_b + cfg.c1) *
                         (s.var_a + s.var_b + cfg.c2);
      total += num / den;
      ++windows;
    }
  }
  return total / static_cast<double>(windows);
}

SparsitySummary sparsity_summary(const DenoiseStats& stats, int atom_dim) {
  if (atom_dim < 1) throw std::invalid_argument("sparsity_summary: atom_dim must be >= 1");
  return {stats.mean_selected, stats.mean_selected / static_cast<double>(atom_dim)};
}

}  // namespace momentcs
