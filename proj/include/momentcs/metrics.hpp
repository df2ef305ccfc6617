#ifndef MOMENTCS_METRICS_HPP
#define MOMENTCS_METRICS_HPP

#include "momentcs/image.hpp"
#include "momentcs/pipeline.hpp"

namespace momentcs {

/// Sliding uniform window, stride 1. c1 and c2 are the canonical
/// stabilizers (0.01 * 255)^2 and (0.03 * 255)^2.
struct SsimConfig {
  int window = 8;
  double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  double c2 = (0.03 * 255.0) * (0.03 * 255.0);
};

/// 10 * log10(max_value^2 / MSE) in dB; +infinity when the images are
/// identical (MSE = 0).
double psnr(const GrayImage& reference, const GrayImage& test, double max_value = 255.0);

/// Per-window statistics used by ssim: means, population variances and
/// covariance of the window anchored at (row, col).
struct WindowStats {
  double mean_a = 0.0;
  double mean_b = 0.0;
  double var_a = 0.0;
  double var_b = 0.0;
  double covar = 0.0;
};
WindowStats ssim_window_stats(const GrayImage& a, const GrayImage& b,
                              int window, int row, int col);

/// Mean structural similarity over all window positions.
double ssim(const GrayImage& a, const GrayImage& b, const SsimConfig& cfg = {});

struct SparsitySummary {
  double mean_selected = 0.0;
  double fraction_of_dim = 0.0;
};

/// Mean selected atoms per patch and its ratio to the dictionary dimension.
SparsitySummary sparsity_summary(const DenoiseStats& stats, int atom_dim);

}  // namespace momentcs

#endif
