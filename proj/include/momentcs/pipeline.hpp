#ifndef MOMENTCS_PIPELINE_HPP
#define MOMENTCS_PIPELINE_HPP

#include <Eigen/Core>
#include <map>
#include <utility>
#include <vector>

#include "momentcs/dictionary.hpp"
#include "momentcs/image.hpp"
#include "momentcs/omp.hpp"

namespace momentcs {

struct PipelineConfig {
  int patch_size = 12;
  int stride = 1;
  bool resize = true;
  int resize_width = 144;
  int resize_height = 144;
  double stop_gain = 1.15;  // residual threshold = stop_gain * sigma * sqrt(d)
  int max_atoms = 36;
  BasisFamily basis = BasisFamily::tchebichef;
  double p1 = 0.5;
  double p2 = 0.5;
};

/// One square patch (or patch estimate) anchored at top-left (row, col),
/// vectorized row-major.
struct Patch {
  int row = 0;
  int col = 0;
  Eigen::VectorXd values;
};

struct DenoiseStats {
  long patches_total = 0;
  double mean_selected = 0.0;
  std::map<int, long> selected_histogram;  // atoms-per-patch -> patch count
  double mean_residual = 0.0;
  double wall_time_ms = 0.0;
};

/// Anchors run over {0, stride, 2*stride, ...} in each dimension, plus a
/// final anchor flush against the border when the grid does not already
/// reach it. Ordering is row-major over anchors.
std::vector<Patch> extract_patches(const GrayImage& img, int patch_size, int stride);

/// Returns (patch - mean, mean).
std::pair<Eigen::VectorXd, double> center_patch(const Eigen::VectorXd& patch);

/// Per-pixel average of all covering patch estimates, clamped to [0, 255].
GrayImage aggregate_patches(const std::vector<Patch>& estimates, int width, int height);

/// The dictionary denoise_image builds from a config.
Dictionary pipeline_dictionary(const PipelineConfig& cfg);

/// Full patch pipeline: optional resize, extract, mean-center, OMP-encode
/// at threshold stop_gain * sigma * sqrt(d), reconstruct, restore the mean,
/// aggregate. sigma is the known standard deviation of the injected noise.
/// Patches are coded in parallel (worker count capped by MOMENT_CS_THREADS)
/// with bit-identical results for any thread count.
std::pair<GrayImage, DenoiseStats> denoise_image(const GrayImage& noisy,
                                                 const PipelineConfig& cfg,
                                                 double sigma);

/// Same, reusing a prebuilt dictionary (must match cfg.patch_size).
std::pair<GrayImage, DenoiseStats> denoise_image(const GrayImage& noisy,
                                                 const Dictionary& dict,
                                                 const PipelineConfig& cfg,
                                                 double sigma);

}  // namespace momentcs

#endif
