#include "momentcs/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

#include "momentcs/parallel.hpp"

namespace momentcs {

namespace {

// {0, stride, 2*stride, ...} capped at dim - patch, plus the flush anchor
// itself when the grid stops short of the border.
std::vector<int> anchor_positions(int dim, int patch, int stride) {
  std::vector<int> anchors;
  const int last = dim - patch;
  for (int a = 0; a <= last; a += stride) anchors.push_back(a);
  if (anchors.back() != last) anchors.push_back(last);
  return anchors;
}

void validate_patch_grid(const GrayImage& img, int patch_size, int stride) {
  if (patch_size < 1) throw std::invalid_argument("patch_size must be >= 1");
  if (stride < 1) throw std::invalid_argument("stride must be >= 1");
  if (patch_size > img.width || patch_size > img.height)
    throw std::invalid_argument("patch does not fit inside the image");
}

}  // namespace

std::vector<Patch> extract_patches(const GrayImage& img, int patch_size, int stride) {
  validate_patch_grid(img, patch_size, stride);
  const std::vector<int> row_anchors = anchor_positions(img.height, patch_size, stride);
  const std::vector<int> col_anchors = anchor_positions(img.width, patch_size, stride);

  std::vector<Patch> patches;
  patches.reserve(row_anchors.size() * col_anchors.size());
  for (int r : row_anchors) {
    for (int c : col_anchors) {
      Patch p;
      p.row = r;
      p.col = c;
      p.values.resize(patch_size * patch_size);
      for (int i = 0; i < patch_size; ++i)
        for (int j = 0; j < patch_size; ++j)
          p.values(i * patch_size + j) = img.at(r + i, c + j);
      patches.push_back(std::move(p));
    }
  }
  return patches;
}

std::pair<Eigen::VectorXd, double> center_patch(const Eigen::VectorXd& patch) {
  if (patch.size() == 0) throw std::invalid_argument("center_patch: empty patch");
  const double mean = patch.mean();
  return {patch.array() - mean, mean};
}

GrayImage aggregate_patches(const std::vector<Patch>& estimates, int width, int height) {
  GrayImage out(width, height, 0.0);
  std::vector<long> count(static_cast<size_t>(width) * height, 0);
  for (const Patch& p : estimates) {
    const int s = static_cast<int>(std::lround(std::sqrt(static_cast<double>(p.values.size()))));
    if (static_cast<long>(s) * s != p.values.size())
      throw std::invalid_argument("aggregate_patches: patch vector is not square");
    if (p.row < 0 || p.col < 0 || p.row + s > height || p.col + s > width)
      throw std::invalid_argument("aggregate_patches: patch out of bounds");
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        out.at(p.row + i, p.col + j) += p.values(i * s + j);
        ++count[static_cast<size_t>(p.row + i) * width + (p.col + j)];
      }
  }
  for (long i = 0; i < out.pixel_count(); ++i) {
    if (count[static_cast<size_t>(i)] > 0)
      out.pixels[static_cast<size_t>(i)] /= static_cast<double>(count[static_cast<size_t>(i)]);
    out.pixels[static_cast<size_t>(i)] = std::clamp(out.pixels[static_cast<size_t>(i)], 0.0, 255.0);
  }
  return out;
}

Dictionary pipeline_dictionary(const PipelineConfig& cfg) {
  return build_dictionary(BasisKind{cfg.basis, cfg.p1}, cfg.patch_size, cfg.p1, cfg.p2);
}

std::pair<GrayImage, DenoiseStats> denoise_image(const GrayImage& noisy,
                                                 const PipelineConfig& cfg,
                                                 double sigma) {
  return denoise_image(noisy, pipeline_dictionary(cfg), cfg, sigma);
}

std::pair<GrayImage, DenoiseStats> denoise_image(const GrayImage& noisy,
                                                 const Dictionary& dict,
                                                 const PipelineConfig& cfg,
                                                 double sigma) {
  if (!(sigma >= 0.0)) throw std::invalid_argument("denoise_image: sigma must be >= 0");
  if (!(cfg.stop_gain > 0.0)) throw std::invalid_argument("denoise_image: stop_gain must be > 0");
  if (dict.patch_size != cfg.patch_size)
    throw std::invalid_argument("denoise_image: dictionary patch size does not match config");

  const auto start = std::chrono::steady_clock::now();
  const GrayImage img = cfg.resize ? resize_bilinear(noisy, cfg.resize_width, cfg.resize_height)
                                   : noisy;

  const int d = dict.atom_dim();
  StoppingRule rule;
  rule.residual_threshold = cfg.stop_gain * sigma * std::sqrt(static_cast<double>(d));
  // Small patch sizes have fewer selectable atoms than the default cap.
  rule.max_atoms = std::min(cfg.max_atoms, dict.atom_count() - dict.excluded_count());

  std::vector<Patch> patches = extract_patches(img, cfg.patch_size, cfg.stride);
  const long n = static_cast<long>(patches.size());
  std::vector<Patch> estimates(patches.size());
  std::vector<int> selected(patches.size());
  std::vector<double> residual(patches.size());

  // Every patch is independent; results land in per-index slots so the
  // output does not depend on the worker count.
  parallel_for(n, [&](long begin, long end) {
    for (long i = begin; i < end; ++i) {
      const Patch& p = patches[static_cast<size_t>(i)];
      auto [centered, mean] = center_patch(p.values);
      const SparseCode code = omp_encode(dict, centered, rule);
      Patch est;
      est.row = p.row;
      est.col = p.col;
      est.values = reconstruct(dict, code).array() + mean;
      estimates[static_cast<size_t>(i)] = std::move(est);
      selected[static_cast<size_t>(i)] = code.iterations();
      residual[static_cast<size_t>(i)] = code.residual_norm;
    }
  });

  GrayImage out = aggregate_patches(estimates, img.width, img.height);

  DenoiseStats stats;
  stats.patches_total = n;
  for (long i = 0; i < n; ++i) {
    stats.mean_selected += selected[static_cast<size_t>(i)];
    stats.mean_residual += residual[static_cast<size_t>(i)];
    ++stats.selected_histogram[selected[static_cast<size_t>(i)]];
  }
  if (n > 0) {
    stats.mean_selected /= static_cast<double>(n);
    stats.mean_residual /= static_cast<double>(n);
  }
  stats.wall_time_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return {std::move(out), std::move(stats)};
}

}  // namespace momentcs
