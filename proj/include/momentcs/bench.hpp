#ifndef MOMENTCS_BENCH_HPP
#define MOMENTCS_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "momentcs/pipeline.hpp"

namespace momentcs {

/// One benchmark cell result.
struct BenchRow {
  std::string image_name;
  BasisFamily basis = BasisFamily::tchebichef;
  double noise_ratio = 0.0;
  std::uint64_t seed = 0;
  double psnr_db = 0.0;
  double ssim_value = 0.0;
  double mean_selected = 0.0;
  double wall_time_ms = 0.0;
};

struct RunConfig {
  PipelineConfig pipeline;
  std::vector<std::string> inputs;
  std::string out_dir = "bench_out";
  std::vector<BasisFamily> bases = {BasisFamily::tchebichef,
                                    BasisFamily::krawtchouk, BasisFamily::dct};
  std::vector<double> ratios = {0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<std::uint64_t> seeds = {1};
  bool clamp_noise = true;
  bool timing_column = true;  // false drops wall_time_ms from results.csv
  bool write_images = true;   // emit noisy and denoised PGMs per cell
};

/// Runs the full grid. For each (image, ratio, seed) one noisy image is
/// generated and shared by every basis, so bases are compared on identical
/// input. Writes results.csv plus per-image <name>_selected.dat and
/// <name>_ssim.dat plot data (ratio ascending, one column per basis,
/// averaged over seeds) into out_dir. Rows come back in emission order:
/// image, then ratio ascending, then seed, then basis.
std::vector<BenchRow> run_benchmark(const RunConfig& cfg);

}  // namespace momentcs

#endif
