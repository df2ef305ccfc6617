#include "momentcs/bench.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "momentcs/image_io.hpp"
#include "momentcs/metrics.hpp"
#include "momentcs/noise.hpp"

namespace momentcs {

namespace {

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), spec, v);
  return buf;
}

std::string ratio_label(double ratio) { return fmt("%g", ratio); }

void validate(const RunConfig& cfg) {
  if (cfg.inputs.empty()) throw std::invalid_argument("run_benchmark: no input images");
  if (cfg.bases.empty()) throw std::invalid_argument("run_benchmark: no bases");
  if (cfg.ratios.empty()) throw std::invalid_argument("run_benchmark: no ratios");
  if (cfg.seeds.empty()) throw std::invalid_argument("run_benchmark: no seeds");
  for (double ratio : cfg.ratios)
    if (!(ratio >= 0.0 && ratio <= 1.0))
      throw std::invalid_argument("run_benchmark: ratios must lie in [0, 1]");
}

[[noreturn]] void fail_cell(const std::string& image, const char* basis, double ratio,
                            const std::exception& err) {
  std::ostringstream os;
  os << "bench cell failed (image=" << image << ", basis=" << basis
     << ", ratio=" << ratio_label(ratio) << "): " << err.what();
  throw std::runtime_error(os.str());
}

}  // namespace

std::vector<BenchRow> run_benchmark(const RunConfig& cfg) {
  validate(cfg);
  namespace fs = std::filesystem;
  fs::create_directories(cfg.out_dir);

  std::vector<double> ratios = cfg.ratios;
  std::sort(ratios.begin(), ratios.end());

  // One dictionary per basis, shared across every cell.
  std::map<BasisFamily, Dictionary> dictionaries;
  for (BasisFamily basis : cfg.bases) {
    PipelineConfig pipe = cfg.pipeline;
    pipe.basis = basis;
    dictionaries.emplace(basis, pipeline_dictionary(pipe));
  }

  std::vector<BenchRow> rows;
  // plot_values[image][metric 0=selected,1=ssim][ratio index][basis index]
  std::vector<std::vector<std::vector<std::vector<double>>>> sums;

  std::vector<std::string> names;
  std::vector<GrayImage> references;
  for (const std::string& input : cfg.inputs) {
    GrayImage clean = load_image(input);
    if (cfg.pipeline.resize)
      clean = resize_bilinear(clean, cfg.pipeline.resize_width, cfg.pipeline.resize_height);
    references.push_back(std::move(clean));
    names.push_back(fs::path(input).stem().string());
  }

  sums.assign(names.size(),
              std::vector<std::vector<std::vector<double>>>(
                  2, std::vector<std::vector<double>>(
                         ratios.size(), std::vector<double>(cfg.bases.size(), 0.0))));

  PipelineConfig cell_pipe = cfg.pipeline;
  cell_pipe.resize = false;  // references are already at working size

  for (size_t img_i = 0; img_i < names.size(); ++img_i) {
    const GrayImage& clean = references[img_i];
    for (size_t ratio_i = 0; ratio_i < ratios.size(); ++ratio_i) {
      const double ratio = ratios[ratio_i];
      for (std::uint64_t seed : cfg.seeds) {
        const NoiseSpec spec(ratio, seed, cfg.clamp_noise);
        const GrayImage noisy = add_gaussian_noise(clean, spec);
        const std::string cell_stem =
            names[img_i] + "_r" + ratio_label(ratio) + "_s" + std::to_string(seed);
        if (cfg.write_images)
          save_image(noisy, (fs::path(cfg.out_dir) / (cell_stem + "_noisy.pgm")).string());

        for (size_t basis_i = 0; basis_i < cfg.bases.size(); ++basis_i) {
          const BasisFamily basis = cfg.bases[basis_i];
          cell_pipe.basis = basis;
          BenchRow row;
          row.image_name = names[img_i];
          row.basis = basis;
          row.noise_ratio = ratio;
          row.seed = seed;
          try {
            auto [denoised, stats] =
                denoise_image(noisy, dictionaries.at(basis), cell_pipe, spec.sigma());
            row.psnr_db = psnr(clean, denoised);
            row.ssim_value = ssim(clean, denoised);
            row.mean_selected = stats.mean_selected;
            row.wall_time_ms = stats.wall_time_ms;
            if (cfg.write_images)
              save_image(denoised, (fs::path(cfg.out_dir) /
                                    (cell_stem + "_" + basis_name(basis) + ".pgm"))
                                       .string());
          } catch (const std::exception& err) {
            fail_cell(names[img_i], basis_name(basis), ratio, err);
          }
          sums[img_i][0][ratio_i][basis_i] += row.mean_selected;
          sums[img_i][1][ratio_i][basis_i] += row.ssim_value;
          rows.push_back(std::move(row));
        }
      }
    }
  }

  // results.csv in emission order.
  {
    std::ofstream csv(fs::path(cfg.out_dir) / "results.csv", std::ios::binary);
    csv << "image,basis,noise_ratio,seed,psnr_db,ssim,mean_selected";
    if (cfg.timing_column) csv << ",wall_time_ms";
    csv << "\n";
    for (const BenchRow& row : rows) {
      csv << row.image_name << ',' << basis_name(row.basis) << ','
          << ratio_label(row.noise_ratio) << ',' << row.seed << ','
          << fmt("%.6f", row.psnr_db) << ',' << fmt("%.6f", row.ssim_value) << ','
          << fmt("%.6f", row.mean_selected);
      if (cfg.timing_column) csv << ',' << fmt("%.3f", row.wall_time_ms);
      csv << "\n";
    }
    if (!csv) throw IoError(IoErrorKind::write_failure,
                            (fs::path(cfg.out_dir) / "results.csv").string(),
                            "short write");
  }

  // Plot data mirroring the two panels: selected coefficients and SSIM
  // against the noise ratio, one column per basis, averaged over seeds.
  const double seed_count = static_cast<double>(cfg.seeds.size());
  for (size_t img_i = 0; img_i < names.size(); ++img_i) {
    const char* metric_file[2] = {"_selected.dat", "_ssim.dat"};
    for (int metric = 0; metric < 2; ++metric) {
      std::ofstream dat(fs::path(cfg.out_dir) / (names[img_i] + metric_file[metric]),
                        std::ios::binary);
      dat << "# ratio";
      for (BasisFamily basis : cfg.bases) dat << ' ' << basis_name(basis);
      dat << "\n";
      for (size_t ratio_i = 0; ratio_i < ratios.size(); ++ratio_i) {
        dat << ratio_label(ratios[ratio_i]);
        for (size_t basis_i = 0; basis_i < cfg.bases.size(); ++basis_i)
          dat << ' ' << fmt("%.6f", sums[img_i][metric][ratio_i][basis_i] / seed_count);
        dat << "\n";
      }
    }
  }

  return rows;
}

}  // namespace momentcs
