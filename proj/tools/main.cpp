// momentcs command line: dictionary inspection, noise injection, single-image
// denoising, image quality metrics, and the full benchmark grid.

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momentcs/bench.hpp"
#include "momentcs/config.hpp"
#include "momentcs/dictionary.hpp"
#include "momentcs/image_io.hpp"
#include "momentcs/metrics.hpp"
#include "momentcs/noise.hpp"
#include "momentcs/pipeline.hpp"
#include "momentcs/synthetic.hpp"

namespace {

using namespace momentcs;

struct Opts {
  std::string basis;  // comma-separated list; default depends on subcommand
  int patch_size = 12;
  int stride = 1;
  std::string ratio;  // comma-separated list of reals in [0, 1]
  std::string seed;   // comma-separated list of unsigned integers
  double p1 = 0.5;
  double p2 = 0.5;
  double stop_gain = 1.15;
  int max_atoms = 36;
  bool no_resize = false;
  bool no_clamp = false;
  bool no_timing = false;
  std::string out;
  std::string config_path;

  // subcommand-local extras
  int gap = 1;
  std::string dump_basis;
  std::string dump_atoms;
  std::string ref;
  std::string input;
  std::vector<std::string> inputs;
  std::string metrics_a, metrics_b;
};

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string current;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) items.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) items.push_back(std::move(current));
  return items;
}

double parse_double(const std::string& s, const std::string& what) {
  size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (...) {
    throw std::invalid_argument("bad value '" + s + "' for " + what);
  }
  if (used != s.size()) throw std::invalid_argument("bad value '" + s + "' for " + what);
  return v;
}

long long parse_integer(const std::string& s, const std::string& what) {
  size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(s, &used);
  } catch (...) {
    throw std::invalid_argument("bad value '" + s + "' for " + what);
  }
  if (used != s.size()) throw std::invalid_argument("bad value '" + s + "' for " + what);
  return v;
}

bool parse_bool(const std::string& s, const std::string& what) {
  if (s == "true" || s == "1" || s == "yes" || s == "on") return true;
  if (s == "false" || s == "0" || s == "no" || s == "off") return false;
  throw std::invalid_argument("bad boolean '" + s + "' for " + what);
}

std::vector<double> ratio_list(const std::string& text, const std::vector<double>& fallback) {
  if (text.empty()) return fallback;
  std::vector<double> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_double(item, "--ratio"));
  return out;
}

std::vector<std::uint64_t> seed_list(const std::string& text) {
  if (text.empty()) return {1};
  std::vector<std::uint64_t> out;
  for (const std::string& item : split_list(text)) {
    const long long v = parse_integer(item, "--seed");
    if (v < 0) throw std::invalid_argument("--seed must be non-negative");
    out.push_back(static_cast<std::uint64_t>(v));
  }
  return out;
}

std::vector<BasisFamily> basis_list(const std::string& text,
                                    const std::vector<BasisFamily>& fallback) {
  if (text.empty()) return fallback;
  std::vector<BasisFamily> out;
  for (const std::string& item : split_list(text)) out.push_back(parse_basis(item));
  return out;
}

double single_ratio(const std::string& text, double fallback) {
  const std::vector<double> r = ratio_list(text, {fallback});
  if (r.size() != 1) throw std::invalid_argument("this subcommand takes a single --ratio");
  return r.front();
}

std::uint64_t single_seed(const std::string& text) {
  const std::vector<std::uint64_t> s = seed_list(text);
  if (s.size() != 1) throw std::invalid_argument("this subcommand takes a single --seed");
  return s.front();
}

BasisFamily single_basis(const std::string& text) {
  const std::vector<BasisFamily> b = basis_list(text, {BasisFamily::tchebichef});
  if (b.size() != 1) throw std::invalid_argument("this subcommand takes a single --basis");
  return b.front();
}

PipelineConfig pipeline_from(const Opts& o, BasisFamily basis) {
  PipelineConfig cfg;
  cfg.patch_size = o.patch_size;
  cfg.stride = o.stride;
  cfg.resize = !o.no_resize;
  cfg.stop_gain = o.stop_gain;
  cfg.max_atoms = o.max_atoms;
  cfg.basis = basis;
  cfg.p1 = o.p1;
  cfg.p2 = o.p2;
  return cfg;
}

void require_out(const Opts& o) {
  if (o.out.empty()) throw std::invalid_argument("--out is required for this subcommand");
}

int cmd_dict(const Opts& o) {
  const BasisFamily family = single_basis(o.basis);
  const BasisKind kind = family == BasisFamily::krawtchouk ? BasisKind::krawtchouk(o.p1)
                                                           : BasisKind{family, o.p1};
  const Dictionary dict = build_dictionary(kind, o.patch_size, o.p1, o.p2);
  std::printf("basis %s, patch %d, atoms %d x %d\n", basis_name(family), o.patch_size,
              dict.atom_dim(), dict.atom_count());
  std::printf("coherence %.6f\n", mutual_coherence(dict));
  if (!o.out.empty()) {
    save_image(render_atlas(dict, o.gap), o.out);
    std::printf("atlas written to %s\n", o.out.c_str());
  }
  if (!o.dump_basis.empty()) {
    std::ofstream csv(o.dump_basis, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open '" + o.dump_basis + "' for writing");
    write_basis_csv(make_basis(dict.row_kind, o.patch_size), csv);
  }
  if (!o.dump_atoms.empty()) {
    std::ofstream csv(o.dump_atoms, std::ios::binary);
    if (!csv) throw std::runtime_error("cannot open '" + o.dump_atoms + "' for writing");
    write_dictionary_csv(dict, csv);
  }
  return 0;
}

int cmd_noise(const Opts& o) {
  require_out(o);
  const double ratio = single_ratio(o.ratio, 0.1);
  GrayImage img = load_image(o.input);
  if (!o.no_resize) img = resize_bilinear(img, 144, 144);
  const NoiseSpec spec(ratio, single_seed(o.seed), !o.no_clamp);
  save_image(add_gaussian_noise(img, spec), o.out);
  std::printf("noisy image written to %s (ratio %g, sigma %.2f, seed %llu)\n",
              o.out.c_str(), ratio, spec.sigma(),
              static_cast<unsigned long long>(spec.seed));
  return 0;
}

int cmd_denoise(const Opts& o) {
  require_out(o);
  const double ratio = single_ratio(o.ratio, 0.1);
  const GrayImage noisy = load_image(o.input);
  const PipelineConfig cfg = pipeline_from(o, single_basis(o.basis));
  auto [denoised, stats] = denoise_image(noisy, cfg, ratio * 255.0);
  save_image(denoised, o.out);
  std::printf("denoised image written to %s\n", o.out.c_str());
  std::printf("patches %ld, mean selected %.3f, mean residual %.3f, %.1f ms\n",
              stats.patches_total, stats.mean_selected, stats.mean_residual,
              stats.wall_time_ms);
  if (!o.ref.empty()) {
    GrayImage ref = load_image(o.ref);
    if (cfg.resize) ref = resize_bilinear(ref, cfg.resize_width, cfg.resize_height);
    std::printf("PSNR: %.4f\nSSIM: %.4f\n", psnr(ref, denoised), ssim(ref, denoised));
  }
  return 0;
}

int cmd_metrics(const Opts& o) {
  const GrayImage a = load_image(o.metrics_a);
  const GrayImage b = load_image(o.metrics_b);
  std::printf("PSNR: %.4f\n", psnr(a, b));
  std::printf("SSIM: %.4f\n", ssim(a, b));
  return 0;
}

int cmd_bench(const Opts& o) {
  RunConfig rc;
  rc.pipeline = pipeline_from(o, BasisFamily::tchebichef);
  rc.inputs = o.inputs;
  rc.out_dir = o.out.empty() ? "bench_out" : o.out;
  rc.bases = basis_list(o.basis, rc.bases);
  rc.ratios = ratio_list(o.ratio, rc.ratios);
  rc.seeds = seed_list(o.seed);
  rc.clamp_noise = !o.no_clamp;
  rc.timing_column = !o.no_timing;
  const std::vector<BenchRow> rows = run_benchmark(rc);
  std::printf("%zu rows written to %s/results.csv\n", rows.size(), rc.out_dir.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment-transform sparse-coding image denoiser"};
  app.require_subcommand(1);
  app.footer("MOMENT_CS_THREADS caps the worker count for patch encoding (0 or unset = all cores).");
  Opts o;

  std::map<std::string, CLI::Option*> by_key;
  std::map<std::string, std::function<void(const std::string&)>> appliers;

  auto add_str = [&](const char* key, std::string& var, const char* desc) {
    by_key[key] = app.add_option(std::string("--") + key, var, desc);
    appliers[key] = [&var](const std::string& v) { var = v; };
  };
  auto add_int = [&](const char* key, int& var, const char* desc) {
    by_key[key] = app.add_option(std::string("--") + key, var, desc);
    appliers[key] = [&var, key = std::string(key)](const std::string& v) {
      var = static_cast<int>(parse_integer(v, key));
    };
  };
  auto add_dbl = [&](const char* key, double& var, const char* desc) {
    by_key[key] = app.add_option(std::string("--") + key, var, desc);
    appliers[key] = [&var, key = std::string(key)](const std::string& v) {
      var = parse_double(v, key);
    };
  };
  auto add_flag = [&](const char* key, bool& var, const char* desc) {
    by_key[key] = app.add_flag(std::string("--") + key, var, desc);
    appliers[key] = [&var, key = std::string(key)](const std::string& v) {
      var = parse_bool(v, key);
    };
  };

  add_str("basis", o.basis, "basis family: tchebichef, krawtchouk or dct (comma list for bench)");
  add_int("patch-size", o.patch_size, "square patch side (default 12)");
  add_int("stride", o.stride, "patch anchor stride (default 1)");
  add_str("ratio", o.ratio, "noise ratio sigma/255 in [0,1] (comma list for bench; default 0.1)");
  add_str("seed", o.seed, "noise generator seed (comma list for bench; default 1)");
  add_dbl("p1", o.p1, "Krawtchouk locality parameter, patch-row direction (default 0.5)");
  add_dbl("p2", o.p2, "Krawtchouk locality parameter, patch-column direction (default 0.5)");
  add_dbl("stop-gain", o.stop_gain, "stopping threshold gain g in g*sigma*sqrt(d) (default 1.15)");
  add_int("max-atoms", o.max_atoms, "cap on selected atoms per patch (default 36)");
  add_flag("no-resize", o.no_resize, "process images at native size instead of 144x144");
  add_flag("no-clamp", o.no_clamp, "do not clamp noisy pixels to [0,255]");
  add_flag("no-timing", o.no_timing, "omit the wall_time_ms column from results.csv");
  add_str("out", o.out, "output file (dict atlas, noise, denoise) or directory (bench)");
  app.add_option("--config", o.config_path,
                 "key = value file overriding defaults (flags beat the file)");

  CLI::App* dict = app.add_subcommand("dict", "build a dictionary, report coherence, render the atom atlas");
  dict->add_option("--gap", o.gap, "pixels between atlas tiles (default 1)");
  dict->add_option("--dump-basis", o.dump_basis, "write the 1D basis matrix as CSV");
  dict->add_option("--dump-atoms", o.dump_atoms, "write dictionary atoms as CSV, one atom per line");

  CLI::App* noise = app.add_subcommand("noise", "add seeded Gaussian noise to an image");
  noise->add_option("input", o.input, "source image (PGM/PNG)")->required();

  CLI::App* denoise = app.add_subcommand("denoise", "denoise one image end to end");
  denoise->add_option("input", o.input, "noisy image (PGM/PNG)")->required();
  denoise->add_option("--ref", o.ref, "clean reference; prints PSNR/SSIM when given");

  CLI::App* metrics = app.add_subcommand("metrics", "print PSNR and SSIM of two images");
  metrics->add_option("a", o.metrics_a, "first image")->required();
  metrics->add_option("b", o.metrics_b, "second image")->required();

  CLI::App* bench = app.add_subcommand("bench", "run the image x ratio x basis benchmark grid");
  bench->add_option("inputs", o.inputs, "clean reference images")->required()->expected(-1);

  for (CLI::App* sub : {dict, noise, denoise, metrics, bench}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n"
              << "usage: momentcs [dict|noise|denoise|metrics|bench] [options], --help for details\n";
    return 2;
  }

  try {
    if (!o.config_path.empty()) {
      for (const ConfigEntry& entry : parse_config_file(o.config_path)) {
        const auto applier = appliers.find(entry.key);
        if (applier == appliers.end())
          throw std::invalid_argument("unknown config key '" + entry.key + "' at line " +
                                      std::to_string(entry.line));
        if (by_key[entry.key]->count() == 0) applier->second(entry.value);
      }
    }

    if (dict->parsed()) return cmd_dict(o);
    if (noise->parsed()) return cmd_noise(o);
    if (denoise->parsed()) return cmd_denoise(o);
    if (metrics->parsed()) return cmd_metrics(o);
    if (bench->parsed()) return cmd_bench(o);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
