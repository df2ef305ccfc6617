#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "momentcs/bench.hpp"
#include "momentcs/image_io.hpp"
#include "momentcs/noise.hpp"
#include "momentcs/synthetic.hpp"

using namespace momentcs;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("momentcs_bench_" + tag + "_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  return std::string((std::istreambuf_iterator<char>(in)), {});
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  while (std::getline(is, line)) lines.push_back(line);
  return lines;
}

RunConfig small_config(const TempDir& dir, const std::string& out) {
  RunConfig cfg;
  cfg.pipeline.resize = false;
  cfg.pipeline.stride = 8;
  cfg.inputs = {dir.file("blobs.pgm"), dir.file("scene.pgm")};
  cfg.ratios = {0.3, 0.1};  // deliberately unsorted
  cfg.seeds = {9};
  cfg.out_dir = dir.file(out);
  cfg.timing_column = false;
  return cfg;
}

void write_inputs(const TempDir& dir) {
  save_image(synthetic_blobs(64), dir.file("blobs.pgm"));
  save_image(synthetic_scene(64), dir.file("scene.pgm"));
}

}  // namespace

TEST_CASE("benchmark grid shape, csv layout, and plot files") {
  TempDir dir("grid");
  write_inputs(dir);
  const RunConfig cfg = small_config(dir, "out");
  const std::vector<BenchRow> rows = run_benchmark(cfg);

  // 2 images x 2 ratios x 3 bases x 1 seed.
  CHECK(rows.size() == 12);

  const auto csv = lines_of(slurp(dir.file("out/results.csv")));
  REQUIRE(csv.size() == 13);
  CHECK(csv[0] == "image,basis,noise_ratio,seed,psnr_db,ssim,mean_selected");
  for (size_t i = 1; i < csv.size(); ++i)
    CHECK(std::count(csv[i].begin(), csv[i].end(), ',') == 6);

  // Ratios ascend within each image block; first cell is blobs at 0.1.
  CHECK(csv[1].rfind("blobs,tchebichef,0.1,9,", 0) == 0);
  CHECK(csv[4].rfind("blobs,tchebichef,0.3,9,", 0) == 0);
  CHECK(csv[7].rfind("scene,tchebichef,0.1,9,", 0) == 0);

  for (const char* name : {"blobs", "scene"}) {
    const auto dat = lines_of(slurp(dir.file(std::string("out/") + name + "_selected.dat")));
    REQUIRE(dat.size() == 3);
    CHECK(dat[0] == "# ratio tchebichef krawtchouk dct");
    CHECK(dat[1].rfind("0.1 ", 0) == 0);
    CHECK(dat[2].rfind("0.3 ", 0) == 0);
    const auto ssim_dat = lines_of(slurp(dir.file(std::string("out/") + name + "_ssim.dat")));
    CHECK(ssim_dat.size() == 3);
  }

  // Denoised and noisy images exist per cell.
  CHECK(fs::exists(dir.file("out/blobs_r0.1_s9_noisy.pgm")));
  CHECK(fs::exists(dir.file("out/blobs_r0.1_s9_tchebichef.pgm")));
  CHECK(fs::exists(dir.file("out/scene_r0.3_s9_dct.pgm")));
}

TEST_CASE("reruns are byte-identical with timing suppressed") {
  TempDir dir("rerun");
  write_inputs(dir);
  run_benchmark(small_config(dir, "a"));
  run_benchmark(small_config(dir, "b"));
  CHECK(slurp(dir.file("a/results.csv")) == slurp(dir.file("b/results.csv")));
  CHECK(slurp(dir.file("a/blobs_r0.1_s9_dct.pgm")) == slurp(dir.file("b/blobs_r0.1_s9_dct.pgm")));
  CHECK(slurp(dir.file("a/scene_r0.3_s9_krawtchouk.pgm")) ==
        slurp(dir.file("b/scene_r0.3_s9_krawtchouk.pgm")));
  CHECK(slurp(dir.file("a/blobs_selected.dat")) == slurp(dir.file("b/blobs_selected.dat")));
}

TEST_CASE("the emitted noisy image is the seeded noise field, shared per cell") {
  TempDir dir("noisy");
  write_inputs(dir);
  const RunConfig cfg = small_config(dir, "out");
  run_benchmark(cfg);
  const GrayImage clean = load_image(dir.file("blobs.pgm"));
  GrayImage expected = add_gaussian_noise(clean, NoiseSpec(0.1, 9, true));
  TempDir scratch("scratch");
  save_image(expected, scratch.file("expected.pgm"));
  CHECK(slurp(scratch.file("expected.pgm")) == slurp(dir.file("out/blobs_r0.1_s9_noisy.pgm")));
}

TEST_CASE("timing column appears when enabled") {
  TempDir dir("timing");
  write_inputs(dir);
  RunConfig cfg = small_config(dir, "out");
  cfg.inputs = {dir.file("blobs.pgm")};
  cfg.ratios = {0.2};
  cfg.timing_column = true;
  run_benchmark(cfg);
  const auto csv = lines_of(slurp(dir.file("out/results.csv")));
  CHECK(csv[0] == "image,basis,noise_ratio,seed,psnr_db,ssim,mean_selected,wall_time_ms");
}

TEST_CASE("empty grids are rejected and failing cells carry context") {
  RunConfig cfg;
  cfg.inputs = {};
  CHECK_THROWS_AS(run_benchmark(cfg), std::invalid_argument);

  TempDir dir("ctx");
  write_inputs(dir);
  RunConfig bad = small_config(dir, "out");
  bad.pipeline.patch_size = 80;  // larger than the 64x64 inputs
  try {
    run_benchmark(bad);
    FAIL("expected failure");
  } catch (const std::runtime_error& e) {
    const std::string what = e.what();
    CHECK(what.find("blobs") != std::string::npos);
    CHECK(what.find("tchebichef") != std::string::npos);
    CHECK(what.find("0.1") != std::string::npos);
  }
}

TEST_CASE("multiple seeds multiply the row count and average into plot data") {
  TempDir dir("seeds");
  write_inputs(dir);
  RunConfig cfg = small_config(dir, "out");
  cfg.inputs = {dir.file("blobs.pgm")};
  cfg.ratios = {0.2};
  cfg.seeds = {1, 2, 3};
  cfg.write_images = false;
  const auto rows = run_benchmark(cfg);
  CHECK(rows.size() == 9);
  CHECK(!fs::exists(dir.file("out/blobs_r0.2_s1_noisy.pgm")));
  const auto dat = lines_of(slurp(dir.file("out/blobs_selected.dat")));
  REQUIRE(dat.size() == 2);

  // The plotted value is the mean of the three per-seed rows.
  double sum = 0.0;
  for (const BenchRow& row : rows)
    if (row.basis == BasisFamily::tchebichef) sum += row.mean_selected;
  std::istringstream first(dat[1]);
  double ratio = 0.0, tcheb = 0.0;
  first >> ratio >> tcheb;
  CHECK(ratio == 0.2);
  CHECK(tcheb == doctest::Approx(sum / 3.0).epsilon(1e-6));
}
