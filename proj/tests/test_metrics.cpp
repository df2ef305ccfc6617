#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "momentcs/metrics.hpp"
#include "oracles.hpp"

using namespace momentcs;

namespace {

GrayImage constant_image(int w, int h, double v) { return GrayImage(w, h, v); }

GrayImage checkerboard(int size) {
  GrayImage img(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) img.at(r, c) = ((r / 4 + c / 4) % 2 == 0) ? 0.0 : 255.0;
  return img;
}

GrayImage random_image(int size, oracles::TestRng& rng) {
  GrayImage img(size, size);
  for (double& v : img.pixels) v = rng.uniform(0.0, 255.0);
  return img;
}

}  // namespace

TEST_CASE("psnr of identical images is +infinity") {
  const GrayImage a = constant_image(16, 16, 40.0);
  CHECK(std::isinf(psnr(a, a)));
  CHECK(psnr(a, a) > 0.0);
}

TEST_CASE("psnr closed forms: unit error and full-range error") {
  GrayImage a = constant_image(16, 16, 100.0);
  GrayImage b = constant_image(16, 16, 101.0);
  CHECK(psnr(a, b) == doctest::Approx(20.0 * std::log10(255.0)).epsilon(1e-9));

  GrayImage zero = constant_image(16, 16, 0.0);
  GrayImage full = constant_image(16, 16, 255.0);
  CHECK(psnr(zero, full) == doctest::Approx(0.0).scale(1.0).epsilon(1e-9));
}

TEST_CASE("psnr is symmetric") {
  oracles::TestRng rng(3);
  const GrayImage a = random_image(24, rng);
  const GrayImage b = random_image(24, rng);
  CHECK(psnr(a, b) == psnr(b, a));
}

TEST_CASE("scaling an error field strictly decreases psnr") {
  oracles::TestRng rng(5);
  const GrayImage a = random_image(24, rng);
  double prev = std::numeric_limits<double>::infinity();
  for (double alpha : {1.0, 2.0, 3.5}) {
    GrayImage b = a;
    oracles::TestRng noise_rng(17);
    for (double& v : b.pixels) v += alpha * noise_rng.uniform(-1.0, 1.0);
    const double value = psnr(a, b);
    CHECK(value < prev);
    prev = value;
  }
}

TEST_CASE("psnr rejects dimension mismatch") {
  CHECK_THROWS_AS(psnr(constant_image(4, 4, 0), constant_image(4, 5, 0)),
                  std::invalid_argument);
}

TEST_CASE("ssim of an image with itself is 1") {
  oracles::TestRng rng(9);
  const GrayImage a = random_image(24, rng);
  CHECK(ssim(a, a) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("ssim of constant 100 vs constant 150") {
  const GrayImage a = constant_image(16, 16, 100.0);
  const GrayImage b = constant_image(16, 16, 150.0);
  // Zero variances: the structure factor is exactly c2/c2 = 1 and the
  // luminance factor is (2*100*150 + c1)/(100^2 + 150^2 + c1).
  const double c1 = (0.01 * 255.0) * (0.01 * 255.0);
  const double expected = (2.0 * 100.0 * 150.0 + c1) / (100.0 * 100.0 + 150.0 * 150.0 + c1);
  CHECK(expected == doctest::Approx(0.923093).epsilon(1e-6));
  CHECK(ssim(a, b) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("ssim of an image against its negative is negative") {
  const GrayImage a = checkerboard(32);
  GrayImage b = a;
  for (double& v : b.pixels) v = 255.0 - v;
  CHECK(ssim(a, b) < 0.0);
}

TEST_CASE("ssim stays within [-1, 1]") {
  oracles::TestRng rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const GrayImage a = random_image(16, rng);
    const GrayImage b = random_image(16, rng);
    const double v = ssim(a, b);
    CHECK(v <= 1.0);
    CHECK(v >= -1.0);
  }
}

TEST_CASE("window statistics are translation invariant") {
  oracles::TestRng rng(21);
  const GrayImage a = random_image(16, rng);
  const GrayImage b = random_image(16, rng);
  GrayImage a_shift = a;
  GrayImage b_shift = b;
  for (double& v : a_shift.pixels) v += 37.25;
  for (double& v : b_shift.pixels) v += 37.25;
  for (int r = 0; r <= 8; r += 4) {
    for (int c = 0; c <= 8; c += 4) {
      const WindowStats s0 = ssim_window_stats(a, b, 8, r, c);
      const WindowStats s1 = ssim_window_stats(a_shift, b_shift, 8, r, c);
      CHECK(s1.var_a == doctest::Approx(s0.var_a).epsilon(1e-9));
      CHECK(s1.var_b == doctest::Approx(s0.var_b).epsilon(1e-9));
      CHECK(s1.covar == doctest::Approx(s0.covar).epsilon(1e-9));
      CHECK(s1.mean_a == doctest::Approx(s0.mean_a + 37.25).epsilon(1e-12));
    }
  }
}

TEST_CASE("ssim rejects bad geometry") {
  CHECK_THROWS_AS(ssim(constant_image(8, 8, 0), constant_image(8, 9, 0)),
                  std::invalid_argument);
  CHECK_THROWS_AS(ssim(constant_image(4, 4, 0), constant_image(4, 4, 0)),
                  std::invalid_argument);  // default 8x8 window does not fit
  SsimConfig cfg;
  cfg.window = 4;
  CHECK(ssim(constant_image(4, 4, 0), constant_image(4, 4, 0), cfg) ==
        doctest::Approx(1.0));
}

TEST_CASE("sparsity summary arithmetic") {
  DenoiseStats stats;
  stats.mean_selected = 0.0;
  CHECK(sparsity_summary(stats, 144).mean_selected == 0.0);
  CHECK(sparsity_summary(stats, 144).fraction_of_dim == 0.0);

  stats.mean_selected = 36.0;
  const SparsitySummary s = sparsity_summary(stats, 144);
  CHECK(s.mean_selected == 36.0);
  CHECK(s.fraction_of_dim == doctest::Approx(0.25).epsilon(1e-15));

  // Histogram {10 x100, 20 x100} averages to 15.
  DenoiseStats mixed;
  mixed.selected_histogram[10] = 100;
  mixed.selected_histogram[20] = 100;
  double total = 0.0;
  long patches = 0;
  for (const auto& [atoms, count] : mixed.selected_histogram) {
    total += static_cast<double>(atoms) * count;
    patches += count;
  }
  mixed.mean_selected = total / patches;
  CHECK(sparsity_summary(mixed, 144).mean_selected == doctest::Approx(15.0));
}
