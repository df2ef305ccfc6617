#include "momentcs/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace momentcs {

namespace {

void require_size(int size) {
  if (size < 1) throw std::invalid_argument("synthetic image size must be >= 1");
}

double clamp255(double v) { return std::clamp(v, 0.0, 255.0); }

struct Blob {
  double cx, cy, sx, sy, amp;  // centers/spreads in unit coordinates
};

double blob_field(double x, double y, const Blob* blobs, int count, double base) {
  double v = base;
  for (int i = 0; i < count; ++i) {
    const double dx = (x - blobs[i].cx) / blobs[i].sx;
    const double dy = (y - blobs[i].cy) / blobs[i].sy;
    v += blobs[i].amp * std::exp(-0.5 * (dx * dx + dy * dy));
  }
  return v;
}

}  // namespace

GrayImage synthetic_gradient(int size) {
  require_size(size);
  GrayImage img(size, size);
  const double span = size > 1 ? 2.0 * (size - 1) : 1.0;
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) img.at(r, c) = 255.0 * (r + c) / span;
  return img;
}

GrayImage synthetic_checkerboard(int size, int period) {
  require_size(size);
  if (period < 1) throw std::invalid_argument("checkerboard period must be >= 1");
  GrayImage img(size, size);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      img.at(r, c) = ((r / period + c / period) % 2 == 0) ? 64.0 : 200.0;
  return img;
}

GrayImage synthetic_blobs(int size) {
  require_size(size);
  static const Blob blobs[] = {
      {0.28, 0.30, 0.16, 0.22, 120.0}, {0.72, 0.24, 0.10, 0.12, 90.0},
      {0.60, 0.68, 0.24, 0.18, 105.0}, {0.20, 0.78, 0.09, 0.09, -55.0},
      {0.84, 0.82, 0.07, 0.13, 70.0},  {0.47, 0.45, 0.05, 0.05, -45.0},
      {0.10, 0.15, 0.12, 0.08, 60.0},
  };
  GrayImage img(size, size);
  const double inv = 1.0 / std::max(size - 1, 1);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c)
      img.at(r, c) = clamp255(blob_field(c * inv, r * inv, blobs, 7, 70.0));
  return img;
}

GrayImage synthetic_ripples(int size) {
  require_size(size);
  GrayImage img(size, size);
  const double inv = 1.0 / std::max(size - 1, 1);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const double x = c * inv - 0.5;
      const double y = r * inv - 0.5;
      const double rad = std::sqrt(x * x + y * y);
      // Radial chirp: frequency grows outward, covering a range of scales.
      img.at(r, c) = clamp255(128.0 + 90.0 * std::cos(2.0 * M_PI * (3.0 * rad + 7.0 * rad * rad)) *
                                          std::exp(-1.2 * rad));
    }
  return img;
}

namespace {

// Integer hash (splitmix64 finalizer) -> uniform double in [0, 1).
double lattice_value(int octave, long i, long j) {
  std::uint64_t z = 0x9e3779b97f4a7c15ull * static_cast<std::uint64_t>(octave + 1);
  z ^= static_cast<std::uint64_t>(i) * 0xbf58476d1ce4e5b9ull;
  z ^= static_cast<std::uint64_t>(j) * 0x94d049bb133111ebull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

GrayImage synthetic_fractal(int size) {
  require_size(size);
  GrayImage img(size, size, 128.0);
  // Bilinearly interpolated value noise, five octaves with 1/f-ish
  // amplitude decay; statistics land much closer to photographs than any
  // single-scale pattern.
  double cell = size / 3.0;
  double amp = 64.0;
  for (int octave = 0; octave < 5; ++octave) {
    for (int r = 0; r < size; ++r)
      for (int c = 0; c < size; ++c) {
        const double fy = r / cell;
        const double fx = c / cell;
        const long y0 = static_cast<long>(fy), x0 = static_cast<long>(fx);
        const double wy = fy - y0, wx = fx - x0;
        const double top = lattice_value(octave, y0, x0) * (1.0 - wx) +
                           lattice_value(octave, y0, x0 + 1) * wx;
        const double bot = lattice_value(octave, y0 + 1, x0) * (1.0 - wx) +
                           lattice_value(octave, y0 + 1, x0 + 1) * wx;
        img.at(r, c) += amp * 2.0 * (top * (1.0 - wy) + bot * wy - 0.5);
      }
    cell /= 2.0;
    amp /= 2.0;
  }
  for (double& v : img.pixels) v = clamp255(v);
  return img;
}

GrayImage synthetic_scene(int size) {
  require_size(size);
  static const Blob blobs[] = {
      {0.30, 0.26, 0.14, 0.17, 95.0},
      {0.74, 0.62, 0.10, 0.15, -70.0},
      {0.55, 0.40, 0.28, 0.22, 45.0},
  };
  GrayImage img(size, size);
  const double inv = 1.0 / std::max(size - 1, 1);
  for (int r = 0; r < size; ++r)
    for (int c = 0; c < size; ++c) {
      const double x = c * inv;
      const double y = r * inv;
      double v = blob_field(x, y, blobs, 3, 60.0 + 70.0 * y);
      // Flat plaques with step edges over the smooth background.
      if (x > 0.62 && x < 0.93 && y > 0.08 && y < 0.30) v = 210.0;
      if (x > 0.07 && x < 0.26 && y > 0.56 && y < 0.90) v = 35.0;
      if (x > 0.40 && x < 0.55 && y > 0.72 && y < 0.86) v = 150.0;
      img.at(r, c) = clamp255(v);
    }
  return img;
}

std::vector<std::pair<std::string, GrayImage>> synthetic_ci_set(int size) {
  return {
      {"gradient", synthetic_gradient(size)},
      {"checker", synthetic_checkerboard(size)},
      {"blobs", synthetic_blobs(size)},
      {"fractal", synthetic_fractal(size)},
      {"scene", synthetic_scene(size)},
  };
}

}  // namespace momentcs
