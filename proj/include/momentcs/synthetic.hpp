#ifndef MOMENTCS_SYNTHETIC_HPP
#define MOMENTCS_SYNTHETIC_HPP

#include <string>
#include <utility>
#include <vector>

#include "momentcs/image.hpp"

namespace momentcs {

// Deterministic synthetic test images standing in for the classic benchmark
// photographs in CI runs. All are closed-form, no RNG involved.

GrayImage synthetic_gradient(int size);
GrayImage synthetic_checkerboard(int size, int period = 16);
GrayImage synthetic_blobs(int size);
GrayImage synthetic_ripples(int size);
GrayImage synthetic_fractal(int size);
GrayImage synthetic_scene(int size);

/// The five-image substitute set: gradient, checker, blobs, fractal, scene.
std::vector<std::pair<std::string, GrayImage>> synthetic_ci_set(int size);

}  // namespace momentcs

#endif
