#ifndef MOMENTCS_IMAGE_HPP
#define MOMENTCS_IMAGE_HPP

#include <vector>

namespace momentcs {

/// Grayscale raster on the [0, 255] scale. Pixels are stored row-major as
/// doubles so intermediate results keep full precision until they are saved.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  GrayImage() = default;
  GrayImage(int w, int h, double fill = 0.0);

  double& at(int row, int col) { return pixels[static_cast<size_t>(row) * width + col]; }
  double at(int row, int col) const { return pixels[static_cast<size_t>(row) * width + col]; }

  long pixel_count() const { return static_cast<long>(width) * height; }
  bool same_size(const GrayImage& other) const {
    return width == other.width && height == other.height;
  }
};

/// Bilinear resample with pixel-center alignment. Returns an unmodified copy
/// when the target size equals the source size.
GrayImage resize_bilinear(const GrayImage& src, int new_width, int new_height);

}  // namespace momentcs

#endif
