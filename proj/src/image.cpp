#include "momentcs/image.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momentcs {

GrayImage::GrayImage(int w, int h, double fill) : width(w), height(h) {
  if (w < 1 || h < 1)
    throw std::invalid_argument("GrayImage: dimensions must be >= 1");
  pixels.assign(static_cast<size_t>(w) * h, fill);
}

GrayImage resize_bilinear(const GrayImage& src, int new_width, int new_height) {
  if (new_width < 1 || new_height < 1)
    throw std::invalid_argument("resize_bilinear: target dimensions must be >= 1");
  if (src.width < 1 || src.height < 1)
    throw std::invalid_argument("resize_bilinear: empty source image");
  if (new_width == src.width && new_height == src.height) return src;

  GrayImage out(new_width, new_height);
  const double sx = static_cast<double>(src.width) / new_width;
  const double sy = static_cast<double>(src.height) / new_height;
  for (int r = 0; r < new_height; ++r) {
    const double fy = std::clamp((r + 0.5) * sy - 0.5, 0.0, src.height - 1.0);
    const int y0 = static_cast<int>(fy);
    const int y1 = std::min(y0 + 1, src.height - 1);
    const double wy = fy - y0;
    for (int c = 0; c < new_width; ++c) {
      const double fx = std::clamp((c + 0.5) * sx - 0.5, 0.0, src.width - 1.0);
      const int x0 = static_cast<int>(fx);
      const int x1 = std::min(x0 + 1, src.width - 1);
      const double wx = fx - x0;
      const double top = src.at(y0, x0) * (1.0 - wx) + src.at(y0, x1) * wx;
      const double bot = src.at(y1, x0) * (1.0 - wx) + src.at(y1, x1) * wx;
      out.at(r, c) = top * (1.0 - wy) + bot * wy;
    }
  }
  return out;
}

}  // namespace momentcs
