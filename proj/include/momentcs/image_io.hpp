#ifndef MOMENTCS_IMAGE_IO_HPP
#define MOMENTCS_IMAGE_IO_HPP

#include <stdexcept>
#include <string>

#include "momentcs/image.hpp"

namespace momentcs {

enum class IoErrorKind {
  missing_file,
  malformed_header,
  malformed_data,
  truncated_data,
  unsupported_depth,
  unsupported_format,
  write_failure,
};

class IoError : public std::runtime_error {
 public:
  IoError(IoErrorKind kind, std::string path, const std::string& message,
          long offset = -1);

  IoErrorKind kind() const { return kind_; }
  const std::string& path() const { return path_; }
  /// Byte offset in the file where the problem was detected, -1 if not
  /// applicable.
  long offset() const { return offset_; }

 private:
  IoErrorKind kind_;
  std::string path_;
  long offset_;
};

/// Loads a grayscale image, dispatching on the file's magic bytes.
/// Supported: PGM P2/P5 with maxval 255, and (when built with libpng)
/// 8-bit PNG converted to grayscale by luminance.
GrayImage load_image(const std::string& path);

GrayImage load_pgm(const std::string& path);

/// True when PNG reading was compiled in.
bool png_supported();
GrayImage load_png(const std::string& path);

/// Rounds half away from zero, clamps to [0, 255], writes binary P5.
void save_image(const GrayImage& img, const std::string& path);

}  // namespace momentcs

#endif
