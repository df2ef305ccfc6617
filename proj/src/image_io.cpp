#include "momentcs/image_io.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#ifdef MOMENTCS_HAVE_PNG
#include <png.h>
#endif

namespace momentcs {

namespace {

const char* kind_label(IoErrorKind kind) {
  switch (kind) {
    case IoErrorKind::missing_file: return "missing file";
    case IoErrorKind::malformed_header: return "malformed header";
    case IoErrorKind::malformed_data: return "malformed data";
    case IoErrorKind::truncated_data: return "truncated data";
    case IoErrorKind::unsupported_depth: return "unsupported bit depth";
    case IoErrorKind::unsupported_format: return "unsupported format";
    case IoErrorKind::write_failure: return "write failure";
  }
  return "io error";
}

std::string describe(IoErrorKind kind, const std::string& path,
                     const std::string& message, long offset) {
  std::ostringstream os;
  os << path << ": " << kind_label(kind) << ": " << message;
  if (offset >= 0) os << " (byte offset " << offset << ")";
  return os.str();
}

// Tokenizer over PNM headers: skips whitespace and '#' comments, reports
// the byte offset of whatever it choked on.
class PnmReader {
 public:
  PnmReader(std::ifstream& in, const std::string& path) : in_(in), path_(path) {}

  long offset() { return static_cast<long>(in_.tellg()); }

  void skip_separators() {
    int c;
    while ((c = in_.peek()) != EOF) {
      if (c == '#') {
        while ((c = in_.get()) != EOF && c != '\n') {
        }
      } else if (std::isspace(c)) {
        in_.get();
      } else {
        break;
      }
    }
  }

  long read_unsigned(const char* what) {
    skip_separators();
    const long at = offset();
    long value = 0;
    bool any = false;
    int c;
    while ((c = in_.peek()) != EOF && std::isdigit(c)) {
      value = value * 10 + (in_.get() - '0');
      any = true;
      if (value > 1000000000L)
        throw IoError(IoErrorKind::malformed_header, path_,
                      std::string(what) + " is absurdly large", at);
    }
    if (!any)
      throw IoError(IoErrorKind::malformed_header, path_,
                    std::string("expected ") + what, at < 0 ? offset() : at);
    return value;
  }

 private:
  std::ifstream& in_;
  const std::string& path_;
};

GrayImage load_pgm_stream(std::ifstream& in, const std::string& path) {
  char magic[2] = {0, 0};
  in.read(magic, 2);
  if (in.gcount() != 2 || magic[0] != 'P' || (magic[1] != '2' && magic[1] != '5'))
    throw IoError(IoErrorKind::malformed_header, path, "not a P2/P5 PGM file", 0);
  const bool binary = magic[1] == '5';

  PnmReader reader(in, path);
  const long width = reader.read_unsigned("width");
  const long height = reader.read_unsigned("height");
  if (width < 1 || height < 1)
    throw IoError(IoErrorKind::malformed_header, path, "zero image dimension",
                  reader.offset());
  if (width * height > (1L << 30))
    throw IoError(IoErrorKind::malformed_header, path, "image dimensions too large",
                  reader.offset());
  const long max_offset = reader.offset();
  const long maxval = reader.read_unsigned("maxval");
  if (maxval != 255)
    throw IoError(IoErrorKind::unsupported_depth, path,
                  "maxval must be 255 (8-bit)", max_offset);

  GrayImage img(static_cast<int>(width), static_cast<int>(height));
  const long n = img.pixel_count();
  if (binary) {
    in.get();  // the single separator byte after maxval
    const long data_at = reader.offset();
    std::vector<unsigned char> raw(static_cast<size_t>(n));
    in.read(reinterpret_cast<char*>(raw.data()), n);
    if (in.gcount() != n)
      throw IoError(IoErrorKind::truncated_data, path,
                    "raster ended early", data_at + in.gcount());
    for (long i = 0; i < n; ++i) img.pixels[static_cast<size_t>(i)] = raw[static_cast<size_t>(i)];
  } else {
    for (long i = 0; i < n; ++i) {
      reader.skip_separators();
      if (in.peek() == EOF)
        throw IoError(IoErrorKind::truncated_data, path, "raster ended early",
                      reader.offset());
      const long at = reader.offset();
      const long v = reader.read_unsigned("sample");
      if (v > maxval)
        throw IoError(IoErrorKind::malformed_data, path, "sample exceeds maxval", at);
      img.pixels[static_cast<size_t>(i)] = static_cast<double>(v);
    }
  }
  return img;
}

}  // namespace

IoError::IoError(IoErrorKind kind, std::string path, const std::string& message,
                 long offset)
    : std::runtime_error(describe(kind, path, message, offset)),
      kind_(kind),
      path_(std::move(path)),
      offset_(offset) {}

GrayImage load_pgm(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorKind::missing_file, path, "cannot open for reading");
  return load_pgm_stream(in, path);
}

bool png_supported() {
#ifdef MOMENTCS_HAVE_PNG
  return true;
#else
  return false;
#endif
}

#ifdef MOMENTCS_HAVE_PNG
GrayImage load_png(const std::string& path) {
  png_image png;
  std::memset(&png, 0, sizeof(png));
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str())) {
    std::FILE* probe = std::fopen(path.c_str(), "rb");
    if (!probe) throw IoError(IoErrorKind::missing_file, path, "cannot open for reading");
    std::fclose(probe);
    throw IoError(IoErrorKind::malformed_header, path, png.message);
  }
  png.format = PNG_FORMAT_GRAY;  // libpng converts color by luminance
  std::vector<unsigned char> raw(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, raw.data(), 0, nullptr)) {
    const std::string message = png.message;
    png_image_free(&png);
    throw IoError(IoErrorKind::malformed_data, path, message);
  }
  GrayImage img(static_cast<int>(png.width), static_cast<int>(png.height));
  for (long i = 0; i < img.pixel_count(); ++i)
    img.pixels[static_cast<size_t>(i)] = raw[static_cast<size_t>(i)];
  return img;
}
#else
GrayImage load_png(const std::string& path) {
  throw IoError(IoErrorKind::unsupported_format, path,
                "built without PNG support");
}
#endif

GrayImage load_image(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(IoErrorKind::missing_file, path, "cannot open for reading");
  unsigned char magic[2] = {0, 0};
  in.read(reinterpret_cast<char*>(magic), 2);
  if (in.gcount() == 2 && magic[0] == 'P' && (magic[1] == '2' || magic[1] == '5')) {
    in.seekg(0);
    return load_pgm_stream(in, path);
  }
  if (in.gcount() == 2 && magic[0] == 0x89 && magic[1] == 'P') {
    in.close();
    return load_png(path);
  }
  throw IoError(IoErrorKind::unsupported_format, path,
                "unrecognized magic bytes (want PGM P2/P5 or PNG)", 0);
}

void save_image(const GrayImage& img, const std::string& path) {
  if (img.width < 1 || img.height < 1)
    throw std::invalid_argument("save_image: empty image");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError(IoErrorKind::write_failure, path, "cannot open for writing");
  out << "P5\n" << img.width << " " << img.height << "\n255\n";
  std::vector<unsigned char> raw(static_cast<size_t>(img.pixel_count()));
  for (long i = 0; i < img.pixel_count(); ++i) {
    const long v = std::lround(img.pixels[static_cast<size_t>(i)]);  // half away from zero
    raw[static_cast<size_t>(i)] = static_cast<unsigned char>(std::clamp(v, 0L, 255L));
  }
  out.write(reinterpret_cast<const char*>(raw.data()), static_cast<long>(raw.size()));
  if (!out) throw IoError(IoErrorKind::write_failure, path, "short write");
}

}  // namespace momentcs
