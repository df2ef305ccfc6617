// Regenerates the synthetic CI substitute images under a target directory
// (default data/ci). These stand in for the classic photographic test set.

#include <cstdio>
#include <filesystem>

#include "momentcs/image_io.hpp"
#include "momentcs/synthetic.hpp"

int main(int argc, char** argv) {
  const std::filesystem::path dir = argc > 1 ? argv[1] : "data/ci";
  const int size = argc > 2 ? std::atoi(argv[2]) : 144;
  std::filesystem::create_directories(dir);
  for (const auto& [name, img] : momentcs::synthetic_ci_set(size)) {
    const std::filesystem::path path = dir / (name + ".pgm");
    momentcs::save_image(img, path.string());
    std::printf("wrote %s (%dx%d)\n", path.string().c_str(), img.width, img.height);
  }
  return 0;
}
