// Writes the fixed builtin complexes as JSON plus a CHECKSUMS file:
//   freeze_builtins <dir>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "srlab/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: freeze_builtins <dir>\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  std::filesystem::create_directories(dir);
  const char* names[] = {"torus7", "rp2_6", "moebius", "two_points", "boundary_simplex_3", "boundary_simplex_4",
                         "cross_polytope_3", "disk_with_induced_boundary_2", "path_3", "simplex_2"};
  std::ofstream sums(dir / "CHECKSUMS", std::ios::binary);
  for (const char* name : names) {
    const std::string text = srlab::complex_to_json(srlab::builtin_complex(name));
    const std::string file = std::string(name) + ".json";
    std::ofstream(dir / file, std::ios::binary) << text;
    sums << srlab::fnv1a_hex(text) << "  " << file << "\n";
  }
  return 0;
}
