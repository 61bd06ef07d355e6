// Rewrites a catalog file in canonical form: catalog_fmt <in> [out]
#include <fstream>
#include <iostream>

#include "sqf/catalog.hpp"

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: catalog_fmt <in> [out]\n";
    return 2;
  }
  try {
    std::string text = sqf::serialize_catalog(sqf::load_catalog_file(argv[1]));
    if (argc > 2) {
      std::ofstream(argv[2], std::ios::binary) << text;
    } else {
      std::cout << text;
    }
  } catch (const sqf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
