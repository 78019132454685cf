// Regenerates data/catalog.json: catalog_gen > data/catalog.json
#include <iostream>

#include "so4/catalog.hpp"

int main() {
  std::cout << so4::dump_catalog(so4::build_catalog());
  return 0;
}
