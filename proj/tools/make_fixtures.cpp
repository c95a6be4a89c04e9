// Regenerates fixtures/elliptic_models.json from the deterministic searches.
// Usage: bn_make_fixtures [output-path]

#include <fstream>
#include <iostream>
#include <string>

#include "bn/elliptic.hpp"
#include "bn/json_io.hpp"

int main(int argc, char** argv) {
  // Covers every degree d <= 8 used by the oracles and sweeps.
  const bn::io::EllipticFixtures fixtures{1, bn::search_general_model(50, 8),
                                          bn::search_torsion_model(53, 2)};
  const std::string text = bn::io::to_json(fixtures).dump(2) + "\n";
  if (argc > 1) {
    std::ofstream out(argv[1]);
    if (!out) {
      std::cerr << "cannot write " << argv[1] << '\n';
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return 0;
}
