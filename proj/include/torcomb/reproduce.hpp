#pragma once

#include <string>
#include <vector>

#include "torcomb/arrangements.hpp"
#include "torcomb/quasitoric.hpp"
#include "torcomb/simplicial.hpp"

namespace torcomb {

struct NamedComplex {
  std::string name;
  SimplicialComplex complex;
  bool sphere = false;
};
struct NamedPair {
  std::string name;
  CharacteristicPair pair;
};
struct NamedArrangement {
  std::string name;
  CoordinateArrangement arrangement;
};

// The bundled reference inputs: simplex boundaries, polygons, cyclic
// spheres, join spheres, the 9-vertex torus, disjoint points, the two CP^2
// pairs and friends. Loaded from JSON files in `dir`.
struct Corpus {
  std::vector<NamedComplex> complexes;
  std::vector<NamedPair> pairs;
  std::vector<NamedArrangement> arrangements;

  const SimplicialComplex& complex(const std::string& name) const;
  const CharacteristicPair& pair(const std::string& name) const;
  const CoordinateArrangement& arrangement(const std::string& name) const;
};

Corpus load_corpus(const std::string& dir);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

// Runs every reproduction check whose name contains `filter` (all when
// empty). Results come back in a fixed order.
std::vector<CheckResult> run_reproduction(const Corpus& corpus,
                                          const std::string& filter,
                                          int jobs = 1);

}  // namespace torcomb
