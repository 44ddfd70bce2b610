#pragma once

#include <vector>

#include "torcomb/base.hpp"
#include "torcomb/matrix.hpp"
#include "torcomb/simplicial.hpp"

namespace torcomb {

// Coordinate subspace arrangement in C^m (or R^m): each generator I encodes
// the subspace z_i = 0 for i in I. Generators form an antichain.
struct CoordinateArrangement {
  int m = 0;
  std::vector<Vset> generators;
};

CoordinateArrangement make_arrangement(int m,
                                       const std::vector<std::vector<int>>& gens);

// K(A): I is a face iff no generator is contained in I. (A coordinate
// subspace lies in a finite union of coordinate subspaces iff it lies in one
// of them, so membership in the union reduces to a single containment.)
SimplicialComplex complex_from_arrangement(const CoordinateArrangement& a);

// Generators = minimal non-faces of K. Round-trips with the above.
CoordinateArrangement arrangement_from_complex(const SimplicialComplex& k);

// dim H^p of the complement of the complex coordinate arrangement:
// total-degree collapse p = 2j - i of the bigraded Betti table.
std::vector<long> coord_complement_betti(const SimplicialComplex& k,
                                         int jobs = 1);
// Real version: additive regrading p = j - i.
std::vector<long> real_coord_complement_betti(const SimplicialComplex& k,
                                              int jobs = 1);

// The squarefree strand of the bar complex of k(K): degree-p basis vectors
// are ordered tuples (J_1, ..., J_p) of disjoint nonempty faces covering
// {1..m}; the differential merges adjacent entries (sign (-1)^s, term kept
// only when the union is a face).
struct DiagonalStrand {
  std::vector<std::vector<std::vector<Vset>>> basis;  // index p
  std::vector<SparseMatrix> d;                        // d[p] : p -> p-1
};
DiagonalStrand diagonal_strand(const SimplicialComplex& k);

// dim H^i of the complement of the real diagonal arrangement, i = 0..m:
// homology rank of the strand at p = m - i.
std::vector<long> diagonal_complement_betti(const SimplicialComplex& k);

}  // namespace torcomb
