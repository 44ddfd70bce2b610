#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torcomb/base.hpp"
#include "torcomb/facevec.hpp"
#include "torcomb/matrix.hpp"
#include "torcomb/simplicial.hpp"

namespace torcomb {

// Characteristic pair: oriented polytopal sphere K_P on m vertices (vertices
// of K_P = facets of P) plus an n x m integer matrix whose column i is the
// facet vector of F_i. Valid iff every facet minor has determinant +-1.
struct CharacteristicPair {
  OrientedSphereComplex sphere;
  IntMatrix lambda;

  int m() const { return sphere.base.m(); }
  int n() const { return sphere.n(); }
};

// Throws domain_error naming the first facet whose minor is degenerate.
CharacteristicPair validate_pair(OrientedSphereComplex sphere, IntMatrix lambda);

// Minor of lambda with columns in the orientation order of one facet.
IntMatrix facet_minor(const CharacteristicPair& pair, std::size_t facet_index);

struct VertexGenusData {
  std::vector<int> facet;  // oriented vertex tuple of K_P
  int sigma = 0;           // det of the facet minor
  IntMatrix edge_matrix;   // M_(v) = (facet minor^T)^{-1}, columns = edge vectors
  int index = -1;          // negative-weight count for the chosen nu; -1 if none
  std::vector<Int> weights;
};
// Per-facet sign and edge data; index/weights filled when nu is supplied.
std::vector<VertexGenusData> vertex_genus_data(
    const CharacteristicPair& pair,
    const std::vector<Int>* nu = nullptr);

bool is_generic(const CharacteristicPair& pair, const std::vector<Int>& nu);
// First generic vector in a deterministic scan of integer boxes of growing
// radius. `skip` asks for later hits in the same scan order.
std::vector<Int> find_generic_vector(const CharacteristicPair& pair,
                                     int skip = 0);

struct GenusReport {
  IntPoly chi_y;  // coefficient of y^k
  Int signature, todd, top_chern;
  std::vector<VertexGenusData> vertices;
};
// chi_y = sum_v (-y)^{ind(v)} sigma(v); signature/todd/top_chern are its
// values at y = 1, 0, -1. Throws domain_error if nu is not generic.
GenusReport genus_report(const CharacteristicPair& pair,
                         const std::vector<Int>& nu);

// Betti numbers b_{2i} of the quasitoric manifold = h-vector of K_P.
std::vector<Int> quasitoric_betti(const SimplicialComplex& kp);

// Dimensions of the graded components (degrees 0, 2, ..., 2n) of
// k(K_P) / (theta_1, ..., theta_n) with theta_i = sum_j lambda[i][j] v_j.
std::vector<Int> graded_quotient_dims(const CharacteristicPair& pair);

struct FreenessReport {
  bool free_action = false;
  std::string reason;
  std::optional<std::vector<int>> witness_facet;  // first failing facet
};
// Subtorus of rank r given by the m x r matrix S acts freely on Z_P iff
// deleting the rows of any facet leaves a matrix with all Smith invariants 1.
FreenessReport subtorus_free(const SimplicialComplex& kp, const IntMatrix& s);

struct ColouringBound {
  int greedy_colours = 0;
  int bound = 0;  // m - greedy_colours, a lower bound for s(P)
};
// Greedy proper colouring of the 1-skeleton of K_P in vertex order.
ColouringBound chromatic_lower_bound(const SimplicialComplex& kp);

}  // namespace torcomb
