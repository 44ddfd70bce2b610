#include <doctest.h>

#include <random>
#include <set>

#include "torcomb/arrangements.hpp"
#include "torcomb/facevec.hpp"

using namespace torcomb;

namespace {

SimplicialComplex points(int m) {
  std::vector<std::vector<int>> g;
  for (int i = 1; i <= m; ++i) g.push_back({i});
  return SimplicialComplex::from_generators(m, g);
}

SimplicialComplex full_simplex(int m) {
  std::vector<int> all;
  for (int i = 1; i <= m; ++i) all.push_back(i);
  return SimplicialComplex::from_generators(m, {all});
}

}  // namespace

TEST_CASE("complex <-> arrangement bijection") {
  // all codimension-two subspaces <-> disjoint points
  CoordinateArrangement codim2 =
      make_arrangement(3, {{1, 2}, {1, 3}, {2, 3}});
  CHECK(complex_from_arrangement(codim2).same_faces(points(3)));

  // the origin alone <-> boundary of the simplex
  CoordinateArrangement origin = make_arrangement(4, {{1, 2, 3, 4}});
  CHECK(complex_from_arrangement(origin).same_faces(boundary_simplex(3)));

  // empty arrangement <-> full simplex
  CoordinateArrangement none = make_arrangement(3, {});
  CHECK(complex_from_arrangement(none).same_faces(full_simplex(3)));

  // pentagon: generators are the five diagonals
  CoordinateArrangement pent = arrangement_from_complex(polygon(5));
  std::set<Vset> want = {vset_of({1, 3}), vset_of({1, 4}), vset_of({2, 4}),
                         vset_of({2, 5}), vset_of({3, 5})};
  CHECK(std::set<Vset>(pent.generators.begin(), pent.generators.end()) == want);

  CHECK(arrangement_from_complex(full_simplex(4)).generators.empty());
  CoordinateArrangement bd = arrangement_from_complex(boundary_simplex(3));
  CHECK(bd.generators == std::vector<Vset>{vset_of({1, 2, 3, 4})});

  // round trips, both ways
  std::mt19937 rng(59);
  for (int trial = 0; trial < 25; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 4);
    std::vector<std::vector<int>> gens;
    const int count = 1 + static_cast<int>(rng() % 5);
    for (int g = 0; g < count; ++g) {
      std::set<int> pick;
      int size = 1 + static_cast<int>(rng() % m);
      while (static_cast<int>(pick.size()) < size)
        pick.insert(1 + static_cast<int>(rng() % m));
      gens.emplace_back(pick.begin(), pick.end());
    }
    SimplicialComplex k = SimplicialComplex::from_generators(m, gens);
    CHECK(complex_from_arrangement(arrangement_from_complex(k)).same_faces(k));

    CoordinateArrangement a = make_arrangement(m, gens);
    CoordinateArrangement back =
        arrangement_from_complex(complex_from_arrangement(a));
    CHECK(back.generators == a.generators);  // minimal antichain both times
  }
}

TEST_CASE("coordinate complement cohomology") {
  std::vector<long> p3 = coord_complement_betti(points(3));
  CHECK(p3 == std::vector<long>({1, 0, 0, 3, 2}));

  // polygon complements are the polygon moment-angle manifolds
  std::vector<long> pent = coord_complement_betti(polygon(5));
  CHECK(pent == std::vector<long>({1, 0, 0, 5, 5, 0, 0, 1}));

  // low degrees collapse to (1, 0, 0, ...) when every vertex is present
  // (a missing vertex is a hyperplane factor and contributes to H^1)
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    const int m = 3 + static_cast<int>(rng() % 3);
    std::vector<std::vector<int>> gens;
    for (int i = 1; i <= m; ++i) gens.push_back({i});
    for (int g = 0; g < 4; ++g) {
      std::set<int> pick;
      int size = 1 + static_cast<int>(rng() % m);
      while (static_cast<int>(pick.size()) < size)
        pick.insert(1 + static_cast<int>(rng() % m));
      gens.emplace_back(pick.begin(), pick.end());
    }
    SimplicialComplex k = SimplicialComplex::from_generators(m, gens);
    std::vector<long> b = coord_complement_betti(k);
    CHECK(b[0] == 1);
    if (b.size() > 1) CHECK(b[1] == 0);
    if (b.size() > 2) CHECK(b[2] == 0);
    const int n = k.dim() + 1;
    CHECK(static_cast<int>(b.size()) - 1 <= k.m() + n);
  }
}

TEST_CASE("real coordinate complements") {
  CHECK(real_coord_complement_betti(full_simplex(3)) ==
        std::vector<long>({1}));
  std::vector<long> bd = real_coord_complement_betti(boundary_simplex(3));
  CHECK(bd == std::vector<long>({1, 0, 0, 1}));  // R^4 minus 0 ~ S^3
}

TEST_CASE("diagonal strand complexes") {
  // two points: two 2-tuples, no mergers
  DiagonalStrand two = diagonal_strand(points(2));
  CHECK(two.basis[1].empty());
  CHECK(two.basis[2].size() == 2);
  CHECK(two.d[2].nnz() == 0);
  CHECK(diagonal_complement_betti(points(2)) ==
        std::vector<long>({2, 0, 0}));

  // full simplex on two vertices: one merger kills one of the two tuples
  SimplicialComplex seg = full_simplex(2);
  DiagonalStrand ds = diagonal_strand(seg);
  CHECK(ds.basis[1].size() == 1);
  CHECK(ds.basis[2].size() == 2);
  CHECK(ds.d[2].nnz() == 2);
  CHECK(diagonal_complement_betti(seg) == std::vector<long>({1, 0, 0}));

  // three points: the braid arrangement complement has six chambers
  std::vector<long> p3 = diagonal_complement_betti(points(3));
  CHECK(p3[0] == 6);
  for (std::size_t i = 1; i < p3.size(); ++i) CHECK(p3[i] == 0);

  for (int m = 2; m <= 5; ++m) {
    std::vector<long> fs = diagonal_complement_betti(full_simplex(m));
    CHECK(fs[0] == 1);
    for (std::size_t i = 1; i < fs.size(); ++i) CHECK(fs[i] == 0);
  }
}

TEST_CASE("diagonal strand Euler characteristic from tuple counts") {
  const SimplicialComplex cases[] = {points(3), full_simplex(3), polygon(4),
                                     SimplicialComplex::from_generators(
                                         4, {{1, 2}, {3}, {4}})};
  for (const auto& k : cases) {
    DiagonalStrand s = diagonal_strand(k);
    long chi_cells = 0, chi_ranks = 0;
    std::vector<long> betti = diagonal_complement_betti(k);
    for (int p = 1; p <= k.m(); ++p) {
      long sgn = (p % 2) ? -1 : 1;
      chi_cells += sgn * static_cast<long>(s.basis[p].size());
      chi_ranks += sgn * betti[k.m() - p];
    }
    CHECK(chi_cells == chi_ranks);
  }
}
