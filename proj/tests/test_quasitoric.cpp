#include <doctest.h>

#include "torcomb/facevec.hpp"
#include "torcomb/quasitoric.hpp"

using namespace torcomb;

namespace {

// the two CP^2 charts over the triangle, orientation (1,2),(2,3),(3,1)
CharacteristicPair cp2(bool standard) {
  SimplicialComplex tri =
      SimplicialComplex::from_generators(3, {{1, 2}, {2, 3}, {1, 3}});
  OrientedSphereComplex sphere = orient_with(tri, {{1, 2}, {2, 3}, {3, 1}});
  IntMatrix lambda(2, 3);
  lambda(0, 0) = 1;
  lambda(1, 1) = 1;
  lambda(0, 2) = standard ? -1 : 1;
  lambda(1, 2) = standard ? -1 : 1;
  return validate_pair(std::move(sphere), std::move(lambda));
}

CharacteristicPair cpn(int n) {
  SimplicialComplex bd = boundary_simplex(n);
  IntMatrix lambda(n, n + 1);
  for (int i = 0; i < n; ++i) {
    lambda(i, i) = 1;
    lambda(i, n) = -1;
  }
  return validate_pair(orient_sphere(bd), std::move(lambda));
}

CharacteristicPair square_pair() {
  SimplicialComplex sq =
      SimplicialComplex::from_generators(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  IntMatrix lambda(2, 4);
  lambda(0, 0) = 1;
  lambda(1, 1) = 1;
  lambda(0, 2) = -1;
  lambda(1, 3) = -1;
  return validate_pair(orient_sphere(sq), std::move(lambda));
}

std::vector<int> sigmas(const CharacteristicPair& p) {
  std::vector<int> out;
  for (const auto& v : vertex_genus_data(p)) out.push_back(v.sigma);
  return out;
}

}  // namespace

TEST_CASE("pair validation") {
  CHECK_NOTHROW(cpn(2));
  CHECK_NOTHROW(cp2(false));

  // two equal columns meeting at an edge have an even minor
  SimplicialComplex tri =
      SimplicialComplex::from_generators(3, {{1, 2}, {2, 3}, {1, 3}});
  IntMatrix bad(2, 3);
  bad(0, 0) = 1;
  bad(0, 1) = 1;  // columns 1 and 2 equal
  bad(1, 2) = 1;
  try {
    validate_pair(orient_sphere(tri), std::move(bad));
    FAIL("expected a determinant failure");
  } catch (const domain_error& e) {
    CHECK(std::string(e.what()).find("determinant") != std::string::npos);
  }

  IntMatrix wrong_shape(3, 3);
  CHECK_THROWS_AS(validate_pair(orient_sphere(tri), std::move(wrong_shape)),
                  domain_error);
}

TEST_CASE("calibration: the standard CP^2 chart has all signs positive") {
  std::vector<int> s = sigmas(cp2(true));
  CHECK(s == std::vector<int>({1, 1, 1}));

  // alternate omniorientation flips the two signs at the moved facet vector
  CHECK(sigmas(cp2(false)) == std::vector<int>({1, -1, -1}));

  // reversing the global orientation negates every sign
  CharacteristicPair rev = cp2(true);
  for (auto& s2 : rev.sphere.sign) s2 = -s2;
  CHECK(sigmas(rev) == std::vector<int>({-1, -1, -1}));
}

TEST_CASE("edge vectors are conjugate to the facet vectors") {
  for (const CharacteristicPair& pair :
       {cp2(true), cp2(false), square_pair(), cpn(3)}) {
    auto data = vertex_genus_data(pair);
    for (std::size_t f = 0; f < data.size(); ++f) {
      IntMatrix minor = facet_minor(pair, f);
      CHECK(data[f].edge_matrix.transposed() * minor ==
            IntMatrix::identity(pair.n()));
      CHECK(det_integer(data[f].edge_matrix) == data[f].sigma);
    }
  }
}

TEST_CASE("generic vectors") {
  CharacteristicPair std2 = cp2(true);
  CHECK(is_generic(std2, {Int(1), Int(2)}));
  CHECK(!is_generic(std2, {Int(0), Int(0)}));
  CHECK(!is_generic(std2, {Int(1), Int(1)}));  // kills an edge of the third chart

  std::vector<Int> nu = find_generic_vector(std2);
  CHECK(is_generic(std2, nu));

  // the deterministic scan gives distinct later hits
  std::vector<Int> nu2 = find_generic_vector(std2, 1);
  CHECK(is_generic(std2, nu2));
  CHECK(nu != nu2);

  CharacteristicPair c4 = cpn(4);
  CHECK(is_generic(c4, find_generic_vector(c4)));
}

TEST_CASE("genus data of the two CP^2 charts") {
  const std::vector<Int> nu = {Int(1), Int(2)};

  GenusReport std2 = genus_report(cp2(true), nu);
  CHECK(std2.signature == 1);
  CHECK(std2.todd == 1);
  CHECK(std2.top_chern == 3);
  std::vector<int> idx;
  for (const auto& v : std2.vertices) idx.push_back(v.index);
  CHECK(idx == std::vector<int>({0, 2, 1}));  // facets in order (1,2),(3,1),(2,3)

  GenusReport alt = genus_report(cp2(false), nu);
  CHECK(alt.signature == 1);
  CHECK(alt.todd == 0);
  CHECK(alt.top_chern == -1);

  CHECK_THROWS_AS(genus_report(cp2(false), {Int(0), Int(0)}), domain_error);
}

TEST_CASE("evaluation identities and nu-independence of chi_y") {
  for (const CharacteristicPair& pair : {cp2(true), cp2(false), square_pair()}) {
    std::vector<Int> nu0 = find_generic_vector(pair);
    GenusReport rep = genus_report(pair, nu0);
    CHECK(rep.chi_y.eval(1) == rep.signature);
    CHECK(rep.chi_y.at(0) == rep.todd);
    CHECK(rep.chi_y.eval(-1) == rep.top_chern);
    for (int skip = 1; skip <= 3; ++skip) {
      GenusReport other = genus_report(pair, find_generic_vector(pair, skip));
      CHECK(other.chi_y == rep.chi_y);
    }
  }
}

TEST_CASE("all-positive signs imply todd 1 and chern = vertex count") {
  for (const CharacteristicPair& pair : {cpn(2), cpn(3), square_pair()}) {
    // these all come from genuine toric charts, so sigma = 1 everywhere
    // provided the global orientation is the right one; normalize first
    CharacteristicPair p = pair;
    auto s = sigmas(p);
    bool all_pos = true, all_neg = true;
    for (int x : s) {
      all_pos = all_pos && x == 1;
      all_neg = all_neg && x == -1;
    }
    REQUIRE((all_pos || all_neg));
    if (all_neg)
      for (auto& sgn : p.sphere.sign) sgn = -sgn;
    GenusReport rep = genus_report(p, find_generic_vector(p));
    CHECK(rep.todd == 1);
    CHECK(rep.top_chern == Int(static_cast<long>(p.sphere.base.facets().size())));
    // toric signature formula: sum (-1)^k h_k
    std::vector<Int> h = h_vector(p.sphere.base);
    Int alt = 0;
    int sgn2 = 1;
    for (const Int& x : h) {
      alt += sgn2 * x;
      sgn2 = -sgn2;
    }
    CHECK(rep.signature == alt);
  }
}

TEST_CASE("signature survives omniorientation changes, flips with orientation") {
  const std::vector<Int> nu = {Int(1), Int(2)};
  GenusReport base = genus_report(cp2(true), nu);

  // flipping one facet vector changes the stably complex structure but not
  // the signature (todd and c_n do move: this is the standard-vs-alternate
  // CP^2 story with a different column)
  for (int col = 0; col < 3; ++col) {
    CharacteristicPair flipped = cp2(true);
    for (int r = 0; r < 2; ++r) flipped.lambda(r, col) = -flipped.lambda(r, col);
    GenusReport rep = genus_report(flipped, find_generic_vector(flipped));
    CHECK(rep.signature == base.signature);
  }

  // reversing the global orientation negates sigma pointwise, hence the
  // signature, while vertex indices are unchanged
  CharacteristicPair rev = cp2(true);
  for (auto& s : rev.sphere.sign) s = -s;
  GenusReport rep = genus_report(rev, nu);
  CHECK(rep.signature == -base.signature);
  for (std::size_t i = 0; i < rep.vertices.size(); ++i) {
    CHECK(rep.vertices[i].sigma == -base.vertices[i].sigma);
    CHECK(rep.vertices[i].index == base.vertices[i].index);
  }
}

TEST_CASE("quasitoric Betti numbers and quotient dimensions") {
  CHECK(quasitoric_betti(boundary_simplex(3)) ==
        std::vector<Int>({1, 1, 1, 1}));

  for (int n = 1; n <= 4; ++n) {
    std::vector<Int> dims = graded_quotient_dims(cpn(n));
    CHECK(static_cast<int>(dims.size()) == n + 1);
    for (const Int& d : dims) CHECK(d == 1);  // H*(CP^n) = Z[u]/(u^{n+1})
  }

  CHECK(graded_quotient_dims(square_pair()) == std::vector<Int>({1, 2, 1}));

  SimplicialComplex pent = polygon(5);
  IntMatrix lambda(2, 5);
  long cols[5][2] = {{1, 0}, {0, 1}, {-1, 1}, {0, -1}, {1, -1}};
  for (int j = 0; j < 5; ++j) {
    lambda(0, j) = cols[j][0];
    lambda(1, j) = cols[j][1];
  }
  CharacteristicPair pp = validate_pair(orient_sphere(pent), std::move(lambda));
  CHECK(graded_quotient_dims(pp) == std::vector<Int>({1, 3, 1}));
}

TEST_CASE("subtorus freeness") {
  // the diagonal circle is free for every sphere
  for (const SimplicialComplex& k :
       {polygon(5), boundary_simplex(3), cyclic_sphere(4, 7)}) {
    IntMatrix ones(k.m(), 1);
    for (int i = 0; i < k.m(); ++i) ones(i, 0) = 1;
    CHECK(subtorus_free(k, ones).free_action);
  }

  // kernel of a characteristic matrix acts freely at maximal rank
  CharacteristicPair p = square_pair();
  IntMatrix kernel = kernel_basis(p.lambda);
  CHECK(kernel.cols() == 2);
  CHECK(subtorus_free(p.sphere.base, kernel).free_action);

  // too large a rank is rejected outright
  IntMatrix big(4, 3);
  big(0, 0) = big(1, 1) = big(2, 2) = 1;
  FreenessReport rep = subtorus_free(p.sphere.base, big);
  CHECK(!rep.free_action);
  CHECK(rep.reason.find("m-n") != std::string::npos);

  // a sublattice that is not a direct summand is rejected
  IntMatrix twice(4, 1);
  for (int i = 0; i < 4; ++i) twice(i, 0) = 2;
  CHECK(!subtorus_free(p.sphere.base, twice).free_action);

  // an in-range subgroup hitting an isotropy subgroup fails with a witness
  IntMatrix e1(4, 1);
  e1(0, 0) = 1;
  FreenessReport hit = subtorus_free(p.sphere.base, e1);
  CHECK(!hit.free_action);
  CHECK(hit.witness_facet.has_value());
}

TEST_CASE("colouring bound") {
  ColouringBound bd = chromatic_lower_bound(boundary_simplex(3));
  CHECK(bd.greedy_colours == 4);  // complete graph
  CHECK(bd.bound == 0);

  ColouringBound sq = chromatic_lower_bound(polygon(4));
  CHECK(sq.greedy_colours == 2);  // bipartite
  CHECK(sq.bound == 2);

  ColouringBound c47 = chromatic_lower_bound(cyclic_sphere(4, 7));
  CHECK(c47.greedy_colours == 7);  // 2-neighbourly: all facets meet
  CHECK(c47.bound == 0);
}
