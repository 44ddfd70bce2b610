#include <doctest.h>

#include <random>

#include "torcomb/facevec.hpp"

using namespace torcomb;

namespace {

std::vector<Int> iv(std::initializer_list<long> v) {
  return std::vector<Int>(v.begin(), v.end());
}

}  // namespace

TEST_CASE("f_to_h reference values") {
  // boundary of the n-simplex: all h_i = 1
  for (int n = 2; n <= 6; ++n) {
    std::vector<Int> h = h_vector(boundary_simplex(n));
    CHECK(static_cast<int>(h.size()) == n + 1);
    for (const Int& x : h) CHECK(x == 1);
  }
  // full simplex: h = (1, 0, ..., 0)
  std::vector<Int> f;
  for (int i = 0; i < 4; ++i) f.push_back(binom(4, i + 1));
  std::vector<Int> h = f_to_h(f, 4);
  CHECK(h == iv({1, 0, 0, 0, 0}));

  CHECK(f_to_h(iv({9, 27, 18}), 3) == iv({1, 6, 12, -1}));

  CHECK_THROWS_AS(f_to_h(iv({1, 2, 3}), 2), domain_error);
}

TEST_CASE("f<->h round trip") {
  std::mt19937 rng(47);
  CHECK(h_to_f(iv({1, 6, 12, -1})) == iv({9, 27, 18}));
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + rng() % 5;
    std::vector<Int> f;
    for (int i = 0; i < n; ++i) f.push_back(static_cast<long>(rng() % 40));
    CHECK(h_to_f(f_to_h(f, n)) == f);
  }
}

TEST_CASE("Dehn-Sommerville defects") {
  DefectReport poly = dehn_sommerville_defect(h_vector(polygon(6)));
  CHECK(poly.zero());
  CHECK(dehn_sommerville_defect(h_vector(boundary_simplex(4))).zero());

  DefectReport torus = dehn_sommerville_defect(iv({1, 6, 12, -1}));
  CHECK(torus.defect == iv({-2, 6, -6, 2}));
  CHECK(torus.predicted == torus.defect);
}

TEST_CASE("binomial expansion bound") {
  CHECK(binomial_upper(Int(0), 3) == 0);
  CHECK(binomial_upper(Int(2), 1) == 3);  // 2 = C(2,1) -> C(3,2)
  // 5 = C(3,2) + C(2,1) -> C(4,3) + C(3,2) = 4 + 3
  CHECK(binomial_upper(Int(5), 2) == 7);
  CHECK_THROWS_AS(binomial_upper(Int(3), 0), domain_error);
  CHECK_THROWS_AS(binomial_upper(Int(-1), 1), domain_error);
}

TEST_CASE("M-vector verdicts") {
  CHECK(is_m_vector(iv({1})).ok);
  CHECK(is_m_vector(iv({1, 0})).ok);
  CHECK(is_m_vector(iv({1, 7})).ok);
  CHECK(is_m_vector(iv({1, 2, 3, 4})).ok);

  MVectorVerdict bad = is_m_vector(iv({1, 2, 4}));
  CHECK(!bad.ok);
  CHECK(bad.fail_index == 2);  // 4 > 2^<1> = 3

  CHECK(!is_m_vector(iv({2, 1})).ok);
  MVectorVerdict neg = is_m_vector(iv({1, -1}));
  CHECK(!neg.ok);
  CHECK(neg.fail_index == 1);
}

TEST_CASE("g-theorem verdicts") {
  CHECK(g_theorem_verdict(h_vector(cyclic_sphere(4, 8))).pass());
  CHECK(g_theorem_verdict(iv({1, 1, 1, 1})).pass());

  GTheoremVerdict torus = g_theorem_verdict(iv({1, 6, 12, -1}));
  CHECK(!torus.symmetric);
  CHECK(!torus.nonneg_g);
  CHECK(torus.fail_symmetric == 0);
}

TEST_CASE("upper bound theorem checks") {
  UbtReport c48 = ubt_check(h_vector(cyclic_sphere(4, 8)), 8, 4);
  CHECK(c48.ok);
  CHECK(c48.equality_through == 2);

  UbtReport poly = ubt_check(h_vector(polygon(7)), 7, 2);
  CHECK(poly.ok);

  UbtReport fab = ubt_check(iv({1, 10, 100}), 7, 2);
  CHECK(!fab.ok);
  CHECK(fab.fail_index == 1);  // h_1 = 10 > C(5,1) = 5
}

TEST_CASE("h-vector arithmetic: products and connected sums") {
  CHECK(product_h(iv({1, 1}), iv({1, 1})) == iv({1, 2, 1}));
  CHECK(product_h(iv({1, 1}), iv({1, 1, 1})) == h_vector(join(boundary_simplex(1), boundary_simplex(2))));

  // staircase h(Q_k) = h(simplex^k) h(simplex^{n-k}) is increasing in the
  // first half: affine independence witness from the classical proof
  std::vector<Int> q0 = product_h(iv({1}), iv({1, 1, 1, 1}));
  std::vector<Int> q1 = product_h(iv({1, 1}), iv({1, 1, 1}));
  CHECK(q0 == iv({1, 1, 1, 1}));
  CHECK(q1 == iv({1, 2, 2, 1}));

  CHECK(connected_sum_h(iv({1, 2, 1}), iv({1, 2, 1})) == iv({1, 4, 1}));
  CHECK(connected_sum_h(iv({1, 4, 1}), iv({1, 2, 1})) == h_vector(polygon(8)));
  CHECK_THROWS_AS(connected_sum_h(iv({1, 2, 1}), iv({1, 2})), domain_error);
  CHECK_THROWS_AS(connected_sum_h(iv({1, 6, 12, -1}), iv({1, 1, 1, 1})),
                  domain_error);
}

TEST_CASE("product of h-vectors matches the h-vector of the join") {
  const SimplicialComplex cases[] = {boundary_simplex(1), boundary_simplex(2),
                                     polygon(5)};
  for (const auto& a : cases)
    for (const auto& b : cases)
      CHECK(product_h(h_vector(a), h_vector(b)) == h_vector(join(a, b)));
}

TEST_CASE("face ring Poincare series") {
  PoincareSeries pt = face_ring_poincare_series(
      SimplicialComplex::from_generators(1, {{1}}));
  CHECK(pt.numerator == IntPoly::one());
  CHECK(pt.denominator_exponent == 1);

  PoincareSeries bd = face_ring_poincare_series(boundary_simplex(3));
  CHECK(bd.numerator == IntPoly({Int(1), Int(1), Int(1), Int(1)}));
  CHECK(bd.denominator_exponent == 3);

  // full simplex: numerator 1, denominator (1-t^2)^(n+1)
  PoincareSeries fs = face_ring_poincare_series(
      SimplicialComplex::from_generators(4, {{1, 2, 3, 4}}));
  CHECK(fs.numerator == IntPoly::one());
  CHECK(fs.denominator_exponent == 4);
}

TEST_CASE("chi generating polynomials") {
  // pentagon: 1 - 5t^4 + 5t^6 - t^10, exponents halved in storage
  IntPoly pent = chi_poly_zk(polygon(5));
  CHECK(pent == IntPoly({Int(1), Int(0), Int(-5), Int(5), Int(0), Int(-1)}));

  // boundary of the simplex: 1 - t^(2m)
  IntPoly bd = chi_poly_zk(boundary_simplex(4));
  IntPoly expect;
  expect.c.assign(6, Int(0));
  expect.c[0] = 1;
  expect.c[5] = -1;
  expect.trim();
  CHECK(bd == expect);

  for (int m = 4; m <= 7; ++m) {
    CHECK(chi_poly_zk(polygon(m)).eval(1) == 0);
    CHECK(chi_poly_rel(polygon(m)) ==
          chi_poly_zk(polygon(m)) - IntPoly::one_minus_x_pow(m));
  }

  // W_K polynomial carries the Euler-characteristic correction
  SimplicialComplex pts = SimplicialComplex::from_generators(3, {{1}, {2}, {3}});
  CHECK(chi_poly_wk(pts) ==
        chi_poly_zk(pts) + Int(2) * IntPoly::one_minus_x_pow(3));
  // chi(S^1) = 0, so for the circle the correction is -(1-t^2)^m
  CHECK(chi_poly_wk(polygon(5)) == chi_poly_rel(polygon(5)));
}

TEST_CASE("cubical face counts") {
  // cc of the triangle boundary: 7 vertices (all faces incl. empty)
  std::vector<Int> cc = cubical_counts(boundary_simplex(2), CubicalMode::cc);
  CHECK(cc[0] == 7);

  std::vector<Int> pt = cubical_counts(
      SimplicialComplex::from_generators(1, {{1}}), CubicalMode::cub);
  CHECK(pt == std::vector<Int>{Int(1)});

  // closed form agrees with direct enumeration on polytopal spheres
  const SimplicialComplex cases[] = {polygon(4), polygon(7), boundary_simplex(3),
                                     cyclic_sphere(4, 7)};
  for (const auto& k : cases) {
    CHECK(cubical_counts(k, CubicalMode::cc) ==
          cubical_counts_polytope(k.f_vector(), k.dim() + 1));
  }

  // cub(K) counts triangulate |K|: Euler characteristics agree
  for (const auto& k : cases) {
    std::vector<Int> cub = cubical_counts(k, CubicalMode::cub);
    Int chi = 0;
    int sgn = 1;
    for (const Int& c : cub) {
      chi += sgn * c;
      sgn = -sgn;
    }
    CHECK(chi == euler_characteristic(k));
  }
}

TEST_CASE("neighbourliness and minimal missing faces") {
  CHECK(min_missing_face(boundary_simplex(3)) == 4);
  CHECK(min_missing_face(polygon(5)) == 2);
  CHECK(min_missing_face(SimplicialComplex::from_generators(3, {{1, 2, 3}})) == 4);
  CHECK(neighbourliness(SimplicialComplex::from_generators(3, {{1, 2, 3}})) == 3);
  CHECK(neighbourliness(SimplicialComplex::from_generators(3, {{1}, {2}})) == 0);
}
