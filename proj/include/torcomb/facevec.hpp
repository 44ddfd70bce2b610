#pragma once

#include <string>
#include <vector>

#include "torcomb/base.hpp"
#include "torcomb/simplicial.hpp"

namespace torcomb {

// Polynomial with exact integer coefficients, c[k] = coefficient of x^k.
// For the t^2-graded series in this library the exponent k stands for t^{2k}.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly one() { return IntPoly({Int(1)}); }
  // (1 - x)^e, e >= 0
  static IntPoly one_minus_x_pow(int e);

  void trim();
  int deg() const { return static_cast<int>(c.size()) - 1; }
  Int at(int k) const {
    return (k >= 0 && k < static_cast<int>(c.size())) ? c[k] : Int(0);
  }
  Int eval(const Int& x) const;
  bool operator==(const IntPoly& o) const { return c == o.c; }
};

IntPoly operator+(const IntPoly& a, const IntPoly& b);
IntPoly operator-(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const IntPoly& a, const IntPoly& b);
IntPoly operator*(const Int& s, const IntPoly& a);
std::string poly_str(const IntPoly& p, const std::string& var,
                     int exponent_scale = 1);

// h_k = sum_{i=0..k} (-1)^(k-i) C(n-i, n-k) f_{i-1}, with f_{-1} = 1.
// f may be shorter than n (missing entries are zero).
std::vector<Int> f_to_h(const std::vector<Int>& f, int n);
// Inverse relation; returns (f_0, ..., f_{n-1}) for n = len(h)-1.
std::vector<Int> h_to_f(const std::vector<Int>& h);
std::vector<Int> h_vector(const SimplicialComplex& k);  // n = dim+1
std::vector<Int> g_vector(const std::vector<Int>& h);

struct DefectReport {
  std::vector<Int> defect;     // h_{n-i} - h_i
  std::vector<Int> predicted;  // (-1)^i (h_n - 1) C(n,i), manifold prediction
  bool zero() const;
};
DefectReport dehn_sommerville_defect(const std::vector<Int>& h);

// a^<i> from the greedy binomial i-expansion of a; 0^<i> = 0.
Int binomial_upper(const Int& a, int i);

struct MVectorVerdict {
  bool ok = true;
  int fail_index = -1;  // first index violating the bound
};
MVectorVerdict is_m_vector(const std::vector<Int>& k);

struct GTheoremVerdict {
  bool symmetric = true, nonneg_g = true, g_is_m = true;
  int fail_symmetric = -1, fail_nonneg = -1, fail_m = -1;
  bool pass() const { return symmetric && nonneg_g && g_is_m; }
};
GTheoremVerdict g_theorem_verdict(const std::vector<Int>& h);

struct UbtReport {
  bool ok = true;
  int fail_index = -1;
  int equality_through = -1;  // largest q with equality for all i <= q
};
// h_i <= C(m-n+i-1, i) for 0 <= i <= floor(n/2).
UbtReport ubt_check(const std::vector<Int>& h, int m, int n);

std::vector<Int> product_h(const std::vector<Int>& h1,
                           const std::vector<Int>& h2);
// h_0 = h_n = 1, h_i = h_i(P) + h_i(Q) otherwise. Requires equal dimensions
// and h_0 = h_n = 1 on both inputs.
std::vector<Int> connected_sum_h(const std::vector<Int>& h1,
                                 const std::vector<Int>& h2);

struct PoincareSeries {
  IntPoly numerator;  // in t^2
  int denominator_exponent = 0;
};
// F(k(K); t) = (h_0 + h_1 t^2 + ... + h_n t^2n) / (1-t^2)^n
PoincareSeries face_ring_poincare_series(const SimplicialComplex& k);

// Generating polynomials of the strand Euler characteristics, in t^2.
IntPoly chi_poly_zk(const SimplicialComplex& k);   // (1-t^2)^(m-n) h(t^2)
IntPoly chi_poly_rel(const SimplicialComplex& k);  // ... - (1-t^2)^m
IntPoly chi_poly_wk(const SimplicialComplex& k);   // ... + (chi(K)-1)(1-t^2)^m

enum class CubicalMode { cc, cub };
// Face counts of the cubical complex built from pairs I <= J with J in K
// (I nonempty for cub); the k-cells are the pairs with |J| - |I| = k.
std::vector<Int> cubical_counts(const SimplicialComplex& k, CubicalMode mode);
// Closed form for the cubical subdivision of a simple n-polytope with face
// vector fp: f_k = sum_{i=0..n-k} C(n-i, k) f_{n-i-1}, f_{-1} = 1.
std::vector<Int> cubical_counts_polytope(const std::vector<Int>& fp, int n);

// Largest q such that every q-subset of the labels is a face
// (= min_missing_face - 1; m for the full simplex).
int neighbourliness(const SimplicialComplex& k);
// Size of the smallest non-face; m+1 when there is none (full simplex).
int min_missing_face(const SimplicialComplex& k);

}  // namespace torcomb
