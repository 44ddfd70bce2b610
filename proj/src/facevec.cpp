#include "torcomb/facevec.hpp"

#include <algorithm>

namespace torcomb {

void IntPoly::trim() {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

IntPoly IntPoly::one_minus_x_pow(int e) {
  IntPoly p;
  p.c.resize(e + 1);
  for (int k = 0; k <= e; ++k) p.c[k] = ((k % 2) ? -1 : 1) * binom(e, k);
  p.trim();
  return p;
}

Int IntPoly::eval(const Int& x) const {
  Int r = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  IntPoly r;
  r.c.resize(std::max(a.c.size(), b.c.size()));
  for (std::size_t k = 0; k < r.c.size(); ++k)
    r.c[k] = a.at(static_cast<int>(k)) + b.at(static_cast<int>(k));
  r.trim();
  return r;
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  return a + Int(-1) * b;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.c.empty() || b.c.empty()) return IntPoly();
  IntPoly r;
  r.c.resize(a.c.size() + b.c.size() - 1);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
  }
  r.trim();
  return r;
}

IntPoly operator*(const Int& s, const IntPoly& a) {
  IntPoly r = a;
  for (auto& x : r.c) x *= s;
  r.trim();
  return r;
}

std::string poly_str(const IntPoly& p, const std::string& var,
                     int exponent_scale) {
  if (p.c.empty()) return "0";
  std::string out;
  for (int k = 0; k <= p.deg(); ++k) {
    Int v = p.at(k);
    if (v == 0) continue;
    if (!out.empty()) out += (v > 0) ? " + " : " - ";
    else if (v < 0) out += "-";
    Int a = abs(v);
    int e = k * exponent_scale;
    if (a != 1 || e == 0) out += a.get_str();
    if (e > 0) {
      out += var;
      if (e > 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

std::vector<Int> f_to_h(const std::vector<Int>& f, int n) {
  if (static_cast<int>(f.size()) > n)
    throw domain_error("f-vector longer than the requested dimension");
  auto fv = [&](int i) -> Int {
    if (i < 0) return 1;
    return i < static_cast<int>(f.size()) ? f[i] : Int(0);
  };
  std::vector<Int> h(n + 1);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= k; ++i)
      h[k] += (((k - i) % 2) ? -1 : 1) * binom(n - i, n - k) * fv(i - 1);
  return h;
}

std::vector<Int> h_to_f(const std::vector<Int>& h) {
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<Int> f(n);
  for (int k = 0; k < n; ++k)
    for (int q = k; q <= n; ++q) f[n - 1 - k] += binom(q, k) * h[n - q];
  return f;
}

std::vector<Int> h_vector(const SimplicialComplex& k) {
  return f_to_h(k.f_vector(), k.dim() + 1);
}

std::vector<Int> g_vector(const std::vector<Int>& h) {
  const int n = static_cast<int>(h.size()) - 1;
  std::vector<Int> g;
  for (int i = 0; i <= n / 2; ++i) g.push_back(i ? h[i] - h[i - 1] : h[0]);
  return g;
}

bool DefectReport::zero() const {
  return std::all_of(defect.begin(), defect.end(),
                     [](const Int& d) { return d == 0; });
}

DefectReport dehn_sommerville_defect(const std::vector<Int>& h) {
  const int n = static_cast<int>(h.size()) - 1;
  DefectReport r;
  for (int i = 0; i <= n; ++i) {
    r.defect.push_back(h[n - i] - h[i]);
    r.predicted.push_back(((i % 2) ? -1 : 1) * (h[n] - 1) * binom(n, i));
  }
  return r;
}

Int binomial_upper(const Int& a, int i) {
  if (i < 1) throw domain_error("binomial_upper requires i >= 1");
  if (a < 0) throw domain_error("binomial_upper requires a >= 0");
  if (a == 0) return 0;
  Int rest = a, out = 0;
  for (int j = i; rest > 0; --j) {
    // greedy: largest x with C(x, j) <= rest
    long x = j;
    while (binom(x + 1, j) <= rest) ++x;
    rest -= binom(x, j);
    out += binom(x + 1, j + 1);
  }
  return out;
}

MVectorVerdict is_m_vector(const std::vector<Int>& k) {
  MVectorVerdict v;
  if (k.empty() || k[0] != 1) {
    v.ok = false;
    v.fail_index = 0;
    return v;
  }
  for (std::size_t i = 1; i < k.size(); ++i)
    if (k[i] < 0) {
      v.ok = false;
      v.fail_index = static_cast<int>(i);
      return v;
    }
  for (std::size_t i = 1; i + 1 < k.size(); ++i)
    if (k[i + 1] > binomial_upper(k[i], static_cast<int>(i))) {
      v.ok = false;
      v.fail_index = static_cast<int>(i) + 1;
      return v;
    }
  return v;
}

GTheoremVerdict g_theorem_verdict(const std::vector<Int>& h) {
  GTheoremVerdict v;
  const int n = static_cast<int>(h.size()) - 1;
  for (int i = 0; i <= n; ++i)
    if (h[i] != h[n - i]) {
      v.symmetric = false;
      v.fail_symmetric = i;
      break;
    }
  std::vector<Int> g = g_vector(h);
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] < 0) {
      v.nonneg_g = false;
      v.fail_nonneg = static_cast<int>(i);
      break;
    }
  // negative h entries can never come from a polytope (the h-vector is an
  // M-vector up to the middle and symmetric), so they count as a
  // nonnegativity failure even when the half-range differences look fine
  for (std::size_t i = 0; i < h.size() && v.nonneg_g; ++i)
    if (h[i] < 0) {
      v.nonneg_g = false;
      v.fail_nonneg = static_cast<int>(i);
    }
  if (v.nonneg_g) {
    MVectorVerdict mv = is_m_vector(g);
    v.g_is_m = mv.ok;
    v.fail_m = mv.fail_index;
  } else {
    v.g_is_m = false;
    v.fail_m = v.fail_nonneg;
  }
  return v;
}

UbtReport ubt_check(const std::vector<Int>& h, int m, int n) {
  if (static_cast<int>(h.size()) != n + 1)
    throw domain_error("ubt_check: h-vector must have length n+1");
  UbtReport r;
  bool still_equal = true;
  for (int i = 0; i <= n / 2; ++i) {
    Int bound = binom(m - n + i - 1, i);
    if (h[i] > bound) {
      r.ok = false;
      if (r.fail_index < 0) r.fail_index = i;
      still_equal = false;
    } else if (h[i] == bound && still_equal) {
      r.equality_through = i;
    } else {
      still_equal = false;
    }
  }
  return r;
}

std::vector<Int> product_h(const std::vector<Int>& h1,
                           const std::vector<Int>& h2) {
  IntPoly p = IntPoly(h1) * IntPoly(h2);
  std::vector<Int> out(h1.size() + h2.size() - 1);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = p.at(static_cast<int>(k));
  return out;
}

std::vector<Int> connected_sum_h(const std::vector<Int>& h1,
                                 const std::vector<Int>& h2) {
  if (h1.size() != h2.size())
    throw domain_error("connected sum of h-vectors of different dimensions");
  const int n = static_cast<int>(h1.size()) - 1;
  if (h1[0] != 1 || h1[n] != 1 || h2[0] != 1 || h2[n] != 1)
    throw domain_error("connected sum requires h_0 = h_n = 1");
  std::vector<Int> h(n + 1);
  h[0] = h[n] = 1;
  for (int i = 1; i < n; ++i) h[i] = h1[i] + h2[i];
  return h;
}

PoincareSeries face_ring_poincare_series(const SimplicialComplex& k) {
  return PoincareSeries{IntPoly(h_vector(k)), k.dim() + 1};
}

IntPoly chi_poly_zk(const SimplicialComplex& k) {
  const int n = k.dim() + 1;
  return IntPoly::one_minus_x_pow(k.m() - n) * IntPoly(h_vector(k));
}

IntPoly chi_poly_rel(const SimplicialComplex& k) {
  return chi_poly_zk(k) - IntPoly::one_minus_x_pow(k.m());
}

IntPoly chi_poly_wk(const SimplicialComplex& k) {
  Int corr = euler_characteristic(k) - 1;
  return chi_poly_zk(k) + corr * IntPoly::one_minus_x_pow(k.m());
}

std::vector<Int> cubical_counts(const SimplicialComplex& k, CubicalMode mode) {
  const int n = k.dim() + 1;
  std::vector<Int> f(n + 1);
  for (int card = 0; card <= n; ++card) {
    if (mode == CubicalMode::cub && card == 0) continue;
    Int count = static_cast<long>(k.faces_of_card(card).size());
    for (int sz = 0; sz <= card; ++sz) {
      // cells C_{I <= J} with |J| = card, |I| = card - sz have dimension sz
      if (mode == CubicalMode::cub && sz == card) continue;  // I nonempty
      f[sz] += count * binom(card, card - sz);
    }
  }
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<Int> cubical_counts_polytope(const std::vector<Int>& fp, int n) {
  auto fv = [&](int i) -> Int {
    if (i < 0) return 1;
    return i < static_cast<int>(fp.size()) ? fp[i] : Int(0);
  };
  std::vector<Int> f(n + 1);
  for (int k = 0; k <= n; ++k)
    for (int i = 0; i <= n - k; ++i) f[k] += binom(n - i, k) * fv(n - i - 1);
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

int min_missing_face(const SimplicialComplex& k) {
  const int m = k.m();
  for (int size = 1; size <= m; ++size) {
    // some size-subset missing <=> f_{size-1} < C(m, size)
    Int have = static_cast<long>(k.faces_of_card(size).size());
    if (have < binom(m, size)) return size;
  }
  return m + 1;
}

int neighbourliness(const SimplicialComplex& k) {
  return min_missing_face(k) - 1;
}

}  // namespace torcomb
