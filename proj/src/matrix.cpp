#include "torcomb/matrix.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

namespace torcomb {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Int> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_)
    throw domain_error("matrix entry count does not match dimensions");
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix e(n, n);
  for (std::size_t i = 0; i < n; ++i) e(i, i) = 1;
  return e;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw domain_error("matrix product shape mismatch");
  IntMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += a(i, k) * b(k, j);
    }
  return c;
}

// Fraction-free elimination. With column skips the divisions by the previous
// pivot stay exact (the working entries are minors of the input).
std::size_t rank_rational(const IntMatrix& m) {
  IntMatrix w = m;
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < w.cols() && r < w.rows(); ++c) {
    std::size_t piv = r;
    while (piv < w.rows() && w(piv, c) == 0) ++piv;
    if (piv == w.rows()) continue;
    if (piv != r)
      for (std::size_t j = c; j < w.cols(); ++j) std::swap(w(piv, j), w(r, j));
    for (std::size_t i = r + 1; i < w.rows(); ++i) {
      for (std::size_t j = c + 1; j < w.cols(); ++j)
        w(i, j) = (w(r, c) * w(i, j) - w(i, c) * w(r, j)) / prev;
      w(i, c) = 0;
    }
    prev = w(r, c);
    ++r;
  }
  return r;
}

Int det_integer(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix w = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t piv = k;
    while (piv < n && w(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(w(piv, j), w(k, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        w(i, j) = (w(k, k) * w(i, j) - w(i, k) * w(k, j)) / prev;
      w(i, k) = 0;
    }
    prev = w(k, k);
  }
  return sign * w(n - 1, n - 1);
}

namespace {

struct SmithState {
  IntMatrix d, u, v;
  bool track;

  void row_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < d.cols(); ++j) std::swap(d(a, j), d(b, j));
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) std::swap(u(a, j), u(b, j));
  }
  void col_swap(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < d.rows(); ++i) std::swap(d(i, a), d(i, b));
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) std::swap(v(i, a), v(i, b));
  }
  // row a -= q * row b
  void row_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) -= q * d(b, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) -= q * u(b, j);
  }
  void col_sub(std::size_t a, std::size_t b, const Int& q) {
    if (q == 0) return;
    for (std::size_t i = 0; i < d.rows(); ++i) d(i, a) -= q * d(i, b);
    if (track)
      for (std::size_t i = 0; i < v.rows(); ++i) v(i, a) -= q * v(i, b);
  }
  void row_negate(std::size_t a) {
    for (std::size_t j = 0; j < d.cols(); ++j) d(a, j) = -d(a, j);
    if (track)
      for (std::size_t j = 0; j < u.cols(); ++j) u(a, j) = -u(a, j);
  }
};

SmithDecomposition smith_impl(const IntMatrix& m, bool track) {
  SmithState s{m, IntMatrix::identity(m.rows()), IntMatrix::identity(m.cols()),
               track};
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t t = 0;
  while (t < rows && t < cols) {
    // smallest nonzero |entry| of the trailing submatrix as pivot
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j) {
        if (s.d(i, j) == 0) continue;
        if (!found || mpz_cmpabs(s.d(i, j).get_mpz_t(),
                                 s.d(pi, pj).get_mpz_t()) < 0) {
          pi = i;
          pj = j;
          found = true;
        }
      }
    if (!found) break;
    s.row_swap(t, pi);
    s.col_swap(t, pj);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (s.d(i, t) == 0) continue;
        Int q = s.d(i, t) / s.d(t, t);
        s.row_sub(i, t, q);
        if (s.d(i, t) != 0) {  // remainder becomes the smaller pivot
          s.row_swap(t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (s.d(t, j) == 0) continue;
        Int q = s.d(t, j) / s.d(t, t);
        s.col_sub(j, t, q);
        if (s.d(t, j) != 0) {
          s.col_swap(t, j);
          clean = false;
        }
      }
      if (clean) {
        // pivot must divide the rest of the submatrix
        for (std::size_t i = t + 1; i < rows && clean; ++i)
          for (std::size_t j = t + 1; j < cols && clean; ++j)
            if (s.d(i, j) % s.d(t, t) != 0) {
              s.row_sub(t, i, Int(-1));  // mix row i into the pivot row
              clean = false;
            }
      }
    }
    if (s.d(t, t) < 0) s.row_negate(t);
    ++t;
  }
  SmithDecomposition out{std::move(s.u), std::move(s.d), std::move(s.v), {}};
  for (std::size_t i = 0; i < t; ++i) out.invariants.push_back(out.d(i, i));
  return out;
}

}  // namespace

std::vector<Int> smith_invariants(const IntMatrix& m) {
  return smith_impl(m, false).invariants;
}

SmithDecomposition smith_decompose(const IntMatrix& m) {
  return smith_impl(m, true);
}

IntMatrix unimodular_inverse(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw domain_error("inverse of non-square matrix");
  Int det = det_integer(m);
  if (det != 1 && det != -1)
    throw domain_error("matrix is not unimodular (det = " + det.get_str() + ")");
  const std::size_t n = m.rows();
  // Gauss-Jordan over Q; the result is integral because |det| = 1.
  std::vector<std::vector<Rat>> w(n, std::vector<Rat>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rat(m(i, j));
    w[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (w[piv][c] == 0) ++piv;
    std::swap(w[piv], w[c]);
    Rat p = w[c][c];
    for (auto& x : w[c]) x /= p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || w[i][c] == 0) continue;
      Rat f = w[i][c];
      for (std::size_t j = c; j < 2 * n; ++j) w[i][j] -= f * w[c][j];
    }
  }
  IntMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat x = w[i][n + j];
      x.canonicalize();
      if (x.get_den() != 1) throw domain_error("unimodular inverse not integral");
      inv(i, j) = x.get_num();
    }
  return inv;
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithDecomposition s = smith_decompose(m);
  const std::size_t r = s.invariants.size();
  IntMatrix k(m.cols(), m.cols() - r);
  for (std::size_t i = 0; i < m.cols(); ++i)
    for (std::size_t j = r; j < m.cols(); ++j) k(i, j - r) = s.v(i, j);
  return k;
}

void SparseMatrix::add(std::size_t i, std::size_t j, Int v) {
  if (v == 0) return;
  row[i].emplace_back(static_cast<std::uint32_t>(j), std::move(v));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row) n += r.size();
  return n;
}

namespace {

using SRow = std::vector<std::pair<std::uint32_t, Int>>;

void row_normalize(SRow& r) {
  std::sort(r.begin(), r.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  SRow out;
  for (auto& [c, v] : r) {
    if (!out.empty() && out.back().first == c)
      out.back().second += v;
    else
      out.emplace_back(c, v);
    if (!out.empty() && out.back().second == 0) out.pop_back();
  }
  r = std::move(out);
}

const Int* row_find(const SRow& r, std::uint32_t c) {
  auto it = std::lower_bound(
      r.begin(), r.end(), c,
      [](const auto& e, std::uint32_t col) { return e.first < col; });
  return (it != r.end() && it->first == c) ? &it->second : nullptr;
}

// target = a*target + b*pivot, then divide out the content
void row_combine(SRow& target, const SRow& pivot, const Int& a, const Int& b) {
  SRow out;
  out.reserve(target.size() + pivot.size());
  auto it = target.begin();
  auto jt = pivot.begin();
  while (it != target.end() || jt != pivot.end()) {
    if (jt == pivot.end() || (it != target.end() && it->first < jt->first)) {
      Int v = a * it->second;
      if (v != 0) out.emplace_back(it->first, std::move(v));
      ++it;
    } else if (it == target.end() || jt->first < it->first) {
      Int v = b * jt->second;
      if (v != 0) out.emplace_back(jt->first, std::move(v));
      ++jt;
    } else {
      Int v = a * it->second + b * jt->second;
      if (v != 0) out.emplace_back(it->first, std::move(v));
      ++it;
      ++jt;
    }
  }
  if (!out.empty()) {
    Int g = 0;
    for (auto& [c, v] : out) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) break;
    }
    if (g > 1)
      for (auto& [c, v] : out) v /= g;
  }
  target = std::move(out);
}

}  // namespace

// Exact sparse rank: eliminate with unit pivots of minimal Markowitz cost
// while available; rows may be rescaled (rank is scaling-invariant).
std::size_t sparse_rank(SparseMatrix m) {
  for (auto& r : m.row) row_normalize(r);

  std::vector<std::set<std::uint32_t>> col_rows(m.cols);
  std::vector<bool> row_active(m.rows, true), col_active(m.cols, true);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (auto& [c, v] : m.row[i]) col_rows[c].insert(i);

  std::size_t rank = 0;
  while (true) {
    // pick pivot: unit entries first, then smallest magnitude; tie-break on
    // Markowitz cost (nnz_row-1)*(nnz_col-1)
    long best_cost = -1;
    int best_unit = -1;
    std::size_t pr = 0;
    std::uint32_t pc = 0;
    for (std::size_t i = 0; i < m.rows && !(best_unit == 1 && best_cost == 0);
         ++i) {
      if (!row_active[i] || m.row[i].empty()) continue;
      for (auto& [c, v] : m.row[i]) {
        int unit = (v == 1 || v == -1) ? 1 : 0;
        long cost = static_cast<long>(m.row[i].size() - 1) *
                    static_cast<long>(col_rows[c].size() - 1);
        if (best_cost < 0 || unit > best_unit ||
            (unit == best_unit && cost < best_cost)) {
          best_cost = cost;
          best_unit = unit;
          pr = i;
          pc = c;
        }
        if (best_unit == 1 && best_cost == 0) break;
      }
    }
    if (best_cost < 0) break;

    const Int pv = *row_find(m.row[pr], pc);
    auto victims = col_rows[pc];
    for (std::size_t i : victims) {
      if (i == pr) continue;
      const Int* tv = row_find(m.row[i], pc);
      if (!tv) continue;
      for (auto& [c, v] : m.row[i]) col_rows[c].erase(i);
      if (*tv % pv == 0)
        row_combine(m.row[i], m.row[pr], Int(1), -(*tv / pv));
      else
        row_combine(m.row[i], m.row[pr], pv, -*tv);
      for (auto& [c, v] : m.row[i])
        if (col_active[c]) col_rows[c].insert(i);
    }
    for (auto& [c, v] : m.row[pr]) col_rows[c].erase(pr);
    m.row[pr].clear();
    row_active[pr] = false;
    col_active[pc] = false;
    ++rank;
  }
  return rank;
}

}  // namespace torcomb
