#include <doctest.h>

#include <random>

#include "torcomb/matrix.hpp"

using namespace torcomb;

namespace {

// Independent oracles: cofactor determinant, minor rank, determinantal
// divisors. Only usable for tiny matrices, which is the point.
Int det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) sub(r - 1, cc++) = m(r, c);
    }
    det += ((j % 2) ? -1 : 1) * m(0, j) * det_cofactor(sub);
  }
  return det;
}

void all_minors(const IntMatrix& m, std::size_t k, std::vector<Int>& out) {
  std::vector<std::size_t> ri(k), ci(k);
  auto rows = [&](auto&& self, std::size_t pos, std::size_t next) -> void {
    if (pos == k) {
      auto cols = [&](auto&& selfc, std::size_t cpos, std::size_t cnext) -> void {
        if (cpos == k) {
          IntMatrix sub(k, k);
          for (std::size_t a = 0; a < k; ++a)
            for (std::size_t b = 0; b < k; ++b) sub(a, b) = m(ri[a], ci[b]);
          out.push_back(det_cofactor(sub));
          return;
        }
        for (std::size_t c = cnext; c < m.cols(); ++c) {
          ci[cpos] = c;
          selfc(selfc, cpos + 1, c + 1);
        }
      };
      cols(cols, 0, 0);
      return;
    }
    for (std::size_t r = next; r < m.rows(); ++r) {
      ri[pos] = r;
      self(self, pos + 1, r + 1);
    }
  };
  rows(rows, 0, 0);
}

std::size_t rank_by_minors(const IntMatrix& m) {
  std::size_t best = 0;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<Int> minors;
    all_minors(m, k, minors);
    for (const Int& d : minors)
      if (d != 0) {
        best = k;
        break;
      }
  }
  return best;
}

std::vector<Int> invariants_by_divisors(const IntMatrix& m) {
  std::vector<Int> out;
  Int prev = 1;
  for (std::size_t k = 1; k <= std::min(m.rows(), m.cols()); ++k) {
    std::vector<Int> minors;
    all_minors(m, k, minors);
    Int g = 0;
    for (const Int& d : minors) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 0) break;
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c,
                        int span = 4) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j)
      m(i, j) = static_cast<long>(rng() % (2 * span + 1)) - span;
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  IntMatrix m = IntMatrix::identity(n);
  for (int step = 0; step < 12; ++step) {
    std::size_t a = rng() % n, b = rng() % n;
    if (a == b) continue;
    long f = static_cast<long>(rng() % 5) - 2;
    for (std::size_t j = 0; j < n; ++j) m(a, j) += f * m(b, j);
  }
  return m;
}

}  // namespace

TEST_CASE("rank of trivial and hand-reduced matrices") {
  CHECK(rank_rational(IntMatrix(0, 0)) == 0);
  CHECK(rank_rational(IntMatrix::identity(2)) == 2);
  // augmented boundary in dimension 0 for three vertices: one row of ones
  IntMatrix aug(1, 3);
  for (int j = 0; j < 3; ++j) aug(0, j) = 1;
  CHECK(rank_rational(aug) == 1);
}

TEST_CASE("determinant matches the sign data of the two CP^2 charts") {
  CHECK(det_integer(IntMatrix::identity(2)) == 1);
  CHECK(det_integer(IntMatrix(2, 2, {Int(-1), Int(1), Int(1), Int(0)})) == -1);
  CHECK(det_integer(IntMatrix(2, 2, {Int(0), Int(1), Int(1), Int(-1)})) == -1);
  CHECK_THROWS_AS(det_integer(IntMatrix(2, 3)), domain_error);
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + rng() % 5;
    IntMatrix m = random_matrix(rng, n, n);
    CHECK(det_integer(m) == det_cofactor(m));
  }
}

TEST_CASE("rank against minor enumeration and Smith invariants") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 3);
    std::size_t rk = rank_rational(m);
    CHECK(rk == rank_by_minors(m));
    CHECK(rk == smith_invariants(m).size());
    CHECK(rk == rank_rational(m.transposed()));
  }
}

TEST_CASE("rank is invariant under row and column permutation") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 3 + rng() % 3, 3 + rng() % 3, 3);
    IntMatrix p(m.rows(), m.cols());
    std::vector<std::size_t> rp(m.rows()), cp(m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) rp[i] = i;
    for (std::size_t j = 0; j < m.cols(); ++j) cp[j] = j;
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) p(i, j) = m(rp[i], cp[j]);
    CHECK(rank_rational(p) == rank_rational(m));
  }
}

TEST_CASE("Smith invariants: pinned examples") {
  IntMatrix ones(5, 1);
  for (int i = 0; i < 5; ++i) ones(i, 0) = 1;
  CHECK(smith_invariants(ones) == std::vector<Int>{Int(1)});

  IntMatrix diag(2, 2, {Int(2), Int(0), Int(0), Int(3)});
  CHECK(smith_invariants(diag) == std::vector<Int>({Int(1), Int(6)}));

  CHECK(smith_invariants(IntMatrix(3, 2)).empty());
}

TEST_CASE("Smith invariants against determinantal divisors") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    IntMatrix m = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 5);
    std::vector<Int> inv = smith_invariants(m);
    CHECK(inv == invariants_by_divisors(m));
    for (std::size_t i = 0; i + 1 < inv.size(); ++i) CHECK(inv[i + 1] % inv[i] == 0);
    // U A V = D round trip
    SmithDecomposition s = smith_decompose(m);
    CHECK(s.u * m * s.v == s.d);
    CHECK(det_cofactor(s.u) * det_cofactor(s.u) == 1);
    CHECK(det_cofactor(s.v) * det_cofactor(s.v) == 1);
  }
}

TEST_CASE("unimodular inverse") {
  CHECK(unimodular_inverse(IntMatrix::identity(3)) == IntMatrix::identity(3));
  IntMatrix lv2(2, 2, {Int(-1), Int(1), Int(1), Int(0)});
  IntMatrix inv = unimodular_inverse(lv2);
  CHECK(inv == IntMatrix(2, 2, {Int(0), Int(1), Int(1), Int(1)}));
  CHECK(lv2 * inv == IntMatrix::identity(2));
  CHECK_THROWS_AS(unimodular_inverse(IntMatrix(2, 2, {Int(2), Int(0), Int(0), Int(1)})),
                  domain_error);

  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    IntMatrix u = random_unimodular(rng, 2 + rng() % 4);
    CHECK(u * unimodular_inverse(u) == IntMatrix::identity(u.rows()));
  }
}

TEST_CASE("kernel basis spans a direct summand of the kernel") {
  IntMatrix lambda(2, 3, {Int(1), Int(0), Int(-1), Int(0), Int(1), Int(-1)});
  IntMatrix k = kernel_basis(lambda);
  CHECK(k.cols() == 1);
  IntMatrix prod = lambda * k;
  for (std::size_t i = 0; i < prod.rows(); ++i) CHECK(prod(i, 0) == 0);
  std::vector<Int> inv = smith_invariants(k);
  CHECK(inv == std::vector<Int>{Int(1)});

  std::mt19937 rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    IntMatrix m = random_matrix(rng, 2 + rng() % 3, 2 + rng() % 4, 3);
    IntMatrix kb = kernel_basis(m);
    CHECK(kb.cols() == m.cols() - rank_rational(m));
    IntMatrix z = m * kb;
    for (std::size_t i = 0; i < z.rows(); ++i)
      for (std::size_t j = 0; j < z.cols(); ++j) CHECK(z(i, j) == 0);
  }
}

TEST_CASE("sparse rank agrees with dense rank") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
    IntMatrix m(r, c);
    SparseMatrix s(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) {
        if (rng() % 3 == 0) {
          long v = static_cast<long>(rng() % 7) - 3;
          m(i, j) = v;
          s.add(i, j, Int(v));
        }
      }
    CHECK(sparse_rank(std::move(s)) == rank_rational(m));
  }
}
