#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "torcomb/base.hpp"

namespace torcomb {

// Dense matrix over the integers, row-major. Immutable by convention once
// handed to the algorithms below; all of them work on copies.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Int> entries);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }

  IntMatrix transposed() const;
  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

// Rank over the rationals by fraction-free (Bareiss) elimination.
std::size_t rank_rational(const IntMatrix& m);

// Exact determinant of a square matrix (Bareiss). Throws domain_error on
// non-square input.
Int det_integer(const IntMatrix& m);

// Nonzero invariant factors d1 | d2 | ... of the Smith normal form.
std::vector<Int> smith_invariants(const IntMatrix& m);

// U * A * V = D with U, V unimodular and D in Smith normal form.
struct SmithDecomposition {
  IntMatrix u, d, v;
  std::vector<Int> invariants;  // nonzero diagonal of d
};
SmithDecomposition smith_decompose(const IntMatrix& m);

// Exact integer inverse of a matrix with determinant +-1. Throws
// domain_error otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);

// Columns form a basis of ker(A) over Z; the span is a direct summand.
IntMatrix kernel_basis(const IntMatrix& m);

// Sparse matrix for exact rank computations on large 0/+-1 complexes.
// Rows are kept sorted by column index.
struct SparseMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<std::pair<std::uint32_t, Int>>> row;

  explicit SparseMatrix(std::size_t r = 0, std::size_t c = 0)
      : rows(r), cols(c), row(r) {}
  void add(std::size_t i, std::size_t j, Int v);
  std::size_t nnz() const;
};

// Exact rank over the rationals. Destroys its argument.
std::size_t sparse_rank(SparseMatrix m);

}  // namespace torcomb
