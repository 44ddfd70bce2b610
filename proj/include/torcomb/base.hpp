#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace torcomb {

// All arithmetic in this library is exact: arbitrary-precision integers for
// matrix/polynomial work, rationals only where cohomology-class coordinates
// require them.
using Int = mpz_class;
using Rat = mpq_class;

// Bad user input (files, CLI values, schema violations). Maps to exit code 2.
struct input_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A precondition of a mathematical operation was violated.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline Int binom(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n),
               static_cast<unsigned long>(k));
  return r;
}

// Vertex subsets of {1..m}, m <= 63: vertex i <-> bit i-1.
using Vset = std::uint64_t;

inline int vcount(Vset s) { return __builtin_popcountll(s); }

inline Vset vset_of(const std::vector<int>& verts) {
  Vset s = 0;
  for (int v : verts) s |= Vset{1} << (v - 1);
  return s;
}

inline std::vector<int> vset_elems(Vset s) {
  std::vector<int> out;
  while (s) {
    int b = __builtin_ctzll(s);
    out.push_back(b + 1);
    s &= s - 1;
  }
  return out;
}

// Position (1-based) of vertex v in the ascending enumeration of s.
inline int vset_pos(Vset s, int v) {
  return __builtin_popcountll(s & ((Vset{1} << (v - 1)) - 1)) + 1;
}

// Lexicographic order on the ascending vertex sequences of two sets.
// ({1,3} < {2} because the sequence 1,3 precedes 2.)
inline bool vset_seq_less(Vset a, Vset b) {
  while (a && b) {
    int x = __builtin_ctzll(a), y = __builtin_ctzll(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

inline std::string vset_str(Vset s) {
  std::string out = "{";
  bool first = true;
  for (int v : vset_elems(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace torcomb
