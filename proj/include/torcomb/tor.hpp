#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torcomb/base.hpp"
#include "torcomb/facevec.hpp"
#include "torcomb/matrix.hpp"
#include "torcomb/simplicial.hpp"

namespace torcomb {

// Basis monomial u_I v_J of the Koszul cochain subcomplex: J a face of K,
// I disjoint from J. bidegree (-|I|, 2(|I|+|J|)).
struct KMono {
  Vset i = 0, j = 0;
  bool operator==(const KMono& o) const { return i == o.i && j == o.j; }
};
inline bool kmono_less(const KMono& a, const KMono& b) {
  if (a.i != b.i) return vset_seq_less(a.i, b.i);
  return vset_seq_less(a.j, b.j);
}

// One second-degree strand 2p of the cochain complex: bases and cochain
// differentials d_q : A^{-q,2p} -> A^{-q+1,2p}.
struct KoszulStrand {
  int p = 0;
  std::vector<std::vector<KMono>> basis;  // index q = 0..p, sorted by kmono_less
  std::vector<SparseMatrix> d;            // d[q] : basis[q] -> basis[q-1], q >= 1
};
KoszulStrand koszul_strand(const SimplicialComplex& k, int p);

// Bigraded Betti numbers b_{-q,2p}; only nonzero entries are stored.
struct BettiTable {
  int m = 0, n = 0;
  std::map<std::pair<int, int>, long> entries;  // key (q, p)

  long at(int q, int p) const;
  void set(int q, int p, long v);
  bool operator==(const BettiTable& o) const { return entries == o.entries; }
  // b_k = sum over -q+2p = k
  std::vector<long> totals() const;
  // sum_q (-1)^q b_{-q,2p} for each p
  IntPoly strand_euler() const;
};

// Strand-by-strand cohomology ranks of the Koszul subcomplex.
BettiTable bigraded_betti(const SimplicialComplex& k, int jobs = 1);

// Independent path: beta^{-i,2j} = sum over j-subsets I of
// dim H~_{j-i-1}(K_I). Shares nothing with the strand computation except
// integer rank.
BettiTable hochster_betti(const SimplicialComplex& k, int jobs = 1);

// Cohomology class in bidegree (-q, 2p): coefficients over the lex-sorted
// monomial basis, reduced against a fixed echelon basis of coboundaries.
struct CohClass {
  int q = 0, p = 0;
  std::vector<Rat> coeffs;  // empty or all-zero = zero class
  bool is_zero() const;
};

// Per-complex cache of strand bases and echelon data, so repeated class
// arithmetic on one K stays cheap. Not thread-safe across bidegrees.
class TorContext {
 public:
  explicit TorContext(SimplicialComplex k) : k_(std::move(k)) {}

  const SimplicialComplex& complex() const { return k_; }
  const std::vector<KMono>& basis(int q, int p);
  long betti(int q, int p);
  // class of a cocycle given as monomial combination (validated)
  CohClass make_class(int q, int p, const std::vector<std::pair<KMono, Rat>>&);
  CohClass reduce(int q, int p, std::vector<Rat> vec);

  CohClass cup(const CohClass& a, const CohClass& b);
  // Fundamental class of an oriented sphere complex; checks that every
  // facet monomial lands in the same class with the orientation sign chain.
  CohClass fundamental_class(const OrientedSphereComplex& sphere);
  // Pairing coefficient <a cup b, top class> for complementary bidegrees.
  Rat pairing(const CohClass& a, const CohClass& b,
              const OrientedSphereComplex& sphere);
  // Rank of the pairing matrix H^{-q,2p} x H^{-q',2p'} -> Q.
  long pairing_rank(int q, int p, const OrientedSphereComplex& sphere);

 private:
  struct Degree;  // echelon data per (q,p)
  Degree& degree(int q, int p);
  SimplicialComplex k_;
  std::map<std::pair<int, int>, std::shared_ptr<Degree>> degrees_;
  std::map<int, std::shared_ptr<KoszulStrand>> strands_;
  const KoszulStrand& strand(int p);
};

struct PoincareDualityReport {
  bool table_symmetric = true;
  std::optional<std::pair<int, int>> asym_at;  // first (q,p) violating symmetry
  long top_rank = 0;                           // b_{-(m-n),2m}
  bool pairing_nondegenerate = true;           // only meaningful if computed
  std::vector<std::pair<std::pair<int, int>, long>> pairing_ranks;
};
// Symmetry b_{-q,2p} = b_{-(m-n)+q,2(m-p)} for a sphere complex; when
// with_pairing is set, also the rank of every cup-product pairing block.
PoincareDualityReport poincare_duality_check(const SimplicialComplex& k,
                                             bool with_pairing = true);

struct CmReport {
  bool cohen_macaulay = true;
  bool gorenstein_star = true;
  std::optional<Vset> cm_witness;   // first link violating Reisner
  std::optional<Vset> gor_witness;  // first link without sphere homology
};
// Reisner: H~_i(link I) = 0 for i < dim link I, all I in K.
// Gorenstein*: every link has the homology of a sphere of its dimension.
CmReport cm_gorenstein_classify(const SimplicialComplex& k);

// Bigraded ranks of Lambda[u_1..u_k] tensor k(K) with du_s = sum_j L[s][j] v_j.
// Strands 2p for p = 0..max_p (default m). L = identity recovers
// bigraded_betti.
BettiTable tor_with_forms(const SimplicialComplex& k, const IntMatrix& forms,
                          int max_p = -1, int jobs = 1);

// dim H^p of the real coordinate arrangement complement: regrade the table
// additively, p = j - i over entries (-i, 2j).
std::vector<long> real_regraded_betti(const BettiTable& table);
std::vector<long> real_regraded_betti(const SimplicialComplex& k, int jobs = 1);

}  // namespace torcomb
