#include "torcomb/arrangements.hpp"

#include <algorithm>
#include <map>

#include "torcomb/tor.hpp"

namespace torcomb {

namespace {

std::vector<Vset> minimal_sets(std::vector<Vset> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Vset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool has_subset = false;
    for (std::size_t j = 0; j < sets.size() && !has_subset; ++j)
      has_subset = i != j && (sets[i] & sets[j]) == sets[j];
    if (!has_subset) out.push_back(sets[i]);
  }
  std::sort(out.begin(), out.end(), vset_seq_less);
  return out;
}

}  // namespace

CoordinateArrangement make_arrangement(
    int m, const std::vector<std::vector<int>>& gens) {
  CoordinateArrangement a;
  a.m = m;
  std::vector<Vset> sets;
  for (const auto& g : gens) {
    for (int v : g)
      if (v < 1 || v > m)
        throw domain_error("arrangement generator index out of range");
    if (g.empty())
      throw domain_error("empty generator would be the whole space");
    sets.push_back(vset_of(g));
  }
  a.generators = minimal_sets(std::move(sets));
  return a;
}

SimplicialComplex complex_from_arrangement(const CoordinateArrangement& a) {
  if (a.m > 24) throw domain_error("arrangement too large to enumerate");
  const Vset full = (a.m == 0) ? 0 : ((Vset{1} << a.m) - 1);
  std::vector<Vset> faces;
  for (Vset i = 0;; ++i) {
    bool face = true;
    for (Vset g : a.generators)
      if ((i & g) == g) {
        face = false;
        break;
      }
    if (face) faces.push_back(i);
    if (i == full) break;
  }
  return SimplicialComplex::from_facet_sets(a.m, std::move(faces));
}

CoordinateArrangement arrangement_from_complex(const SimplicialComplex& k) {
  CoordinateArrangement a;
  a.m = k.m();
  if (a.m > 24) throw domain_error("complex too large to enumerate non-faces");
  const Vset full = (a.m == 0) ? 0 : ((Vset{1} << a.m) - 1);
  for (Vset i = 0;; ++i) {
    if (!k.has_face(i)) {
      // minimal non-face: all maximal proper subsets are faces
      bool minimal = true;
      Vset rest = i;
      while (rest && minimal) {
        int b = __builtin_ctzll(rest);
        rest &= rest - 1;
        minimal = k.has_face(i & ~(Vset{1} << b));
      }
      if (minimal) a.generators.push_back(i);
    }
    if (i == full) break;
  }
  std::sort(a.generators.begin(), a.generators.end(), vset_seq_less);
  return a;
}

std::vector<long> coord_complement_betti(const SimplicialComplex& k, int jobs) {
  BettiTable t = bigraded_betti(k, jobs);
  int maxdeg = 0;
  for (const auto& [qp, v] : t.entries)
    maxdeg = std::max(maxdeg, 2 * qp.second - qp.first);
  std::vector<long> out(maxdeg + 1, 0);
  for (const auto& [qp, v] : t.entries) out[2 * qp.second - qp.first] += v;
  return out;
}

std::vector<long> real_coord_complement_betti(const SimplicialComplex& k,
                                              int jobs) {
  return real_regraded_betti(k, jobs);
}

DiagonalStrand diagonal_strand(const SimplicialComplex& k) {
  const int m = k.m();
  if (m > 10) throw domain_error("diagonal strand too large to enumerate");
  const Vset full = (m == 0) ? 0 : ((Vset{1} << m) - 1);

  DiagonalStrand s;
  s.basis.resize(m + 1);
  std::vector<Vset> tuple;
  auto rec = [&](auto&& self, Vset remaining) -> void {
    if (remaining == 0) {
      if (!tuple.empty() && tuple.size() <= static_cast<std::size_t>(m))
        s.basis[tuple.size()].push_back(tuple);
      return;
    }
    // nonempty faces inside `remaining`; fix the lowest remaining label in
    // or out of the next block? Blocks are ordered, so any nonempty face
    // subset of `remaining` can come next.
    for (int c = 1; c <= k.dim() + 1; ++c)
      for (Vset f : k.faces_of_card(c)) {
        if ((f & remaining) != f) continue;
        tuple.push_back(f);
        self(self, remaining & ~f);
        tuple.pop_back();
      }
  };
  if (m > 0) rec(rec, full);

  s.d.resize(m + 1, SparseMatrix());
  for (int p = 1; p <= m; ++p) {
    std::map<std::vector<Vset>, std::size_t> row_of;
    for (std::size_t i = 0; i < s.basis[p - 1].size(); ++i)
      row_of[s.basis[p - 1][i]] = i;
    SparseMatrix d(s.basis[p - 1].size(), s.basis[p].size());
    for (std::size_t c = 0; c < s.basis[p].size(); ++c) {
      const auto& t = s.basis[p][c];
      int sgn = -1;  // (-1)^s for merging entries s, s+1 (1-based s)
      for (std::size_t pos = 0; pos + 1 < t.size(); ++pos) {
        Vset merged = t[pos] | t[pos + 1];
        if (k.has_face(merged)) {
          std::vector<Vset> shorter;
          for (std::size_t a = 0; a < t.size(); ++a) {
            if (a == pos) {
              shorter.push_back(merged);
              ++a;  // skip pos+1
            } else {
              shorter.push_back(t[a]);
            }
          }
          d.add(row_of.at(shorter), c, sgn);
        }
        sgn = -sgn;
      }
    }
    s.d[p] = std::move(d);
  }
  return s;
}

std::vector<long> diagonal_complement_betti(const SimplicialComplex& k) {
  const int m = k.m();
  DiagonalStrand s = diagonal_strand(k);
  std::vector<std::size_t> rk(m + 2, 0);
  for (int p = 1; p <= m; ++p) rk[p] = sparse_rank(std::move(s.d[p]));
  std::vector<long> h(m + 1, 0);
  for (int i = 0; i <= m; ++i) {
    const int p = m - i;
    if (p < 0) continue;
    if (p == 0) {
      // no 0-tuples unless m = 0, where the empty tuple is the unit
      h[i] = (m == 0) ? 1 : 0;
      continue;
    }
    h[i] = static_cast<long>(s.basis[p].size()) - static_cast<long>(rk[p]) -
           static_cast<long>(rk[p + 1]);
  }
  return h;
}

}  // namespace torcomb
