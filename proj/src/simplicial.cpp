#include "torcomb/simplicial.hpp"

#include <algorithm>
#include <map>
#include <queue>

#include "torcomb/matrix.hpp"

namespace torcomb {

namespace {

std::vector<Vset> maximal_sets(std::vector<Vset> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<Vset> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool contained = false;
    for (std::size_t j = 0; j < sets.size() && !contained; ++j)
      contained = i != j && (sets[i] & sets[j]) == sets[i] &&
                  (i < j || sets[i] != sets[j]);
    if (!contained) out.push_back(sets[i]);
  }
  std::sort(out.begin(), out.end(), vset_seq_less);
  return out;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_generators(
    int m, const std::vector<std::vector<int>>& generators) {
  if (m < 0 || m > 63) throw domain_error("vertex count out of range");
  std::vector<Vset> sets;
  for (const auto& g : generators) {
    for (int v : g)
      if (v < 1 || v > m)
        throw domain_error("vertex label " + std::to_string(v) +
                           " out of range 1.." + std::to_string(m));
    sets.push_back(vset_of(g));
  }
  return from_facet_sets(m, std::move(sets));
}

SimplicialComplex SimplicialComplex::from_facet_sets(int m,
                                                     std::vector<Vset> facets) {
  SimplicialComplex k;
  k.m_ = m;
  k.facets_ = maximal_sets(std::move(facets));
  if (k.facets_.empty()) k.facets_ = {0};

  k.face_set_.clear();
  for (Vset f : k.facets_) {
    // all subsets of f
    Vset s = f;
    while (true) {
      k.face_set_.insert(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  k.top_card_ = 0;
  for (Vset f : k.facets_) k.top_card_ = std::max(k.top_card_, vcount(f));
  k.faces_by_card_.assign(k.top_card_ + 1, {});
  for (Vset f : k.face_set_) k.faces_by_card_[vcount(f)].push_back(f);
  for (auto& level : k.faces_by_card_)
    std::sort(level.begin(), level.end(), vset_seq_less);
  return k;
}

const std::vector<Vset>& SimplicialComplex::faces_of_card(int k) const {
  static const std::vector<Vset> empty;
  if (k < 0 || k > top_card_) return empty;
  return faces_by_card_[k];
}

std::size_t SimplicialComplex::face_count() const { return face_set_.size(); }

std::vector<Int> SimplicialComplex::f_vector() const {
  std::vector<Int> f;
  for (int k = 1; k <= top_card_; ++k)
    f.push_back(static_cast<long>(faces_by_card_[k].size()));
  return f;
}

bool SimplicialComplex::is_pure() const {
  for (Vset f : facets_)
    if (vcount(f) != top_card_) return false;
  return true;
}

bool SimplicialComplex::same_faces(const SimplicialComplex& o) const {
  return m_ == o.m_ && face_set_ == o.face_set_;
}

SimplicialComplex link(const SimplicialComplex& k, Vset i) {
  if (!k.has_face(i)) throw domain_error("link of a non-face");
  std::vector<Vset> gen;
  for (Vset f : k.facets())
    if ((f & i) == i) gen.push_back(f & ~i);
  return SimplicialComplex::from_facet_sets(k.m(), std::move(gen));
}

SimplicialComplex star(const SimplicialComplex& k, int vertex) {
  Vset v = Vset{1} << (vertex - 1);
  if (!k.has_face(v)) throw domain_error("star of a non-vertex");
  std::vector<Vset> gen;
  for (Vset f : k.facets())
    if (f & v) gen.push_back(f);
  return SimplicialComplex::from_facet_sets(k.m(), std::move(gen));
}

SimplicialComplex core(const SimplicialComplex& k) {
  Vset core_set = 0;
  for (Vset v : k.faces_of_card(1)) {
    SimplicialComplex s = star(k, vset_elems(v)[0]);
    if (!s.same_faces(k)) core_set |= v;
  }
  return full_subcomplex(k, core_set);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, Vset i) {
  std::vector<Vset> gen;
  for (Vset f : k.facets()) gen.push_back(f & i);
  return SimplicialComplex::from_facet_sets(k.m(), std::move(gen));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::vector<Vset> gen;
  for (Vset fa : a.facets())
    for (Vset fb : b.facets()) gen.push_back(fa | (fb << a.m()));
  return SimplicialComplex::from_facet_sets(a.m() + b.m(), std::move(gen));
}

SimplicialComplex cone(const SimplicialComplex& k) {
  return join(SimplicialComplex::from_generators(1, {{1}}), k);
}

SimplicialComplex suspension(const SimplicialComplex& k) {
  return join(SimplicialComplex::from_generators(2, {{1}, {2}}), k);
}

SimplicialComplex barycentric_subdivision(const SimplicialComplex& k) {
  std::vector<Vset> verts;  // nonempty faces, by cardinality then sequence
  for (int c = 1; c <= k.dim() + 1; ++c)
    for (Vset f : k.faces_of_card(c)) verts.push_back(f);
  std::map<Vset, int> index;
  for (std::size_t i = 0; i < verts.size(); ++i)
    index[verts[i]] = static_cast<int>(i) + 1;

  // facets of bs(K) = full flags ending at facets of K
  std::vector<std::vector<int>> gens;
  std::vector<int> chain;
  auto descend = [&](auto&& self, Vset f) -> void {
    chain.push_back(index[f]);
    if (vcount(f) == 1) {
      gens.push_back(chain);
    } else {
      Vset rest = f;
      while (rest) {
        int b = __builtin_ctzll(rest);
        rest &= rest - 1;
        self(self, f & ~(Vset{1} << b));
      }
    }
    chain.pop_back();
  };
  for (Vset f : k.facets())
    if (f) descend(descend, f);
  if (gens.empty()) return SimplicialComplex::from_generators(0, {});
  return SimplicialComplex::from_generators(static_cast<int>(verts.size()),
                                            gens);
}

SimplicialComplex associated_complex(const SimplicialComplex& k) {
  const int m = k.m();
  if (m > 24) throw domain_error("associated complex: too many vertices");
  const Vset full = (m == 64) ? ~Vset{0} : ((Vset{1} << m) - 1);
  if (k.has_face(full))
    throw domain_error("associated complex undefined for the full simplex");
  std::vector<Vset> gen;
  for (Vset i = 0; i < (Vset{1} << m); ++i)
    if (!k.has_face(full & ~i)) gen.push_back(i);
  return SimplicialComplex::from_facet_sets(m, std::move(gen));
}

SimplicialComplex boundary_simplex(int n) {
  if (n < 0) throw domain_error("boundary_simplex: negative dimension");
  const int m = n + 1;
  std::vector<Vset> gen;
  const Vset full = (Vset{1} << m) - 1;
  for (int i = 0; i < m; ++i) gen.push_back(full & ~(Vset{1} << i));
  if (m == 1) gen = {0};  // boundary of a point is empty
  return SimplicialComplex::from_facet_sets(m, std::move(gen));
}

SimplicialComplex polygon(int m) {
  if (m < 3) throw domain_error("polygon needs at least 3 vertices");
  std::vector<std::vector<int>> gen;
  for (int i = 1; i <= m; ++i) gen.push_back({i, i % m + 1});
  return SimplicialComplex::from_generators(m, gen);
}

SimplicialComplex cyclic_sphere(int n, int m) {
  if (n < 2 || m <= n) throw domain_error("cyclic_sphere requires m > n >= 2");
  std::vector<Vset> gen;
  std::vector<int> subset(n);
  auto gale = [&](const std::vector<int>& s) {
    std::vector<bool> in(m + 1, false);
    for (int v : s) in[v] = true;
    for (int i = 1; i <= m; ++i) {
      if (in[i]) continue;
      int between = 0;
      for (int j = i + 1; j <= m; ++j) {
        if (in[j]) {
          ++between;
        } else {
          if (between % 2 != 0) return false;
          between = 0;
        }
      }
      // trailing ones touch the end and are allowed
    }
    return true;
  };
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == n) {
      if (gale(subset)) gen.push_back(vset_of(subset));
      return;
    }
    for (int v = next; v <= m; ++v) {
      subset[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 1);
  return SimplicialComplex::from_facet_sets(m, std::move(gen));
}

namespace {

// boundary matrix from faces of cardinality c to cardinality c-1
SparseMatrix boundary_matrix(const SimplicialComplex& k, int c) {
  const auto& dom = k.faces_of_card(c);
  const auto& cod = k.faces_of_card(c - 1);
  std::map<Vset, std::size_t> row_of;
  for (std::size_t i = 0; i < cod.size(); ++i) row_of[cod[i]] = i;
  SparseMatrix d(cod.size(), dom.size());
  for (std::size_t j = 0; j < dom.size(); ++j) {
    Vset f = dom[j];
    int sgn = 1;
    Vset rest = f;
    while (rest) {
      int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      d.add(row_of.at(f & ~(Vset{1} << b)), j, sgn);
      sgn = -sgn;
    }
  }
  return d;
}

}  // namespace

std::vector<long> reduced_homology(const SimplicialComplex& k) {
  const int top = k.dim() + 1;  // top cardinality
  std::vector<std::size_t> rank_d(top + 2, 0);
  for (int c = 1; c <= top; ++c) rank_d[c] = sparse_rank(boundary_matrix(k, c));
  std::vector<long> h(top + 1, 0);
  for (int c = 0; c <= top; ++c) {
    // homology in dimension c-1
    h[c] = static_cast<long>(k.faces_of_card(c).size()) -
           static_cast<long>(rank_d[c]) - static_cast<long>(rank_d[c + 1]);
  }
  return h;
}

Int euler_characteristic(const SimplicialComplex& k) {
  Int chi = 0;
  int sgn = 1;
  for (const Int& f : k.f_vector()) {
    chi += sgn * f;
    sgn = -sgn;
  }
  return chi;
}

std::vector<std::vector<int>> OrientedSphereComplex::oriented_facets() const {
  std::vector<std::vector<int>> out;
  for (std::size_t i = 0; i < base.facets().size(); ++i) {
    std::vector<int> t = vset_elems(base.facets()[i]);
    if (sign[i] < 0 && t.size() >= 2) std::swap(t[t.size() - 1], t[t.size() - 2]);
    out.push_back(std::move(t));
  }
  return out;
}

namespace {

struct RidgeInfo {
  // (facet index, sign with which the ascending facet induces this ridge)
  std::vector<std::pair<std::size_t, int>> at;
};

OrientedSphereComplex orient_checked(const SimplicialComplex& k,
                                     const std::vector<int>* prescribed) {
  if (k.dim() < 0) throw domain_error("cannot orient the empty complex");
  if (!k.is_pure()) throw domain_error("not a pseudomanifold: complex is not pure");
  const auto& facets = k.facets();

  std::map<Vset, RidgeInfo> ridges;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    Vset f = facets[i];
    int sgn = 1;
    Vset rest = f;
    while (rest) {
      int b = __builtin_ctzll(rest);
      rest &= rest - 1;
      ridges[f & ~(Vset{1} << b)].at.emplace_back(i, sgn);
      sgn = -sgn;
    }
  }
  for (auto& [r, info] : ridges)
    if (info.at.size() != 2)
      throw domain_error("not a pseudomanifold: ridge " + vset_str(r) +
                         " lies in " + std::to_string(info.at.size()) +
                         " facets");

  std::vector<int> sign(facets.size(), 0);
  if (prescribed) {
    sign = *prescribed;
  } else {
    sign[0] = 1;
    std::queue<std::size_t> bfs;
    bfs.push(0);
    while (!bfs.empty()) {
      std::size_t i = bfs.front();
      bfs.pop();
      Vset f = facets[i];
      Vset rest = f;
      while (rest) {
        int b = __builtin_ctzll(rest);
        rest &= rest - 1;
        const auto& at = ridges.at(f & ~(Vset{1} << b)).at;
        std::size_t j = at[0].first == i ? at[1].first : at[0].first;
        int si = at[0].first == i ? at[0].second : at[1].second;
        int sj = at[0].first == i ? at[1].second : at[0].second;
        // induced orientations must be opposite: sign_i*si = -sign_j*sj
        int need = -sign[i] * si * sj;
        if (sign[j] == 0) {
          sign[j] = need;
          bfs.push(j);
        }
      }
    }
    for (int s : sign)
      if (s == 0)
        throw domain_error("not a pseudomanifold: facet graph disconnected");
  }

  for (const auto& [r, info] : ridges) {
    auto [i, si] = info.at[0];
    auto [j, sj] = info.at[1];
    if (sign[i] * si != -sign[j] * sj)
      throw domain_error(prescribed
                             ? "prescribed orientation is inconsistent at ridge " +
                                   vset_str(r)
                             : "complex is non-orientable");
  }
  return OrientedSphereComplex{k, sign};
}

}  // namespace

OrientedSphereComplex orient_sphere(const SimplicialComplex& k) {
  return orient_checked(k, nullptr);
}

OrientedSphereComplex orient_with(const SimplicialComplex& k,
                                  const std::vector<std::vector<int>>& tuples) {
  const auto& facets = k.facets();
  if (tuples.size() != facets.size())
    throw domain_error("orientation must list every facet exactly once");
  std::vector<int> sign(facets.size(), 0);
  for (const auto& t : tuples) {
    Vset f = vset_of(t);
    auto it = std::find(facets.begin(), facets.end(), f);
    if (it == facets.end() || t.size() != static_cast<std::size_t>(vcount(f)))
      throw domain_error("orientation tuple is not a facet");
    std::size_t idx = it - facets.begin();
    if (sign[idx] != 0) throw domain_error("facet oriented twice");
    // parity of the tuple relative to ascending order
    std::vector<int> asc = vset_elems(f);
    int parity = 0;
    std::vector<int> perm(t.size());
    for (std::size_t a = 0; a < t.size(); ++a)
      perm[a] = static_cast<int>(
          std::find(asc.begin(), asc.end(), t[a]) - asc.begin());
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) parity ^= 1;
    sign[idx] = parity ? -1 : 1;
  }
  return orient_checked(k, &sign);
}

}  // namespace torcomb
