#include "torcomb/quasitoric.hpp"

#include <algorithm>
#include <map>

namespace torcomb {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t[i]);
  }
  return s + ")";
}

}  // namespace

IntMatrix facet_minor(const CharacteristicPair& pair, std::size_t facet_index) {
  const int n = pair.n();
  std::vector<int> tuple = pair.sphere.oriented_facets()[facet_index];
  IntMatrix minor(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) minor(r, c) = pair.lambda(r, tuple[c] - 1);
  return minor;
}

CharacteristicPair validate_pair(OrientedSphereComplex sphere,
                                 IntMatrix lambda) {
  const int n = sphere.n(), m = sphere.base.m();
  if (static_cast<int>(lambda.rows()) != n ||
      static_cast<int>(lambda.cols()) != m)
    throw domain_error("characteristic matrix must be " + std::to_string(n) +
                       "x" + std::to_string(m));
  CharacteristicPair pair{std::move(sphere), std::move(lambda)};
  auto tuples = pair.sphere.oriented_facets();
  for (std::size_t f = 0; f < tuples.size(); ++f) {
    Int det = det_integer(facet_minor(pair, f));
    if (det != 1 && det != -1)
      throw domain_error("facet " + tuple_str(tuples[f]) +
                         " has minor determinant " + det.get_str() +
                         ", not +-1");
  }
  return pair;
}

std::vector<VertexGenusData> vertex_genus_data(const CharacteristicPair& pair,
                                               const std::vector<Int>* nu) {
  const int n = pair.n();
  auto tuples = pair.sphere.oriented_facets();
  std::vector<VertexGenusData> out;
  for (std::size_t f = 0; f < tuples.size(); ++f) {
    VertexGenusData v;
    v.facet = tuples[f];
    IntMatrix minor = facet_minor(pair, f);
    Int det = det_integer(minor);
    v.sigma = (det == 1) ? 1 : -1;
    v.edge_matrix = unimodular_inverse(minor.transposed());
    if (nu) {
      if (static_cast<int>(nu->size()) != n)
        throw domain_error("nu must have one entry per torus dimension");
      v.index = 0;
      for (int c = 0; c < n; ++c) {
        Int w = 0;
        for (int r = 0; r < n; ++r) w += v.edge_matrix(r, c) * (*nu)[r];
        if (w < 0) ++v.index;
        v.weights.push_back(std::move(w));
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

bool is_generic(const CharacteristicPair& pair, const std::vector<Int>& nu) {
  for (const auto& v : vertex_genus_data(pair, &nu))
    for (const Int& w : v.weights)
      if (w == 0) return false;
  return true;
}

std::vector<Int> find_generic_vector(const CharacteristicPair& pair, int skip) {
  const int n = pair.n();
  auto data = vertex_genus_data(pair);
  auto generic = [&](const std::vector<Int>& nu) {
    for (const auto& v : data)
      for (int c = 0; c < n; ++c) {
        Int w = 0;
        for (int r = 0; r < n; ++r) w += v.edge_matrix(r, c) * nu[r];
        if (w == 0) return false;
      }
    return true;
  };
  // lexicographic scan of [-R..R]^n, growing R; new points only
  for (int radius = 1; radius <= 64; ++radius) {
    std::vector<Int> nu(n);
    std::vector<long> x(n, -radius);
    while (true) {
      bool on_shell = false;
      for (long xi : x)
        if (xi == radius || xi == -radius) on_shell = true;
      if (on_shell || radius == 1) {
        for (int i = 0; i < n; ++i) nu[i] = x[i];
        if (generic(nu)) {
          if (skip == 0) return nu;
          --skip;
        }
      }
      int pos = n - 1;
      while (pos >= 0 && x[pos] == radius) {
        x[pos] = -radius;
        --pos;
      }
      if (pos < 0) break;
      ++x[pos];
    }
  }
  throw domain_error("no generic vector found within search radius");
}

GenusReport genus_report(const CharacteristicPair& pair,
                         const std::vector<Int>& nu) {
  auto vertices = vertex_genus_data(pair, &nu);
  for (const auto& v : vertices)
    for (const Int& w : v.weights)
      if (w == 0)
        throw domain_error("nu is not generic: zero pairing at facet " +
                           tuple_str(v.facet));
  GenusReport rep;
  const int n = pair.n();
  rep.chi_y.c.assign(n + 1, Int(0));
  for (const auto& v : vertices)
    rep.chi_y.c[v.index] += ((v.index % 2) ? -1 : 1) * v.sigma;
  rep.chi_y.trim();
  rep.signature = rep.chi_y.eval(1);
  rep.todd = rep.chi_y.at(0);
  rep.top_chern = rep.chi_y.eval(-1);
  rep.vertices = std::move(vertices);
  return rep;
}

std::vector<Int> quasitoric_betti(const SimplicialComplex& kp) {
  return h_vector(kp);
}

std::vector<Int> graded_quotient_dims(const CharacteristicPair& pair) {
  const SimplicialComplex& k = pair.sphere.base;
  const int m = k.m(), n = pair.n();

  std::vector<Int> dims;
  // degree-d monomial basis of k(K), support on a face
  std::vector<std::vector<std::vector<int>>> basis(n + 1);
  for (int d = 0; d <= n; ++d) {
    auto& level = basis[d];
    for (int c = 0; c <= std::min(d, k.dim() + 1); ++c) {
      if (c == 0) {
        if (d == 0) level.push_back(std::vector<int>(m, 0));
        continue;
      }
      for (Vset f : k.faces_of_card(c)) {
        if (d < c) continue;
        std::vector<int> verts = vset_elems(f);
        std::vector<int> part(c, 1);
        auto rec = [&](auto&& self, int pos, int left) -> void {
          if (pos == c - 1) {
            part[pos] = 1 + left;
            std::vector<int> e(m, 0);
            for (int t = 0; t < c; ++t) e[verts[t] - 1] = part[t];
            level.push_back(std::move(e));
            return;
          }
          for (int take = 0; take <= left; ++take) {
            part[pos] = 1 + take;
            self(self, pos + 1, left - take);
          }
        };
        rec(rec, 0, d - c);
      }
    }
    std::sort(level.begin(), level.end());
  }

  for (int d = 0; d <= n; ++d) {
    if (d == 0) {
      dims.push_back(1);
      continue;
    }
    std::map<std::vector<int>, std::size_t> row_of;
    for (std::size_t i = 0; i < basis[d].size(); ++i) row_of[basis[d][i]] = i;
    // relations: mu * theta_i for mu of degree d-1
    SparseMatrix rel(basis[d].size(), basis[d - 1].size() * n);
    for (std::size_t mu = 0; mu < basis[d - 1].size(); ++mu)
      for (int i = 0; i < n; ++i) {
        const std::size_t col = mu * n + i;
        for (int j = 0; j < m; ++j) {
          const Int& coef = pair.lambda(i, j);
          if (coef == 0) continue;
          std::vector<int> e = basis[d - 1][mu];
          e[j] += 1;
          Vset supp = 0;
          for (int t = 0; t < m; ++t)
            if (e[t]) supp |= Vset{1} << t;
          if (!k.has_face(supp)) continue;
          rel.add(row_of.at(e), col, coef);
        }
      }
    dims.push_back(static_cast<long>(basis[d].size()) -
                   static_cast<long>(sparse_rank(std::move(rel))));
  }
  return dims;
}

FreenessReport subtorus_free(const SimplicialComplex& kp, const IntMatrix& s) {
  FreenessReport rep;
  const int m = kp.m(), n = kp.dim() + 1;
  const int r = static_cast<int>(s.cols());
  if (static_cast<int>(s.rows()) != m)
    throw domain_error("subgroup matrix must have one row per vertex");
  if (r > m - n) {
    rep.reason = "rank " + std::to_string(r) + " exceeds m-n = " +
                 std::to_string(m - n) +
                 "; every such subgroup meets an isotropy subgroup";
    return rep;
  }
  // the subgroup itself must be a direct summand
  std::vector<Int> inv = smith_invariants(s);
  if (static_cast<int>(inv.size()) != r ||
      !std::all_of(inv.begin(), inv.end(), [](const Int& x) { return x == 1; })) {
    rep.reason = "matrix does not define a rank-" + std::to_string(r) +
                 " direct summand";
    return rep;
  }
  for (Vset f : kp.facets()) {
    IntMatrix sub(m - vcount(f), r);
    std::size_t out_row = 0;
    for (int i = 0; i < m; ++i) {
      if (f & (Vset{1} << i)) continue;
      for (int j = 0; j < r; ++j) sub(out_row, j) = s(i, j);
      ++out_row;
    }
    std::vector<Int> si = smith_invariants(sub);
    bool ok = static_cast<int>(si.size()) == r &&
              std::all_of(si.begin(), si.end(),
                          [](const Int& x) { return x == 1; });
    if (!ok) {
      rep.witness_facet = vset_elems(f);
      rep.reason = "deleted-rows minor at facet " +
                   tuple_str(*rep.witness_facet) + " is not a direct summand";
      return rep;
    }
  }
  rep.free_action = true;
  return rep;
}

ColouringBound chromatic_lower_bound(const SimplicialComplex& kp) {
  const int m = kp.m();
  std::vector<int> colour(m + 1, 0);
  int used = 0;
  for (int v = 1; v <= m; ++v) {
    std::vector<bool> taken(m + 2, false);
    for (Vset e : kp.faces_of_card(2)) {
      std::vector<int> ends = vset_elems(e);
      int other = (ends[0] == v) ? ends[1] : (ends[1] == v) ? ends[0] : 0;
      if (other && colour[other]) taken[colour[other]] = true;
    }
    int c = 1;
    while (taken[c]) ++c;
    colour[v] = c;
    used = std::max(used, c);
  }
  return ColouringBound{used, m - used};
}

}  // namespace torcomb
