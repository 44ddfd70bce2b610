#include "torcomb/tor.hpp"

#include <algorithm>
#include <map>

#include "torcomb/parallel.hpp"

namespace torcomb {

namespace {

// subsets of `pool` with `size` elements, ascending enumeration
void enumerate_subsets(Vset pool, int size, std::vector<Vset>& out) {
  std::vector<int> elems = vset_elems(pool);
  if (size > static_cast<int>(elems.size())) return;
  std::vector<int> idx(size);
  auto rec = [&](auto&& self, int pos, int next) -> void {
    if (pos == size) {
      Vset s = 0;
      for (int t = 0; t < size; ++t) s |= Vset{1} << (elems[idx[t]] - 1);
      out.push_back(s);
      return;
    }
    for (int v = next; v <= static_cast<int>(elems.size()) - (size - pos); ++v) {
      idx[pos] = v;
      self(self, pos + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

KoszulStrand koszul_strand(const SimplicialComplex& k, int p) {
  const int m = k.m();
  const Vset all = (m == 0) ? 0 : ((Vset{1} << m) - 1);
  KoszulStrand s;
  s.p = p;
  s.basis.resize(p + 1);
  for (int q = 0; q <= p; ++q) {
    auto& level = s.basis[q];
    for (Vset j : k.faces_of_card(p - q)) {
      std::vector<Vset> exts;
      enumerate_subsets(all & ~j, q, exts);
      for (Vset i : exts) level.push_back(KMono{i, j});
    }
    std::sort(level.begin(), level.end(), kmono_less);
  }
  s.d.resize(p + 1, SparseMatrix());
  for (int q = 1; q <= p; ++q) {
    std::map<std::pair<Vset, Vset>, std::size_t> row_of;
    for (std::size_t r = 0; r < s.basis[q - 1].size(); ++r)
      row_of[{s.basis[q - 1][r].i, s.basis[q - 1][r].j}] = r;
    SparseMatrix d(s.basis[q - 1].size(), s.basis[q].size());
    for (std::size_t c = 0; c < s.basis[q].size(); ++c) {
      const KMono& mono = s.basis[q][c];
      int sgn = 1;
      Vset rest = mono.i;
      while (rest) {
        int b = __builtin_ctzll(rest);
        rest &= rest - 1;
        Vset j2 = mono.j | (Vset{1} << b);
        if (k.has_face(j2))  // otherwise the product lands in the ideal
          d.add(row_of.at({mono.i & ~(Vset{1} << b), j2}), c, sgn);
        sgn = -sgn;
      }
    }
    s.d[q] = std::move(d);
  }
  return s;
}

long BettiTable::at(int q, int p) const {
  auto it = entries.find({q, p});
  return it == entries.end() ? 0 : it->second;
}

void BettiTable::set(int q, int p, long v) {
  if (v != 0) entries[{q, p}] = v;
}

std::vector<long> BettiTable::totals() const {
  int maxdeg = 0;
  for (const auto& [qp, v] : entries)
    maxdeg = std::max(maxdeg, 2 * qp.second - qp.first);
  std::vector<long> t(maxdeg + 1, 0);
  for (const auto& [qp, v] : entries) t[2 * qp.second - qp.first] += v;
  return t;
}

IntPoly BettiTable::strand_euler() const {
  IntPoly chi;
  int maxp = 0;
  for (const auto& [qp, v] : entries) maxp = std::max(maxp, qp.second);
  chi.c.assign(maxp + 1, Int(0));
  for (const auto& [qp, v] : entries)
    chi.c[qp.second] += ((qp.first % 2) ? -1 : 1) * Int(v);
  chi.trim();
  return chi;
}

BettiTable bigraded_betti(const SimplicialComplex& k, int jobs) {
  const int m = k.m();
  BettiTable table;
  table.m = m;
  table.n = k.dim() + 1;
  std::vector<std::vector<long>> per_p(m + 1);
  parallel_for(m + 1, jobs, [&](int p) {
    KoszulStrand s = koszul_strand(k, p);
    std::vector<std::size_t> rk(p + 2, 0);
    for (int q = 1; q <= p; ++q) rk[q] = sparse_rank(std::move(s.d[q]));
    std::vector<long>& b = per_p[p];
    b.assign(p + 1, 0);
    for (int q = 0; q <= p; ++q)
      b[q] = static_cast<long>(s.basis[q].size()) - static_cast<long>(rk[q]) -
             static_cast<long>(rk[q + 1]);
  });
  for (int p = 0; p <= m; ++p)
    for (int q = 0; q < static_cast<int>(per_p[p].size()); ++q)
      table.set(q, p, per_p[p][q]);
  return table;
}

BettiTable hochster_betti(const SimplicialComplex& k, int jobs) {
  const int m = k.m();
  if (m > 20) throw domain_error("hochster_betti: too many vertices");
  BettiTable table;
  table.m = m;
  table.n = k.dim() + 1;
  const Vset full = (m == 0) ? 0 : ((Vset{1} << m) - 1);
  std::vector<std::map<std::pair<int, int>, long>> partial(jobs > 1 ? jobs : 1);
  const long total = static_cast<long>(Vset{1} << m);
  parallel_for(jobs > 1 ? jobs : 1, jobs, [&](int worker) {
    const int nw = jobs > 1 ? jobs : 1;
    for (long idx = worker; idx < total; idx += nw) {
      Vset sub = static_cast<Vset>(idx);
      if ((sub & full) != sub) continue;
      SimplicialComplex ki = full_subcomplex(k, sub);
      std::vector<long> h = reduced_homology(ki);
      const int j = vcount(sub);
      for (int d = -1; d < static_cast<int>(h.size()) - 1; ++d) {
        long rank = h[d + 1];
        if (rank == 0) continue;
        int i = j - d - 1;  // H~_{j-i-1}(K_I) contributes to beta^{-i,2j}
        partial[worker][{i, j}] += rank;
      }
    }
  });
  for (const auto& part : partial)
    for (const auto& [qp, v] : part)
      table.entries[qp] += v;
  for (auto it = table.entries.begin(); it != table.entries.end();)
    it = (it->second == 0) ? table.entries.erase(it) : std::next(it);
  return table;
}

bool CohClass::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(),
                     [](const Rat& x) { return x == 0; });
}

namespace {

using RatRow = std::vector<Rat>;

// In-place reduced row echelon form; returns pivot columns.
std::vector<int> rref(std::vector<RatRow>& rows) {
  std::vector<int> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    Rat inv = rows[r][c];
    for (auto& x : rows[r]) x /= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rat f = rows[i][c];
      for (std::size_t j2 = c; j2 < ncols; ++j2) rows[i][j2] -= f * rows[r][j2];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  rows.resize(r);
  return pivots;
}

void reduce_against(RatRow& v, const std::vector<RatRow>& echelon,
                    const std::vector<int>& pivots) {
  for (std::size_t r = 0; r < echelon.size(); ++r) {
    Rat f = v[pivots[r]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * echelon[r][j];
  }
}

}  // namespace

struct TorContext::Degree {
  std::vector<KMono> basis;
  std::map<std::pair<Vset, Vset>, std::size_t> index;
  std::vector<RatRow> cob_echelon;  // echelon basis of coboundaries
  std::vector<int> cob_pivots;
  std::vector<RatRow> cocycle_echelon;  // echelon basis of ker d
  std::vector<int> cocycle_pivots;
  long betti = 0;
};

const KoszulStrand& TorContext::strand(int p) {
  auto it = strands_.find(p);
  if (it == strands_.end())
    it = strands_.emplace(p, std::make_shared<KoszulStrand>(koszul_strand(k_, p)))
             .first;
  return *it->second;
}

TorContext::Degree& TorContext::degree(int q, int p) {
  auto it = degrees_.find({q, p});
  if (it != degrees_.end()) return *it->second;

  auto deg = std::make_shared<Degree>();
  const KoszulStrand& s = strand(p);
  if (q >= 0 && q < static_cast<int>(s.basis.size())) deg->basis = s.basis[q];
  for (std::size_t i = 0; i < deg->basis.size(); ++i)
    deg->index[{deg->basis[i].i, deg->basis[i].j}] = i;
  const std::size_t dim = deg->basis.size();

  // coboundaries: images of the basis of A^{-q-1,2p}
  if (q + 1 < static_cast<int>(s.basis.size())) {
    const SparseMatrix& d = s.d[q + 1];
    std::vector<RatRow> rows;
    for (std::size_t c = 0; c < s.basis[q + 1].size(); ++c) rows.emplace_back(dim);
    for (std::size_t r = 0; r < d.rows; ++r)
      for (const auto& [cc, v] : d.row[r]) rows[cc][r] = Rat(v);
    deg->cob_pivots = rref(rows);
    deg->cob_echelon = std::move(rows);
  }
  // cocycles: kernel of d at level q
  if (q >= 1 && q < static_cast<int>(s.d.size()) && dim > 0) {
    const SparseMatrix& d = s.d[q];
    // row-reduce the transpose-free way: build dense matrix rows = codomain
    std::vector<RatRow> mat(d.rows, RatRow(dim));
    for (std::size_t r = 0; r < d.rows; ++r)
      for (const auto& [cc, v] : d.row[r]) mat[r][cc] = Rat(v);
    std::vector<int> piv = rref(mat);
    // free columns give a kernel basis
    std::vector<bool> is_piv(dim, false);
    for (int c : piv) is_piv[c] = true;
    std::vector<RatRow> kernel;
    for (std::size_t c = 0; c < dim; ++c) {
      if (is_piv[c]) continue;
      RatRow v(dim);
      v[c] = 1;
      for (std::size_t r = 0; r < mat.size() && r < piv.size(); ++r)
        v[piv[r]] = -mat[r][c];
      kernel.push_back(std::move(v));
    }
    deg->cocycle_pivots = rref(kernel);
    deg->cocycle_echelon = std::move(kernel);
  } else if (dim > 0) {
    // q = 0: every chain is a cocycle (d lands in q = -1, which is empty)
    std::vector<RatRow> kernel;
    for (std::size_t c = 0; c < dim; ++c) {
      RatRow v(dim);
      v[c] = 1;
      kernel.push_back(std::move(v));
    }
    deg->cocycle_pivots = rref(kernel);
    deg->cocycle_echelon = std::move(kernel);
  }
  deg->betti = static_cast<long>(deg->cocycle_echelon.size()) -
               static_cast<long>(deg->cob_echelon.size());
  auto res = degrees_.emplace(std::make_pair(q, p), deg);
  return *res.first->second;
}

const std::vector<KMono>& TorContext::basis(int q, int p) {
  return degree(q, p).basis;
}

long TorContext::betti(int q, int p) { return degree(q, p).betti; }

CohClass TorContext::reduce(int q, int p, std::vector<Rat> vec) {
  Degree& d = degree(q, p);
  if (vec.size() != d.basis.size())
    throw domain_error("cochain vector has wrong length");
  reduce_against(vec, d.cob_echelon, d.cob_pivots);
  return CohClass{q, p, std::move(vec)};
}

CohClass TorContext::make_class(
    int q, int p, const std::vector<std::pair<KMono, Rat>>& terms) {
  Degree& d = degree(q, p);
  std::vector<Rat> vec(d.basis.size());
  for (const auto& [mono, coef] : terms) {
    auto it = d.index.find({mono.i, mono.j});
    if (it == d.index.end())
      throw domain_error("monomial is not a basis element of this bidegree");
    vec[it->second] += coef;
  }
  // verify the cocycle condition by one differential application
  if (q >= 1) {
    const KoszulStrand& s = strand(p);
    const SparseMatrix& dd = s.d[q];
    std::vector<Rat> img(dd.rows);
    for (std::size_t r = 0; r < dd.rows; ++r)
      for (const auto& [c, v] : dd.row[r]) img[r] += Rat(v) * vec[c];
    for (const Rat& x : img)
      if (x != 0) throw domain_error("representative is not a cocycle");
  }
  return reduce(q, p, std::move(vec));
}

CohClass TorContext::cup(const CohClass& a, const CohClass& b) {
  const int q = a.q + b.q, p = a.p + b.p;
  Degree& target = degree(q, p);
  std::vector<Rat> vec(target.basis.size());
  Degree& da = degree(a.q, a.p);
  Degree& db = degree(b.q, b.p);
  for (std::size_t ia = 0; ia < a.coeffs.size(); ++ia) {
    if (a.coeffs[ia] == 0) continue;
    const KMono& ma = da.basis[ia];
    for (std::size_t ib = 0; ib < b.coeffs.size(); ++ib) {
      if (b.coeffs[ib] == 0) continue;
      const KMono& mb = db.basis[ib];
      if (ma.i & mb.i) continue;          // u_i squares to zero
      if (ma.j & mb.j) continue;          // v_i^2 = 0 in A*(K)
      if ((ma.i | ma.j) & (mb.i | mb.j)) continue;
      Vset ju = ma.j | mb.j;
      if (!k_.has_face(ju)) continue;     // product lands in the ideal
      // shuffle sign: inversions between the exterior parts
      int inv = 0;
      for (int va : vset_elems(ma.i))
        inv += vcount(mb.i & ((Vset{1} << (va - 1)) - 1));
      Rat term = a.coeffs[ia] * b.coeffs[ib];
      if (inv % 2) term = -term;
      vec[target.index.at({ma.i | mb.i, ju})] += term;
    }
  }
  return reduce(q, p, std::move(vec));
}

CohClass TorContext::fundamental_class(const OrientedSphereComplex& sphere) {
  if (!sphere.base.same_faces(k_))
    throw domain_error("oriented complex does not match this context");
  const int m = k_.m(), n = sphere.n();
  const int q = m - n, p = m;
  const Vset all = (Vset{1} << m) - 1;
  const auto& facets = k_.facets();

  // Orientation sign times interleave parity of (facet, complement) makes
  // every facet monomial represent one and the same class; verified below.
  auto mono_sign = [&](std::size_t fi) {
    Vset f = facets[fi];
    int inv = 0;
    for (int v : vset_elems(all & ~f)) inv += vcount(f & ~((Vset{1} << v) - 1));
    return sphere.sign[fi] * ((inv % 2) ? -1 : 1);
  };

  CohClass first;
  std::vector<Rat> probe;
  Degree& d = degree(q, p);
  for (std::size_t fi = 0; fi < facets.size(); ++fi) {
    std::vector<Rat> vec(d.basis.size());
    auto it = d.index.find({all & ~facets[fi], facets[fi]});
    if (it == d.index.end())
      throw domain_error("facet monomial missing from top bidegree");
    vec[it->second] = mono_sign(fi);
    CohClass cls = reduce(q, p, std::move(vec));
    if (fi == 0) {
      first = cls;
      if (first.is_zero())
        throw domain_error("top class vanishes; input is not a sphere complex");
    } else if (!(cls.coeffs == first.coeffs)) {
      throw domain_error("facet monomials disagree in cohomology; orientation "
                         "sign chain broken");
    }
  }
  return first;
}

Rat TorContext::pairing(const CohClass& a, const CohClass& b,
                        const OrientedSphereComplex& sphere) {
  CohClass prod = cup(a, b);
  CohClass top = fundamental_class(sphere);
  // top cohomology is one-dimensional: prod = lambda * top
  for (std::size_t i = 0; i < top.coeffs.size(); ++i)
    if (top.coeffs[i] != 0) return prod.coeffs[i] / top.coeffs[i];
  throw domain_error("fundamental class is zero");
}

long TorContext::pairing_rank(int q, int p, const OrientedSphereComplex& sphere) {
  const int m = k_.m(), n = sphere.n();
  const int q2 = (m - n) - q, p2 = m - p;
  Degree& da = degree(q, p);
  Degree& db = degree(q2, p2);
  // harvest representative classes from the cocycle echelon mod coboundaries
  auto reps = [&](Degree& d, int qq, int pp) {
    std::vector<CohClass> out;
    std::vector<RatRow> stack = d.cob_echelon;
    std::vector<int> pivots = d.cob_pivots;
    for (const RatRow& z : d.cocycle_echelon) {
      RatRow v = z;
      reduce_against(v, stack, pivots);
      bool zero = std::all_of(v.begin(), v.end(),
                              [](const Rat& x) { return x == 0; });
      if (zero) continue;
      out.push_back(CohClass{qq, pp, v});
      // extend the echelon so later cocycles reduce against this class too
      std::size_t pc = 0;
      while (v[pc] == 0) ++pc;
      Rat inv = v[pc];
      for (auto& x : v) x /= inv;
      stack.push_back(v);
      pivots.push_back(static_cast<int>(pc));
    }
    return out;
  };
  std::vector<CohClass> ca = reps(da, q, p), cb = reps(db, q2, p2);
  if (ca.size() != cb.size()) return -1;  // symmetry failure, caller reports
  if (ca.empty()) return 0;
  std::vector<RatRow> mat;
  for (const CohClass& x : ca) {
    RatRow row;
    for (const CohClass& y : cb) row.push_back(pairing(x, y, sphere));
    mat.push_back(std::move(row));
  }
  return static_cast<long>(rref(mat).size());
}

PoincareDualityReport poincare_duality_check(const SimplicialComplex& k,
                                             bool with_pairing) {
  PoincareDualityReport rep;
  const int m = k.m(), n = k.dim() + 1;
  BettiTable t = bigraded_betti(k);
  rep.top_rank = t.at(m - n, m);
  for (int q = 0; q <= m; ++q)
    for (int p = 0; p <= m; ++p)
      if (t.at(q, p) != t.at(m - n - q, m - p)) {
        rep.table_symmetric = false;
        if (!rep.asym_at) rep.asym_at = {q, p};
      }
  if (with_pairing) {
    OrientedSphereComplex sphere = orient_sphere(k);
    TorContext ctx(k);
    for (const auto& [qp, v] : t.entries) {
      auto [q, p] = qp;
      if (2 * q > m - n || (2 * q == m - n && 2 * p > m)) continue;  // half
      long rank = ctx.pairing_rank(q, p, sphere);
      rep.pairing_ranks.push_back({{q, p}, rank});
      if (rank != v) rep.pairing_nondegenerate = false;
    }
  }
  return rep;
}

CmReport cm_gorenstein_classify(const SimplicialComplex& k) {
  CmReport rep;
  for (int c = 0; c <= k.dim() + 1; ++c) {
    for (Vset f : k.faces_of_card(c)) {
      SimplicialComplex lk = link(k, f);
      std::vector<long> h = reduced_homology(lk);
      const int d = lk.dim();
      for (int i = -1; i <= d; ++i) {
        long rank = h[i + 1];
        if (i < d && rank != 0) {
          if (rep.cohen_macaulay) {
            rep.cohen_macaulay = false;
            rep.cm_witness = f;
          }
          if (rep.gorenstein_star) {
            rep.gorenstein_star = false;
            rep.gor_witness = f;
          }
        }
        if (i == d && rank != 1 && rep.gorenstein_star) {
          rep.gorenstein_star = false;
          rep.gor_witness = f;
        }
      }
      if (!rep.cohen_macaulay && !rep.gorenstein_star) return rep;
    }
  }
  return rep;
}

namespace {

// Monomial basis of k(K) in a fixed degree: exponent vectors supported on a
// face. Encoded as vectors for map keys.
void monomials_of_degree(const SimplicialComplex& k, int degree,
                         std::vector<std::vector<int>>& out) {
  const int m = k.m();
  for (int c = 0; c <= std::min(degree, k.dim() + 1); ++c) {
    if (c == 0) {
      if (degree == 0) out.push_back(std::vector<int>(m, 0));
      continue;
    }
    for (Vset f : k.faces_of_card(c)) {
      std::vector<int> verts = vset_elems(f);
      // compositions of `degree` into c positive parts
      std::vector<int> part(c, 1);
      int rest = degree - c;
      if (rest < 0) continue;
      auto rec = [&](auto&& self, int pos, int left) -> void {
        if (pos == c - 1) {
          part[pos] = 1 + left;
          std::vector<int> e(m, 0);
          for (int t = 0; t < c; ++t) e[verts[t] - 1] = part[t];
          out.push_back(std::move(e));
          return;
        }
        for (int take = 0; take <= left; ++take) {
          part[pos] = 1 + take;
          self(self, pos + 1, left - take);
        }
      };
      rec(rec, 0, rest);
    }
  }
  std::sort(out.begin(), out.end());
}

}  // namespace

BettiTable tor_with_forms(const SimplicialComplex& k, const IntMatrix& forms,
                          int max_p, int jobs) {
  const int m = k.m();
  const int nforms = static_cast<int>(forms.rows());
  if (static_cast<int>(forms.cols()) != m)
    throw domain_error("linear forms must have one column per vertex");
  if (max_p < 0) max_p = m;

  BettiTable table;
  table.m = m;
  table.n = k.dim() + 1;

  // ranks of d : level q -> level q-1 within strand 2p, then splice
  std::vector<std::vector<long>> dims(max_p + 1);
  std::vector<std::vector<std::size_t>> ranks(max_p + 1);
  parallel_for(max_p + 1, jobs, [&](int p) {
    const int qmax = std::min(p, nforms);
    std::vector<std::vector<std::vector<int>>> monos(qmax + 1);
    std::vector<std::vector<Vset>> usets(qmax + 1);
    for (int q = 0; q <= qmax; ++q) {
      monomials_of_degree(k, p - q, monos[q]);
      enumerate_subsets((nforms == 0) ? 0 : ((Vset{1} << nforms) - 1), q,
                        usets[q]);
      std::sort(usets[q].begin(), usets[q].end(), vset_seq_less);
    }
    dims[p].assign(qmax + 2, 0);
    for (int q = 0; q <= qmax; ++q)
      dims[p][q] =
          static_cast<long>(usets[q].size()) * static_cast<long>(monos[q].size());
    ranks[p].assign(qmax + 2, 0);
    for (int q = 1; q <= qmax; ++q) {
      std::map<std::vector<int>, std::size_t> mono_row;
      for (std::size_t i = 0; i < monos[q - 1].size(); ++i)
        mono_row[monos[q - 1][i]] = i;
      std::map<Vset, std::size_t> uset_row;
      for (std::size_t i = 0; i < usets[q - 1].size(); ++i)
        uset_row[usets[q - 1][i]] = i;

      SparseMatrix d(dims[p][q - 1], dims[p][q]);
      const std::size_t stride = monos[q - 1].size();
      for (std::size_t su = 0; su < usets[q].size(); ++su) {
        Vset s = usets[q][su];
        for (std::size_t mu = 0; mu < monos[q].size(); ++mu) {
          const std::size_t col = su * monos[q].size() + mu;
          int sgn = 1;
          Vset rest = s;
          while (rest) {
            int b = __builtin_ctzll(rest);  // form index b (0-based)
            rest &= rest - 1;
            const std::size_t urow = uset_row.at(s & ~(Vset{1} << b));
            for (int j = 0; j < m; ++j) {
              const Int& coef = forms(b, j);
              if (coef == 0) continue;
              std::vector<int> e = monos[q][mu];
              e[j] += 1;
              // zero in k(K) when the support is not a face
              Vset supp = 0;
              for (int t = 0; t < m; ++t)
                if (e[t]) supp |= Vset{1} << t;
              if (!k.has_face(supp)) continue;
              d.add(urow * stride + mono_row.at(e), col, sgn * coef);
            }
            sgn = -sgn;
          }
        }
      }
      ranks[p][q] = sparse_rank(std::move(d));
    }
  });
  for (int p = 0; p <= max_p; ++p) {
    const int qmax = std::min(p, nforms);
    for (int q = 0; q <= qmax; ++q)
      table.set(q, p,
                dims[p][q] - static_cast<long>(ranks[p][q]) -
                    static_cast<long>(q + 1 <= qmax ? ranks[p][q + 1] : 0));
  }
  return table;
}

std::vector<long> real_regraded_betti(const BettiTable& table) {
  int maxp = 0;
  for (const auto& [qp, v] : table.entries)
    maxp = std::max(maxp, qp.second - qp.first);
  std::vector<long> out(maxp + 1, 0);
  for (const auto& [qp, v] : table.entries) out[qp.second - qp.first] += v;
  return out;
}

std::vector<long> real_regraded_betti(const SimplicialComplex& k, int jobs) {
  return real_regraded_betti(bigraded_betti(k, jobs));
}

}  // namespace torcomb
