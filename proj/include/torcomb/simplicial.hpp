#pragma once

#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "torcomb/base.hpp"

namespace torcomb {

// Finite abstract simplicial complex on the label set {1..m}. The empty set
// is always a face. Labels without a corresponding vertex face ("ghost
// vertices") are allowed; they matter for arrangements, where a missing
// vertex encodes a removed hyperplane.
//
// Immutable after construction. Faces are indexed by cardinality, so all
// by-dimension enumerations downstream are direct lookups.
class SimplicialComplex {
 public:
  SimplicialComplex() : facets_{0} {
    faces_by_card_ = {{0}};
    face_set_.insert(0);
  }

  // Smallest complex containing all generators. Generators contained in
  // others are dropped. Throws domain_error on out-of-range labels.
  static SimplicialComplex from_generators(
      int m, const std::vector<std::vector<int>>& generators);
  static SimplicialComplex from_facet_sets(int m, std::vector<Vset> facets);

  int m() const { return m_; }
  int dim() const { return top_card_ - 1; }  // -1 for the empty complex
  const std::vector<Vset>& facets() const { return facets_; }
  bool has_face(Vset f) const { return face_set_.count(f) != 0; }
  // faces of cardinality k (k = 0 gives {empty set})
  const std::vector<Vset>& faces_of_card(int k) const;
  std::size_t face_count() const;  // includes the empty face

  std::vector<Int> f_vector() const;  // (f_0, ..., f_{dim})
  bool is_pure() const;
  bool same_faces(const SimplicialComplex& o) const;

 private:
  int m_ = 0;
  int top_card_ = 0;
  std::vector<Vset> facets_;
  std::vector<std::vector<Vset>> faces_by_card_;
  std::unordered_set<Vset> face_set_;
};

// link_K I = { J : I cup J in K, I cap J = empty }, on the ambient labels.
SimplicialComplex link(const SimplicialComplex& k, Vset i);
// star of a vertex: { J : J cup {i} in K }
SimplicialComplex star(const SimplicialComplex& k, int vertex);
SimplicialComplex core(const SimplicialComplex& k);
// K_I: faces contained in I, ambient labels kept.
SimplicialComplex full_subcomplex(const SimplicialComplex& k, Vset i);

// Join on m1+m2 labels, second factor shifted by m1.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k);        // apex = label 1
SimplicialComplex suspension(const SimplicialComplex& k);  // poles = labels 1,2

// Vertices = nonempty faces of K (ordered by cardinality, then by vertex
// sequence), faces = chains under inclusion.
SimplicialComplex barycentric_subdivision(const SimplicialComplex& k);

// K^ = { I : [m] minus I is not a face of K }. Requires K != full simplex.
SimplicialComplex associated_complex(const SimplicialComplex& k);

SimplicialComplex boundary_simplex(int n);  // boundary of the n-simplex
SimplicialComplex polygon(int m);           // boundary of the m-gon, m >= 3
// Boundary complex of the cyclic polytope C^n(m) on m vertices via the
// evenness condition: an n-subset S is a facet iff every two elements not in
// S have an even number of elements of S strictly between them.
SimplicialComplex cyclic_sphere(int n, int m);

// Ranks over Q of reduced homology of the augmented chain complex,
// indexed (H~_{-1}, H~_0, ..., H~_dim). The empty complex gives (1).
std::vector<long> reduced_homology(const SimplicialComplex& k);

Int euler_characteristic(const SimplicialComplex& k);  // sum (-1)^i f_i

// Pure pseudomanifold with a consistent facet orientation. sign[i] is the
// orientation of facets()[i] relative to ascending vertex order; for facet
// cardinality >= 2 the oriented tuple is the ascending one with the last two
// vertices swapped when sign = -1.
struct OrientedSphereComplex {
  SimplicialComplex base;
  std::vector<int> sign;

  int n() const { return base.dim() + 1; }
  std::vector<std::vector<int>> oriented_facets() const;
};

// Checks pure / every ridge in exactly two facets / connected facet graph,
// then propagates an orientation. Throws domain_error if any check fails or
// the complex is non-orientable. Deterministic: the first facet in facet
// order gets sign +1.
OrientedSphereComplex orient_sphere(const SimplicialComplex& k);

// Same checks, but the orientation is prescribed by explicit facet tuples
// (one per facet, any order). Throws if the tuples are inconsistent.
OrientedSphereComplex orient_with(const SimplicialComplex& k,
                                  const std::vector<std::vector<int>>& tuples);

}  // namespace torcomb
