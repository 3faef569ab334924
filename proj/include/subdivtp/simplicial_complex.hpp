#pragma once

#include <string>
#include <vector>

#include "subdivtp/fvector.hpp"

namespace subdivtp {

// Facet bound for constructed subdivisions.
inline constexpr std::size_t kMaxSubdivisionFacets = 2'000'000;

// Facet-list representation over an abstract vertex universe. Vertices are
// identified by their label; the internal ids follow the lexicographic label
// order, which also serves as the global vertex order needed by the edgewise
// construction. Facets are kept as a deduplicated antichain.
class SimplicialComplex {
public:
  SimplicialComplex() = default;
  static SimplicialComplex from_facets(const std::vector<std::vector<std::string>>& facets);
  static SimplicialComplex from_int_facets(const std::vector<std::vector<long long>>& facets);

  const std::vector<std::string>& vertex_labels() const { return labels_; }
  const std::vector<std::vector<int>>& facets() const { return facets_; }
  std::vector<std::vector<std::string>> facet_labels() const;

  // -1 for the complex whose only face is the empty set.
  int dim() const;

  // All i-dimensional faces, each a sorted id vector, in lexicographic order.
  std::vector<std::vector<int>> faces(int i) const;
  Int face_count(int i) const;
  FVector f_vector() const;

  std::string label_of_face(const std::vector<int>& face) const;

private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> facets_;
};

// Facets of the output are the maximal chains of nonempty faces; vertices of
// the output are the faces themselves (labeled by sorted vertex tuples).
SimplicialComplex barycentric_subdivide(const SimplicialComplex& c);

// r-th edgewise subdivision. Vertices supported on a facet F are the
// compositions of r over F's coordinates in global vertex order; a vertex set
// is a face iff all pairwise partial-sum differences lie in {0,1}^n or
// {0,-1}^n.
SimplicialComplex edgewise_subdivide(const SimplicialComplex& c, int r);

// The r-th edgewise subdivision of the simplex on n vertices; r^(n-1) facets.
SimplicialComplex edgewise_subdivide_simplex(int n, int r);

// Replaces every top-dimensional facet by the cone over its boundary;
// lower-dimensional facets are untouched.
SimplicialComplex cone_subdivide(const SimplicialComplex& c);

}  // namespace subdivtp
