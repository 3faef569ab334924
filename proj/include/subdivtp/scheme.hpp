#pragma once

#include <string>
#include <vector>

#include "subdivtp/fvector.hpp"
#include "subdivtp/matrix.hpp"

namespace subdivtp {

// Triangular array f_{ij} (0 <= i <= j <= d-1) of a face-uniform subdivision
// acting on complexes of dimension d-1: f_{ij} counts the i-faces of the
// subdivision lying inside a closed j-face.
struct SubdivisionScheme {
  int d = 0;
  std::vector<std::vector<Int>> f;  // f[j][i] = f_{ij}, row j has j+1 entries

  Int f_ij(int i, int j) const;

  // f_{00} = 1, f_{0j} >= j+1, alternating (Euler) sum 1, nonnegative entries.
  void validate() const;
};

enum class SchemeKind { Barycentric, Edgewise };

// Computes the array by subdividing the j-simplex for each j < d and counting
// closed faces. r is the edgewise parameter (ignored for barycentric).
SubdivisionScheme scheme_from_constructor(SchemeKind kind, int d, int r = 2);

// The subdivision replacing each top simplex by the cone over its boundary;
// proper faces stay unsubdivided.
SubdivisionScheme cone_scheme(int d);

// f_{ij} = C(j+1, i+1): the subdivision that does nothing.
SubdivisionScheme identity_scheme(int d);

struct TransformMatrix {
  IntMatrix H;             // (d+1) x (d+1)
  std::string provenance;  // barycentric | edgewise(r) | cone | generic-from-scheme
};

// h-level transformation of the scheme: H = T^-1 M T where T converts h- to
// f-vectors (T[i][j] = C(d-j, i-j)) and M carries interior-face counts
// obtained from the f_{ij} by inclusion-exclusion over the faces of each
// simplex. T^-1 = [(-1)^(i-j) C(d-j, i-j)] is integral, so H is integral by
// construction; the central symmetry H[i][j] = H[d-i][d-j] is a theorem for
// genuine schemes and is enforced at runtime.
TransformMatrix derive_H(const SubdivisionScheme& scheme,
                         const std::string& provenance = "generic-from-scheme");

HVector apply(const TransformMatrix& t, const HVector& h);

// The n x n barycentric transformation (equals the refined Eulerian table
// A(n,i,j); acts on h-vectors of length n).
IntMatrix barycentric_matrix(int n);

// The n x n transformation of the r-th edgewise subdivision.
IntMatrix edgewise_matrix(int r, int n);

// derive_H(cone_scheme(d)).H, size (d+1) x (d+1).
IntMatrix cone_matrix(int d);

}  // namespace subdivtp
