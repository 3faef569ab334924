#include "subdivtp/scheme.hpp"

#include <stdexcept>

#include "subdivtp/combinatorics.hpp"
#include "subdivtp/errors.hpp"
#include "subdivtp/simplicial_complex.hpp"

namespace subdivtp {

Int SubdivisionScheme::f_ij(int i, int j) const {
  if (j < 0 || j >= d || i < 0 || i > j)
    throw std::invalid_argument("scheme index out of range");
  return f[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
}

void SubdivisionScheme::validate() const {
  if (d < 1) throw std::invalid_argument("scheme needs d >= 1");
  if (static_cast<int>(f.size()) != d)
    throw std::invalid_argument("scheme has wrong row count");
  for (int j = 0; j < d; ++j) {
    if (static_cast<int>(f[static_cast<std::size_t>(j)].size()) != j + 1)
      throw std::invalid_argument("scheme row " + std::to_string(j) +
                                  " has wrong length");
    Int euler = 0;
    for (int i = 0; i <= j; ++i) {
      const Int& v = f_ij(i, j);
      if (v < 0) throw std::invalid_argument("scheme entry f_ij is negative");
      if (i % 2 == 0)
        euler += v;
      else
        euler -= v;
    }
    if (euler != 1)
      throw std::invalid_argument(
          "scheme row " + std::to_string(j) +
          " violates the Euler relation (alternating sum is " + euler.str() + ")");
    if (f_ij(0, j) < j + 1)
      throw std::invalid_argument("scheme row " + std::to_string(j) +
                                  " has fewer vertices than the j-simplex");
  }
  if (f_ij(0, 0) != 1)
    throw std::invalid_argument("f_00 must be 1 (a vertex is never subdivided)");
}

SubdivisionScheme scheme_from_constructor(SchemeKind kind, int d, int r) {
  if (d < 1) throw std::invalid_argument("scheme_from_constructor needs d >= 1");
  SubdivisionScheme s;
  s.d = d;
  s.f.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    // Closed counts: subdivide the j-simplex and read off its f-vector.
    std::vector<std::vector<long long>> facet(1);
    for (int v = 1; v <= j + 1; ++v) facet[0].push_back(v);
    const SimplicialComplex simplex = SimplicialComplex::from_int_facets(facet);
    const SimplicialComplex sub = kind == SchemeKind::Barycentric
                                      ? barycentric_subdivide(simplex)
                                      : edgewise_subdivide(simplex, r);
    const FVector fv = sub.f_vector();
    auto& row = s.f[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j) + 1, 0);
    for (int i = 0; i <= j; ++i)
      row[static_cast<std::size_t>(i)] = fv.counts[static_cast<std::size_t>(i) + 1];
  }
  s.validate();
  return s;
}

SubdivisionScheme cone_scheme(int d) {
  if (d < 1) throw std::invalid_argument("cone_scheme needs d >= 1");
  SubdivisionScheme s;
  s.d = d;
  s.f.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    auto& row = s.f[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j) + 1, 0);
    for (int i = 0; i <= j; ++i) {
      if (j < d - 1) {
        row[static_cast<std::size_t>(i)] = binomial(j + 1, i + 1);  // unsubdivided
      } else if (i < d - 1) {
        // Boundary faces plus cone faces over the apex: C(d,i+1) + C(d,i).
        row[static_cast<std::size_t>(i)] = binomial(d + 1, i + 1);
      } else {
        row[static_cast<std::size_t>(i)] = d;  // the top cells of the cone
      }
    }
  }
  s.validate();
  return s;
}

SubdivisionScheme identity_scheme(int d) {
  if (d < 1) throw std::invalid_argument("identity_scheme needs d >= 1");
  SubdivisionScheme s;
  s.d = d;
  s.f.resize(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    auto& row = s.f[static_cast<std::size_t>(j)];
    row.resize(static_cast<std::size_t>(j) + 1, 0);
    for (int i = 0; i <= j; ++i)
      row[static_cast<std::size_t>(i)] = binomial(j + 1, i + 1);
  }
  return s;
}

TransformMatrix derive_H(const SubdivisionScheme& scheme,
                         const std::string& provenance) {
  scheme.validate();
  const int d = scheme.d;
  const auto n = static_cast<std::size_t>(d) + 1;

  // M acts on (f_{-1}, f_0, ..., f_{d-1}); row/col 0 fix f_{-1} = 1. For
  // i,j >= 1 the entry is the number of interior (i-1)-faces of the
  // subdivided (j-1)-simplex, by inclusion-exclusion over its faces:
  // int_{ij} = sum_k (-1)^(j-k) C(j+1, k+1) f_{ik}.
  IntMatrix m(n, n);
  m(0, 0) = 1;
  for (int i = 1; i <= d; ++i)
    for (int j = i; j <= d; ++j) {
      Int acc = 0;
      for (int k = i - 1; k <= j - 1; ++k) {
        const Int term = binomial(j, k + 1) * scheme.f_ij(i - 1, k);
        if ((j - 1 - k) % 2 == 0)
          acc += term;
        else
          acc -= term;
      }
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }

  // T[i][j] = C(d-j, i-j) maps h to f; its inverse is the signed version.
  IntMatrix t(n, n), tinv(n, n);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      const Int b = binomial(d - j, i - j);
      t(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = b;
      tinv(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
          (i - j) % 2 == 0 ? b : Int(-b);
    }

  TransformMatrix out;
  out.H = tinv * m * t;
  out.provenance = provenance;

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (out.H(i, j) != out.H(n - 1 - i, n - 1 - j))
        throw InternalConsistencyError(
            "derive_H: matrix is not centrally symmetric at (" +
            std::to_string(i) + "," + std::to_string(j) +
            "); the scheme is not face-uniform");
  return out;
}

HVector apply(const TransformMatrix& t, const HVector& h) {
  if (h.counts.size() != t.H.cols())
    throw std::invalid_argument("apply: h-vector length does not match the matrix");
  HVector out;
  out.counts = t.H.apply(h.counts);
  return out;
}

IntMatrix barycentric_matrix(int n) {
  const RefinedEulerianTable table = refined_eulerian(n);
  IntMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = table.at(i, j);
  return h;
}

IntMatrix edgewise_matrix(int r, int n) {
  if (n < 2) throw std::invalid_argument("edgewise_matrix needs n >= 2");
  return derive_H(scheme_from_constructor(SchemeKind::Edgewise, n - 1, r),
                  "edgewise(" + std::to_string(r) + ")")
      .H;
}

IntMatrix cone_matrix(int d) { return derive_H(cone_scheme(d), "cone").H; }

}  // namespace subdivtp
