#include "subdivtp/simplicial_complex.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "subdivtp/errors.hpp"

namespace subdivtp {

namespace {

std::vector<std::vector<int>> antichain_reduce(std::vector<std::vector<int>> facets) {
  const auto contains = [](const std::vector<int>& big, const std::vector<int>& small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  std::vector<std::vector<int>> keep;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < facets.size() && !dominated; ++j) {
      if (i == j) continue;
      if (facets[j].size() > facets[i].size() && contains(facets[j], facets[i]))
        dominated = true;
    }
    if (!dominated) keep.push_back(facets[i]);
  }
  return keep;
}

}  // namespace

SimplicialComplex SimplicialComplex::from_facets(
    const std::vector<std::vector<std::string>>& raw_facets) {
  std::vector<std::string> labels;
  for (const auto& f : raw_facets)
    for (const auto& v : f) labels.push_back(v);
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  std::map<std::string, int> id;
  for (std::size_t i = 0; i < labels.size(); ++i)
    id[labels[i]] = static_cast<int>(i);

  std::vector<std::vector<int>> facets;
  facets.reserve(raw_facets.size());
  for (const auto& f : raw_facets) {
    std::vector<int> g;
    g.reserve(f.size());
    for (const auto& v : f) g.push_back(id[v]);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    facets.push_back(std::move(g));
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Containment is only possible between facets of different sizes; the
  // subdivision constructors always produce genuine antichains, so this
  // quadratic pass stays on small user-supplied inputs.
  if (!facets.empty()) {
    bool mixed = false;
    for (const auto& f : facets) mixed |= f.size() != facets.front().size();
    if (mixed) {
      facets = antichain_reduce(std::move(facets));
      std::sort(facets.begin(), facets.end());
    }
  }
  if (facets.empty()) facets.push_back({});

  SimplicialComplex c;
  c.labels_ = std::move(labels);
  c.facets_ = std::move(facets);
  return c;
}

SimplicialComplex SimplicialComplex::from_int_facets(
    const std::vector<std::vector<long long>>& facets) {
  std::vector<std::vector<std::string>> lf;
  lf.reserve(facets.size());
  for (const auto& f : facets) {
    std::vector<std::string> row;
    row.reserve(f.size());
    for (long long v : f) row.push_back(std::to_string(v));
    lf.push_back(std::move(row));
  }
  return from_facets(lf);
}

int SimplicialComplex::dim() const {
  std::size_t mx = 0;
  for (const auto& f : facets_) mx = std::max(mx, f.size());
  return static_cast<int>(mx) - 1;
}

std::vector<std::vector<int>> SimplicialComplex::faces(int i) const {
  if (i < -1) return {};
  if (i == -1) return {{}};
  std::vector<std::vector<int>> out;
  const auto k = static_cast<std::size_t>(i) + 1;
  for (const auto& f : facets_) {
    if (f.size() < k) continue;
    std::vector<std::size_t> sel(k);
    std::iota(sel.begin(), sel.end(), 0);
    for (;;) {
      std::vector<int> face(k);
      for (std::size_t t = 0; t < k; ++t) face[t] = f[sel[t]];
      out.push_back(std::move(face));
      std::size_t t = k;
      while (t > 0 && sel[t - 1] == f.size() - k + (t - 1)) --t;
      if (t == 0) break;
      ++sel[t - 1];
      for (std::size_t q = t; q < k; ++q) sel[q] = sel[q - 1] + 1;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Int SimplicialComplex::face_count(int i) const {
  if (i == -1) return 1;
  return Int(faces(i).size());
}

FVector SimplicialComplex::f_vector() const {
  const int d = dim();
  FVector f;
  f.counts.push_back(1);  // f_{-1}
  if (d < 0) return f;

  std::vector<std::vector<int>> all;
  for (const auto& fac : facets_) {
    const std::size_t k = fac.size();
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<int> face;
      for (std::size_t t = 0; t < k; ++t)
        if (mask & (1u << t)) face.push_back(fac[t]);
      all.push_back(std::move(face));
    }
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());

  f.counts.resize(static_cast<std::size_t>(d) + 2, 0);
  for (const auto& face : all) f.counts[face.size()] += 1;
  return f;
}

std::string SimplicialComplex::label_of_face(const std::vector<int>& face) const {
  std::string s = "{";
  for (std::size_t t = 0; t < face.size(); ++t) {
    if (t) s += ",";
    s += labels_[static_cast<std::size_t>(face[t])];
  }
  s += "}";
  return s;
}

std::vector<std::vector<std::string>> SimplicialComplex::facet_labels() const {
  std::vector<std::vector<std::string>> out;
  out.reserve(facets_.size());
  for (const auto& f : facets_) {
    std::vector<std::string> row;
    row.reserve(f.size());
    for (int v : f) row.push_back(labels_[static_cast<std::size_t>(v)]);
    out.push_back(std::move(row));
  }
  return out;
}

SimplicialComplex barycentric_subdivide(const SimplicialComplex& c) {
  std::vector<std::vector<std::string>> new_facets;
  for (const auto& facet : c.facets()) {
    if (facet.empty()) continue;
    std::vector<int> perm = facet;  // already sorted
    do {
      std::vector<std::string> chain;
      std::vector<int> prefix;
      for (int v : perm) {
        prefix.push_back(v);
        std::vector<int> face = prefix;
        std::sort(face.begin(), face.end());
        chain.push_back(c.label_of_face(face));
      }
      new_facets.push_back(std::move(chain));
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (new_facets.size() > kMaxSubdivisionFacets)
      throw ResourceLimitError("barycentric_subdivide: facet bound exceeded");
  }
  return SimplicialComplex::from_facets(new_facets);
}

namespace {

std::vector<std::vector<int>> compositions(int total, int parts) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(parts), 0);
  std::function<void(int, int)> rec = [&](int idx, int left) {
    if (idx == parts - 1) {
      cur[static_cast<std::size_t>(idx)] = left;
      out.push_back(cur);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      cur[static_cast<std::size_t>(idx)] = v;
      rec(idx + 1, left - v);
    }
  };
  if (parts > 0) rec(0, total);
  return out;
}

// Partial-sum differences must lie in {0,1}^n or {0,-1}^n.
bool edgewise_compatible(const std::vector<int>& a, const std::vector<int>& b) {
  int lo = 0, hi = 0, pa = 0, pb = 0;
  for (std::size_t t = 0; t + 1 < a.size(); ++t) {  // last difference is 0
    pa += a[t];
    pb += b[t];
    const int diff = pa - pb;
    lo = std::min(lo, diff);
    hi = std::max(hi, diff);
  }
  return (lo >= 0 && hi <= 1) || (lo >= -1 && hi <= 0);
}

}  // namespace

SimplicialComplex edgewise_subdivide(const SimplicialComplex& c, int r) {
  if (r < 1) throw std::invalid_argument("edgewise_subdivide needs r >= 1");

  Int budget = 0;
  for (const auto& facet : c.facets()) {
    Int cells = 1;
    for (std::size_t t = 1; t < facet.size(); ++t) cells *= r;
    budget += cells;
  }
  if (budget > kMaxSubdivisionFacets)
    throw ResourceLimitError("edgewise_subdivide: facet bound exceeded");

  const std::size_t nv = c.vertex_labels().size();
  std::vector<std::vector<std::string>> new_facets;

  for (const auto& facet : c.facets()) {
    if (facet.empty()) continue;
    const int k = static_cast<int>(facet.size());
    const auto verts = compositions(r, k);

    std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
    for (std::size_t x = 0; x < verts.size(); ++x)
      for (std::size_t y = x + 1; y < verts.size(); ++y)
        adj[x][y] = adj[y][x] = edgewise_compatible(verts[x], verts[y]);

    // Global tuple labels, zeros outside the facet's support.
    std::vector<std::string> vlabel(verts.size());
    for (std::size_t x = 0; x < verts.size(); ++x) {
      std::vector<int> tuple(nv, 0);
      for (int t = 0; t < k; ++t)
        tuple[static_cast<std::size_t>(facet[static_cast<std::size_t>(t)])] =
            verts[x][static_cast<std::size_t>(t)];
      std::string s = "(";
      for (std::size_t q = 0; q < tuple.size(); ++q) {
        if (q) s += ",";
        s += std::to_string(tuple[q]);
      }
      s += ")";
      vlabel[x] = std::move(s);
    }

    std::size_t found = 0;
    std::vector<std::size_t> cur;
    std::function<void(std::size_t)> grow = [&](std::size_t start) {
      if (cur.size() == static_cast<std::size_t>(k)) {
        std::vector<std::string> cell;
        cell.reserve(cur.size());
        for (std::size_t v : cur) cell.push_back(vlabel[v]);
        new_facets.push_back(std::move(cell));
        ++found;
        return;
      }
      for (std::size_t v = start; v < verts.size(); ++v) {
        bool ok = true;
        for (std::size_t u : cur)
          if (!adj[u][v]) {
            ok = false;
            break;
          }
        if (ok) {
          cur.push_back(v);
          grow(v + 1);
          cur.pop_back();
        }
      }
    };
    grow(0);

    Int expected = 1;
    for (int t = 1; t < k; ++t) expected *= r;
    if (Int(found) != expected)
      throw InternalConsistencyError(
          "edgewise_subdivide: facet of size " + std::to_string(k) + " produced " +
          std::to_string(found) + " cells, expected " + expected.str());
  }
  return SimplicialComplex::from_facets(new_facets);
}

SimplicialComplex edgewise_subdivide_simplex(int n, int r) {
  if (n < 1) throw std::invalid_argument("edgewise_subdivide_simplex needs n >= 1");
  std::vector<std::vector<long long>> facet(1);
  for (int v = 1; v <= n; ++v) facet[0].push_back(v);
  return edgewise_subdivide(SimplicialComplex::from_int_facets(facet), r);
}

SimplicialComplex cone_subdivide(const SimplicialComplex& c) {
  const int d = c.dim();
  if (d <= 0) return c;  // vertices are never subdivided
  std::vector<std::vector<std::string>> new_facets;
  for (const auto& f : c.facet_labels()) {
    if (static_cast<int>(f.size()) == d + 1) {
      std::string apex = "c(";
      for (std::size_t t = 0; t < f.size(); ++t) {
        if (t) apex += ",";
        apex += f[t];
      }
      apex += ")";
      for (std::size_t skip = 0; skip < f.size(); ++skip) {
        std::vector<std::string> cell;
        cell.push_back(apex);
        for (std::size_t t = 0; t < f.size(); ++t)
          if (t != skip) cell.push_back(f[t]);
        new_facets.push_back(std::move(cell));
      }
    } else {
      new_facets.push_back(f);
    }
  }
  return SimplicialComplex::from_facets(new_facets);
}

}  // namespace subdivtp
