#include "subdivtp/paths.hpp"

#include <algorithm>
#include <stdexcept>

#include "subdivtp/errors.hpp"
#include "subdivtp/parallel.hpp"

namespace subdivtp {

namespace {

// 1-based accessors matching the usual path-index conventions.
Dir dir_at(const LabeledPath& p, int k) { return p[static_cast<std::size_t>(k) - 1].dir; }
int lab_at(const LabeledPath& p, int k) { return p[static_cast<std::size_t>(k) - 1].label; }

}  // namespace

std::optional<PathViolation> validate_path(const LabeledPath& p) {
  const int d = static_cast<int>(p.size());
  if (d == 0) return PathViolation{PathRule::L1, 1};
  for (int k = 1; k <= d; ++k)
    if (lab_at(p, k) < 1) return PathViolation{PathRule::L1, k};
  if (dir_at(p, 1) != Dir::E || lab_at(p, 1) != 1)
    return PathViolation{PathRule::L1, 1};
  for (int k = 1; k < d; ++k) {
    if (dir_at(p, k) == dir_at(p, k + 1)) {
      if (lab_at(p, k) < lab_at(p, k + 1)) return PathViolation{PathRule::L2, k};
    } else {
      if (lab_at(p, k) + lab_at(p, k + 1) > k + 1)
        return PathViolation{PathRule::L3, k};
    }
  }
  return std::nullopt;
}

bool is_valid_path(const LabeledPath& p) { return !validate_path(p).has_value(); }

LabeledPath psi(const Permutation& p) {
  const int d = p.size();
  LabeledPath out;
  out.reserve(static_cast<std::size_t>(d));
  out.push_back({Dir::E, 1});
  for (int i = 2; i <= d; ++i) {
    // Rank of p(i) within the length-i prefix.
    int rank = 0;
    for (int l = 1; l <= i; ++l)
      if (p(l) <= p(i)) ++rank;
    if (p(i - 1) > p(i))
      out.push_back({Dir::N, rank});
    else
      out.push_back({Dir::E, i + 1 - rank});
  }
  return out;
}

Permutation psi_inverse(const LabeledPath& path) {
  if (const auto v = validate_path(path)) {
    const char* rule = v->rule == PathRule::L1   ? "L1"
                       : v->rule == PathRule::L2 ? "L2"
                                                 : "L3";
    throw std::invalid_argument("psi_inverse: path violates " + std::string(rule) +
                                " at step " + std::to_string(v->position));
  }
  const int d = static_cast<int>(path.size());
  // Reconstruct right to left: the rank of sigma(i) in the length-i prefix is
  // determined by the step, and picks the rank-th smallest unused value.
  std::vector<int> values;
  for (int v = 1; v <= d; ++v) values.push_back(v);
  std::vector<int> word(static_cast<std::size_t>(d), 0);
  for (int i = d; i >= 2; --i) {
    const int rank = dir_at(path, i) == Dir::N ? lab_at(path, i)
                                               : i + 1 - lab_at(path, i);
    const auto idx = static_cast<std::size_t>(rank - 1);
    word[static_cast<std::size_t>(i - 1)] = values[idx];
    values.erase(values.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  word[0] = values[0];
  Permutation result(std::move(word));
  if (psi(result) != path)
    throw InternalConsistencyError(
        "psi_inverse: reconstructed permutation does not map back to the path");
  return result;
}

std::pair<int, int> path_class(const LabeledPath& p) {
  const int d = static_cast<int>(p.size());
  if (d == 0) throw std::invalid_argument("path_class: empty path");
  int n_steps = 0;
  for (const Step& s : p)
    if (s.dir == Dir::N) ++n_steps;
  const int j = dir_at(p, d) == Dir::N ? d - lab_at(p, d) : lab_at(p, d) - 1;
  return {n_steps, j};
}

const char* phi_case_name(PhiCase c) {
  switch (c) {
    case PhiCase::EndRelabel: return "end-relabel";
    case PhiCase::EnSwap: return "EN-swap";
    case PhiCase::EnRelabel: return "EN-relabel-swap";
    case PhiCase::NeSwap: return "NE-swap";
    case PhiCase::NnSwap: return "NN-swap";
    case PhiCase::NnRelabel: return "NN-relabel-swap";
    case PhiCase::NnRunNN: return "NN-run-swap-NN";
    case PhiCase::NnRunEE: return "NN-run-swap-EE";
    case PhiCase::NnRunBend: return "NN-run-swap-bend";
    case PhiCase::NnRunEnd: return "NN-run-swap-end";
    case PhiCase::EeSwap: return "EE-swap";
    case PhiCase::EeRelabel: return "EE-relabel-swap";
    case PhiCase::EeRunNN: return "EE-run-swap-NN";
    case PhiCase::EeRunEE: return "EE-run-swap-EE";
    case PhiCase::EeRunBend: return "EE-run-swap-bend";
    case PhiCase::EeRunEnd: return "EE-run-swap-end";
  }
  return "?";
}

std::string path_to_string(const LabeledPath& p) {
  std::string s;
  for (const Step& st : p) {
    if (!s.empty()) s += " ";
    s += (st.dir == Dir::E ? "E" : "N");
    s += std::to_string(st.label);
  }
  return s;
}

namespace {

// Suffix swap after position r (both paths sit on the same lattice point).
std::pair<LabeledPath, LabeledPath> swap_tails(const LabeledPath& p,
                                               const LabeledPath& q, int r) {
  LabeledPath np(p.begin(), p.begin() + r);
  np.insert(np.end(), q.begin() + r, q.end());
  LabeledPath nq(q.begin(), q.begin() + r);
  nq.insert(nq.end(), p.begin() + r, p.end());
  return {std::move(np), std::move(nq)};
}

// Relabels step k to (E, k+1-v_k) in p and (N, k+1-u_k) in q, then swaps.
// Both new labels are strictly smaller than the old ones in every branch
// that uses this rewrite, which keeps the left junctions valid.
std::pair<LabeledPath, LabeledPath> relabel_swap(const LabeledPath& p,
                                                 const LabeledPath& q, int k) {
  const int uk = lab_at(p, k), vk = lab_at(q, k);
  const int new_u = k + 1 - vk, new_v = k + 1 - uk;
  if (new_u < 1 || new_v < 1 || new_u >= uk || new_v >= vk)
    throw InternalConsistencyError("relabel_swap: labels fail to decrease at step " +
                                   std::to_string(k));
  LabeledPath np = p, nq = q;
  np[static_cast<std::size_t>(k) - 1].label = new_u;
  nq[static_cast<std::size_t>(k) - 1].label = new_v;
  return swap_tails(np, nq, k);
}

bool cond_run_nn(const LabeledPath& p, const LabeledPath& q, int r) {
  return dir_at(p, r) == Dir::N && dir_at(p, r + 1) == Dir::N &&
         dir_at(q, r) == Dir::N && dir_at(q, r + 1) == Dir::N &&
         lab_at(p, r) >= lab_at(q, r + 1) && lab_at(q, r) >= lab_at(p, r + 1);
}

bool cond_run_ee(const LabeledPath& p, const LabeledPath& q, int r) {
  return dir_at(p, r) == Dir::E && dir_at(p, r + 1) == Dir::E &&
         dir_at(q, r) == Dir::E && dir_at(q, r + 1) == Dir::E &&
         lab_at(p, r) >= lab_at(q, r + 1) && lab_at(q, r) >= lab_at(p, r + 1);
}

bool cond_run_bend(const LabeledPath& p, const LabeledPath& q, int r) {
  const bool nn_to_ee = dir_at(p, r) == Dir::N && dir_at(p, r + 1) == Dir::E &&
                        dir_at(q, r) == Dir::N && dir_at(q, r + 1) == Dir::E;
  const bool ee_to_nn = dir_at(p, r) == Dir::E && dir_at(p, r + 1) == Dir::N &&
                        dir_at(q, r) == Dir::E && dir_at(q, r + 1) == Dir::N;
  if (!nn_to_ee && !ee_to_nn) return false;
  return lab_at(p, r) + lab_at(q, r + 1) <= r + 1 &&
         lab_at(q, r) + lab_at(p, r + 1) <= r + 1;
}

}  // namespace

PhiResult phi(const LabeledPath& p, const LabeledPath& q) {
  if (p.size() != q.size())
    throw std::invalid_argument("phi: paths must have equal length");
  if (const auto v = validate_path(p); v)
    throw std::invalid_argument("phi: first path is invalid");
  if (const auto v = validate_path(q); v)
    throw std::invalid_argument("phi: second path is invalid");
  const int d = static_cast<int>(p.size());
  const auto [pi, pj] = path_class(p);
  const auto [qi, qj] = path_class(q);
  if (qi != pi + 1 || pj != qj + 1)
    throw std::invalid_argument(
        "phi: classes must pair up as (i,j+1) x (i+1,j); got (" +
        std::to_string(pi) + "," + std::to_string(pj) + ") x (" +
        std::to_string(qi) + "," + std::to_string(qj) + ")");
  const int i = pi, j = qj;

  const auto finish = [&](std::pair<LabeledPath, LabeledPath> out, PhiCase tag,
                          int index, int skips) {
    PhiResult res{std::move(out.first), std::move(out.second), tag, index, skips};
    if (!is_valid_path(res.p_out) || !is_valid_path(res.q_out))
      throw InternalConsistencyError(
          std::string("phi: output path invalid after ") + phi_case_name(tag) +
          " at step " + std::to_string(index) + " on P=" + path_to_string(p) +
          " Q=" + path_to_string(q));
    if (path_class(res.p_out) != std::make_pair(i, j) ||
        path_class(res.q_out) != std::make_pair(i + 1, j + 1))
      throw InternalConsistencyError(
          std::string("phi: output lands outside the target classes after ") +
          phi_case_name(tag) + " on P=" + path_to_string(p) +
          " Q=" + path_to_string(q));
    return res;
  };

  // A swap inside the parallel segment [s, t] that follows an unswappable
  // (N,N)/(E,E) meeting: first position satisfying one of the three
  // adjacent-pair conditions, otherwise the segment end when the paths part
  // as (E,N). Returns nullopt when they part as (N,E): the meeting is skipped.
  const auto run_scan = [&](int k, bool from_nn,
                            int skips) -> std::optional<PhiResult> {
    const int s = k + 1;
    int t = s;
    while (t + 1 <= d && dir_at(p, t + 1) == dir_at(q, t + 1)) ++t;
    for (int r = s; r < t; ++r) {
      if (cond_run_nn(p, q, r))
        return finish(swap_tails(p, q, r),
                      from_nn ? PhiCase::NnRunNN : PhiCase::EeRunNN, r, skips);
      if (cond_run_ee(p, q, r))
        return finish(swap_tails(p, q, r),
                      from_nn ? PhiCase::NnRunEE : PhiCase::EeRunEE, r, skips);
      if (cond_run_bend(p, q, r))
        return finish(swap_tails(p, q, r),
                      from_nn ? PhiCase::NnRunBend : PhiCase::EeRunBend, r, skips);
    }
    if (t == d)
      throw InternalConsistencyError(
          "phi: parallel segment reaches the end without a swap position on P=" +
          path_to_string(p) + " Q=" + path_to_string(q));
    if (dir_at(p, t + 1) == Dir::E && dir_at(q, t + 1) == Dir::N)
      return finish(swap_tails(p, q, t),
                    from_nn ? PhiCase::NnRunEnd : PhiCase::EeRunEnd, t, skips);
    if (!(dir_at(p, t + 1) == Dir::N && dir_at(q, t + 1) == Dir::E))
      throw InternalConsistencyError("phi: parallel segment ends in an impossible way");
    return std::nullopt;
  };

  int skips = 0;
  int np = 0, nq = 0;
  for (int k = 1; k <= d; ++k) {
    if (dir_at(p, k) == Dir::N) ++np;
    if (dir_at(q, k) == Dir::N) ++nq;
    if (np + 1 != nq) continue;  // not on a shared lattice point
    if (dir_at(p, k) == dir_at(q, k)) continue;  // inside a skipped parallel segment
    if (dir_at(p, k) == Dir::N && dir_at(q, k) == Dir::E)
      throw InternalConsistencyError("phi: meeting with P arriving from below");

    // Fresh meeting: P arrives east, Q arrives north.
    if (k == d) {
      // Only the endpoint is (effectively) shared; shrink the last labels.
      LabeledPath np2 = p, nq2 = q;
      if (j + 1 < 1 || d - j - 1 < 1)
        throw InternalConsistencyError("phi: endpoint relabel out of range");
      np2[static_cast<std::size_t>(d) - 1] = {Dir::E, j + 1};
      nq2[static_cast<std::size_t>(d) - 1] = {Dir::N, d - j - 1};
      return finish({std::move(np2), std::move(nq2)}, PhiCase::EndRelabel, d, skips);
    }

    const int uk = lab_at(p, k), un = lab_at(p, k + 1);
    const int vk = lab_at(q, k), vn = lab_at(q, k + 1);
    const Dir pa = dir_at(p, k + 1), qa = dir_at(q, k + 1);

    if (pa == Dir::E && qa == Dir::N) {
      // Always resolvable here.
      if (uk + vn <= k + 1 && vk + un <= k + 1)
        return finish(swap_tails(p, q, k), PhiCase::EnSwap, k, skips);
      return finish(relabel_swap(p, q, k), PhiCase::EnRelabel, k, skips);
    }
    if (pa == Dir::N && qa == Dir::E) {
      if (uk >= vn && vk >= un)
        return finish(swap_tails(p, q, k), PhiCase::NeSwap, k, skips);
      ++skips;  // paths cross and part immediately; resolved further on
      continue;
    }
    if (pa == Dir::N && qa == Dir::N) {
      if (uk + vn <= k + 1 && vk >= un)
        return finish(swap_tails(p, q, k), PhiCase::NnSwap, k, skips);
      if (uk + vn > k + 1)
        return finish(relabel_swap(p, q, k), PhiCase::NnRelabel, k, skips);
      // vk < un: defer into the parallel segment.
      if (auto res = run_scan(k, true, skips)) return *res;
      ++skips;
      continue;
    }
    // pa == E && qa == E, mirror of the (N,N) family.
    if (vk + un <= k + 1 && uk >= vn)
      return finish(swap_tails(p, q, k), PhiCase::EeSwap, k, skips);
    if (vk + un > k + 1)
      return finish(relabel_swap(p, q, k), PhiCase::EeRelabel, k, skips);
    // uk < vn: defer into the parallel segment.
    if (auto res = run_scan(k, false, skips)) return *res;
    ++skips;
  }
  throw InternalConsistencyError("phi: no rewrite applied on P=" + path_to_string(p) +
                                 " Q=" + path_to_string(q));
}

namespace {

struct CellOutcome {
  std::uint64_t pairs = 0;
  std::uint64_t skips = 0;
  std::map<std::string, std::uint64_t> histogram;
  bool total_ok = true, codomain_ok = true, injective = true;
  std::string failure;
};

}  // namespace

PhiReport verify_phi(int d) {
  if (d < 1) throw std::invalid_argument("verify_phi needs d >= 1");
  if (d > 7)
    throw ResourceLimitError("verify_phi: d! * d! pairs beyond the desk bound at d = " +
                             std::to_string(d));

  // psi over S_d is a certified enumerator of P(d); bucket by class.
  std::vector<std::vector<std::vector<LabeledPath>>> bucket(
      static_cast<std::size_t>(d),
      std::vector<std::vector<LabeledPath>>(static_cast<std::size_t>(d)));
  Permutation perm = Permutation::identity(d);
  do {
    LabeledPath path = psi(perm);
    const auto [i, j] = path_class(path);
    bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].push_back(
        std::move(path));
  } while (perm.next_lex());

  PhiReport report;
  report.d = d;

  const RefinedEulerianTable table = refined_eulerian(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (Int(bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].size()) !=
          table.at(i, j))
        report.class_counts_ok = false;

  // The checked inequality per cell: |P(d,i,j+1)| |P(d,i+1,j)| <=
  // |P(d,i,j)| |P(d,i+1,j+1)| must follow from the injection.
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (table.at(i, j + 1) * table.at(i + 1, j) >
          table.at(i, j) * table.at(i + 1, j + 1))
        report.minor_inequalities_ok = false;

  const auto cells = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
  CellOutcome merged = block_map_reduce<CellOutcome>(
      cells, CellOutcome{},
      [&](std::size_t lo, std::size_t hi) {
        CellOutcome out;
        for (std::size_t cell = lo; cell < hi; ++cell) {
          const int i = static_cast<int>(cell) / d;
          const int j = static_cast<int>(cell) % d;
          if (j + 1 >= d || i + 1 >= d) continue;  // an empty factor
          const auto& dom_p = bucket[static_cast<std::size_t>(i)][static_cast<std::size_t>(j) + 1];
          const auto& dom_q = bucket[static_cast<std::size_t>(i) + 1][static_cast<std::size_t>(j)];
          std::map<std::string, std::string> seen;  // output -> first input
          for (const auto& P : dom_p)
            for (const auto& Q : dom_q) {
              ++out.pairs;
              PhiResult res;
              try {
                res = phi(P, Q);
              } catch (const std::exception& e) {
                out.total_ok = false;
                if (out.failure.empty())
                  out.failure = std::string("phi failed: ") + e.what();
                continue;
              }
              out.skips += static_cast<std::uint64_t>(res.skips);
              ++out.histogram[phi_case_name(res.tag)];
              if (!is_valid_path(res.p_out) || !is_valid_path(res.q_out) ||
                  path_class(res.p_out) != std::make_pair(i, j) ||
                  path_class(res.q_out) != std::make_pair(i + 1, j + 1)) {
                out.codomain_ok = false;
                if (out.failure.empty())
                  out.failure = "codomain violation on P=" + path_to_string(P) +
                                " Q=" + path_to_string(Q);
                continue;
              }
              const std::string key =
                  path_to_string(res.p_out) + "|" + path_to_string(res.q_out);
              const std::string val = path_to_string(P) + "|" + path_to_string(Q);
              const auto [it, inserted] = seen.emplace(key, val);
              if (!inserted) {
                out.injective = false;
                if (out.failure.empty())
                  out.failure = "collision: inputs " + it->second + " and " + val +
                                " both map to " + key;
              }
            }
        }
        return out;
      },
      [](CellOutcome a, CellOutcome b) {
        a.pairs += b.pairs;
        a.skips += b.skips;
        for (const auto& [k, v] : b.histogram) a.histogram[k] += v;
        a.total_ok &= b.total_ok;
        a.codomain_ok &= b.codomain_ok;
        a.injective &= b.injective;
        if (a.failure.empty()) a.failure = b.failure;
        return a;
      });

  report.pairs_checked = merged.pairs;
  report.skip_events = merged.skips;
  report.case_histogram = std::move(merged.histogram);
  report.total_ok = merged.total_ok;
  report.codomain_ok = merged.codomain_ok;
  report.injective = merged.injective;
  report.failure_detail = std::move(merged.failure);
  return report;
}

}  // namespace subdivtp
