#include "subdivtp/tp.hpp"

#include <algorithm>
#include <stdexcept>

#include "subdivtp/combinatorics.hpp"
#include "subdivtp/errors.hpp"
#include "subdivtp/parallel.hpp"
#include "subdivtp/rng.hpp"

namespace subdivtp {

namespace {

void check_index_lists(std::size_t rows, std::size_t cols,
                       const std::vector<int>& ri, const std::vector<int>& ci) {
  if (ri.size() != ci.size())
    throw std::invalid_argument("minor needs equally long index lists");
  if (ri.empty()) throw std::invalid_argument("minor needs at least one index");
  for (std::size_t t = 0; t < ri.size(); ++t) {
    if (ri[t] < 0 || static_cast<std::size_t>(ri[t]) >= rows ||
        ci[t] < 0 || static_cast<std::size_t>(ci[t]) >= cols)
      throw std::invalid_argument("minor index out of range");
    if (t > 0 && (ri[t] <= ri[t - 1] || ci[t] <= ci[t - 1]))
      throw std::invalid_argument("minor index lists must be strictly increasing");
  }
}

// Fraction-free Bareiss elimination; destroys m.
Int bareiss(std::vector<std::vector<Int>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      }
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  Int r = m[n - 1][n - 1];
  return sign < 0 ? Int(-r) : r;
}

std::vector<std::vector<Int>> take_submatrix(const IntMatrix& a,
                                             const std::vector<int>& ri,
                                             const std::vector<int>& ci) {
  std::vector<std::vector<Int>> m(ri.size(), std::vector<Int>(ci.size()));
  for (std::size_t i = 0; i < ri.size(); ++i)
    for (std::size_t j = 0; j < ci.size(); ++j)
      m[i][j] = a(static_cast<std::size_t>(ri[i]), static_cast<std::size_t>(ci[j]));
  return m;
}

// First k-combination of [0,n) and lexicographic successor.
std::vector<int> first_combination(int k) {
  std::vector<int> c(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
  return c;
}

bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
  if (i < 0) return false;
  ++c[static_cast<std::size_t>(i)];
  for (int j = i + 1; j < k; ++j)
    c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  return true;
}

// Unrank the lexicographically r-th k-combination of [0,n).
std::vector<int> nth_combination(int n, int k, Int r) {
  std::vector<int> c;
  int next = 0;
  for (int slot = k; slot >= 1; --slot) {
    int v = next;
    for (;;) {
      const Int block = binomial(n - v - 1, slot - 1);
      if (r < block) break;
      r -= block;
      ++v;
    }
    c.push_back(v);
    next = v + 1;
  }
  return c;
}

}  // namespace

Int minor_det(const IntMatrix& a, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  check_index_lists(a.rows(), a.cols(), rows, cols);
  auto m = take_submatrix(a, rows, cols);
  return bareiss(m);
}

Rat minor_det(const RatMatrix& a, const std::vector<int>& rows,
              const std::vector<int>& cols) {
  check_index_lists(a.rows(), a.cols(), rows, cols);
  // Clear denominators row by row, divide the integer determinant back.
  std::vector<std::vector<Int>> m(rows.size(), std::vector<Int>(cols.size()));
  Int scale_product = 1;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Int scale = 1;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rat& e = a(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
      scale = boost::multiprecision::lcm(scale, rat_den(e));
    }
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Rat& e = a(static_cast<std::size_t>(rows[i]), static_cast<std::size_t>(cols[j]));
      m[i][j] = rat_num(e) * (scale / rat_den(e));
    }
    scale_product *= scale;
  }
  return Rat(bareiss(m), scale_product);
}

Int det(const IntMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("det needs a nonempty square matrix");
  std::vector<int> idx(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) idx[i] = static_cast<int>(i);
  return minor_det(a, idx, idx);
}

Rat det(const RatMatrix& a) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw std::invalid_argument("det needs a nonempty square matrix");
  std::vector<int> idx(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) idx[i] = static_cast<int>(i);
  return minor_det(a, idx, idx);
}

namespace {

// Scans all kxk minors with row subsets in [lo, hi) (lexicographic rank) and
// reports the first offending one in (rows, cols) order.
std::optional<TPWitness> scan_minors_block(const IntMatrix& a, int k,
                                           std::size_t lo, std::size_t hi) {
  const int m = static_cast<int>(a.cols());
  std::vector<int> rowsel = nth_combination(static_cast<int>(a.rows()), k, Int(lo));
  for (std::size_t r = lo; r < hi; ++r) {
    std::vector<int> colsel = first_combination(k);
    do {
      const Int v = minor_det(a, rowsel, colsel);
      if (v < 0) return TPWitness{rowsel, colsel, Rat(v)};
    } while (next_combination(colsel, m));
    next_combination(rowsel, static_cast<int>(a.rows()));
  }
  return std::nullopt;
}

std::string property_name(int k, bool full) {
  if (full) return "TP";
  return "TP" + std::to_string(k);
}

}  // namespace

TPVerdict is_tp_k(const IntMatrix& a, int k) {
  if (a.rows() == 0 || a.cols() == 0)
    throw std::invalid_argument("is_tp_k needs a nonempty matrix");
  const int kmax = static_cast<int>(std::min(a.rows(), a.cols()));
  const bool full = k >= kmax;
  if (k < 1) throw std::invalid_argument("is_tp_k needs k >= 1");
  k = std::min(k, kmax);

  Int budget = 0;
  for (int kp = 1; kp <= k; ++kp)
    budget += binomial(static_cast<long long>(a.rows()), kp) *
              binomial(static_cast<long long>(a.cols()), kp);
  if (budget > kMinorBudget)
    throw ResourceLimitError("is_tp_k: " + budget.str() + " minors exceed the budget");

  TPVerdict verdict{property_name(k, full), true, std::nullopt};
  for (int kp = 1; kp <= k && verdict.holds; ++kp) {
    const Int nsub = binomial(static_cast<long long>(a.rows()), kp);
    const auto n = static_cast<std::size_t>(static_cast<long long>(nsub));
    using Found = std::optional<TPWitness>;
    Found found = block_map_reduce<Found>(
        n, std::nullopt,
        [&](std::size_t lo, std::size_t hi) { return scan_minors_block(a, kp, lo, hi); },
        [](Found acc, Found next) { return acc ? acc : next; });
    if (found) {
      verdict.holds = false;
      verdict.witness = std::move(found);
    }
  }
  return verdict;
}

TPVerdict is_tp(const IntMatrix& a) {
  return is_tp_k(a, static_cast<int>(std::min(a.rows(), a.cols())));
}

TPVerdict is_tp2(const IntMatrix& a) { return is_tp_k(a, 2); }

TPVerdict is_tp2_consecutive(const IntMatrix& a) {
  const std::size_t n = a.rows(), m = a.cols();
  if (n == 0 || m == 0)
    throw std::invalid_argument("is_tp2_consecutive needs a nonempty matrix");

  bool hypothesis = n >= 3 && m >= 3;
  for (std::size_t i = 1; hypothesis && i + 1 < n; ++i)
    for (std::size_t j = 1; j + 1 < m; ++j)
      if (a(i, j) <= 0) {
        hypothesis = false;
        break;
      }
  if (!hypothesis) return is_tp_k(a, 2);

  TPVerdict verdict{"TP2", true, std::nullopt};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (a(i, j) < 0) {
        verdict.holds = false;
        verdict.witness = TPWitness{{static_cast<int>(i)}, {static_cast<int>(j)}, Rat(a(i, j))};
        return verdict;
      }
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t j = 0; j + 1 < m; ++j) {
      const Int v = a(i, j) * a(i + 1, j + 1) - a(i, j + 1) * a(i + 1, j);
      if (v < 0) {
        verdict.holds = false;
        verdict.witness =
            TPWitness{{static_cast<int>(i), static_cast<int>(i + 1)},
                      {static_cast<int>(j), static_cast<int>(j + 1)},
                      Rat(v)};
        return verdict;
      }
    }

  // Boundary zero propagation (implied by the consecutive minors and the
  // interior positivity; if it ever disagrees, distrust the shortcut).
  bool propagation = true;
  for (std::size_t j = 1; j + 1 < m; ++j) {
    if (a(0, j) == 0 && a(0, j + 1) != 0) propagation = false;
    if (a(n - 1, j) == 0 && a(n - 1, j - 1) != 0) propagation = false;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (a(i, 0) == 0 && a(i + 1, 0) != 0) propagation = false;
    if (a(i, m - 1) == 0 && a(i - 1, m - 1) != 0) propagation = false;
  }
  if (!propagation) return is_tp_k(a, 2);

  return verdict;
}

bool product_tp2_check(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows())
    throw std::invalid_argument("product_tp2_check: matrices are not conformable");
  return is_tp2(a * b).holds;
}

namespace {

// Positive symmetric base plus small increments; symmetric positive vectors
// satisfy chain (1) with equality, so small perturbations are accepted often.
HVector sample_candidate_1(int d, Rng& rng) {
  HVector h;
  h.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  const std::int64_t base = rng.uniform(2, 9);
  for (int i = 0; i <= d / 2; ++i) {
    const Int v = base + rng.uniform(0, 2);
    h.counts[static_cast<std::size_t>(i)] = v;
    h.counts[static_cast<std::size_t>(d - i)] = v;
  }
  for (int i = 0; i <= d; ++i)
    h.counts[static_cast<std::size_t>(i)] += rng.uniform(0, 1);
  return h;
}

// h_0 = 1, h_d = 0, symmetric positive middle plus increments.
HVector sample_candidate_2(int d, Rng& rng) {
  HVector h;
  h.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  if (d == 0) return h;  // (0) satisfies chain (2) vacuously
  h.counts[0] = 1;
  const std::int64_t base = rng.uniform(2, 9);
  for (int i = 1; i <= d - 1; ++i) {
    const int mirror = d - i;
    if (i > mirror) break;
    const Int v = base + rng.uniform(0, 2);
    h.counts[static_cast<std::size_t>(i)] = v;
    h.counts[static_cast<std::size_t>(mirror)] = v;
  }
  for (int i = 1; i <= d - 1; ++i)
    h.counts[static_cast<std::size_t>(i)] += rng.uniform(0, 1);
  return h;
}

}  // namespace

PreservationReport preservation_experiment(const IntMatrix& h, Ineq which,
                                           int trials, std::uint64_t seed,
                                           int rejection_limit) {
  if (h.rows() != h.cols() || h.rows() == 0)
    throw std::invalid_argument("preservation_experiment needs a square matrix");
  if (!is_tp2(h).holds)
    throw std::invalid_argument("preservation_experiment requires a TP2 matrix");

  const int d = static_cast<int>(h.rows()) - 1;
  PreservationReport report;
  report.which = which;
  report.trials = trials;
  report.seed = seed;

  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    HVector sample;
    int rejected = 0;
    for (;;) {
      sample = which == Ineq::One ? sample_candidate_1(d, rng)
                                  : sample_candidate_2(d, rng);
      const IneqVerdict v = which == Ineq::One ? check_ineq_1(sample)
                                               : check_ineq_2(sample);
      if (v.holds()) break;
      ++report.rejections;
      if (++rejected > rejection_limit)
        throw ResourceLimitError("preservation_experiment: sampler starvation");
    }
    HVector image;
    image.counts = h.apply(sample.counts);
    const IneqVerdict out = which == Ineq::One ? check_ineq_1(image)
                                               : check_ineq_2(image);
    if (!out.holds()) {
      ++report.failures;
      report.failing_inputs.push_back(sample);
    }
  }
  return report;
}

}  // namespace subdivtp
