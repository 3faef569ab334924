#include "subdivtp/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

#include "subdivtp/errors.hpp"
#include "subdivtp/parallel.hpp"

namespace subdivtp {

Int int_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  try {
    return Int(s);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer literal: '" + s + "'");
  }
}

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(int_from_string(s));
  const Int num = int_from_string(s.substr(0, slash));
  const Int den = int_from_string(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  return Rat(num, den);
}

Int factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative argument");
  Int r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Int binomial(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact: r is C(n-k+i, i) after this step
  }
  return r;
}

Int stirling2(int n, int k) {
  if (n < 0 || k < 0) throw std::invalid_argument("stirling2 needs n,k >= 0");
  if (k > n) return 0;
  if (n == 0) return 1;  // S(0,0)
  if (k == 0) return 0;
  // S(n,k) = k S(n-1,k) + S(n-1,k-1), rolling row.
  std::vector<Int> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;  // row for n' = 0
  for (int np = 1; np <= n; ++np) {
    for (int kp = std::min(np, k); kp >= 1; --kp)
      row[kp] = kp * row[kp] + row[kp - 1];
    row[0] = 0;
  }
  return row[k];
}

Rat falling_factorial(const Rat& x, int k) {
  if (k < 0) throw std::invalid_argument("falling_factorial needs k >= 0");
  Rat r = 1;
  for (int m = 0; m < k; ++m) r *= (x - m);
  return r;
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int d = static_cast<int>(word_.size());
  if (d == 0) throw std::invalid_argument("empty permutation");
  std::vector<bool> seen(static_cast<std::size_t>(d) + 1, false);
  for (int v : word_) {
    if (v < 1 || v > d || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("word is not a permutation of [d]");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int d) {
  std::vector<int> w(static_cast<std::size_t>(d));
  for (int i = 0; i < d; ++i) w[static_cast<std::size_t>(i)] = i + 1;
  return Permutation(std::move(w));
}

bool Permutation::next_lex() {
  return std::next_permutation(word_.begin(), word_.end());
}

Permutation nth_permutation(int d, const Int& rank) {
  if (d < 1) throw std::invalid_argument("nth_permutation needs d >= 1");
  if (rank < 0 || rank >= factorial(d))
    throw std::invalid_argument("permutation rank out of range");
  std::vector<int> pool;
  for (int i = 1; i <= d; ++i) pool.push_back(i);
  std::vector<int> word;
  Int r = rank;
  for (int i = d - 1; i >= 0; --i) {
    const Int f = factorial(i);
    const Int q = r / f;
    r %= f;
    const auto idx = static_cast<std::size_t>(static_cast<long long>(q));
    word.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(word));
}

std::vector<int> descent_set(const Permutation& p) {
  std::vector<int> ds;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ds.push_back(i);
  return ds;
}

int descent_count(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) ++c;
  return c;
}

Int RefinedEulerianTable::at(long long i, long long j) const {
  if (i < 0 || j < 0 || i >= d || j >= d) return 0;
  return entries[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

Int RefinedEulerianTable::row_sum(int i) const {
  Int s = 0;
  for (int j = 0; j < d; ++j) s += at(i, j);
  return s;
}

Int RefinedEulerianTable::col_sum(int j) const {
  Int s = 0;
  for (int i = 0; i < d; ++i) s += at(i, j);
  return s;
}

Int RefinedEulerianTable::total() const {
  Int s = 0;
  for (int i = 0; i < d; ++i) s += row_sum(i);
  return s;
}

namespace {

using Tally = std::vector<std::vector<Int>>;

Tally zero_tally(int d) {
  return Tally(static_cast<std::size_t>(d),
               std::vector<Int>(static_cast<std::size_t>(d), 0));
}

}  // namespace

RefinedEulerianTable refined_eulerian(int d) {
  if (d < 1) throw std::invalid_argument("refined_eulerian needs d >= 1");
  if (d > kMaxEnumerationD)
    throw ResourceLimitError("refined_eulerian: d = " + std::to_string(d) +
                             " exceeds the enumeration bound " +
                             std::to_string(kMaxEnumerationD));
  const Int total = factorial(d);
  const auto n = static_cast<std::size_t>(static_cast<long long>(total));

  Tally tally = block_map_reduce<Tally>(
      n, zero_tally(d),
      [&](std::size_t lo, std::size_t hi) {
        Tally t = zero_tally(d);
        Permutation p = nth_permutation(d, Int(lo));
        for (std::size_t r = lo; r < hi; ++r) {
          const int i = descent_count(p);
          const int j = d - p(d);
          t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] += 1;
          p.next_lex();
        }
        return t;
      },
      [&](Tally a, Tally b) {
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j)
            a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] +=
                b[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        return a;
      });

  RefinedEulerianTable table;
  table.d = d;
  table.entries = std::move(tally);
  return table;
}

}  // namespace subdivtp
