#pragma once

#include <vector>

#include "subdivtp/numbers.hpp"

namespace subdivtp {

// Full enumeration of S_d is refused above this bound (10! permutations run
// in seconds; 11! does not belong in a test loop).
inline constexpr int kMaxEnumerationD = 10;

Int factorial(int n);

// 0 whenever k < 0, n < 0 or k > n.
Int binomial(long long n, long long k);

// Stirling numbers of the second kind, S(0,0) = 1.
Int stirling2(int n, int k);

// x(x-1)...(x-k+1), exact over the rationals.
Rat falling_factorial(const Rat& x, int k);

// A permutation of [d] in one-line notation (values 1..d).
class Permutation {
public:
  explicit Permutation(std::vector<int> word);
  static Permutation identity(int d);

  int size() const { return static_cast<int>(word_.size()); }
  // 1-based position access: p(i) = word[i-1].
  int operator()(int i) const { return word_[static_cast<std::size_t>(i) - 1]; }
  const std::vector<int>& word() const { return word_; }

  // Advances to the lexicographic successor; false after the last one.
  bool next_lex();

  bool operator==(const Permutation& o) const { return word_ == o.word_; }

private:
  std::vector<int> word_;
};

// The lexicographically n-th permutation of [d], 0-based rank.
Permutation nth_permutation(int d, const Int& rank);

// D(p) = { i in [d-1] : p(i) > p(i+1) }, positions 1-based.
std::vector<int> descent_set(const Permutation& p);
int descent_count(const Permutation& p);

// entries[i][j] = A(d,i,j) = #{ sigma in S_d : des(sigma)=i, sigma(d)=d-j }.
struct RefinedEulerianTable {
  int d = 0;
  std::vector<std::vector<Int>> entries;

  // Out-of-range indices yield 0 (the table's extension convention).
  Int at(long long i, long long j) const;
  Int row_sum(int i) const;
  Int col_sum(int j) const;
  Int total() const;
};

// Tallies (des, d - sigma(d)) over all of S_d in lexicographic order.
// Enumeration may be partitioned over workers; tallies merge associatively.
RefinedEulerianTable refined_eulerian(int d);

}  // namespace subdivtp
