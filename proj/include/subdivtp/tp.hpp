#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdivtp/fvector.hpp"
#include "subdivtp/matrix.hpp"

namespace subdivtp {

// Total number of minors is_tp may enumerate before refusing.
inline constexpr std::uint64_t kMinorBudget = 10'000'000;

// Exact determinant of the submatrix selected by strictly increasing index
// lists. Integer matrices go through fraction-free Bareiss elimination;
// rational ones clear denominators row by row first.
Int minor_det(const IntMatrix& a, const std::vector<int>& rows,
              const std::vector<int>& cols);
Rat minor_det(const RatMatrix& a, const std::vector<int>& rows,
              const std::vector<int>& cols);

Int det(const IntMatrix& a);
Rat det(const RatMatrix& a);

struct TPWitness {
  std::vector<int> rows, cols;
  Rat value;  // the offending minor, reproduced exactly
};

struct TPVerdict {
  std::string property;  // "TP2", "TP", "TP3", ...
  bool holds = false;
  std::optional<TPWitness> witness;
};

// Exhaustive check of all k'xk' minors for k' = 1..k. On failure the witness
// is the first offending minor in (k', rows, cols) lexicographic order,
// independently of the worker count.
TPVerdict is_tp_k(const IntMatrix& a, int k);
TPVerdict is_tp(const IntMatrix& a);
TPVerdict is_tp2(const IntMatrix& a);

// Consecutive-minor shortcut: for matrices whose interior entries are all
// strictly positive, TP2 follows from the 2x2 minors of consecutive rows and
// columns alone. Falls back to the exhaustive check whenever the hypothesis
// (or the derived boundary zero propagation) does not hold.
TPVerdict is_tp2_consecutive(const IntMatrix& a);

bool product_tp2_check(const IntMatrix& a, const IntMatrix& b);

enum class Ineq { One, Two };

struct PreservationReport {
  Ineq which = Ineq::One;
  int trials = 0;
  std::uint64_t seed = 0;
  std::uint64_t rejections = 0;
  int failures = 0;
  std::vector<HVector> failing_inputs;  // expected empty
};

// Samples h-vectors satisfying the chosen inequality chain (symmetric base
// plus small perturbations, rejection on failure), pushes them through H and
// counts output-side failures. H must be TP2; the sampler gives up after
// rejection_limit rejected draws per accepted trial.
PreservationReport preservation_experiment(const IntMatrix& h, Ineq which,
                                           int trials, std::uint64_t seed,
                                           int rejection_limit = 10'000);

}  // namespace subdivtp
