#pragma once

#include <string>
#include <vector>

#include "subdivtp/numbers.hpp"

namespace subdivtp {

// Face counts (f_{-1}, f_0, ..., f_{d-1}) of a (d-1)-dimensional complex;
// counts[0] is f_{-1} and equals 1 for a nonempty complex.
struct FVector {
  std::vector<Int> counts;

  int degree() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const FVector& o) const { return counts == o.counts; }
};

// (h_0, ..., h_d), the coefficient sequence of f(x-1).
struct HVector {
  std::vector<Int> counts;

  int degree() const { return static_cast<int>(counts.size()) - 1; }
  bool operator==(const HVector& o) const { return counts == o.counts; }
};

// Expand f(x-1) where f(x) = sum_i f_{i-1} x^{d-i}; exact inverse pair.
HVector f_to_h(const FVector& f);
FVector h_to_f(const HVector& h);

enum class IneqStatus { Holds, FailsPositivity, FailsAt };

struct IneqVerdict {
  IneqStatus status = IneqStatus::Holds;
  int index = -1;      // first failing chain position when status == FailsAt
  std::string detail;  // human-readable reason for the two failure kinds

  bool holds() const { return status == IneqStatus::Holds; }
};

// Chain (1): h_0,...,h_d > 0 and h_i h_{d-i-1} <= h_{i+1} h_{d-i} for
// 0 <= i <= d-1 (cross-multiplied; no division anywhere).
IneqVerdict check_ineq_1(const HVector& h);

// Chain (2): h_1,...,h_{d-1} > 0, h_d = 0 and h_i h_{d-i-1} >= h_{i+1} h_{d-i}
// for 1 <= i <= d-2.
IneqVerdict check_ineq_2(const HVector& h);

}  // namespace subdivtp
