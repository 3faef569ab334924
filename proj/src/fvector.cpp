#include "subdivtp/fvector.hpp"

#include <stdexcept>

#include "subdivtp/combinatorics.hpp"

namespace subdivtp {

// h_k = sum_{i<=k} (-1)^{k-i} C(d-i, k-i) f_{i-1}.
HVector f_to_h(const FVector& f) {
  if (f.counts.empty()) throw std::invalid_argument("empty f-vector");
  const int d = f.degree();
  HVector h;
  h.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i) {
      const Int term = binomial(d - i, k - i) * f.counts[static_cast<std::size_t>(i)];
      if ((k - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h.counts[static_cast<std::size_t>(k)] = acc;
  }
  return h;
}

// f_{k-1} = sum_{i<=k} C(d-i, k-i) h_i, i.e. f(x) = h(x+1).
FVector h_to_f(const HVector& h) {
  if (h.counts.empty()) throw std::invalid_argument("empty h-vector");
  const int d = h.degree();
  FVector f;
  f.counts.assign(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    Int acc = 0;
    for (int i = 0; i <= k; ++i)
      acc += binomial(d - i, k - i) * h.counts[static_cast<std::size_t>(i)];
    f.counts[static_cast<std::size_t>(k)] = acc;
  }
  return f;
}

IneqVerdict check_ineq_1(const HVector& h) {
  const int d = h.degree();
  const auto& c = h.counts;
  for (int i = 0; i <= d; ++i) {
    if (c[static_cast<std::size_t>(i)] <= 0)
      return {IneqStatus::FailsPositivity, i,
              "h_" + std::to_string(i) + " is not strictly positive"};
  }
  for (int i = 0; i <= d - 1; ++i) {
    const Int lhs = c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(d - i - 1)];
    const Int rhs = c[static_cast<std::size_t>(i + 1)] * c[static_cast<std::size_t>(d - i)];
    if (lhs > rhs)
      return {IneqStatus::FailsAt, i,
              "h_" + std::to_string(i) + "/h_" + std::to_string(d - i) +
                  " > h_" + std::to_string(i + 1) + "/h_" + std::to_string(d - i - 1)};
  }
  return {};
}

IneqVerdict check_ineq_2(const HVector& h) {
  const int d = h.degree();
  const auto& c = h.counts;
  if (c[static_cast<std::size_t>(d)] != 0)
    return {IneqStatus::FailsPositivity, d, "h_d is not zero"};
  for (int i = 1; i <= d - 1; ++i) {
    if (c[static_cast<std::size_t>(i)] <= 0)
      return {IneqStatus::FailsPositivity, i,
              "h_" + std::to_string(i) + " is not strictly positive"};
  }
  for (int i = 1; i <= d - 2; ++i) {
    const Int lhs = c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(d - i - 1)];
    const Int rhs = c[static_cast<std::size_t>(i + 1)] * c[static_cast<std::size_t>(d - i)];
    if (lhs < rhs)
      return {IneqStatus::FailsAt, i,
              "h_" + std::to_string(i) + "/h_" + std::to_string(d - i) +
                  " < h_" + std::to_string(i + 1) + "/h_" + std::to_string(d - i - 1)};
  }
  return {};
}

}  // namespace subdivtp
