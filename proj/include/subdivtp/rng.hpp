#pragma once

#include <cstdint>
#include <random>

namespace subdivtp {

// Deterministic RNG for seeded experiments. mt19937_64 has a fixed output
// sequence by the standard; the bounded draw below avoids
// uniform_int_distribution, whose mapping is implementation-defined.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [lo, hi], inclusive. Rejection sampling keeps the draw unbiased.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
    std::uint64_t v = gen_();
    while (v >= limit) v = gen_();
    return lo + static_cast<std::int64_t>(v % span);
  }

  bool coin() { return (gen_() & 1u) != 0; }

private:
  std::mt19937_64 gen_;
};

}  // namespace subdivtp
