#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdivtp/combinatorics.hpp"

namespace subdivtp {

enum class Dir : std::uint8_t { E, N };

struct Step {
  Dir dir = Dir::E;
  int label = 1;
  bool operator==(const Step& o) const { return dir == o.dir && label == o.label; }
};

// Labeled northeast path: (L1) first step (E,1); (L2) equal consecutive
// directions have weakly decreasing labels; (L3) a direction change at i
// forces u_i + u_{i+1} <= i+1.
using LabeledPath = std::vector<Step>;

enum class PathRule { L1, L2, L3 };

struct PathViolation {
  PathRule rule;
  int position;  // 1-based step index where the rule first fails
};

// First violated rule, or nullopt for a valid path. Nonpositive labels
// report as L1 at their position (the label alphabet is the positive
// integers).
std::optional<PathViolation> validate_path(const LabeledPath& p);
bool is_valid_path(const LabeledPath& p);

// Step i reads off the relative rank of p(i) in the length-i prefix:
// descents map to (N, rank), ascents to (E, i+1-rank).
LabeledPath psi(const Permutation& p);

// Inverse reconstruction (ranks right to left); throws on paths that violate
// (L1)-(L3).
Permutation psi_inverse(const LabeledPath& p);

// (number of N steps, j recovered from the last label).
std::pair<int, int> path_class(const LabeledPath& p);

// Rewrite rules, keyed by the direction pair right after the meeting point.
// The deferred (run) rules fire inside the maximal parallel segment that
// follows an unswappable (N,N) or (E,E) meeting: at the first position whose
// adjacent step pairs allow a swap (both-N, both-E, or a synchronized bend),
// or at the end of the segment.
enum class PhiCase {
  EndRelabel,  // the meeting point is the endpoint: relabel the last steps
  EnSwap,      // (E,N): plain suffix swap
  EnRelabel,   // (E,N): relabel step k, then swap
  NeSwap,      // (N,E): plain swap
  NnSwap,      // (N,N): plain swap
  NnRelabel,   // (N,N): relabel, then swap
  NnRunNN,
  NnRunEE,
  NnRunBend,
  NnRunEnd,
  EeSwap,      // (E,E) family, mirror of (N,N)
  EeRelabel,
  EeRunNN,
  EeRunEE,
  EeRunBend,
  EeRunEnd,
};

const char* phi_case_name(PhiCase c);

struct PhiResult {
  LabeledPath p_out, q_out;
  PhiCase tag = PhiCase::EndRelabel;
  int index = 0;  // swap/relabel position (1-based)
  int skips = 0;  // unswappable meetings passed over to the next one
};

// The injection P(d,i,j+1) x P(d,i+1,j) -> P(d,i,j) x P(d,i+1,j+1). Embeds P
// at (-1,1) and Q at (0,0), walks the fresh meetings of the two lattice paths
// in order and applies the first applicable rewrite; a meeting admitting none
// is skipped together with the parallel segment hanging off it. Inputs must
// lie in paired classes. Outputs are revalidated; a failure there, or a pair
// of paths that never admits a rewrite, throws InternalConsistencyError.
PhiResult phi(const LabeledPath& p, const LabeledPath& q);

struct PhiReport {
  int d = 0;
  std::uint64_t pairs_checked = 0;
  bool total_ok = true;      // every domain pair produced an output
  bool codomain_ok = true;   // outputs valid and in the stated classes
  bool injective = true;
  bool class_counts_ok = true;  // |P(d,i,j)| == A(d,i,j)
  bool minor_inequalities_ok = true;
  std::uint64_t skip_events = 0;
  std::map<std::string, std::uint64_t> case_histogram;
  std::string failure_detail;  // first failing pair, verbatim
};

// Runs phi over every domain pair for all 0 <= i,j <= d-1 (paths enumerated
// through psi over S_d) and checks totality, validity, codomain classes and
// injectivity, tallying which rewrite rules fired.
PhiReport verify_phi(int d);

std::string path_to_string(const LabeledPath& p);

}  // namespace subdivtp
