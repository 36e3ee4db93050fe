#pragma once

#include <cstdint>
#include <vector>

#include "risbeam/oracle.hpp"

namespace risbeam {

/// Swarm summary at the end of one training sub-block. case_label is the
/// dispatch class implied by this record's own feasible count ('A' all
/// feasible, 'B' mixed, 'C' none), i.e. the case the next sub-block runs.
struct TraceRecord {
  double global_fitness;  // -inf until the first feasible AF is recorded
  int feasible_count;
  char case_label;
};

/// Outcome of one training run, shared by every optimizer.
struct TrainingResult {
  BeamPair best_beam;
  double best_fitness = 0.0;
  std::vector<TraceRecord> trace;
  std::uint64_t echo_evals = 0;  // oracle echo measurements consumed by the run
  std::uint64_t user_evals = 0;
  bool ever_feasible = false;
};

}  // namespace risbeam
