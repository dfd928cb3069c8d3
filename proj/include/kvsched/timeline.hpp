#pragma once

#include <string>
#include <vector>

#include "kvsched/instance.hpp"
#include "kvsched/rational.hpp"

namespace kvsched {

struct KillEvent {
  long long round = 0;
  int job = 0;
};

// Full execution record. progress is optional: the engine can record the
// u_{i,t} matrix on demand, and hand-built timelines in tests may carry an
// inconsistent matrix to exercise the verifier. When absent, progress is
// derived from the batches by replay.
struct Timeline {
  int n = 0;
  std::vector<std::vector<int>> batches;  // B_t, ascending job ids
  std::vector<long long> mem_used;        // engine-recorded per-round usage
  std::vector<long long> completion;      // c_i, -1 while incomplete
  std::vector<KillEvent> kills;
  std::vector<std::vector<long long>> progress;  // optional u[t][i]

  long long makespan() const { return static_cast<long long>(batches.size()); }
};

// Sum of completion rounds. Throws incomplete_timeline if any job never
// completes.
long long total_flow_time(const Timeline& tl);

// Independent per-round recomputation of sum_{i in B_t} (s + u_{i,t} + 1).
std::vector<long long> memory_profile(const Timeline& tl, const Instance& inst);

struct Violation {
  long long round = -1;
  int job = -1;
  std::string what;
};

struct FeasibilityReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_string() const;
};

// Re-checks every timeline invariant from scratch (memory feasibility, no
// processing past completion, the progress update law, kill bookkeeping and
// completion rounds). Violations are data, not errors.
FeasibilityReport verify_feasibility(const Timeline& tl, const Instance& inst);

struct RunMetrics {
  long long total_flow_time = 0;
  Rational mean_flow_time;
  long long kill_count = 0;
  long long peak_memory = 0;
  long long makespan = 0;
  std::vector<long long> per_round_memory;
};

RunMetrics compute_metrics(const Timeline& tl, const Instance& inst);

// First round each job is ever active; -1 if it never ran.
std::vector<long long> first_start_times(const Timeline& tl);

}  // namespace kvsched
