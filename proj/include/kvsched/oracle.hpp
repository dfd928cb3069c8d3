#pragma once

#include <optional>
#include <vector>

#include "kvsched/instance.hpp"

namespace kvsched {

struct OracleResult {
  long long flow = 0;
  std::vector<long long> starts;  // per job id
};

struct OracleLimits {
  int max_jobs = 8;
  long long max_horizon = 64;
};

// Exhaustive search over non-preemptive start-time assignments (pausing and
// preemption never help an optimal schedule in this model). Start times are
// forced non-decreasing within identical-length groups. Horizon defaults to
// the sequential makespan sum(o_i). Throws guard_rail beyond the limits.
//
// The OpenMP variant splits on the first job's start and merges branch
// results in order, so it returns the same (flow, lexicographically smallest
// start vector) as the serial reference regardless of thread count.
OracleResult brute_force_opt_serial(const Instance& inst,
                                    std::optional<long long> horizon = {},
                                    const OracleLimits& limits = {});
OracleResult brute_force_opt(const Instance& inst,
                             std::optional<long long> horizon = {},
                             const OracleLimits& limits = {});

}  // namespace kvsched
