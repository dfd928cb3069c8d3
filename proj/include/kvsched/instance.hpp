#pragma once

#include <vector>

namespace kvsched {

struct Job {
  int id = 0;
  long long response_len = 0;  // o_i, decode rounds until completion
};

// One scheduling problem: common prompt length s, memory budget M, and the
// response lengths. Job ids are 0..n-1 in list order.
struct Instance {
  long long prompt_len = 0;     // s
  long long memory_budget = 0;  // M
  std::vector<Job> jobs;

  int n() const { return static_cast<int>(jobs.size()); }
  long long total_work() const;    // sum of o_i
  long long max_response() const;  // max o_i
};

Instance make_instance(long long prompt_len, long long memory_budget,
                       const std::vector<long long>& response_lens);

// Checks n >= 1, M >= 1, o_i >= 1 and per-job feasibility s + o_i <= M.
// Returns its argument so call sites can validate inline.
const Instance& validate_instance(const Instance& inst);

bool identical_jobs(const Instance& inst);

}  // namespace kvsched
