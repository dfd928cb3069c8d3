#pragma once

#include <memory>
#include <vector>

#include "kvsched/instance.hpp"
#include "kvsched/timeline.hpp"

namespace kvsched {

// What a policy may observe each round. Non-clairvoyant policies see progress
// and completion only; response lengths live in the Instance and are handed
// out by the policy factory to clairvoyant policies alone.
struct SimView {
  long long round = 0;
  int n = 0;
  long long prompt_len = 0;
  long long memory_budget = 0;
  const std::vector<long long>& progress;  // u_{i,round}
  const std::vector<char>& finished;
  const std::vector<int>& prev_batch;  // B_{round-1}, ascending

  long long mem_of(int job) const { return prompt_len + progress[job] + 1; }
};

class Policy {
 public:
  virtual ~Policy() = default;
  // Returns B_round. Ids must be unique, in range, and unfinished; the engine
  // rejects anything else instead of clipping.
  virtual std::vector<int> next_batch(const SimView& view) = 0;
};

struct SimOptions {
  long long horizon_cap = -1;  // <0: use default_horizon_cap
  bool record_progress = false;
};

long long default_horizon_cap(const Instance& inst);

// Round-by-round driver. Starts and kills are inferred by diffing consecutive
// batches; a job leaving the batch unfinished is a kill and its progress
// resets to zero. Enforces memory feasibility on every batch.
Timeline simulate(const Instance& inst, Policy& policy, const SimOptions& opts = {});

// Runs each job from a fixed start round to completion, never killing. The
// oracle and several schedulers reduce to this.
class FixedStartPolicy : public Policy {
 public:
  FixedStartPolicy(std::vector<long long> starts);
  std::vector<int> next_batch(const SimView& view) override;

 private:
  std::vector<long long> starts_;
};

Timeline run_fixed_starts(const Instance& inst, const std::vector<long long>& starts,
                          const SimOptions& opts = {});

}  // namespace kvsched
