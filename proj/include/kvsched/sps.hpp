#pragma once

#include <vector>

#include "kvsched/engine.hpp"
#include "kvsched/instance.hpp"

namespace kvsched {

struct SpsSlot {
  int job = 0;
  long long start = 0;  // sigma_j = floor(j * tau / k)
  long long end = 0;    // sigma_j + tau; unfinished jobs are killed here
};

struct SpsPlan {
  long long parallelism = 0;
  long long slice_len = 0;
  std::vector<SpsSlot> slots;  // in input order

  long long span() const;  // rounds from first start to last slot end
};

SpsPlan sps_plan(const std::vector<int>& job_ids, long long k, long long tau);

// Executes one staggered plan: each job runs inside its slot window and is
// dropped at the slot end if unfinished (the engine records the kill).
class SpsPolicy : public Policy {
 public:
  explicit SpsPolicy(SpsPlan plan);
  std::vector<int> next_batch(const SimView& view) override;

 private:
  SpsPlan plan_;
};

// Whole-instance staggered run in id order. Jobs with o_i > tau are killed at
// their slot end and never restarted, so the timeline completes only if
// tau >= max o_i.
Timeline run_sps(const Instance& inst, long long k, long long tau,
                 const SimOptions& opts = {});

}  // namespace kvsched
