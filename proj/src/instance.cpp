#include "kvsched/instance.hpp"

#include <algorithm>
#include <string>

#include "kvsched/error.hpp"

namespace kvsched {

long long Instance::total_work() const {
  long long sum = 0;
  for (const Job& j : jobs) sum += j.response_len;
  return sum;
}

long long Instance::max_response() const {
  long long mx = 0;
  for (const Job& j : jobs) mx = std::max(mx, j.response_len);
  return mx;
}

Instance make_instance(long long prompt_len, long long memory_budget,
                       const std::vector<long long>& response_lens) {
  Instance inst;
  inst.prompt_len = prompt_len;
  inst.memory_budget = memory_budget;
  inst.jobs.reserve(response_lens.size());
  for (size_t i = 0; i < response_lens.size(); ++i)
    inst.jobs.push_back(Job{static_cast<int>(i), response_lens[i]});
  return inst;
}

const Instance& validate_instance(const Instance& inst) {
  if (inst.memory_budget < 1)
    raise(Errc::non_positive_budget,
          "memory budget " + std::to_string(inst.memory_budget));
  if (inst.jobs.empty()) raise(Errc::empty_instance, "no jobs");
  if (inst.prompt_len < 0)
    raise(Errc::bad_parameter, "negative prompt length");
  for (size_t i = 0; i < inst.jobs.size(); ++i) {
    const Job& j = inst.jobs[i];
    if (j.id != static_cast<int>(i))
      raise(Errc::bad_parameter, "job ids must be 0..n-1 in order", -1, j.id);
    if (j.response_len < 1)
      raise(Errc::bad_parameter, "response length must be >= 1", -1, j.id);
    if (inst.prompt_len + j.response_len > inst.memory_budget)
      raise(Errc::infeasible_job,
            "job " + std::to_string(j.id) + " needs " +
                std::to_string(inst.prompt_len + j.response_len) + " > M = " +
                std::to_string(inst.memory_budget),
            -1, j.id);
  }
  return inst;
}

bool identical_jobs(const Instance& inst) {
  for (const Job& j : inst.jobs)
    if (j.response_len != inst.jobs.front().response_len) return false;
  return true;
}

}  // namespace kvsched
