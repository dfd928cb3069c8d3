#include "kvsched/timeline.hpp"

#include <algorithm>
#include <sstream>
#include <string>

#include "kvsched/error.hpp"

namespace kvsched {

long long total_flow_time(const Timeline& tl) {
  long long sum = 0;
  for (int i = 0; i < tl.n; ++i) {
    if (i >= static_cast<int>(tl.completion.size()) || tl.completion[i] < 0)
      raise(Errc::incomplete_timeline, "job " + std::to_string(i) + " never completes",
            -1, i);
    sum += tl.completion[i];
  }
  return sum;
}

std::vector<long long> memory_profile(const Timeline& tl, const Instance& inst) {
  std::vector<long long> u(tl.n, 0);
  std::vector<long long> profile;
  profile.reserve(tl.batches.size());
  std::vector<int> prev;
  for (size_t t = 0; t < tl.batches.size(); ++t) {
    const auto& batch = tl.batches[t];
    // kills reset progress
    for (int i : prev) {
      if (!std::binary_search(batch.begin(), batch.end(), i) &&
          u[i] < inst.jobs[i].response_len)
        u[i] = 0;
    }
    long long mem = 0;
    for (int i : batch) mem += inst.prompt_len + u[i] + 1;
    profile.push_back(mem);
    for (int i : batch) ++u[i];
    prev = batch;
  }
  return profile;
}

std::string FeasibilityReport::to_string() const {
  std::ostringstream os;
  for (const Violation& v : violations) {
    os << "round " << v.round;
    if (v.job >= 0) os << " job " << v.job;
    os << ": " << v.what << "\n";
  }
  return os.str();
}

FeasibilityReport verify_feasibility(const Timeline& tl, const Instance& inst) {
  FeasibilityReport report;
  auto add = [&](long long round, int job, const std::string& what) {
    report.violations.push_back(Violation{round, job, what});
  };

  const int n = tl.n;
  const long long T = tl.makespan();
  const bool explicit_u = !tl.progress.empty();
  if (explicit_u && static_cast<long long>(tl.progress.size()) < T + 1)
    add(-1, -1, "progress matrix shorter than makespan+1");

  auto u_at = [&](long long t, int i) -> long long {
    return tl.progress[static_cast<size_t>(t)][i];
  };

  std::vector<long long> u(n, 0);  // replayed progress
  std::vector<long long> first_complete(n, -1);
  std::vector<KillEvent> derived_kills;
  std::vector<char> in_prev(n, 0);

  for (long long t = 0; t < T; ++t) {
    const auto& batch = tl.batches[static_cast<size_t>(t)];
    std::vector<char> in_cur(n, 0);
    for (int i : batch) {
      if (i < 0 || i >= n) {
        add(t, i, "job id out of range");
        continue;
      }
      if (in_cur[i]) add(t, i, "duplicate job in batch");
      in_cur[i] = 1;
    }

    // progress law + kill inference against the previous round
    for (int i = 0; i < n; ++i) {
      long long cur_u = explicit_u ? u_at(t, i) : u[i];
      if (explicit_u && cur_u != u[i] && !(in_prev[i] && !in_cur[i])) {
        // mismatches on kill rounds are reported below via the reset check
        add(t, i, "progress update broken");
        u[i] = cur_u;  // resync so one bad row does not cascade
      }
      if (in_prev[i] && !in_cur[i] && cur_u < inst.jobs[i].response_len) {
        derived_kills.push_back(KillEvent{t, i});
        if (explicit_u && u_at(t, i) != 0 && t + 1 <= T &&
            static_cast<size_t>(t) + 1 < tl.progress.size() &&
            u_at(t + 1, i) != 0)
          add(t, i, "progress update broken: kill did not reset progress");
        u[i] = 0;
      }
    }

    long long mem = 0;
    for (int i = 0; i < n; ++i) {
      if (!in_cur[i]) continue;
      long long cur_u = explicit_u ? u_at(t, i) : u[i];
      if (cur_u >= inst.jobs[i].response_len)
        add(t, i, "active job already completed");
      mem += inst.prompt_len + cur_u + 1;
    }
    if (mem > inst.memory_budget)
      add(t, -1,
          "memory " + std::to_string(mem) + " exceeds budget " +
              std::to_string(inst.memory_budget));

    for (int i = 0; i < n; ++i) {
      if (in_cur[i]) {
        ++u[i];
        if (u[i] == inst.jobs[i].response_len && first_complete[i] < 0)
          first_complete[i] = t + 1;
      }
    }
    in_prev = in_cur;
  }

  for (int i = 0; i < n; ++i) {
    long long recorded =
        i < static_cast<int>(tl.completion.size()) ? tl.completion[i] : -1;
    if (first_complete[i] < 0)
      add(T, i, "job never completes");
    else if (recorded != first_complete[i])
      add(first_complete[i], i,
          "completion round mismatch: recorded " + std::to_string(recorded) +
              ", actual " + std::to_string(first_complete[i]));
  }

  auto kill_key = [](const KillEvent& k) { return std::make_pair(k.round, k.job); };
  std::vector<KillEvent> recorded_kills = tl.kills;
  std::sort(recorded_kills.begin(), recorded_kills.end(),
            [&](const KillEvent& a, const KillEvent& b) { return kill_key(a) < kill_key(b); });
  std::sort(derived_kills.begin(), derived_kills.end(),
            [&](const KillEvent& a, const KillEvent& b) { return kill_key(a) < kill_key(b); });
  if (recorded_kills.size() != derived_kills.size() ||
      !std::equal(recorded_kills.begin(), recorded_kills.end(), derived_kills.begin(),
                  [&](const KillEvent& a, const KillEvent& b) {
                    return kill_key(a) == kill_key(b);
                  }))
    add(-1, -1, "kill ledger does not match batch history");

  return report;
}

RunMetrics compute_metrics(const Timeline& tl, const Instance& inst) {
  RunMetrics m;
  m.total_flow_time = total_flow_time(tl);
  m.mean_flow_time = Rational(m.total_flow_time, tl.n);
  m.kill_count = static_cast<long long>(tl.kills.size());
  m.makespan = tl.makespan();
  m.per_round_memory =
      tl.mem_used.empty() ? memory_profile(tl, inst) : tl.mem_used;
  m.peak_memory = 0;
  for (long long v : m.per_round_memory) m.peak_memory = std::max(m.peak_memory, v);
  return m;
}

std::vector<long long> first_start_times(const Timeline& tl) {
  std::vector<long long> starts(tl.n, -1);
  for (long long t = 0; t < tl.makespan(); ++t)
    for (int i : tl.batches[static_cast<size_t>(t)])
      if (starts[i] < 0) starts[i] = t;
  return starts;
}

}  // namespace kvsched
