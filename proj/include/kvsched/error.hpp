#pragma once

#include <stdexcept>
#include <string>

namespace kvsched {

enum class Errc {
  infeasible_job,
  empty_instance,
  non_positive_budget,
  memory_violation,
  activated_finished_job,
  bad_batch,
  non_termination,
  incomplete_timeline,
  non_identical_jobs,
  preemptive_timeline,
  guard_rail,
  infeasible,
  file_not_found,
  parse_error,
  all_records_infeasible,
  bad_parameter,
};

const char* errc_name(Errc c);

// Carries the error code plus the round/job it refers to (-1 when not applicable).
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg, long long round = -1, long long job = -1);

  Errc code() const { return code_; }
  long long round() const { return round_; }
  long long job() const { return job_; }

 private:
  Errc code_;
  long long round_;
  long long job_;
};

[[noreturn]] void raise(Errc code, const std::string& msg, long long round = -1,
                        long long job = -1);

}  // namespace kvsched
