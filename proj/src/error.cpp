#include "kvsched/error.hpp"

namespace kvsched {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::infeasible_job: return "InfeasibleJob";
    case Errc::empty_instance: return "EmptyInstance";
    case Errc::non_positive_budget: return "NonPositiveBudget";
    case Errc::memory_violation: return "MemoryViolation";
    case Errc::activated_finished_job: return "ActivatedFinishedJob";
    case Errc::bad_batch: return "BadBatch";
    case Errc::non_termination: return "NonTermination";
    case Errc::incomplete_timeline: return "IncompleteTimeline";
    case Errc::non_identical_jobs: return "NonIdenticalJobs";
    case Errc::preemptive_timeline: return "PreemptiveTimeline";
    case Errc::guard_rail: return "GuardRail";
    case Errc::infeasible: return "Infeasible";
    case Errc::file_not_found: return "FileNotFound";
    case Errc::parse_error: return "ParseError";
    case Errc::all_records_infeasible: return "AllRecordsInfeasible";
    case Errc::bad_parameter: return "BadParameter";
  }
  return "UnknownError";
}

Error::Error(Errc code, const std::string& msg, long long round, long long job)
    : std::runtime_error(std::string(errc_name(code)) + ": " + msg),
      code_(code),
      round_(round),
      job_(job) {}

void raise(Errc code, const std::string& msg, long long round, long long job) {
  throw Error(code, msg, round, job);
}

}  // namespace kvsched
