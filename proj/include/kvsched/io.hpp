#pragma once

#include <string>
#include <vector>

#include "kvsched/analysis.hpp"
#include "kvsched/instance.hpp"
#include "kvsched/timeline.hpp"

namespace kvsched {

// Round records: `t,active_ids,mem_used` with ids ';'-separated.
std::string timeline_to_csv(const Timeline& tl);
Timeline timeline_from_csv(const std::string& text);

// `job_id,response_len,completion_round`
std::string completions_to_csv(const Timeline& tl, const Instance& inst);

// `job_id,response_len` preceded by `# prompt_len=..` / `# memory_budget=..`
std::string instance_to_csv(const Instance& inst);
Instance instance_from_csv(const std::string& text);

std::string memory_profile_to_csv(const std::vector<long long>& profile);

std::string read_text_file(const std::string& path);  // throws file_not_found
void write_text_file(const std::string& path, const std::string& content);

}  // namespace kvsched
