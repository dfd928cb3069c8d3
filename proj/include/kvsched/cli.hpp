#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "kvsched/instance.hpp"
#include "kvsched/policies.hpp"

namespace kvsched {

// Instance source + policy + outputs for one run or sweep point. Values come
// from CLI flags, optionally seeded from a key=value config file (flags win).
struct ExperimentConfig {
  // instance source
  std::string gen;  // identical | two-point | long-trap | sims-lb2 | sims-lb3 | trace
  long long n = 0, o = 0, s = 0, mem = 0;
  long long n_short = 0, o_short = 0, n_long = 0, o_long = 0;
  long long ell = 0, batch = 0, delta = 0;
  bool spread_longs = false;
  std::string trace_path;
  long long trace_limit = 0;  // 0: all
  bool pow2 = false;

  // policy
  PolicyParams policy;
  long long seeds = 1;  // seeded repetitions (a-min averaging)

  // sweep ranges (empty -> single point from the scalars above)
  std::vector<long long> n_list;
  std::vector<long long> mem_list;
  std::vector<Rational> alpha_list;
  std::vector<Rational> beta_list;
  std::vector<std::string> policy_list;

  std::string out_dir = ".";
  long long horizon_cap = -1;
  int threads = 0;  // 0: library default
};

Instance build_instance(const ExperimentConfig& cfg);

// Applies `key=value` lines (# comments allowed) onto the given map; the CLI
// merges these under its parsed flags.
std::map<std::string, std::string> parse_config_file(const std::string& path);

int cmd_run(const ExperimentConfig& cfg);
int cmd_sweep(const ExperimentConfig& cfg);
int cmd_verify(const std::string& suite);  // formulas | lemmas | oracle | all
int cmd_render(const std::string& timeline_path, const std::string& instance_path,
               const std::string& out_path);

}  // namespace kvsched
