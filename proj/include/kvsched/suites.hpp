#pragma once

#include <random>
#include <string>
#include <vector>

#include "kvsched/instance.hpp"

namespace kvsched {

struct SuiteResult {
  std::string name;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> messages;  // first few failure descriptions

  bool ok() const { return failures == 0; }
  void check(bool cond, const std::string& msg);
};

// Closed-form checks: peak memory vs simulation, peak monotonicity, the
// parallelism floor bound and the strict packing inequality.
SuiteResult run_formula_suite(unsigned long long seed = 20240701, long long samples = 1000);

// Flow-time upper bounds, the aggregate spillover bound, the prefix bound,
// the class partition, kill-count laws, heuristic dominance and feasibility
// across all policies on a fuzz corpus.
SuiteResult run_lemma_suite(unsigned long long seed = 20240702, long long instances = 200);

// Exhaustive tiny-instance comparisons against the brute-force optimum:
// lower bounds below OPT and theorem ratios respected.
SuiteResult run_oracle_suite();

// Random instance within n <= 64, s <= 32, o_i <= 32, M >= max(s + o_i);
// roughly a quarter of the draws use identical response lengths.
Instance fuzz_instance(std::mt19937_64& rng);

// All (n <= 4, o_i in [1,4], s in {0,1,2}, M in [max(s+o_i), 12]) instances,
// one per multiset of response lengths.
std::vector<Instance> tiny_exhaustive_instances();

}  // namespace kvsched
