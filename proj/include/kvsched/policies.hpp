#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kvsched/engine.hpp"
#include "kvsched/geometry.hpp"
#include "kvsched/instance.hpp"
#include "kvsched/rational.hpp"

namespace kvsched {

struct PolicyParams {
  std::string name;  // sps | gba | gsa | sims | mc-sf | a-min | vllm | gba-d | gsa-spec
  std::optional<Rational> alpha;
  std::optional<Rational> beta_override;
  std::optional<long long> k;    // raw sps runs
  std::optional<long long> tau;  // raw sps runs
  unsigned long long seed = 1;   // a-min randomness
};

bool policy_needs_alpha(const std::string& name);
const std::vector<std::string>& policy_names();

std::unique_ptr<Policy> make_policy(const PolicyParams& params, const Instance& inst);
Timeline run_policy(const Instance& inst, const PolicyParams& params,
                    const SimOptions& opts = {});

// The clairvoyant batching schedule is fully static: per-job start rounds,
// classes processed in ascending order, empty classes taking zero rounds.
struct GbaPlan {
  GeometricConfig config;
  std::vector<long long> starts;       // per job id
  std::vector<long long> phase_start;  // per phase (start of its pipeline)
  long long makespan = 0;              // last completion
};

GbaPlan make_gba_plan(const Instance& inst, const GeometricConfig& cfg);

Timeline gba(const Instance& inst, const Rational& alpha);
Timeline gsa(const Instance& inst, const Rational& alpha,
             const std::optional<Rational>& beta_override = {});
Timeline sims(const Instance& inst);
Timeline mc_sf(const Instance& inst);
Timeline a_min(const Instance& inst, unsigned long long seed);
Timeline vllm_fcfs(const Instance& inst);
Timeline gba_d(const Instance& inst, const Rational& alpha);
Timeline gsa_spec(const Instance& inst, const Rational& alpha,
                  const std::optional<Rational>& beta_override = {});

}  // namespace kvsched
