#pragma once

#include <optional>
#include <vector>

#include "kvsched/rational.hpp"

namespace kvsched {

// The geometric slice ladder shared by the batching and slicing schedulers.
// Default initialization: ell = floor(log_alpha(M-s)), beta = (M-s)/alpha^ell,
// so 1 <= beta < alpha and the ladder tops out at exactly M - s. A base
// override replaces beta with an arbitrary starting slice in [1, M-s]; the
// ladder is then capped at M - s so the last phase can still finish any job.
struct GeometricConfig {
  Rational alpha;
  Rational beta;  // effective base (tau_hat of phase 0)
  int ell = 0;    // last phase index
  long long prompt_len = 0;
  long long memory_budget = 0;
  std::vector<Rational> slice_hat;   // tau_hat_p, p = 0..ell
  std::vector<long long> slice_int;  // tau_p = floor(tau_hat_p)

  int phases() const { return static_cast<int>(slice_hat.size()); }
  // Smallest p with o <= tau_hat_p (exact rational comparison).
  int class_of(long long o) const;
};

GeometricConfig make_geometric_config(long long memory_budget, long long prompt_len,
                                      const Rational& alpha,
                                      const std::optional<Rational>& base_override = {});

}  // namespace kvsched
