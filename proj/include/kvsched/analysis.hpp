#pragma once

#include <optional>
#include <vector>

#include "kvsched/geometry.hpp"
#include "kvsched/instance.hpp"
#include "kvsched/rational.hpp"
#include "kvsched/timeline.hpp"

namespace kvsched {

// Steady-state peak memory of the staggered pipeline:
//   s*k + (tau*k + tau + k - gcd(tau,k)) / 2.
long long peak_memory(long long k, long long tau, long long s);

// Largest k with peak_memory(k,tau,s) <= M, via exponential-then-binary
// search on the monotone peak. Throws infeasible when s + tau > M.
long long max_parallelism(long long tau, long long s, long long M);

// Memory-time area of one job: s*o + o(o+1)/2.
long long area(long long o, long long s);
Rational area_rational(const Rational& o, long long s);

// n(n+1)/2 * area(tau,s) / M, valid when every response length is >= tau.
Rational opt_lb_single(long long n, long long tau, long long s, long long M);

// n * ceil(n/k) <= 2 * sum_{u=1..n} ceil(u/k)
bool ceiling_inequality_holds(long long n, long long k);

enum class BoundKind { gba, gsa };

// Worst-case ratio guarantees. k_min == nullopt takes the large-memory limit
// (the 2/k_min term drops).
Rational theorem_bound(BoundKind kind, const Rational& alpha,
                       std::optional<long long> k_min);

// Per-phase bookkeeping for the flow-time upper bounds and the multi-class
// lower bound. Sums in S and T range over all earlier phases, empty or not.
struct PhaseStats {
  int phase = 0;
  long long tau = 0;       // integer slice length
  long long k = 0;         // feasible parallelism for this slice
  long long n_p = 0;       // jobs whose class is this phase
  long long n_gt = 0;      // jobs in strictly later classes
  long long n_ge = 0;      // n_p + n_gt
  Rational area_p;         // area at the lower class boundary
  long long ladder = 0;    // Q_p
  long long prefix = 0;    // S_p
  long long spill = 0;     // Delta_p
  long long full_prefix = 0;  // T_p
};

std::vector<PhaseStats> phase_stats(const Instance& inst, const GeometricConfig& cfg);

struct BoundReport {
  Rational within_class;
  Rational between_classes;
  Rational opt_lb;  // within + between
  long long gba_ub = 0;  // sum_p (n_p * S_p + Q_p)
  long long gsa_ub = 0;  // sum_p n_p * (T_p + Delta_p) + sum_p Q_p
  long long k_min = 0;   // min k over phases that hold jobs
  Rational gamma_gba;
  Rational gamma_gsa;
};

BoundReport bound_report(const Instance& inst, const GeometricConfig& cfg);

Rational opt_lb_multiclass(const Instance& inst, const GeometricConfig& cfg);

// Necessary start-time spacing for feasible non-preemptive schedules of
// identical jobs: sorted starts satisfy S_{i+k} - S_i >= ceil(tau/2).
bool spacing_check(const Timeline& tl, const Instance& inst);

}  // namespace kvsched
