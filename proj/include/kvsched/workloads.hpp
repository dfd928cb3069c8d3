#pragma once

#include <string>

#include "kvsched/instance.hpp"

namespace kvsched {

Instance gen_identical(long long n, long long s, long long o, long long M);

// Long jobs first (ids 0..n_long-1) by default; spread=true distributes the
// long jobs evenly through the id order instead (long job j placed at
// position floor(j * (n_short + n_long) / n_long) + j adjusted to be unique).
Instance gen_two_point(long long n_short, long long o_short, long long n_long,
                       long long o_long, long long s, long long M,
                       bool spread = false);

// One long job (id 0) of length 2^ell among n-1 unit jobs, s = 2^ell,
// M = 2^(ell+1): only one job fits at a time.
Instance gen_long_job_trap(long long n, long long ell);
long long long_job_trap_opt(long long n, long long ell);  // n(n+1)/2 + 2^ell - 1

// Adversarial identical-job families for the simultaneous scheduler.
Instance gen_sims_lb2(long long o, long long batch, long long n);       // M = batch*o
Instance gen_sims_lb3(long long o, long long delta, long long n);       // M = 2o - 3*delta + 3

struct TraceLoad {
  Instance instance;
  long long skipped = 0;  // records too large for the budget
  long long parsed = 0;   // data records seen (before limit/validity)
};

// Plain text (one positive integer per line, '#' comments ignored) or CSV
// with a header containing a response_len column. Takes the first `limit`
// records that fit the budget, in file order.
TraceLoad load_trace(const std::string& path, long long s, long long M, long long limit);

// Each o_i replaced by the least power of two >= o_i.
Instance round_pow2(const Instance& inst);

}  // namespace kvsched
