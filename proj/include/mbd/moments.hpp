#pragma once

#include "mbd/chain.hpp"
#include "mbd/pmf.hpp"

namespace mbd {

/// E[K_n].
double mean(const ChainParams& params, long n);

/// Var[K_n], closed form.
double variance(const ChainParams& params, long n);

/// E[K_n | Y_n = tau]. Throws ConditioningError if P(Y_n = tau) = 0.
double cond_mean(const ChainParams& params, long n, State tau);

/// Var[K_n | Y_n = tau]. Throws ConditioningError if P(Y_n = tau) = 0.
double cond_variance(const ChainParams& params, long n, State tau);

/// E[(K_n)^m | Y_n = tau], summed over the conditional PMF.
double cond_moment(const ChainParams& params, long n, State tau, int m);

// Moments of an explicit PMF.
double pmf_raw_moment(const Pmf& f, int m);
double pmf_mean(const Pmf& f);
double pmf_variance(const Pmf& f);

struct MomentReport {
    long n = 0;
    double mean = 0.0;
    double variance = 0.0;
    // NaN when the conditioning event has probability zero.
    double cond_mean_F = 0.0;
    double cond_mean_A = 0.0;
    double cond_var_F = 0.0;
    double cond_var_A = 0.0;
};

MomentReport moment_report(const ChainParams& params, long n);

}  // namespace mbd
