#include "mbd/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mbd {

namespace {

void require_positive_n(long n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

// Quantities shared by the closed forms. s = a + b = 1 - lambda is formed
// directly rather than as 1 - lambda.
struct Powers {
    DerivedParams d;
    double s;
    double L;     // lambda^n
    double L1;    // lambda^{n-1}
    double oneL;  // 1 - lambda^n
};

Powers powers(const ChainParams& p, long n) {
    return Powers{derive(p), p.a() + p.b(), lambda_pow(p, n), lambda_pow(p, n - 1),
                  one_minus_lambda_pow(p, n)};
}

// 1 - eps_tau lambda^{n-1} = P(Y_n = tau) / pi_tau.
double cond_denominator(const ChainParams& p, long n, State tau) {
    const double prob = state_prob(p, n, tau);
    if (!(prob > 0.0)) {
        throw ConditioningError("P(Y_" + std::to_string(n) + " = " + std::string(to_string(tau)) +
                                ") is zero");
    }
    return prob / derive(p).pi(tau);
}

}  // namespace

double mean(const ChainParams& params, long n) {
    require_positive_n(n);
    const auto w = powers(params, n);
    return w.d.pi_F * (static_cast<double>(n) - w.d.eps_F * w.oneL / w.s);
}

double variance(const ChainParams& params, long n) {
    require_positive_n(n);
    const auto w = powers(params, n);
    const double nn = static_cast<double>(n);
    const double pF = w.d.pi_F;
    const double pA = w.d.pi_A;
    const double eF = w.d.eps_F;
    const double l = w.d.lambda;
    const double nuF = params.nu_F();
    const double s = w.s;
    const double s2 = s * s;

    // pi_F { n pi_A (1+l)/(1-l)
    //        + (l (eF (pF-pA) - 2 pA) - eF (pA - nuF)) / (1-l)^2
    //        + n l^n 2 eF (pA - pF) / (1-l)
    //        + l^n ( eF (pF-pA)/(1-l) + 2 (l pA + eF (pA - nuF)) / (1-l)^2 )
    //        - l^{2n} pF eF^2 / (1-l)^2 }
    const double t1 = nn * pA * (1.0 + l) / s;
    const double t2 = (l * (eF * (pF - pA) - 2.0 * pA) - eF * (pA - nuF)) / s2;
    const double t3 = nn * w.L * 2.0 * eF * (pA - pF) / s;
    const double t4 = w.L * (eF * (pF - pA) / s + 2.0 * (l * pA + eF * (pA - nuF)) / s2);
    const double t5 = -(w.L * w.L) * pF * eF * eF / s2;
    return std::max(0.0, pF * (t1 + t2 + t3 + t4 + t5));
}

double cond_mean(const ChainParams& params, long n, State tau) {
    require_positive_n(n);
    const double D = cond_denominator(params, n, tau);
    const auto w = powers(params, n);
    const double nn = static_cast<double>(n);
    const double pF = w.d.pi_F;
    const double pA = w.d.pi_A;
    if (tau == State::F) {
        const double eF = w.d.eps_F;
        return nn * (pF - eF * pA * w.L1) / D + (pA - eF * pF) * w.oneL / (w.s * D);
    }
    const double eA = w.d.eps_A;
    return nn * (pF - eA * pA * w.L1) / D + (eA * pA - pF) * w.oneL / (w.s * D);
}

double cond_variance(const ChainParams& params, long n, State tau) {
    require_positive_n(n);
    const double D = cond_denominator(params, n, tau);
    const double m1 = cond_mean(params, n, tau);
    const auto w = powers(params, n);
    const double nn = static_cast<double>(n);
    const double pF = w.d.pi_F;
    const double pA = w.d.pi_A;
    const double s = w.s;
    const double s2 = s * s;
    const double L = w.L;
    const double L1 = w.L1;

    double v = 0.0;
    if (tau == State::F) {
        const double e = w.d.eps_F;
        // n^2 (pF^2 - eF pA^2 l^{n-1}) / D
        const double t1 = nn * nn * (pF * pF - e * pA * pA * L1) / D;
        // - E[K_n^F]^2
        const double t2 = -m1 * m1;
        // - n ( pA pF (1 + 3 eF l^{n-1}) / D
        //       + 2 (eF pF^2 + pA^2 l^n - 2 pA pF (1 + eF l^{n-1})) / ((1-l) D) )
        const double t3 = -nn * (pA * pF * (1.0 + 3.0 * e * L1) / D +
                                 2.0 * (e * pF * pF + pA * pA * L - 2.0 * pA * pF * (1.0 + e * L1)) / (s * D));
        // + (1 - l^n) ( (pA pF (4 + eF) - (pA + eF pF^2)) / ((1-l) D)
        //               + 2 (eF pF^2 + pA^2 - 2 pA pF (1 + eF)) / ((1-l)^2 D) )
        const double t4 = w.oneL * ((pA * pF * (4.0 + e) - (pA + e * pF * pF)) / (s * D) +
                                    2.0 * (e * pF * pF + pA * pA - 2.0 * pA * pF * (1.0 + e)) / (s2 * D));
        v = t1 + t2 + t3 + t4;
    } else {
        const double e = w.d.eps_A;
        // n^2 (pF^2 - eA pA^2 l^{n-1}) / D
        const double t1 = nn * nn * (pF * pF - e * pA * pA * L1) / D;
        // - E[K_n^A]^2
        const double t2 = -m1 * m1;
        // - n ( pA pF (1 + (2 + eA) l^{n-1}) / D
        //       + 2 (pF^2 + eA pA^2 l^n - pA pF (1 + eA)(1 + l^{n-1})) / ((1-l) D) )
        const double t3 = -nn * (pA * pF * (1.0 + (2.0 + e) * L1) / D +
                                 2.0 * (pF * pF + e * pA * pA * L - pA * pF * (1.0 + e) * (1.0 + L1)) / (s * D));
        // + (1 - l^n) ( (pA pF (4 + eA) - (pF + eA pA^2)) / ((1-l) D)
        //               + 2 (pF^2 + eA pA^2 - 2 pA pF (1 + eA)) / ((1-l)^2 D) )
        const double t4 = w.oneL * ((pA * pF * (4.0 + e) - (pF + e * pA * pA)) / (s * D) +
                                    2.0 * (pF * pF + e * pA * pA - 2.0 * pA * pF * (1.0 + e)) / (s2 * D));
        v = t1 + t2 + t3 + t4;
    }
    // Rounding can leave a degenerate conditional law slightly negative.
    return std::max(0.0, v);
}

double pmf_raw_moment(const Pmf& f, int m) {
    if (m < 0) throw std::invalid_argument("moment order must be nonnegative");
    double acc = 0.0;
    for (long j = 0; j <= f.n; ++j) {
        acc += std::pow(static_cast<double>(j), m) * f[j];
    }
    return acc;
}

double pmf_mean(const Pmf& f) { return pmf_raw_moment(f, 1); }

double pmf_variance(const Pmf& f) {
    const double mu = pmf_mean(f);
    double acc = 0.0;
    for (long j = 0; j <= f.n; ++j) {
        const double d = static_cast<double>(j) - mu;
        acc += d * d * f[j];
    }
    return acc;
}

double cond_moment(const ChainParams& params, long n, State tau, int m) {
    if (m < 1) throw std::invalid_argument("cond_moment: m must be at least 1");
    return pmf_raw_moment(conditional_pmf(params, n, tau), m);
}

MomentReport moment_report(const ChainParams& params, long n) {
    MomentReport r;
    r.n = n;
    r.mean = mean(params, n);
    r.variance = variance(params, n);
    constexpr double nan = std::numeric_limits<double>::quiet_NaN();
    for (State tau : {State::F, State::A}) {
        double m = nan;
        double v = nan;
        if (state_prob(params, n, tau) > 0.0) {
            m = cond_mean(params, n, tau);
            v = cond_variance(params, n, tau);
        }
        (tau == State::F ? r.cond_mean_F : r.cond_mean_A) = m;
        (tau == State::F ? r.cond_var_F : r.cond_var_A) = v;
    }
    return r;
}

}  // namespace mbd
