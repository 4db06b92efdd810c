#pragma once

// Shared helpers for the test suites: seeded parameter draws and comparison
// utilities. Nothing here calls into the evaluators under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <vector>

#include "mbd/chain.hpp"

namespace mbd::testing {

class ParamDraw {
public:
    explicit ParamDraw(std::uint64_t seed) : gen_(seed) {}

    double uniform(double lo = 0.0, double hi = 1.0) {
        return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
    }
    long integer(long lo, long hi) {
        return lo + static_cast<long>(gen_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    double prob(double lo = 0.001, double hi = 0.999) { return uniform(lo, hi); }

    ChainParams params(double lo = 0.001, double hi = 0.999) { return make_params(prob(lo, hi), prob(lo, hi), uniform()); }

    /// a + b >= 1.
    ChainParams params_sum_at_least_one() {
        for (;;) {
            const double a = prob();
            const double b = prob();
            if (a + b >= 1.0) return make_params(a, b, uniform());
        }
    }

private:
    std::mt19937_64 gen_;
};

inline double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
    return std::abs(got - want) / scale;
}

inline double max_abs_diff(std::span<const double> x, std::span<const double> y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return x.size() == y.size() ? worst : std::numeric_limits<double>::infinity();
}

/// Largest relative difference on entries where either side is >= floor; entries
/// below floor must agree within abs_tol or the result is +infinity.
inline double max_rel_diff(std::span<const double> x, std::span<const double> y, double floor = 1e-250,
                           double abs_tol = 1e-12) {
    if (x.size() != y.size()) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (std::max(x[i], y[i]) >= floor) {
            worst = std::max(worst, rel_err(x[i], y[i]));
        } else if (std::abs(x[i] - y[i]) > abs_tol) {
            return std::numeric_limits<double>::infinity();
        }
    }
    return worst;
}

/// 2x2 product, [from][to].
inline Matrix2 multiply(const Matrix2& x, const Matrix2& y) {
    Matrix2 r{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return r;
}

inline Matrix2 one_step(const ChainParams& p) {
    return Matrix2{{{1.0 - p.a(), p.a()}, {p.b(), 1.0 - p.b()}}};
}

/// P^n by repeated multiplication.
inline Matrix2 power_by_multiplication(const ChainParams& p, long n) {
    Matrix2 r{{{1.0, 0.0}, {0.0, 1.0}}};
    for (long i = 0; i < n; ++i) r = multiply(r, one_step(p));
    return r;
}

}  // namespace mbd::testing
