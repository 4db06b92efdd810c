#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace mbd {

// Binomial coefficients use the convention C(m, r) = 0 whenever r < 0, r > m or m < 0.

/// Exact C(m, r) in T by the multiplicative formula. T must support exact
/// division of the running product (integers, rationals).
template <class T>
T choose(long m, long r) {
    if (m < 0 || r < 0 || r > m) return T(0);
    if (r > m - r) r = m - r;
    T c(1);
    for (long i = 1; i <= r; ++i) {
        c *= T(m - r + i);
        c /= T(i);
    }
    return c;
}

/// Exact C(m, r) for m <= 67 (the largest m for which every C(m, r) fits in 64 bits).
std::uint64_t choose_u64(long m, long r);

/// C(m, r) as a double: exact up to rounding for m <= 67, via log-gamma beyond.
double choose_double(long m, long r);

/// Table of log(m!) for 0 <= m <= max_m.
class LogFactorialTable {
public:
    explicit LogFactorialTable(long max_m);

    long max_m() const noexcept { return static_cast<long>(log_fact_.size()) - 1; }
    double log_factorial(long m) const { return log_fact_.at(static_cast<std::size_t>(m)); }

    /// log C(m, r); -infinity where C(m, r) = 0.
    double log_choose(long m, long r) const {
        if (m < 0 || r < 0 || r > m) return -std::numeric_limits<double>::infinity();
        return log_factorial(m) - log_factorial(r) - log_factorial(m - r);
    }

private:
    std::vector<double> log_fact_;
};

/// log(sum(exp(x))) over the entries; -infinity for an empty or all -infinity input.
double log_sum_exp(std::span<const double> xs) noexcept;

/// Binomial(n, p) PMF evaluated term-by-term in log space.
std::vector<double> binomial_pmf(long n, double p);

}  // namespace mbd
