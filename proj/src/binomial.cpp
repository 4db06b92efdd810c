#include "mbd/binomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace mbd {

std::uint64_t choose_u64(long m, long r) {
    if (m > 67) throw std::overflow_error("choose_u64: m > 67 may overflow 64 bits");
    if (m < 0 || r < 0 || r > m) return 0;
    if (r > m - r) r = m - r;
    std::uint64_t c = 1;
    for (long i = 1; i <= r; ++i) {
        // c * (m - r + i) is divisible by i; split through the gcd-free form to stay in range.
        const std::uint64_t num = static_cast<std::uint64_t>(m - r + i);
        const std::uint64_t den = static_cast<std::uint64_t>(i);
        c = (c / den) * num + ((c % den) * num) / den;
    }
    return c;
}

double choose_double(long m, long r) {
    if (m < 0 || r < 0 || r > m) return 0.0;
    if (m <= 67) return static_cast<double>(choose_u64(m, r));
    return std::exp(std::lgamma(m + 1.0) - std::lgamma(r + 1.0) - std::lgamma(m - r + 1.0));
}

LogFactorialTable::LogFactorialTable(long max_m) {
    if (max_m < 0) throw std::invalid_argument("LogFactorialTable: negative size");
    log_fact_.resize(static_cast<std::size_t>(max_m) + 1);
    long double acc = 0.0L;
    log_fact_[0] = 0.0;
    for (long m = 1; m <= max_m; ++m) {
        acc += std::log(static_cast<long double>(m));
        log_fact_[static_cast<std::size_t>(m)] = static_cast<double>(acc);
    }
}

double log_sum_exp(std::span<const double> xs) noexcept {
    constexpr double neg_inf = -std::numeric_limits<double>::infinity();
    double hi = neg_inf;
    for (double x : xs) hi = std::max(hi, x);
    if (hi == neg_inf) return neg_inf;
    double s = 0.0;
    for (double x : xs) s += std::exp(x - hi);
    return hi + std::log(s);
}

std::vector<double> binomial_pmf(long n, double p) {
    if (n < 0) throw std::invalid_argument("binomial_pmf: n must be nonnegative");
    if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("binomial_pmf: p must lie in (0, 1)");
    const LogFactorialTable lf(n);
    const double lp = std::log(p);
    const double lq = std::log1p(-p);
    std::vector<double> out(static_cast<std::size_t>(n) + 1);
    for (long j = 0; j <= n; ++j) {
        out[static_cast<std::size_t>(j)] = std::exp(lf.log_choose(n, j) + j * lp + (n - j) * lq);
    }
    return out;
}

}  // namespace mbd
