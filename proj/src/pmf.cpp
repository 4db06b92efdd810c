#include "mbd/pmf.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace mbd {

namespace {

void require_positive_n(long n) {
    if (n < 1) throw std::invalid_argument("n must be at least 1");
}

std::size_t idx(long j) { return static_cast<std::size_t>(j); }

// Interior entries j = 1..n-1 of
//   (1-b)^{n-j} (1-a)^{j-1} sum_{k=0}^{j-1} C(j-1, k) delta^k coef(j-1, k)
// where coef is either c_{.,.}(n) or c^F_{.,.}(n).
template <class Coef>
void closed_interior_direct(const ChainParams& p, long n, const Coef& coef, double delta,
                            std::vector<double>& out) {
    for (long j = 1; j <= n - 1; ++j) {
        double s = 0.0;
        double dk = 1.0;
        for (long k = 0; k <= j - 1; ++k) {
            s += choose_double(j - 1, k) * dk * coef(j - 1, k);
            dk *= delta;
        }
        out[idx(j)] = std::pow(1.0 - p.b(), static_cast<double>(n - j)) *
                      std::pow(1.0 - p.a(), static_cast<double>(j - 1)) * s;
    }
}

// Same sum with every factor taken in log space. `log_weights` holds the logs of
// the coefficient weights multiplying C(m, k-1), C(m, k), C(m, k+1) (m = n-1-j).
void closed_interior_log(const ChainParams& p, long n, const std::array<double, 3>& log_weights,
                         std::vector<double>& out) {
    const LogFactorialTable lf(n);
    const double log_1ma = std::log1p(-p.a());
    const double log_1mb = std::log1p(-p.b());
    const double log_delta = std::log(p.a()) + std::log(p.b()) - log_1ma - log_1mb;

    std::vector<double> terms;
    terms.reserve(idx(n));
    std::array<double, 3> parts{};
    for (long j = 1; j <= n - 1; ++j) {
        const long J = j - 1;
        const long m = n - 1 - j;
        terms.clear();
        for (long k = 0; k <= J; ++k) {
            parts[0] = log_weights[0] + lf.log_choose(m, k - 1);
            parts[1] = log_weights[1] + lf.log_choose(m, k);
            parts[2] = log_weights[2] + lf.log_choose(m, k + 1);
            const double log_c = log_sum_exp(parts);
            terms.push_back(lf.log_choose(J, k) + static_cast<double>(k) * log_delta + log_c);
        }
        const double log_pref = static_cast<double>(n - j) * log_1mb + static_cast<double>(J) * log_1ma;
        out[idx(j)] = std::exp(log_pref + log_sum_exp(terms));
    }
}

double safe_log(double x) {
    return x > 0.0 ? std::log(x) : -std::numeric_limits<double>::infinity();
}

std::vector<double> closed_full(const ChainParams& p, long n) {
    std::vector<double> f(idx(n) + 1, 0.0);
    f[0] = p.nu_A() * std::pow(1.0 - p.b(), static_cast<double>(n - 1));
    f[idx(n)] = p.nu_F() * std::pow(1.0 - p.a(), static_cast<double>(n - 1));
    if (n <= 1) return f;

    const CoefficientTable table(p);
    if (n <= kClosedFormDirectMaxN) {
        closed_interior_direct(
            p, n, [&](long j, long k) { return table.c(j, k, n); }, table.delta(), f);
    } else {
        closed_interior_log(p, n, {safe_log(table.nu_F()), safe_log(table.w2()), safe_log(table.w3())}, f);
    }
    return f;
}

std::vector<double> closed_hat_F(const ChainParams& p, long n) {
    std::vector<double> h(idx(n) + 1, 0.0);
    h[idx(n)] = p.nu_F() * std::pow(1.0 - p.a(), static_cast<double>(n - 1));
    if (n <= 1) return h;

    const CoefficientTable table(p);
    if (n <= kClosedFormDirectMaxN) {
        closed_interior_direct(
            p, n, [&](long j, long k) { return table.c_F(j, k, n); }, table.delta(), h);
    } else {
        const double neg_inf = -std::numeric_limits<double>::infinity();
        closed_interior_log(p, n, {safe_log(table.nu_F()), safe_log(table.v2()), neg_inf}, h);
    }
    return h;
}

}  // namespace

std::string_view to_string(PmfKind k) noexcept {
    switch (k) {
        case PmfKind::Full: return "full";
        case PmfKind::CondF: return "cond_F";
        case PmfKind::CondA: return "cond_A";
    }
    return "full";
}

double Pmf::sum() const noexcept { return std::accumulate(values.begin(), values.end(), 0.0); }

PartialPmfPair pmf_forward(const ChainParams& params, long n) {
    require_positive_n(n);
    const double a = params.a();
    const double b = params.b();
    PartialPmfPair out;
    out.n = n;
    out.hat_F.assign(idx(n) + 1, 0.0);
    out.hat_A.assign(idx(n) + 1, 0.0);
    auto& F = out.hat_F;
    auto& A = out.hat_A;
    F[1] = params.nu_F();
    A[0] = params.nu_A();
    // Step m -> m+1 in place, sweeping j downward so that index j-1 still holds step m.
    for (long m = 1; m < n; ++m) {
        for (long j = m + 1; j >= 0; --j) {
            const double f_j = F[idx(j)];
            const double a_j = A[idx(j)];
            const double f_prev = j > 0 ? F[idx(j - 1)] : 0.0;
            const double a_prev = j > 0 ? A[idx(j - 1)] : 0.0;
            F[idx(j)] = (1.0 - a) * f_prev + b * a_prev;
            A[idx(j)] = a * f_j + (1.0 - b) * a_j;
        }
    }
    return out;
}

Pmf pmf(const ChainParams& params, long n) {
    const auto joint = pmf_forward(params, n);
    std::vector<double> f(idx(n) + 1);
    for (long j = 0; j <= n; ++j) f[idx(j)] = joint.hat_F[idx(j)] + joint.hat_A[idx(j)];
    return Pmf{n, std::move(f), params, PmfKind::Full};
}

Pmf pmf_scalar_recursion(const ChainParams& params, long n) {
    require_positive_n(n);
    const double a = params.a();
    const double b = params.b();
    const double lambda = (1.0 - a) - b;

    std::vector<double> prev{params.nu_A(), params.nu_F()};
    if (n == 1) return Pmf{n, std::move(prev), params, PmfKind::Full};
    std::vector<double> cur{params.nu_A() * (1.0 - b), params.nu_A() * b + params.nu_F() * a,
                            params.nu_F() * (1.0 - a)};

    for (long m = 1; m + 2 <= n; ++m) {
        // prev = f_m (size m+1), cur = f_{m+1} (size m+2); build f_{m+2} (size m+3).
        std::vector<double> next(idx(m) + 3, 0.0);
        for (long i = 0; i <= m + 2; ++i) {
            const double up = i <= m + 1 ? cur[idx(i)] : 0.0;
            const double left = (i >= 1 && i - 1 <= m + 1) ? cur[idx(i - 1)] : 0.0;
            const double back = (i >= 1 && i - 1 <= m) ? prev[idx(i - 1)] : 0.0;
            next[idx(i)] = (1.0 - b) * up + (1.0 - a) * left - lambda * back;
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return Pmf{n, std::move(cur), params, PmfKind::Full};
}

Pmf pmf_closed(const ChainParams& params, long n) {
    require_positive_n(n);
    return Pmf{n, closed_full(params, n), params, PmfKind::Full};
}

PartialPmfPair partial_pmf_closed(const ChainParams& params, long n) {
    require_positive_n(n);
    PartialPmfPair out;
    out.n = n;
    out.hat_F = closed_hat_F(params, n);
    const auto f = closed_full(params, n);
    out.hat_A.resize(f.size());
    constexpr double clamp_tol = 1e-15;
    for (std::size_t j = 0; j < f.size(); ++j) {
        double d = f[j] - out.hat_F[j];
        if (d < 0.0) {
            if (d < -clamp_tol) {
                throw std::logic_error("partial_pmf_closed: hat_F exceeds f_n at j = " + std::to_string(j));
            }
            d = 0.0;
        }
        out.hat_A[j] = d;
    }
    return out;
}

Pmf conditional_pmf(const ChainParams& params, long n, State tau) {
    require_positive_n(n);
    const double p_tau = state_prob(params, n, tau);
    if (!(p_tau > 0.0)) {
        throw ConditioningError("P(Y_" + std::to_string(n) + " = " + std::string(to_string(tau)) +
                                ") is zero");
    }
    auto joint = pmf_forward(params, n);
    auto values = std::move(tau == State::F ? joint.hat_F : joint.hat_A);
    for (double& v : values) v /= p_tau;
    return Pmf{n, std::move(values), params, tau == State::F ? PmfKind::CondF : PmfKind::CondA};
}

namespace {

// log(exp(x) + exp(y)), with -inf as the log of zero.
double log_add(double x, double y) {
    if (x < y) std::swap(x, y);
    if (y == -std::numeric_limits<double>::infinity()) return x;
    return x + std::log1p(std::exp(y - x));
}

}  // namespace

std::vector<double> log_pmf(const ChainParams& params, long n, PmfKind kind) {
    require_positive_n(n);
    const double neg_inf = -std::numeric_limits<double>::infinity();
    const double log_a = std::log(params.a());
    const double log_b = std::log(params.b());
    const double log_1ma = std::log1p(-params.a());
    const double log_1mb = std::log1p(-params.b());
    std::vector<double> F(idx(n) + 1, neg_inf);
    std::vector<double> A(idx(n) + 1, neg_inf);
    F[1] = safe_log(params.nu_F());
    A[0] = safe_log(params.nu_A());
    for (long m = 1; m < n; ++m) {
        for (long j = m + 1; j >= 0; --j) {
            const double f_j = F[idx(j)];
            const double a_j = A[idx(j)];
            F[idx(j)] = j > 0 ? log_add(log_1ma + F[idx(j - 1)], log_b + A[idx(j - 1)]) : neg_inf;
            A[idx(j)] = log_add(log_a + f_j, log_1mb + a_j);
        }
    }
    std::vector<double> out(idx(n) + 1);
    if (kind == PmfKind::Full) {
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = log_add(F[j], A[j]);
        return out;
    }
    out = kind == PmfKind::CondF ? std::move(F) : std::move(A);
    const double log_mass = log_sum_exp(out);
    if (log_mass == neg_inf) {
        throw ConditioningError("P(Y_" + std::to_string(n) + " = " + (kind == PmfKind::CondF ? "F" : "A") +
                                ") is zero");
    }
    for (double& x : out) x -= log_mass;
    return out;
}

}  // namespace mbd
