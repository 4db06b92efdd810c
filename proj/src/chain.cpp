#include "mbd/chain.hpp"

#include <cmath>
#include <string>

namespace mbd {

std::string_view to_string(State s) noexcept { return s == State::F ? "F" : "A"; }

ChainParams make_params(double a, double b, double nu_F) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(nu_F)) {
        throw std::invalid_argument("chain parameters must be finite");
    }
    if (!(a > 0.0 && a < 1.0)) {
        throw std::invalid_argument("a must lie strictly inside (0, 1), got " + std::to_string(a));
    }
    if (!(b > 0.0 && b < 1.0)) {
        throw std::invalid_argument("b must lie strictly inside (0, 1), got " + std::to_string(b));
    }
    if (!(nu_F >= 0.0 && nu_F <= 1.0)) {
        throw std::invalid_argument("nu_F must lie in [0, 1], got " + std::to_string(nu_F));
    }
    return ChainParams(a, b, nu_F);
}

ChainParams make_stationary_params(double a, double b) {
    // Validate a, b before dividing.
    const auto probe = make_params(a, b, 0.5);
    return make_params(probe.a(), probe.b(), b / (a + b));
}

DerivedParams derive(const ChainParams& params) noexcept {
    const double a = params.a();
    const double b = params.b();
    const double s = a + b;
    DerivedParams d{};
    d.pi_F = b / s;
    d.pi_A = a / s;
    d.lambda = (1.0 - a) - b;
    // eps_F = 1 - nu_F/pi_F and eps_A = 1 - nu_A/pi_A, written as differences
    // so that nu = pi gives exact zeros and pi_F*eps_F + pi_A*eps_A = 0.
    d.eps_F = (d.pi_F - params.nu_F()) / d.pi_F;
    d.eps_A = (params.nu_F() - d.pi_F) / d.pi_A;
    return d;
}

double lambda_pow(const ChainParams& params, long m) {
    if (m < 0) throw std::invalid_argument("lambda_pow: negative exponent");
    if (m == 0) return 1.0;
    const double s = params.a() + params.b();
    const double lambda = (1.0 - params.a()) - params.b();
    if (lambda > 0.0) return std::exp(static_cast<double>(m) * std::log1p(-s));
    return std::pow(lambda, static_cast<double>(m));
}

double one_minus_lambda_pow(const ChainParams& params, long m) {
    if (m < 0) throw std::invalid_argument("one_minus_lambda_pow: negative exponent");
    if (m == 0) return 0.0;
    const double s = params.a() + params.b();
    const double lambda = (1.0 - params.a()) - params.b();
    if (lambda > 0.0) return -std::expm1(static_cast<double>(m) * std::log1p(-s));
    return 1.0 - std::pow(lambda, static_cast<double>(m));
}

Matrix2 transition_power(const ChainParams& params, long n) {
    if (n < 0) throw std::invalid_argument("transition_power: n must be nonnegative");
    const auto d = derive(params);
    const double lp = lambda_pow(params, n);
    const double q = one_minus_lambda_pow(params, n);
    Matrix2 p{};
    p[0][0] = d.pi_F + d.pi_A * lp;
    p[0][1] = d.pi_A * q;
    p[1][0] = d.pi_F * q;
    p[1][1] = d.pi_A + d.pi_F * lp;
    return p;
}

double state_prob(const ChainParams& params, long k, State tau) {
    if (k < 1) throw std::invalid_argument("state_prob: k must be at least 1");
    // pi_tau (1 - eps_tau lambda^{k-1}) = pi_tau (1 - lambda^{k-1}) + nu_tau lambda^{k-1}
    const auto d = derive(params);
    return d.pi(tau) * one_minus_lambda_pow(params, k - 1) + params.nu(tau) * lambda_pow(params, k - 1);
}

}  // namespace mbd
