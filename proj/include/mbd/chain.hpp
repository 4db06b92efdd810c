#pragma once

#include <array>
#include <stdexcept>
#include <string_view>

namespace mbd {

/// The two states of the chain. F is the "success" state counted by K_n.
enum class State { F, A };

constexpr State other(State s) noexcept { return s == State::F ? State::A : State::F; }

std::string_view to_string(State s) noexcept;

/// Raised when a conditional quantity is requested on an event of probability zero.
class ConditioningError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Validated parameters of a two-state chain with transition matrix
///
///     P = [ 1-a   a  ]
///         [  b   1-b ]
///
/// and initial law (nu_F, nu_A). Construct through make_params().
class ChainParams {
public:
    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    double nu_F() const noexcept { return nu_F_; }
    double nu_A() const noexcept { return nu_A_; }
    double nu(State s) const noexcept { return s == State::F ? nu_F_ : nu_A_; }

    friend bool operator==(const ChainParams&, const ChainParams&) = default;

private:
    friend ChainParams make_params(double a, double b, double nu_F);
    ChainParams(double a, double b, double nu_F) noexcept
        : a_(a), b_(b), nu_F_(nu_F), nu_A_(1.0 - nu_F) {}

    double a_;
    double b_;
    double nu_F_;
    double nu_A_;
};

/// Throws std::invalid_argument unless 0 < a, b < 1 and 0 <= nu_F <= 1.
/// nu_A is stored as 1 - nu_F.
ChainParams make_params(double a, double b, double nu_F);

/// Same chain started from its stationary law.
ChainParams make_stationary_params(double a, double b);

struct DerivedParams {
    double pi_F;
    double pi_A;
    double lambda;  // second eigenvalue 1 - a - b
    double eps_F;   // excentricity 1 - nu_F / pi_F
    double eps_A;

    double pi(State s) const noexcept { return s == State::F ? pi_F : pi_A; }
    double eps(State s) const noexcept { return s == State::F ? eps_F : eps_A; }
};

DerivedParams derive(const ChainParams& params) noexcept;

using Matrix2 = std::array<std::array<double, 2>, 2>;

/// P^n from the spectral decomposition, indexed [from][to] with F = 0, A = 1.
Matrix2 transition_power(const ChainParams& params, long n);

/// P(Y_k = tau) for k >= 1.
double state_prob(const ChainParams& params, long k, State tau);

/// lambda^m for lambda = 1 - a - b.
double lambda_pow(const ChainParams& params, long m);

/// 1 - lambda^m, accurate when lambda is close to 1.
double one_minus_lambda_pow(const ChainParams& params, long m);

}  // namespace mbd
