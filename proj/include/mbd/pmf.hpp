#pragma once

#include <string_view>
#include <type_traits>
#include <vector>

#include "mbd/binomial.hpp"
#include "mbd/chain.hpp"

namespace mbd {

enum class PmfKind { Full, CondF, CondA };

std::string_view to_string(PmfKind k) noexcept;

/// Distribution of K_n (or of K_n given Y_n) on j = 0..n.
struct Pmf {
    long n = 0;
    std::vector<double> values;
    ChainParams params;
    PmfKind kind = PmfKind::Full;

    double operator[](long j) const { return values.at(static_cast<std::size_t>(j)); }
    double sum() const noexcept;
};

/// Joint law of (K_n, Y_n): hat_F[j] = P(K_n = j, Y_n = F), hat_A likewise.
struct PartialPmfPair {
    long n = 0;
    std::vector<double> hat_F;
    std::vector<double> hat_A;

    const std::vector<double>& hat(State s) const noexcept { return s == State::F ? hat_F : hat_A; }
};

/// Coefficients of the closed form for f_n and for the partial PMF hat_F_n:
///
///   c_{j,k}(n)   = nu_F C(n-2-j, k-1) + w2 C(n-2-j, k) + w3 C(n-2-j, k+1)
///   c^F_{j,k}(n) = nu_F C(n-2-j, k-1) + v2 C(n-2-j, k)
///
/// with w2 = (nu_F a + nu_A b)/(1-b), w3 = nu_A a b/(1-b)^2, v2 = nu_A b/(1-b).
/// Templated so the recurrences can be checked in exact arithmetic.
template <class T>
class BasicCoefficientTable {
public:
    BasicCoefficientTable(T a, T b, T nu_F, T nu_A)
        : delta_(a * b / ((T(1) - a) * (T(1) - b))),
          nu_F_(nu_F),
          w2_((nu_F * a + nu_A * b) / (T(1) - b)),
          w3_(nu_A * a * b / ((T(1) - b) * (T(1) - b))),
          v2_(nu_A * b / (T(1) - b)) {}

    const T& delta() const noexcept { return delta_; }
    const T& nu_F() const noexcept { return nu_F_; }
    const T& w2() const noexcept { return w2_; }
    const T& w3() const noexcept { return w3_; }
    const T& v2() const noexcept { return v2_; }

    T c(long j, long k, long n) const {
        const long m = n - 2 - j;
        return nu_F_ * binom(m, k - 1) + w2_ * binom(m, k) + w3_ * binom(m, k + 1);
    }

    T c_F(long j, long k, long n) const {
        const long m = n - 2 - j;
        return nu_F_ * binom(m, k - 1) + v2_ * binom(m, k);
    }

    static T binom(long m, long r) {
        if constexpr (std::is_floating_point_v<T>) {
            return static_cast<T>(choose_double(m, r));
        } else {
            return choose<T>(m, r);
        }
    }

private:
    T delta_;
    T nu_F_;
    T w2_;
    T w3_;
    T v2_;
};

class CoefficientTable : public BasicCoefficientTable<double> {
public:
    explicit CoefficientTable(const ChainParams& p)
        : BasicCoefficientTable<double>(p.a(), p.b(), p.nu_F(), p.nu_A()) {}
};

/// Forward evolution of the joint law of (K_m, Y_m), m = 1..n. Every update
/// adds nonnegative terms; this is the canonical evaluator.
PartialPmfPair pmf_forward(const ChainParams& params, long n);

/// f_n = hat_F + hat_A from pmf_forward.
Pmf pmf(const ChainParams& params, long n);

/// f_n from the three-term scalar recursion
///   f_{m+2}(j+1) = (1-b) f_{m+1}(j+1) + (1-a) f_{m+1}(j) - (1-a-b) f_m(j)
/// started from f_1, f_2. Used for cross-validation.
Pmf pmf_scalar_recursion(const ChainParams& params, long n);

/// Above this n, pmf_closed and partial_pmf_closed accumulate in log space.
inline constexpr long kClosedFormDirectMaxN = 64;

/// f_n from the closed form in terms of c_{j,k}(n) and delta.
Pmf pmf_closed(const ChainParams& params, long n);

/// hat_F_n from its closed form; hat_A_n = pmf_closed - hat_F_n.
PartialPmfPair partial_pmf_closed(const ChainParams& params, long n);

/// Law of K_n given Y_n = tau. Throws ConditioningError if P(Y_n = tau) = 0.
Pmf conditional_pmf(const ChainParams& params, long n, State tau);

/// Natural logs of the full or conditional PMF (-inf for zero mass), from the
/// forward recursion run in log space. Unlike the double PMF, entries far below
/// the smallest normal double keep full relative accuracy.
std::vector<double> log_pmf(const ChainParams& params, long n, PmfKind kind = PmfKind::Full);

}  // namespace mbd
