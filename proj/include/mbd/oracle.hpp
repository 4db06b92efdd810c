#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mbd/chain.hpp"

namespace mbd {

/// Largest n for which enumerate() runs (2^n paths).
inline constexpr long kEnumerationMaxN = 20;

/// Exact joint law of (K_n, Y_n) by summing over all 2^n state sequences.
struct EnumerationResult {
    long n = 0;
    /// joint[j][0] = P(K_n = j, Y_n = F), joint[j][1] = P(K_n = j, Y_n = A).
    std::vector<std::array<double, 2>> joint;

    std::vector<double> marginal() const;
    std::vector<double> partial(State tau) const;
    double state_mass(State tau) const;
    double total() const;
};

/// Throws std::invalid_argument unless 1 <= n <= kEnumerationMaxN.
EnumerationResult enumerate(const ChainParams& params, long n);

/// Monte Carlo summary of K_n over independent chains.
///
/// Generator: std::mt19937_64 seeded with `seed` (its output sequence is fixed
/// by the C++ standard). Each uniform is (x >> 11) * 2^-53 for the next 64-bit
/// output x. Per chain: Y_1 = F iff u < nu_F; from F move to A iff u < a; from
/// A move to F iff u < b. One uniform per step, chains drawn sequentially.
struct SampleSummary {
    long n = 0;
    std::uint64_t reps = 0;
    std::uint64_t seed = 0;
    std::string generator = "mt19937_64";
    std::vector<std::uint64_t> histogram;     // counts of K_n = j, j = 0..n
    std::array<std::uint64_t, 2> terminal_counts{};  // Y_n = F, Y_n = A

    double empirical_mean() const;
    friend bool operator==(const SampleSummary&, const SampleSummary&) = default;
};

SampleSummary sample(const ChainParams& params, long n, std::uint64_t reps, std::uint64_t seed);

struct ChiSquareResult {
    double statistic = 0.0;
    long dof = 0;
    double p_value = 1.0;
};

/// Pearson statistic of a histogram against an exact PMF. Adjacent bins are
/// pooled left to right until each pooled bin expects at least `min_expected`.
ChiSquareResult chi_square(std::span<const std::uint64_t> histogram, std::span<const double> pmf,
                           double min_expected = 5.0);

}  // namespace mbd
