#include "mbd/oracle.hpp"

#include <boost/math/distributions/chi_squared.hpp>

#include <bit>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace mbd {

namespace {

// Neumaier compensated accumulator.
struct CompensatedSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            comp += (sum - t) + x;
        } else {
            comp += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + comp; }
};

constexpr std::size_t kF = 0;
constexpr std::size_t kA = 1;

}  // namespace

std::vector<double> EnumerationResult::marginal() const {
    std::vector<double> out(joint.size());
    for (std::size_t j = 0; j < joint.size(); ++j) out[j] = joint[j][kF] + joint[j][kA];
    return out;
}

std::vector<double> EnumerationResult::partial(State tau) const {
    const std::size_t t = tau == State::F ? kF : kA;
    std::vector<double> out(joint.size());
    for (std::size_t j = 0; j < joint.size(); ++j) out[j] = joint[j][t];
    return out;
}

double EnumerationResult::state_mass(State tau) const {
    const auto p = partial(tau);
    return std::accumulate(p.begin(), p.end(), 0.0);
}

double EnumerationResult::total() const { return state_mass(State::F) + state_mass(State::A); }

EnumerationResult enumerate(const ChainParams& params, long n) {
    if (n < 1 || n > kEnumerationMaxN) {
        throw std::invalid_argument("enumerate: n must lie in [1, " + std::to_string(kEnumerationMaxN) + "]");
    }
    // trans[from][to] with F = 0, A = 1.
    const double trans[2][2] = {{1.0 - params.a(), params.a()}, {params.b(), 1.0 - params.b()}};
    const double init[2] = {params.nu_F(), params.nu_A()};

    std::vector<std::array<CompensatedSum, 2>> acc(static_cast<std::size_t>(n) + 1);
    const std::uint64_t paths = std::uint64_t{1} << n;
    // Bit k of `path` set means Y_{k+1} = F.
    for (std::uint64_t path = 0; path < paths; ++path) {
        std::size_t state = (path & 1u) ? kF : kA;
        double prob = init[state];
        for (long k = 1; k < n && prob > 0.0; ++k) {
            const std::size_t next = ((path >> k) & 1u) ? kF : kA;
            prob *= trans[state][next];
            state = next;
        }
        // K_n is the number of set bits.
        if (prob > 0.0) acc[static_cast<std::size_t>(std::popcount(path))][state].add(prob);
    }

    EnumerationResult out;
    out.n = n;
    out.joint.resize(acc.size());
    for (std::size_t j = 0; j < acc.size(); ++j) {
        out.joint[j][kF] = acc[j][kF].value();
        out.joint[j][kA] = acc[j][kA].value();
    }
    return out;
}

double SampleSummary::empirical_mean() const {
    double s = 0.0;
    for (std::size_t j = 0; j < histogram.size(); ++j) s += static_cast<double>(j) * static_cast<double>(histogram[j]);
    return reps ? s / static_cast<double>(reps) : 0.0;
}

SampleSummary sample(const ChainParams& params, long n, std::uint64_t reps, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("sample: n must be at least 1");
    if (reps < 1) throw std::invalid_argument("sample: reps must be at least 1");
    std::mt19937_64 gen(seed);
    auto uniform = [&gen] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };

    SampleSummary out;
    out.n = n;
    out.reps = reps;
    out.seed = seed;
    out.histogram.assign(static_cast<std::size_t>(n) + 1, 0);
    for (std::uint64_t r = 0; r < reps; ++r) {
        bool in_F = uniform() < params.nu_F();
        long count = in_F ? 1 : 0;
        for (long k = 1; k < n; ++k) {
            const double u = uniform();
            in_F = in_F ? !(u < params.a()) : (u < params.b());
            count += in_F ? 1 : 0;
        }
        ++out.histogram[static_cast<std::size_t>(count)];
        ++out.terminal_counts[in_F ? kF : kA];
    }
    return out;
}

ChiSquareResult chi_square(std::span<const std::uint64_t> histogram, std::span<const double> pmf,
                           double min_expected) {
    if (histogram.size() != pmf.size() || histogram.empty()) {
        throw std::invalid_argument("chi_square: histogram and pmf sizes differ");
    }
    const double total = std::accumulate(histogram.begin(), histogram.end(), 0.0,
                                         [](double s, std::uint64_t c) { return s + static_cast<double>(c); });
    std::vector<std::pair<double, double>> bins;  // (observed, expected)
    double obs = 0.0;
    double exp = 0.0;
    for (std::size_t j = 0; j < pmf.size(); ++j) {
        obs += static_cast<double>(histogram[j]);
        exp += total * pmf[j];
        if (exp >= min_expected) {
            bins.emplace_back(obs, exp);
            obs = 0.0;
            exp = 0.0;
        }
    }
    if (obs > 0.0 || exp > 0.0) {
        if (bins.empty()) {
            bins.emplace_back(obs, exp);
        } else {
            bins.back().first += obs;
            bins.back().second += exp;
        }
    }
    ChiSquareResult r;
    for (const auto& [o, e] : bins) r.statistic += (o - e) * (o - e) / e;
    r.dof = static_cast<long>(bins.size()) - 1;
    if (r.dof >= 1) {
        const boost::math::chi_squared dist(static_cast<double>(r.dof));
        r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    }
    return r;
}

}  // namespace mbd
