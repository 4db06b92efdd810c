#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mbd/pmf.hpp"

namespace mbd {

/// Shape of a PMF. The first three are the unimodal refinements: a mode at 0,
/// a mode at n, or all modes interior.
enum class ShapeKind { Decreasing, Increasing, StrictlyUnimodal, BimodalLeft, BimodalRight, Trimodal };

/// Tokens: decreasing, increasing, unimodal, bimodal_left, bimodal_right, trimodal.
std::string_view to_string(ShapeKind k) noexcept;
std::optional<ShapeKind> parse_shape_kind(std::string_view token) noexcept;

constexpr bool is_unimodal(ShapeKind k) noexcept {
    return k == ShapeKind::Decreasing || k == ShapeKind::Increasing || k == ShapeKind::StrictlyUnimodal;
}

struct ModeSet {
    std::vector<long> indices;  // ascending
};

struct ShapeClass {
    ShapeKind kind = ShapeKind::StrictlyUnimodal;
    /// f(0), f(1), f(2), f(n-2), f(n-1), f(n), indices clamped to [0, n].
    std::array<double, 6> boundary_values{};
    /// Smallest |difference| among the adjacent pairs that decided the class.
    double margin = 0.0;
    ModeSet modes;
};

/// x_{i-1} x_{i+1} <= x_i^2 at every interior i (strict: < wherever x_i > 0).
/// Products are compared in scaled form, so tiny entries do not underflow to ties.
bool is_log_concave(std::span<const double> seq, bool strict = false);

/// Same test on natural logs of the sequence (-inf for zero entries):
/// l_{i-1} + l_{i+1} <= 2 l_i (strict: < wherever l_i is finite).
bool is_log_concave_logs(std::span<const double> logs, bool strict = false);

/// All indices attaining the maximum (exact equality).
ModeSet modes(std::span<const double> seq);

/// Shape of f_n. For n >= 4 decided by the six boundary values, relying on the
/// log-concavity of f_n(1..n-1); for n <= 3 by counting peaks directly.
ShapeClass classify(const Pmf& f);

/// Shape of the full or conditional law of K_n, decided on log_pmf values so
/// that boundary entries below the double range still compare correctly.
/// boundary_values and margin are reported in linear scale.
ShapeClass classify(const ChainParams& params, long n, PmfKind kind = PmfKind::Full);

namespace detail {

template <class T>
std::vector<long> argmax_indices(std::span<const T> f) {
    if (f.empty()) throw std::invalid_argument("empty sequence");
    std::vector<long> out;
    const T* best = &f[0];
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] > *best) {
            best = &f[i];
            out.clear();
        }
        if (f[i] == *best) out.push_back(static_cast<long>(i));
    }
    return out;
}

template <class T>
ShapeKind unimodal_refinement(std::span<const T> f) {
    const auto m = argmax_indices(f);
    const long n = static_cast<long>(f.size()) - 1;
    if (m.front() == 0) return ShapeKind::Decreasing;
    if (m.back() == n) return ShapeKind::Increasing;
    return ShapeKind::StrictlyUnimodal;
}

// Peaks are maximal runs of equal values whose outside neighbours are strictly lower.
template <class T>
ShapeKind classify_by_peaks(std::span<const T> f) {
    const long n = static_cast<long>(f.size()) - 1;
    auto at = [&](long i) -> const T& { return f[static_cast<std::size_t>(i)]; };
    std::vector<std::pair<long, long>> peaks;
    long i = 0;
    while (i <= n) {
        long r = i;
        while (r < n && at(r + 1) == at(i)) ++r;
        const bool left_ok = i == 0 || at(i - 1) < at(i);
        const bool right_ok = r == n || at(r + 1) < at(r);
        if (left_ok && right_ok) peaks.emplace_back(i, r);
        i = r + 1;
    }
    if (peaks.size() >= 3) return ShapeKind::Trimodal;
    if (peaks.size() <= 1) return unimodal_refinement(f);
    const bool at_left = peaks.front().first == 0;
    const bool at_right = peaks.back().second == n;
    if (at_left && !at_right) return ShapeKind::BimodalLeft;
    if (at_right && !at_left) return ShapeKind::BimodalRight;
    if (at_left && at_right) {
        // Peaks at both ends: the side the interior rises towards carries the body.
        if (n >= 3) return at(1) <= at(2) ? ShapeKind::BimodalLeft : ShapeKind::BimodalRight;
        return at(0) < at(n) ? ShapeKind::BimodalLeft : ShapeKind::BimodalRight;
    }
    // Two interior peaks cannot occur when f(1..n-1) is log-concave.
    return ShapeKind::BimodalLeft;
}

}  // namespace detail

/// Shape of the sequence f(0..n). Works for any totally ordered T, so the same
/// decision can be replayed in exact arithmetic.
template <class T>
ShapeKind classify_values(std::span<const T> f) {
    if (f.size() < 2) throw std::invalid_argument("classify: need n >= 1");
    const long n = static_cast<long>(f.size()) - 1;
    if (n <= 3) return detail::classify_by_peaks(f);
    auto at = [&](long i) -> const T& { return f[static_cast<std::size_t>(i)]; };
    const bool left_peak = at(0) > at(1) && at(1) <= at(2);
    const bool right_peak = at(n - 2) >= at(n - 1) && at(n - 1) < at(n);
    if (left_peak && right_peak) return ShapeKind::Trimodal;
    if (left_peak) return ShapeKind::BimodalLeft;
    if (right_peak) return ShapeKind::BimodalRight;
    return detail::unimodal_refinement(f);
}

/// Initial law for a region scan: a fixed nu_F, or the stationary law of each cell.
struct NuSpec {
    std::optional<double> nu_F;  // nullopt means stationary

    static NuSpec stationary() { return NuSpec{}; }
    static NuSpec fixed(double nu_F) { return NuSpec{nu_F}; }
    bool is_stationary() const noexcept { return !nu_F.has_value(); }
};

struct RegionCell {
    double a = 0.0;
    double b = 0.0;
    ShapeClass shape;
};

/// Cells in row-major order: index i * grid + j holds a = (i + 1/2)/grid, b = (j + 1/2)/grid.
struct RegionGrid {
    long n = 0;
    int grid = 0;
    NuSpec nu;
    std::vector<RegionCell> cells;

    const RegionCell& at(int i, int j) const { return cells.at(static_cast<std::size_t>(i) * grid + j); }
};

/// Classifies f_n at the centers of a grid x grid partition of (0,1)^2.
/// threads = 0 uses the hardware concurrency; the result does not depend on it.
RegionGrid classify_region(long n, const NuSpec& nu, int grid, unsigned threads = 0);

}  // namespace mbd
