#include "mbd/shape.hpp"

#include <cmath>
#include <limits>
#include <thread>

namespace mbd {

namespace {

// x * y as (mantissa, exponent) with mantissa in [0.5, 1) or exactly zero.
struct Scaled {
    double mant;
    long exp;
};

Scaled scaled_product(double x, double y) {
    if (x == 0.0 || y == 0.0) return {0.0, 0};
    int ex = 0;
    int ey = 0;
    const double mx = std::frexp(x, &ex);
    const double my = std::frexp(y, &ey);
    int ep = 0;
    const double mp = std::frexp(mx * my, &ep);
    return {mp, static_cast<long>(ex) + ey + ep};
}

// Sign of (x*y - z*w) for nonnegative operands.
int compare_products(double x, double y, double z, double w) {
    const Scaled l = scaled_product(x, y);
    const Scaled r = scaled_product(z, w);
    if (l.mant == 0.0 || r.mant == 0.0) return (l.mant > 0.0) - (r.mant > 0.0);
    if (l.exp != r.exp) return l.exp < r.exp ? -1 : 1;
    return (l.mant > r.mant) - (l.mant < r.mant);
}

}  // namespace

std::string_view to_string(ShapeKind k) noexcept {
    switch (k) {
        case ShapeKind::Decreasing: return "decreasing";
        case ShapeKind::Increasing: return "increasing";
        case ShapeKind::StrictlyUnimodal: return "unimodal";
        case ShapeKind::BimodalLeft: return "bimodal_left";
        case ShapeKind::BimodalRight: return "bimodal_right";
        case ShapeKind::Trimodal: return "trimodal";
    }
    return "unimodal";
}

std::optional<ShapeKind> parse_shape_kind(std::string_view token) noexcept {
    for (auto k : {ShapeKind::Decreasing, ShapeKind::Increasing, ShapeKind::StrictlyUnimodal,
                   ShapeKind::BimodalLeft, ShapeKind::BimodalRight, ShapeKind::Trimodal}) {
        if (to_string(k) == token) return k;
    }
    return std::nullopt;
}

bool is_log_concave(std::span<const double> seq, bool strict) {
    for (double x : seq) {
        if (!(x >= 0.0)) throw std::invalid_argument("is_log_concave: entries must be nonnegative");
    }
    for (std::size_t i = 1; i + 1 < seq.size(); ++i) {
        const int c = compare_products(seq[i - 1], seq[i + 1], seq[i], seq[i]);
        if (strict && seq[i] > 0.0) {
            if (c >= 0) return false;
        } else if (c > 0) {
            return false;
        }
    }
    return true;
}

bool is_log_concave_logs(std::span<const double> logs, bool strict) {
    for (double x : logs) {
        if (std::isnan(x) || x == std::numeric_limits<double>::infinity()) {
            throw std::invalid_argument("is_log_concave_logs: entries must be finite or -inf");
        }
    }
    for (std::size_t i = 1; i + 1 < logs.size(); ++i) {
        const double outer = logs[i - 1] + logs[i + 1];
        const double inner = 2.0 * logs[i];
        if (strict && std::isfinite(logs[i])) {
            if (!(outer < inner)) return false;
        } else if (outer > inner) {
            return false;
        }
    }
    return true;
}

ModeSet modes(std::span<const double> seq) { return ModeSet{detail::argmax_indices(seq)}; }

namespace {

double adjacent_margin(std::span<const double> f) {
    const long n = static_cast<long>(f.size()) - 1;
    double margin = std::numeric_limits<double>::infinity();
    auto use_pair = [&](long i) { margin = std::min(margin, std::abs(f[i + 1] - f[i])); };
    if (n >= 4) {
        for (long i : {0L, 1L, n - 2, n - 1}) use_pair(i);
    } else {
        for (long i = 0; i < n; ++i) use_pair(i);
    }
    return margin;
}

std::array<double, 6> boundary_of(std::span<const double> f) {
    const long n = static_cast<long>(f.size()) - 1;
    const std::array<long, 6> pos{0, 1, 2, n - 2, n - 1, n};
    std::array<double, 6> out{};
    for (std::size_t i = 0; i < pos.size(); ++i) out[i] = f[static_cast<std::size_t>(std::clamp(pos[i], 0L, n))];
    return out;
}

}  // namespace

ShapeClass classify(const ChainParams& params, long n, PmfKind kind) {
    const auto logs = log_pmf(params, n, kind);
    std::vector<double> linear(logs.size());
    for (std::size_t j = 0; j < logs.size(); ++j) linear[j] = std::exp(logs[j]);
    ShapeClass out;
    out.kind = classify_values(std::span<const double>(logs));
    out.modes = modes(logs);
    out.boundary_values = boundary_of(linear);
    out.margin = adjacent_margin(linear);
    return out;
}

ShapeClass classify(const Pmf& f) {
    const long n = f.n;
    if (n < 1 || f.values.size() != static_cast<std::size_t>(n) + 1) {
        throw std::invalid_argument("classify: malformed pmf");
    }
    for (double v : f.values) {
        if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument("classify: pmf entries must be finite and nonnegative");
    }
    const std::span<const double> v(f.values);

    ShapeClass out;
    out.kind = classify_values(v);
    out.modes = modes(v);
    out.boundary_values = boundary_of(v);
    out.margin = adjacent_margin(v);
    return out;
}

RegionGrid classify_region(long n, const NuSpec& nu, int grid, unsigned threads) {
    if (grid < 2) throw std::invalid_argument("classify_region: grid must be at least 2");
    if (n < 1) throw std::invalid_argument("classify_region: n must be at least 1");
    if (nu.nu_F && !(*nu.nu_F >= 0.0 && *nu.nu_F <= 1.0)) {
        throw std::invalid_argument("classify_region: nu_F must lie in [0, 1]");
    }
    RegionGrid out;
    out.n = n;
    out.grid = grid;
    out.nu = nu;
    out.cells.resize(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));

    auto run_row = [&](int i) {
        const double a = (i + 0.5) / grid;
        for (int j = 0; j < grid; ++j) {
            const double b = (j + 0.5) / grid;
            const auto params = nu.is_stationary() ? make_stationary_params(a, b) : make_params(a, b, *nu.nu_F);
            auto& cell = out.cells[static_cast<std::size_t>(i) * grid + j];
            cell.a = a;
            cell.b = b;
            cell.shape = classify(params, n);
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(grid));
    if (threads == 1) {
        for (int i = 0; i < grid; ++i) run_row(i);
        return out;
    }
    // Rows are striped across workers; each cell is written by exactly one worker.
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        workers.emplace_back([&, t] {
            for (int i = static_cast<int>(t); i < grid; i += static_cast<int>(threads)) run_row(i);
        });
    }
    workers.clear();
    return out;
}

}  // namespace mbd
