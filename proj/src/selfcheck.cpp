#include "mbd/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "mbd/binomial.hpp"
#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "mbd/pmf.hpp"
#include "mbd/shape.hpp"

namespace mbd {

namespace {

class Draw {
public:
    explicit Draw(std::uint64_t seed) : gen_(seed) {}
    double uniform(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(gen_() >> 11) * 0x1.0p-53);
    }
    ChainParams params() { return make_params(uniform(0.01, 0.99), uniform(0.01, 0.99), uniform(0.0, 1.0)); }

private:
    std::mt19937_64 gen_;
};

double rel_err(double got, double want) {
    const double scale = std::max(std::abs(want), std::numeric_limits<double>::min());
    return std::abs(got - want) / scale;
}

// Relative difference on entries >= 1e-250, absolute below.
bool close_pmf(const std::vector<double>& x, const std::vector<double>& y, double rel, double abs_tol,
               double& worst) {
    if (x.size() != y.size()) return false;
    bool ok = true;
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (std::max(x[j], y[j]) >= 1e-250) {
            const double e = rel_err(x[j], y[j]);
            worst = std::max(worst, e);
            ok = ok && e <= rel;
        } else {
            ok = ok && std::abs(x[j] - y[j]) <= abs_tol;
        }
    }
    return ok;
}

std::string sci(double x) {
    std::ostringstream os;
    os.precision(3);
    os << std::scientific << x;
    return os.str();
}

}  // namespace

std::vector<CheckResult> run_selfcheck(std::uint64_t seed) {
    std::vector<CheckResult> out;
    Draw draw(seed);

    {
        double worst = 0.0;
        bool ok = true;
        for (int t = 0; t < 20; ++t) {
            const auto p = draw.params();
            for (long n = 1; n <= 12; ++n) {
                const auto f = pmf(p, n).values;
                const auto g = enumerate(p, n).marginal();
                for (std::size_t j = 0; j < f.size(); ++j) {
                    worst = std::max(worst, std::abs(f[j] - g[j]));
                }
            }
        }
        ok = worst <= 1e-12;
        out.push_back({"forward pmf vs path enumeration (n <= 12)", ok, "max abs diff " + sci(worst)});
    }

    {
        double worst = 0.0;
        bool ok = true;
        for (int t = 0; t < 10; ++t) {
            const auto p = draw.params();
            for (long n : {2L, 10L, 50L, 200L}) {
                const auto fw = pmf(p, n).values;
                ok = close_pmf(pmf_scalar_recursion(p, n).values, fw, 1e-9, 1e-12, worst) && ok;
                ok = close_pmf(pmf_closed(p, n).values, fw, 1e-9, 1e-12, worst) && ok;
            }
        }
        out.push_back({"three-way pmf agreement (n <= 200)", ok, "max rel diff " + sci(worst)});
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 20; ++t) {
            const auto p = draw.params();
            const long n = 2 + static_cast<long>(draw.uniform(0.0, 99.0));
            const auto f = pmf(p, n);
            worst = std::max(worst, rel_err(mean(p, n), pmf_mean(f)));
            worst = std::max(worst, rel_err(variance(p, n), pmf_variance(f)));
            for (State s : {State::F, State::A}) {
                const auto c = conditional_pmf(p, n, s);
                worst = std::max(worst, rel_err(cond_mean(p, n, s), pmf_mean(c)));
                worst = std::max(worst, rel_err(cond_variance(p, n, s), pmf_variance(c)));
            }
        }
        out.push_back({"closed-form moments vs pmf sums", worst <= 1e-9, "max rel diff " + sci(worst)});
    }

    {
        const auto p = make_params(0.01, 0.03, 0.1);
        const auto shape = classify(pmf(p, 200));
        out.push_back({"n=200 a=0.01 b=0.03 nu_F=0.1 is trimodal", shape.kind == ShapeKind::Trimodal,
                       std::string("class ") + std::string(to_string(shape.kind))});
    }

    {
        double worst = 0.0;
        for (int t = 0; t < 5; ++t) {
            const double b = draw.uniform(0.05, 0.95);
            const auto p = make_params(1.0 - b, b, b);
            const auto f = pmf(p, 100).values;
            const auto g = binomial_pmf(100, b);
            for (std::size_t j = 0; j < f.size(); ++j) worst = std::max(worst, std::abs(f[j] - g[j]));
        }
        out.push_back({"a + b = 1 reduces to Binomial(n, b)", worst <= 1e-12, "max abs diff " + sci(worst)});
    }
    return out;
}

}  // namespace mbd
