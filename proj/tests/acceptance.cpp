// Acceptance checks. Prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <boost/math/distributions/binomial.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "mbd/exact.hpp"
#include "mbd/moments.hpp"
#include "mbd/oracle.hpp"
#include "mbd/pmf.hpp"
#include "mbd/shape.hpp"
#include "support.hpp"
#include "tie_search.hpp"

using namespace mbd;
using mbd::testing::ParamDraw;
using mbd::testing::rel_err;

namespace {

struct Outcome {
    bool passed = true;
    std::string detail;
};

std::string fmt(const char* f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

// Relative error, falling back to an absolute comparison when the reference is
// zero in exact arithmetic (degenerate conditional laws).
double moment_err(double got, double want) {
    return std::abs(want) < 1e-12 ? std::abs(got - want) : rel_err(got, want);
}

Outcome oracle_equivalence() {
    ParamDraw draw(1001);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto p = draw.params();
        for (long n = 1; n <= 16; ++n) {
            const auto want = enumerate(p, n).marginal();
            const auto got = pmf(p, n);
            worst = std::max(worst, mbd::testing::max_abs_diff(got.values, want));
        }
    }
    return {worst <= 1e-12, "max abs diff " + fmt("%.3e", worst)};
}

Outcome three_way_agreement() {
    ParamDraw draw(1002);
    double worst = 0.0;
    for (int t = 0; t < 50; ++t) {
        const auto p = draw.params();
        for (long n : {2L, 10L, 50L, 200L, 500L}) {
            const auto fw = pmf(p, n);
            const auto rec = pmf_scalar_recursion(p, n);
            const auto cl = pmf_closed(p, n);
            worst = std::max(worst, mbd::testing::max_rel_diff(rec.values, fw.values, 1e-250, 1e-250));
            worst = std::max(worst, mbd::testing::max_rel_diff(cl.values, fw.values, 1e-250, 1e-250));
        }
    }
    return {worst <= 1e-9, "max rel diff " + fmt("%.3e", worst)};
}

Outcome trimodal_example() {
    const auto p = make_params(0.01, 0.03, 0.1);
    const auto fw = pmf(p, 200);
    const auto cl = pmf_closed(p, 200);
    const auto kind = classify(fw).kind;
    const double want0 = 0.9 * std::pow(0.97, 199);
    const double wantn = 0.1 * std::pow(0.99, 199);
    const double err = std::max({rel_err(cl[0], want0), rel_err(cl[200], wantn), rel_err(fw[0], want0),
                                 rel_err(fw[200], wantn)});
    const bool ok = kind == ShapeKind::Trimodal && err <= 1e-13;
    return {ok, "class " + std::string(to_string(kind)) + ", boundary rel err " + fmt("%.3e", err)};
}

Outcome moment_closed_forms() {
    ParamDraw draw(1004);
    double worst = 0.0;
    for (int t = 0; t < 200; ++t) {
        const auto p = draw.params();
        const long n = draw.integer(1, 300);
        const auto f = pmf(p, n);
        worst = std::max(worst, moment_err(mean(p, n), pmf_mean(f)));
        worst = std::max(worst, moment_err(variance(p, n), pmf_variance(f)));
        for (State s : {State::F, State::A}) {
            if (state_prob(p, n, s) == 0.0) continue;
            const auto g = conditional_pmf(p, n, s);
            worst = std::max(worst, moment_err(cond_mean(p, n, s), pmf_mean(g)));
            worst = std::max(worst, moment_err(cond_variance(p, n, s), pmf_variance(g)));
        }
    }
    return {worst <= 1e-9, "max rel err " + fmt("%.3e", worst)};
}

Outcome moment_symmetry() {
    ParamDraw draw(1005);
    double worst = 0.0;
    for (int t = 0; t < 100; ++t) {
        const double a = draw.prob();
        const double b = draw.prob();
        const auto from_A = make_params(a, b, 0.0);
        const auto from_F = make_params(a, b, 1.0);
        // Leaving A and ending in F needs at least two steps.
        for (long n = 2; n <= 14; ++n) {
            for (int m = 1; m <= 5; ++m) {
                worst = std::max(worst,
                                 rel_err(cond_moment(from_A, n, State::F, m), cond_moment(from_F, n, State::A, m)));
            }
        }
    }
    return {worst <= 1e-10, "max rel diff " + fmt("%.3e", worst)};
}

Outcome log_concavity_laws() {
    ParamDraw draw(1006);
    int bad_full = 0;
    int bad_mode = 0;
    for (int t = 0; t < 500; ++t) {
        const auto p = draw.params_sum_at_least_one();
        const long n = draw.integer(1, 300);
        const auto f = pmf(p, n);
        // Log-domain values: the same inequality, without subnormal round-off in the tails.
        if (!is_log_concave_logs(log_pmf(p, n))) ++bad_full;
        const double mu = mean(p, n);
        for (long m : modes(f.values).indices) {
            if (m < std::floor(mu) || m > std::ceil(mu)) ++bad_mode;
        }
    }
    int bad_strict = 0;
    for (int t = 0; t < 500; ++t) {
        const auto p = draw.params();
        const long n = draw.integer(4, 300);
        const auto logs = log_pmf(p, n);
        if (!is_log_concave_logs(std::span<const double>(logs).subspan(1, n - 1), true)) ++bad_strict;
    }
    std::ostringstream d;
    d << "a+b>=1 violations: log-concavity " << bad_full << ", mode " << bad_mode
      << "; strict interior violations " << bad_strict;
    return {bad_full == 0 && bad_mode == 0 && bad_strict == 0, d.str()};
}

Outcome conditional_restriction() {
    ParamDraw draw(1007);
    int violations = 0;
    int non_unimodal = 0;
    for (int t = 0; t < 500; ++t) {
        // Half the draws favour small a, b, where non-unimodal shapes live.
        const double hi = t % 2 == 0 ? 0.1 : 0.999;
        const auto p = make_params(draw.prob(0.001, hi), draw.prob(0.001, hi), draw.uniform());
        const long n = draw.integer(4, 300);
        const auto kF = classify(conditional_pmf(p, n, State::F)).kind;
        const auto kA = classify(conditional_pmf(p, n, State::A)).kind;
        if (kF == ShapeKind::Trimodal || kF == ShapeKind::BimodalLeft) ++violations;
        if (kA == ShapeKind::Trimodal || kA == ShapeKind::BimodalRight) ++violations;
        non_unimodal += !is_unimodal(kF) + !is_unimodal(kA);
    }
    return {violations == 0, std::to_string(violations) + " violations, " + std::to_string(non_unimodal) +
                                 " bimodal conditional laws seen"};
}

Outcome region_scan() {
    const auto g = classify_region(50, NuSpec::stationary(), 100);
    int bad_upper = 0;
    int left = 0;
    int right = 0;
    int tri = 0;
    for (const auto& c : g.cells) {
        if (c.a + c.b >= 1.0) {
            if (!is_unimodal(c.shape.kind)) ++bad_upper;
            continue;
        }
        left += c.shape.kind == ShapeKind::BimodalLeft;
        right += c.shape.kind == ShapeKind::BimodalRight;
        tri += c.shape.kind == ShapeKind::Trimodal;
    }
    std::ostringstream d;
    d << "non-unimodal cells with a+b>=1: " << bad_upper << "; below: bimodal_left " << left << ", bimodal_right "
      << right << ", trimodal " << tri;
    return {bad_upper == 0 && left > 0 && right > 0 && tri > 0, d.str()};
}

Outcome binomial_reduction() {
    ParamDraw draw(1009);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        const double b = draw.prob();
        const auto p = make_params(1.0 - b, b, b);
        for (long n = 1; n <= 200; ++n) {
            const auto f = pmf(p, n);
            const boost::math::binomial_distribution<double> dist(static_cast<double>(n), b);
            for (long j = 0; j <= n; ++j) {
                worst = std::max(worst, std::abs(f[j] - boost::math::pdf(dist, static_cast<double>(j))));
            }
        }
    }
    return {worst <= 1e-12, "max abs diff " + fmt("%.3e", worst)};
}

Outcome exact_tie_audit() {
    const auto points = mbd::testing::draw_tie_points(1010, 50, 1e-10);
    int mismatches = 0;
    double largest_margin = 0.0;
    for (const auto& t : points) {
        const auto p = make_params(t.a, t.b, t.nu_F);
        largest_margin = std::max(largest_margin, t.margin);
        if (classify(pmf(p, t.n)).kind != exact::classify(p, t.n)) ++mismatches;
    }
    std::ostringstream d;
    d << points.size() << " points, largest margin " << fmt("%.3e", largest_margin) << ", " << mismatches
      << " mismatches";
    return {points.size() == 50 && mismatches == 0 && largest_margin < 1e-10, d.str()};
}

struct Criterion {
    const char* name;
    double budget_seconds;  // 0 means no runtime bound
    std::function<Outcome()> check;
};

}  // namespace

int main() {
    const Criterion criteria[] = {
        {"oracle equivalence (n <= 16, 200 tuples)", 60.0, oracle_equivalence},
        {"three-way pmf agreement", 120.0, three_way_agreement},
        {"trimodal example n=200 a=0.01 b=0.03", 0.0, trimodal_example},
        {"moment closed forms vs pmf", 0.0, moment_closed_forms},
        {"conditional moment symmetry", 0.0, moment_symmetry},
        {"log-concavity laws", 0.0, log_concavity_laws},
        {"conditional shape restriction", 0.0, conditional_restriction},
        {"region scan n=50 stationary G=100", 60.0, region_scan},
        {"binomial reduction", 0.0, binomial_reduction},
        {"exact-rational tie audit", 0.0, exact_tie_audit},
    };
    int failed = 0;
    int index = 0;
    for (const auto& c : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.budget_seconds > 0.0 && secs > c.budget_seconds) {
            o.passed = false;
            o.detail += "; over the " + fmt("%.0f", c.budget_seconds) + " s budget";
        }
        std::printf("%s  %2d  %s  (%s; %.2f s)\n", o.passed ? "PASS" : "FAIL", index, c.name, o.detail.c_str(), secs);
        failed += !o.passed;
    }
    std::printf("%d of %d criteria passed\n", index - failed, index);
    return failed == 0 ? 0 : 1;
}
