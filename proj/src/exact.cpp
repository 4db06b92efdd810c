#include "mbd/exact.hpp"

#include <stdexcept>
#include <string>

namespace mbd::exact {

namespace {

void check_n(long n) {
    if (n < 1 || n > kExactMaxN) {
        throw std::invalid_argument("exact evaluation needs 1 <= n <= " + std::to_string(kExactMaxN));
    }
}

std::size_t idx(long j) { return static_cast<std::size_t>(j); }

Rational power(const Rational& x, long e) {
    Rational r(1);
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

}  // namespace

Params to_exact(const ChainParams& params) {
    Params p{Rational(params.a()), Rational(params.b()), Rational(params.nu_F()), Rational(0)};
    p.nu_A = Rational(1) - p.nu_F;
    return p;
}

Joint pmf_forward(const Params& p, long n) {
    check_n(n);
    Joint out;
    out.hat_F.assign(idx(n) + 1, Rational(0));
    out.hat_A.assign(idx(n) + 1, Rational(0));
    out.hat_F[1] = p.nu_F;
    out.hat_A[0] = p.nu_A;
    const Rational stay_F = Rational(1) - p.a;
    const Rational stay_A = Rational(1) - p.b;
    for (long m = 1; m < n; ++m) {
        std::vector<Rational> F(idx(n) + 1, Rational(0));
        std::vector<Rational> A(idx(n) + 1, Rational(0));
        for (long j = 0; j <= m + 1; ++j) {
            if (j > 0) F[idx(j)] = stay_F * out.hat_F[idx(j - 1)] + p.b * out.hat_A[idx(j - 1)];
            A[idx(j)] = p.a * out.hat_F[idx(j)] + stay_A * out.hat_A[idx(j)];
        }
        out.hat_F = std::move(F);
        out.hat_A = std::move(A);
    }
    return out;
}

std::vector<Rational> pmf(const Params& p, long n) {
    auto joint = pmf_forward(p, n);
    std::vector<Rational> f(idx(n) + 1);
    for (std::size_t j = 0; j < f.size(); ++j) f[j] = joint.hat_F[j] + joint.hat_A[j];
    return f;
}

std::vector<Rational> pmf_closed(const Params& p, long n) {
    check_n(n);
    const Rational one(1);
    std::vector<Rational> f(idx(n) + 1, Rational(0));
    f[0] = p.nu_A * power(one - p.b, n - 1);
    f[idx(n)] = p.nu_F * power(one - p.a, n - 1);
    const BasicCoefficientTable<Rational> table(p.a, p.b, p.nu_F, p.nu_A);
    for (long j = 1; j <= n - 1; ++j) {
        Rational s(0);
        for (long k = 0; k <= j - 1; ++k) {
            s += choose<Rational>(j - 1, k) * power(table.delta(), k) * table.c(j - 1, k, n);
        }
        f[idx(j)] = power(one - p.b, n - j) * power(one - p.a, j - 1) * s;
    }
    return f;
}

std::vector<Rational> pmf_of_kind(const Params& p, long n, PmfKind kind) {
    if (kind == PmfKind::Full) return pmf(p, n);
    auto joint = pmf_forward(p, n);
    auto values = std::move(kind == PmfKind::CondF ? joint.hat_F : joint.hat_A);
    Rational mass(0);
    for (const auto& v : values) mass += v;
    if (mass == 0) throw ConditioningError("conditioning event has probability zero");
    for (auto& v : values) v /= mass;
    return values;
}

ShapeKind classify(const ChainParams& params, long n, PmfKind kind) {
    const auto values = pmf_of_kind(to_exact(params), n, kind);
    return classify_values(std::span<const Rational>(values));
}

}  // namespace mbd::exact
