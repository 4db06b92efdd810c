#pragma once

// Exact-rational evaluation for small n. Every double is a dyadic rational, so the
// chain parameters convert without loss and all comparisons below are exact.

#include <gmpxx.h>

#include <vector>

#include "mbd/chain.hpp"
#include "mbd/pmf.hpp"
#include "mbd/shape.hpp"

namespace mbd::exact {

using Rational = mpq_class;

inline constexpr long kExactMaxN = 64;

struct Params {
    Rational a;
    Rational b;
    Rational nu_F;
    Rational nu_A;  // exactly 1 - nu_F
};

Params to_exact(const ChainParams& params);

struct Joint {
    std::vector<Rational> hat_F;
    std::vector<Rational> hat_A;
};

/// Forward recursion for the joint law of (K_n, Y_n) in rationals.
Joint pmf_forward(const Params& p, long n);

/// f_n by forward recursion.
std::vector<Rational> pmf(const Params& p, long n);

/// f_n by the closed form, with the same coefficient table as the float path.
std::vector<Rational> pmf_closed(const Params& p, long n);

/// Full or conditional PMF; throws ConditioningError on a zero-probability event.
std::vector<Rational> pmf_of_kind(const Params& p, long n, PmfKind kind);

/// Shape decided entirely in exact arithmetic.
ShapeKind classify(const ChainParams& params, long n, PmfKind kind = PmfKind::Full);

}  // namespace mbd::exact
