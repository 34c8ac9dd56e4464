#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "riocirc/polynomial.hpp"
#include "riocirc/rational.hpp"
#include "riocirc/series.hpp"

namespace riocirc::testing {

inline std::mt19937_64 make_rng(std::uint64_t seed) {
    return std::mt19937_64{seed};
}

// mt19937_64 output is pinned by the standard; drawing from it directly
// (rather than through uniform_int_distribution, which is implementation
// defined) keeps every seeded test reproducible across standard libraries.
inline long uniform_long(std::mt19937_64& rng, long lo, long hi) {
    const unsigned long span = static_cast<unsigned long>(hi - lo) + 1UL;
    return lo + static_cast<long>(rng() % span);
}

inline std::size_t uniform_size(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

/// Uniform integer-valued rational in {lo..hi}.
inline Rational random_int_rational(std::mt19937_64& rng, long lo, long hi) {
    return Rational(uniform_long(rng, lo, hi));
}

/// Rational p/q with |p/q| <= bound and q in {1..max_den}.
inline Rational random_rational(std::mt19937_64& rng, long bound, long max_den) {
    const long den = uniform_long(rng, 1, max_den);
    return Rational(uniform_long(rng, -bound * den, bound * den), den);
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long bound, long max_den) {
    for (;;) {
        Rational r = random_rational(rng, bound, max_den);
        if (!r.is_zero()) return r;
    }
}

/// Random proper polynomial: integer coefficients in {lo..hi}, a_0 a_d != 0.
inline RationalPoly random_proper_poly(std::mt19937_64& rng, std::size_t min_deg,
                                       std::size_t max_deg, long lo, long hi) {
    const std::size_t d = uniform_size(rng, min_deg, max_deg);
    for (;;) {
        std::vector<Rational> coeffs;
        for (std::size_t i = 0; i <= d; ++i) coeffs.push_back(Rational(uniform_long(rng, lo, hi)));
        if (coeffs.front().is_zero() || coeffs.back().is_zero()) continue;
        return RationalPoly(std::move(coeffs));
    }
}

/// Random proper polynomial with rational coefficients, |a_i| <= bound.
inline RationalPoly random_proper_rational_poly(std::mt19937_64& rng, std::size_t min_deg,
                                                std::size_t max_deg, long bound, long max_den) {
    const std::size_t d = uniform_size(rng, min_deg, max_deg);
    for (;;) {
        std::vector<Rational> coeffs;
        for (std::size_t i = 0; i <= d; ++i) coeffs.push_back(random_rational(rng, bound, max_den));
        if (coeffs.front().is_zero() || coeffs.back().is_zero()) continue;
        return RationalPoly(std::move(coeffs));
    }
}

inline Series<Rational> random_series(std::mt19937_64& rng, std::size_t order, long bound,
                                      long max_den) {
    std::vector<Rational> coeffs;
    coeffs.reserve(order);
    for (std::size_t i = 0; i < order; ++i) coeffs.push_back(random_rational(rng, bound, max_den));
    return Series<Rational>(std::move(coeffs));
}

/// Tolerance for a value recovered from floating-point terms of magnitude
/// `scale`: 1e-9 relative on the exact value plus the rounding noise the
/// scale makes unavoidable. For unit-circle and contracting orbits the
/// second term stays below 1e-12-ish, matching the exact-zero-entry bound.
inline bool close_with_scale(double exact, double computed, double scale, double rel = 1e-9,
                             double abs_unit = 1e-12) {
    const double err = std::abs(computed - exact);
    return err <= rel * std::max(1.0, std::abs(exact)) + abs_unit * std::max(1.0, scale);
}

}  // namespace riocirc::testing
