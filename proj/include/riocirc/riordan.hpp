#pragma once

#include <cstddef>
#include <vector>

#include "riocirc/polynomial.hpp"
#include "riocirc/rational.hpp"
#include "riocirc/series.hpp"

namespace riocirc {

/// Finite window of the lower triangular array (1/(1-t^{d+1}), t p(t)):
/// entry (i, k) is the coefficient of t^i in (t p(t))^k / (1 - t^{d+1}).
struct RiordanArray {
    RationalPoly p;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Rational>> entries;  // row-major, rows x cols

    const Rational& at(std::size_t i, std::size_t k) const;
};

/// Result of checking a column's eventual periodicity. The theoretical
/// period is d+1 starting at index 1+(k-1)(d+1); the empirical prime period
/// may be a proper divisor of d+1 (constant p has prime period 1).
struct PeriodReport {
    std::size_t column = 0;
    std::size_t period = 0;       // d+1
    std::size_t start = 0;        // 1+(k-1)(d+1)
    std::vector<Rational> block;  // entries start .. start+d
    std::size_t prime_period = 0;
    std::size_t verified_depth = 0;  // repetitions of the block checked
};

/// Generating function of column k: (t p(t))^k / (1 - t^{d+1}), truncated.
/// Throws ImproperArrayError when a_0 = 0.
Series<Rational> column_gf(const RationalPoly& p, std::size_t k, std::size_t order);

/// The rows x cols window of the array.
RiordanArray build(const RationalPoly& p, std::size_t rows, std::size_t cols);

/// The d+1 entries of column k's periodic tail, k >= 1.
std::vector<Rational> periodic_block(const RiordanArray& arr, std::size_t k);

/// Checks the shift identity C_{start+n,k} = C_{start+(d+1)+n,k} for
/// n = 0 .. reps*(d+1)-1 and computes the empirical prime period.
/// Throws TheoremViolation if the identity fails.
PeriodReport verify_theorem1(const RationalPoly& p, std::size_t k, std::size_t reps);

/// Sum of column k's entries preceding the periodic tail:
/// indices 0 .. (k-1)(d+1). k >= 1.
Rational head_sum(const RiordanArray& arr, std::size_t k);

/// Convenience: head sums for k = 1..kmax, building a large enough array.
std::vector<Rational> head_sums(const RationalPoly& p, std::size_t kmax);

}  // namespace riocirc
