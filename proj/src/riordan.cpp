#include "riocirc/riordan.hpp"

#include <sstream>

#include "riocirc/errors.hpp"

namespace riocirc {

namespace {

void require_proper(const RationalPoly& p) {
    if (p.constant_term().is_zero())
        throw ImproperArrayError("a_0 = 0: the matrix is not a proper Riordan array");
    if (p.is_zero()) throw ImproperArrayError("zero polynomial");
}

}  // namespace

const Rational& RiordanArray::at(std::size_t i, std::size_t k) const {
    if (i >= rows || k >= cols)
        throw TruncationError("array entry (" + std::to_string(i) + "," + std::to_string(k) +
                              ") outside the built " + std::to_string(rows) + "x" +
                              std::to_string(cols) + " window");
    return entries[i][k];
}

Series<Rational> column_gf(const RationalPoly& p, std::size_t k, std::size_t order) {
    require_proper(p);
    if (order == 0) throw DomainError("column_gf needs order >= 1");
    const Series<Rational> tp = tp_series(p, order);
    return pow(tp, k) * geometric(p.degree(), order);
}

RiordanArray build(const RationalPoly& p, std::size_t rows, std::size_t cols) {
    require_proper(p);
    if (rows == 0 || cols == 0) throw DomainError("array needs rows >= 1 and cols >= 1");
    RiordanArray arr;
    arr.p = p;
    arr.rows = rows;
    arr.cols = cols;
    arr.entries.assign(rows, std::vector<Rational>(cols));
    for (std::size_t k = 0; k < cols; ++k) {
        const Series<Rational> col = column_gf(p, k, rows);
        for (std::size_t i = 0; i < rows; ++i) arr.entries[i][k] = col.coeff(i);
    }
    return arr;
}

std::vector<Rational> periodic_block(const RiordanArray& arr, std::size_t k) {
    if (k == 0) throw DomainError("periodic block is defined for columns k >= 1");
    const std::size_t period = arr.p.degree() + 1;
    const std::size_t start = 1 + (k - 1) * period;
    if (k >= arr.cols || start + period > arr.rows)
        throw TruncationError("array too small for the periodic block of column " +
                              std::to_string(k));
    std::vector<Rational> block;
    block.reserve(period);
    for (std::size_t n = 0; n < period; ++n) block.push_back(arr.at(start + n, k));
    return block;
}

PeriodReport verify_theorem1(const RationalPoly& p, std::size_t k, std::size_t reps) {
    require_proper(p);
    if (k == 0) throw DomainError("periodicity verification needs a column k >= 1");
    if (reps < 2) throw DomainError("periodicity verification needs reps >= 2");
    const std::size_t period = p.degree() + 1;
    const std::size_t start = 1 + (k - 1) * period;
    const std::size_t window = reps * period;
    const std::size_t rows = start + period + window;

    const Series<Rational> col = column_gf(p, k, rows);
    for (std::size_t n = 0; n < window; ++n) {
        if (col.coeff(start + n) != col.coeff(start + period + n)) {
            std::ostringstream os;
            os << "column " << k << " of RAp with p = " << format_poly(p)
               << " is not (d+1)-periodic from index " << start << ": entry " << (start + n)
               << " = " << col.coeff(start + n).str() << " but entry " << (start + period + n)
               << " = " << col.coeff(start + period + n).str();
            throw TheoremViolation(os.str());
        }
    }

    PeriodReport report;
    report.column = k;
    report.period = period;
    report.start = start;
    for (std::size_t n = 0; n < period; ++n) report.block.push_back(col.coeff(start + n));
    report.verified_depth = reps;

    // Smallest divisor q of d+1 that already repeats over the whole window.
    report.prime_period = period;
    for (std::size_t q = 1; q < period; ++q) {
        if (period % q != 0) continue;
        bool ok = true;
        for (std::size_t n = 0; ok && n + q < period + window; ++n)
            ok = col.coeff(start + n) == col.coeff(start + n + q);
        if (ok) {
            report.prime_period = q;
            break;
        }
    }
    return report;
}

Rational head_sum(const RiordanArray& arr, std::size_t k) {
    if (k == 0) throw DomainError("head sum is defined for columns k >= 1");
    const std::size_t last = (k - 1) * (arr.p.degree() + 1);
    if (k >= arr.cols || last >= arr.rows)
        throw TruncationError("array too small for the head sum of column " + std::to_string(k));
    Rational sum;
    for (std::size_t i = 0; i <= last; ++i) sum += arr.at(i, k);
    return sum;
}

std::vector<Rational> head_sums(const RationalPoly& p, std::size_t kmax) {
    if (kmax == 0) throw DomainError("head_sums needs kmax >= 1");
    const std::size_t rows = (kmax - 1) * (p.degree() + 1) + 1;
    const RiordanArray arr = build(p, rows, kmax + 1);
    std::vector<Rational> sums;
    sums.reserve(kmax);
    for (std::size_t k = 1; k <= kmax; ++k) sums.push_back(head_sum(arr, k));
    return sums;
}

}  // namespace riocirc
