#pragma once

#include <cstddef>
#include <vector>

#include "riocirc/errors.hpp"
#include "riocirc/param_poly.hpp"
#include "riocirc/polynomial.hpp"
#include "riocirc/rational.hpp"
#include "riocirc/series.hpp"

namespace riocirc {

/// Rogers characteristic sequences of RAp, as truncated series:
/// hbar is the compositional inverse of t p(t), Z = hbar^d, A = t/hbar.
template <CoeffRing R>
struct AZPair {
    Series<R> hbar;
    Series<R> Z;
    Series<R> A;
    std::size_t order;
};

/// Computes hbar, Z and A to `order` terms. Also evaluates the textbook
/// (unsimplified) Z formula (d(hbar) - d_00)/(hbar d(hbar)) with
/// d(t) = 1/(1-t^{d+1}) and asserts it equals hbar^d; a mismatch is reported
/// as a TheoremViolation, never patched.
template <CoeffRing R>
AZPair<R> az_sequences(const Polynomial<R>& p, std::size_t order) {
    if (!p.constant_term().is_invertible())
        throw ReversionDomainError("a_0 must be invertible to revert t p(t)");
    if (order < 2) throw DomainError("A/Z computation needs order >= 2");

    const std::size_t inner = order + 1;  // one spare term so A reaches `order`
    const Series<R> h = tp_series(p, inner);
    const Series<R> hbar = revert(h);

    const Series<R> a_seq = recip(shift_down(hbar, 1));
    const Series<R> z_seq = pow(hbar, p.degree()).truncated(order);

    // Unsimplified route: d(t) = 1/(1-t^{d+1}), d_00 = 1.
    const R proto = p.constant_term();
    const Series<R> g = compose(geometric_like(proto, p.degree(), inner), hbar);
    const Series<R> numerator = g - Series<R>::unit(proto, inner);
    const Series<R> z_unsimplified =
        shift_down(numerator, 1) * recip(shift_down(hbar * g, 1));
    if (!(z_unsimplified.truncated(order) == z_seq))
        throw TheoremViolation("unsimplified Z-sequence formula disagrees with hbar^d");

    return AZPair<R>{hbar.truncated(order), z_seq, a_seq.truncated(order), order};
}

/// Exact binomial coefficient C(n, k).
mpz_class binomial(unsigned long n, unsigned long k);
/// n-th Catalan number binom(2n, n)/(n+1).
mpz_class catalan(unsigned long n);
std::vector<mpz_class> catalan_table(std::size_t count);

struct CatalanFormReport {
    std::size_t order = 0;
    std::size_t terms_checked = 0;
};

/// For p = a + bt checks the signed-Catalan closed forms
/// [t^{n+1}]Z = (-a/b) C_n (-b/a^2)^{n+1} and [t^{n+1}]A = -a C_n (-b/a^2)^{n+1}
/// exactly for n = 0..order-2. Throws TheoremViolation on mismatch.
CatalanFormReport verify_catalan_forms(const Rational& a, const Rational& b, std::size_t order);

struct RogersReport {
    std::size_t rows = 0;
    std::size_t checks = 0;
};

/// Checks every entry of the rows x rows window against the Rogers
/// recurrences: C_{n+1,k+1} = sum_j A_j C_{n,k+j} and
/// C_{n+1,0} = sum_j Z_j C_{n,j}. Exact; throws TheoremViolation with the
/// offending (row, column) on mismatch.
RogersReport verify_rogers(const RationalPoly& p, std::size_t rows);

struct Theorem6Report {
    std::vector<Rational> c1_coefficients;  // d/dc [t^{n+2}] A at c = 0, n = 0..n_max
};

/// For p = a + bt + c t^2 over Q[c]/(c^2): asserts that the c-linear part of
/// [t^{n+2}]A equals (-b)^n / a^{2n+2} * binom(2n+1, n+1) for n = 0..n_max.
Theorem6Report theorem6_check(const Rational& a, const Rational& b, std::size_t n_max);

/// Same c-linear coefficients without the assertion (for sequence exports).
std::vector<Rational> theorem6_sequence(const Rational& a, const Rational& b, std::size_t n_max);

/// A(t) for p = 1 + t + c t^2 over Q[c]/(c^K), to `order` terms.
Series<ParamPoly> csum_expansion(std::size_t order, std::size_t k_truncation);

/// Column of c^j coefficients of a ParamPoly series (one per power of t).
std::vector<Rational> c_power_column(const Series<ParamPoly>& s, std::size_t j);

}  // namespace riocirc
