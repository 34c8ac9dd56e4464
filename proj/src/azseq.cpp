#include "riocirc/azseq.hpp"

#include <sstream>

#include "riocirc/riordan.hpp"

namespace riocirc {

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

mpz_class catalan(unsigned long n) {
    mpz_class central = binomial(2 * n, n);
    mpz_class out;
    mpz_divexact_ui(out.get_mpz_t(), central.get_mpz_t(), n + 1);
    return out;
}

std::vector<mpz_class> catalan_table(std::size_t count) {
    std::vector<mpz_class> table;
    table.reserve(count);
    for (std::size_t n = 0; n < count; ++n) table.push_back(catalan(n));
    return table;
}

CatalanFormReport verify_catalan_forms(const Rational& a, const Rational& b, std::size_t order) {
    if (a.is_zero() || b.is_zero()) throw DomainError("Catalan closed forms need a*b != 0");
    if (order < 2) throw DomainError("verify_catalan_forms needs order >= 2");

    const AZPair<Rational> az = az_sequences(RationalPoly({a, b}), order);
    if (!(az.A.coeff(0) == a))
        throw TheoremViolation("A-sequence constant term differs from a");
    if (!az.Z.coeff(0).is_zero())
        throw TheoremViolation("Z-sequence of a linear p must have zero constant term");

    const Rational ratio = -b / (a * a);
    for (std::size_t n = 0; n + 2 <= order; ++n) {
        const Rational cn{catalan(n)};
        const Rational common = cn * ratio.pow(static_cast<long>(n) + 1);
        const Rational expected_z = -a / b * common;
        const Rational expected_a = -a * common;
        if (!(az.Z.coeff(n + 1) == expected_z)) {
            std::ostringstream os;
            os << "[t^" << n + 1 << "]Z = " << az.Z.coeff(n + 1).str() << ", closed form gives "
               << expected_z.str();
            throw TheoremViolation(os.str());
        }
        if (!(az.A.coeff(n + 1) == expected_a)) {
            std::ostringstream os;
            os << "[t^" << n + 1 << "]A = " << az.A.coeff(n + 1).str() << ", closed form gives "
               << expected_a.str();
            throw TheoremViolation(os.str());
        }
    }
    return CatalanFormReport{order, order - 1};
}

RogersReport verify_rogers(const RationalPoly& p, std::size_t rows) {
    if (rows < 2) throw DomainError("verify_rogers needs rows >= 2");
    const RiordanArray arr = build(p, rows, rows);
    const AZPair<Rational> az = az_sequences(p, rows);

    std::size_t checks = 0;
    for (std::size_t n = 0; n + 1 < rows; ++n) {
        Rational zero_col;
        for (std::size_t j = 0; j <= n; ++j) zero_col += az.Z.coeff(j) * arr.at(n, j);
        if (!(arr.at(n + 1, 0) == zero_col)) {
            std::ostringstream os;
            os << "Z-recurrence fails at row " << n + 1 << ": entry " << arr.at(n + 1, 0).str()
               << " vs " << zero_col.str();
            throw TheoremViolation(os.str());
        }
        ++checks;
        for (std::size_t k = 0; k <= n; ++k) {
            Rational acc;
            for (std::size_t j = 0; k + j <= n; ++j) acc += az.A.coeff(j) * arr.at(n, k + j);
            if (!(arr.at(n + 1, k + 1) == acc)) {
                std::ostringstream os;
                os << "A-recurrence fails at (" << n + 1 << "," << k + 1 << "): entry "
                   << arr.at(n + 1, k + 1).str() << " vs " << acc.str();
                throw TheoremViolation(os.str());
            }
            ++checks;
        }
    }
    return RogersReport{rows, checks};
}

namespace {

std::vector<Rational> c_linear_parts(const Rational& a, const Rational& b, std::size_t n_max) {
    if (a.is_zero()) throw DomainError("Theorem-6 coefficients need a != 0");
    const std::size_t k = 2;  // Q[c]/(c^2) isolates the first derivative in c
    const Polynomial<ParamPoly> p({ParamPoly::constant(a, k), ParamPoly::constant(b, k),
                                   ParamPoly::parameter(k)});
    const AZPair<ParamPoly> az = az_sequences(p, n_max + 3);
    std::vector<Rational> out;
    out.reserve(n_max + 1);
    for (std::size_t n = 0; n <= n_max; ++n) out.push_back(az.A.coeff(n + 2).coeff(1));
    return out;
}

}  // namespace

std::vector<Rational> theorem6_sequence(const Rational& a, const Rational& b, std::size_t n_max) {
    return c_linear_parts(a, b, n_max);
}

Theorem6Report theorem6_check(const Rational& a, const Rational& b, std::size_t n_max) {
    const std::vector<Rational> coeffs = c_linear_parts(a, b, n_max);
    for (std::size_t n = 0; n <= n_max; ++n) {
        const Rational expected = (-b).pow(static_cast<long>(n)) *
                                  a.pow(-2 * static_cast<long>(n) - 2) *
                                  Rational(binomial(2 * n + 1, n + 1));
        if (!(coeffs[n] == expected)) {
            std::ostringstream os;
            os << "c-derivative of [t^" << n + 2 << "]A is " << coeffs[n].str()
               << ", closed form gives " << expected.str();
            throw TheoremViolation(os.str());
        }
    }
    return Theorem6Report{coeffs};
}

Series<ParamPoly> csum_expansion(std::size_t order, std::size_t k_truncation) {
    if (order < 2) throw DomainError("csum expansion needs order >= 2");
    if (k_truncation < 1) throw DomainError("csum expansion needs K >= 1");
    const ParamPoly one = ParamPoly::constant(Rational(1), k_truncation);
    std::vector<ParamPoly> coeffs = {one, one};
    // In Q[c]/(c^1) the parameter itself is already zero and p degenerates
    // to 1 + t.
    if (k_truncation >= 2) coeffs.push_back(ParamPoly::parameter(k_truncation));
    const Polynomial<ParamPoly> p(std::move(coeffs));
    return az_sequences(p, order).A;
}

std::vector<Rational> c_power_column(const Series<ParamPoly>& s, std::size_t j) {
    std::vector<Rational> out;
    out.reserve(s.order());
    for (std::size_t n = 0; n < s.order(); ++n) out.push_back(s.coeff(n).coeff(j));
    return out;
}

}  // namespace riocirc
