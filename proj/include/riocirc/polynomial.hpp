#pragma once

#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "riocirc/errors.hpp"
#include "riocirc/rational.hpp"

namespace riocirc {

/// Ring of coefficients for series and polynomials. Satisfied by Rational
/// and ParamPoly.
template <typename R>
concept CoeffRing = requires(const R& x, const R& y) {
    { x + y } -> std::convertible_to<R>;
    { x - y } -> std::convertible_to<R>;
    { x* y } -> std::convertible_to<R>;
    { -x } -> std::convertible_to<R>;
    { x == y } -> std::convertible_to<bool>;
    { x.is_zero() } -> std::convertible_to<bool>;
    { x.is_invertible() } -> std::convertible_to<bool>;
    { x.inverse() } -> std::convertible_to<R>;
    { x.zero_like() } -> std::convertible_to<R>;
    { x.one_like() } -> std::convertible_to<R>;
};

/// Dense polynomial a_0 + a_1 t + ... + a_d t^d over a coefficient ring.
/// Trailing zero coefficients are trimmed, so a_d != 0 unless the polynomial
/// is identically zero (stored as the single coefficient 0).
template <CoeffRing R>
class Polynomial {
public:
    Polynomial() : coeffs_{R{}} {}
    explicit Polynomial(std::vector<R> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw DomainError("polynomial needs at least one coefficient");
        while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
    }

    std::size_t degree() const { return coeffs_.size() - 1; }
    bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0].is_zero(); }

    /// Coefficient a_i; a shape-matched zero beyond the degree.
    R coeff(std::size_t i) const {
        return i < coeffs_.size() ? coeffs_[i] : coeffs_.front().zero_like();
    }
    const R& constant_term() const { return coeffs_.front(); }
    const R& leading() const { return coeffs_.back(); }
    const std::vector<R>& coeffs() const { return coeffs_; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    std::vector<R> coeffs_;
};

using RationalPoly = Polynomial<Rational>;

/// Parses the polynomial text format "a0,a1,...,ad" with rational tokens.
inline RationalPoly parse_poly(std::string_view text) {
    std::vector<Rational> coeffs;
    std::string tok;
    std::istringstream in{std::string(text)};
    while (std::getline(in, tok, ',')) coeffs.push_back(Rational::parse(tok));
    if (coeffs.empty()) throw ParseError("empty polynomial");
    return RationalPoly(std::move(coeffs));
}

/// Canonical text form "a0,a1,...,ad".
inline std::string format_poly(const RationalPoly& p) {
    std::string out;
    for (std::size_t i = 0; i <= p.degree(); ++i) {
        if (i) out += ",";
        out += p.coeff(i).str();
    }
    return out;
}

/// p evaluated at a complex point (used for eigenvalues of circulants).
inline std::complex<double> eval_complex(const RationalPoly& p, std::complex<double> z) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = p.degree() + 1; i-- > 0;)
        acc = acc * z + std::complex<double>(p.coeff(i).to_double(), 0.0);
    return acc;
}

}  // namespace riocirc
