#include "riocirc/rational.hpp"

#include <ostream>

namespace riocirc {

namespace {

// Replaces the U+2212 minus sign and strips blanks so GMP's parser accepts
// tokens copied from typeset tables.
std::string normalize_token(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        const unsigned char ch = static_cast<unsigned char>(text[i]);
        if (ch == 0xE2 && i + 2 < text.size() &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 &&
            static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
            continue;
        }
        if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') continue;
        // GMP rejects an explicit '+'.
        if (ch == '+' && (out.empty() || out.back() == '/')) continue;
        out.push_back(static_cast<char>(ch));
    }
    return out;
}

}  // namespace

Rational::Rational(long num, long den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rational::Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
    const std::string tok = normalize_token(text);
    if (tok.empty()) throw ParseError("empty rational token");
    const auto slash = tok.find('/');
    if (slash != std::string::npos && tok.find('/', slash + 1) != std::string::npos)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    mpq_class v;
    if (v.set_str(tok, 10) != 0)
        throw ParseError("malformed rational '" + std::string(text) + "'");
    if (v.get_den() == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(std::move(v));
}

std::string Rational::str() const {
    return v_.get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw DomainError("division by zero rational");
    v_ /= o.v_;
    return *this;
}

Rational Rational::inverse() const {
    if (is_zero()) throw DomainError("inverse of zero rational");
    return Rational(mpq_class(1) / v_);
}

Rational Rational::abs() const {
    return Rational(mpq_class(::abs(v_)));
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    const bool neg = e < 0;
    const unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    if (neg && is_zero()) throw DomainError("negative power of zero");
    mpz_class num, den;
    mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    return neg ? Rational(den, num) : Rational(num, den);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace riocirc
