#include "riocirc/param_poly.hpp"

#include <sstream>

#include "riocirc/errors.hpp"

namespace riocirc {

ParamPoly::ParamPoly(std::size_t k) : c_(k) {
    if (k == 0) throw DomainError("ParamPoly truncation K must be positive");
}

ParamPoly::ParamPoly(Rational constant_part, std::size_t k) : ParamPoly(k) {
    c_[0] = std::move(constant_part);
}

ParamPoly::ParamPoly(std::vector<Rational> coeffs_in_c) : c_(std::move(coeffs_in_c)) {
    if (c_.empty()) throw DomainError("ParamPoly truncation K must be positive");
}

ParamPoly ParamPoly::parameter(std::size_t k) {
    if (k < 2) throw DomainError("parameter c vanishes in Q[c]/(c^K) with K < 2");
    ParamPoly p(k);
    p.c_[1] = Rational(1);
    return p;
}

ParamPoly ParamPoly::constant(Rational value, std::size_t k) {
    return ParamPoly(std::move(value), k);
}

const Rational& ParamPoly::coeff(std::size_t j) const {
    static const Rational zero;
    return j < c_.size() ? c_[j] : zero;
}

bool ParamPoly::is_zero() const {
    for (const auto& x : c_)
        if (!x.is_zero()) return false;
    return true;
}

bool ParamPoly::is_constant() const {
    for (std::size_t j = 1; j < c_.size(); ++j)
        if (!c_[j].is_zero()) return false;
    return true;
}

void ParamPoly::check_compatible(const ParamPoly& o) const {
    if (c_.size() != o.c_.size())
        throw DomainError("ParamPoly operands come from different rings Q[c]/(c^K)");
}

ParamPoly ParamPoly::inverse() const {
    if (!is_invertible()) throw DomainError("ParamPoly with zero constant part has no inverse");
    const std::size_t k = c_.size();
    ParamPoly inv(k);
    inv.c_[0] = c_[0].inverse();
    // Triangular recursion: v_n = -(sum_{j=1..n} u_j v_{n-j}) / u_0.
    for (std::size_t n = 1; n < k; ++n) {
        Rational acc;
        for (std::size_t j = 1; j <= n; ++j) acc += c_[j] * inv.c_[n - j];
        inv.c_[n] = -acc * inv.c_[0];
    }
    return inv;
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r(c_.size());
    for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = -c_[j];
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] += o.c_[j];
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    check_compatible(o);
    for (std::size_t j = 0; j < c_.size(); ++j) c_[j] -= o.c_[j];
    return *this;
}

ParamPoly& ParamPoly::operator*=(const ParamPoly& o) {
    check_compatible(o);
    const std::size_t k = c_.size();
    std::vector<Rational> prod(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < k; ++j) {
            if (o.c_[j].is_zero()) continue;
            prod[i + j] += c_[i] * o.c_[j];
        }
    }
    c_ = std::move(prod);
    return *this;
}

std::string ParamPoly::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < c_.size(); ++j) {
        if (c_[j].is_zero()) continue;
        if (!first) os << (c_[j].sign() < 0 ? " - " : " + ");
        else if (c_[j].sign() < 0) os << "-";
        const Rational mag = c_[j].abs();
        if (j == 0) {
            os << mag.str();
        } else {
            if (!mag.is_one()) os << mag.str() << "*";
            os << "c";
            if (j > 1) os << "^" << j;
        }
        first = false;
    }
    if (first) os << "0";
    return os.str();
}

}  // namespace riocirc
