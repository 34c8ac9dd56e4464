#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "riocirc/rational.hpp"

namespace riocirc {

/// Element of the ring Q[c]/(c^K): a polynomial in the nilpotent parameter c,
/// truncated at degree K. Exact first-order (and higher) derivatives in c fall
/// out of the arithmetic, which is what the Theorem-6 style checks need.
///
/// All K coefficient slots are always present; operations require matching K.
class ParamPoly {
public:
    static constexpr std::size_t kDefaultK = 4;

    explicit ParamPoly(std::size_t k = kDefaultK);
    ParamPoly(Rational constant_part, std::size_t k);
    explicit ParamPoly(std::vector<Rational> coeffs_in_c);

    /// The generator c itself (requires K >= 2).
    static ParamPoly parameter(std::size_t k = kDefaultK);
    static ParamPoly constant(Rational value, std::size_t k = kDefaultK);

    std::size_t truncation() const { return c_.size(); }
    /// Coefficient of c^j; zero for j >= K.
    const Rational& coeff(std::size_t j) const;
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_constant() const;  // no c^j component for j >= 1
    bool is_invertible() const { return !c_[0].is_zero(); }

    ParamPoly zero_like() const { return ParamPoly(c_.size()); }
    ParamPoly one_like() const { return ParamPoly(Rational(1), c_.size()); }

    /// Inverse in Q[c]/(c^K); throws DomainError when the c^0 part is zero.
    ParamPoly inverse() const;

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    ParamPoly& operator*=(const ParamPoly& o);

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }

    /// Text form like "3/2 - 2c + c^3".
    std::string str() const;

private:
    void check_compatible(const ParamPoly& o) const;

    std::vector<Rational> c_;  // coefficient of c^j at index j, size K
};

}  // namespace riocirc
