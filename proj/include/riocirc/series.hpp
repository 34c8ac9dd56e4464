#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "riocirc/errors.hpp"
#include "riocirc/polynomial.hpp"

namespace riocirc {

/// Truncated formal power series: coefficients of t^0 .. t^{N-1} are known,
/// everything from t^N on is unknown. The truncation order N travels with the
/// value; binary operations return min(N_f, N_g) and nothing ever silently
/// extends a series.
template <CoeffRing R>
class Series {
public:
    explicit Series(std::vector<R> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw DomainError("series truncation order must be >= 1");
    }

    /// All-zero series of the given order, shaped like `proto`.
    static Series zeros(const R& proto, std::size_t order) {
        if (order == 0) throw DomainError("series truncation order must be >= 1");
        return Series(std::vector<R>(order, proto.zero_like()));
    }
    /// The unit series 1, shaped like `proto`.
    static Series unit(const R& proto, std::size_t order) {
        Series s = zeros(proto, order);
        s.c_[0] = proto.one_like();
        return s;
    }
    /// The series t (requires order >= 2 to be representable beyond zero).
    static Series identity(const R& proto, std::size_t order) {
        Series s = zeros(proto, order);
        if (order >= 2) s.c_[1] = proto.one_like();
        return s;
    }

    std::size_t order() const { return c_.size(); }

    /// Coefficient of t^n. Requesting n >= N signals the caller to rebuild
    /// with a larger truncation order.
    const R& coeff(std::size_t n) const {
        if (n >= c_.size())
            throw TruncationError("coefficient " + std::to_string(n) +
                                  " beyond truncation order " + std::to_string(c_.size()));
        return c_[n];
    }
    const std::vector<R>& coeffs() const { return c_; }

    /// Index of the first nonzero coefficient, or N if all known ones vanish.
    std::size_t valuation() const {
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return i;
        return c_.size();
    }

    Series truncated(std::size_t order) const {
        if (order == 0 || order > c_.size())
            throw TruncationError("cannot truncate order-" + std::to_string(c_.size()) +
                                  " series to order " + std::to_string(order));
        return Series(std::vector<R>(c_.begin(), c_.begin() + order));
    }

    friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

private:
    template <CoeffRing S>
    friend Series<S> operator+(const Series<S>&, const Series<S>&);
    template <CoeffRing S>
    friend Series<S> operator-(const Series<S>&, const Series<S>&);
    template <CoeffRing S>
    friend Series<S> operator*(const Series<S>&, const Series<S>&);
    template <CoeffRing S>
    friend Series<S> recip(const Series<S>&);
    template <CoeffRing S>
    friend Series<S> compose(const Series<S>&, const Series<S>&);
    template <CoeffRing S>
    friend Series<S> revert(const Series<S>&);

    std::vector<R> c_;
};

template <CoeffRing R>
Series<R> operator+(const Series<R>& f, const Series<R>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f.c_[i] + g.c_[i]);
    return Series<R>(std::move(out));
}

template <CoeffRing R>
Series<R> operator-(const Series<R>& f, const Series<R>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) out.push_back(f.c_[i] - g.c_[i]);
    return Series<R>(std::move(out));
}

/// Cauchy product truncated to min(N_f, N_g).
template <CoeffRing R>
Series<R> operator*(const Series<R>& f, const Series<R>& g) {
    const std::size_t n = std::min(f.order(), g.order());
    std::vector<R> out(n, f.c_[0].zero_like());
    for (std::size_t i = 0; i < n; ++i) {
        if (f.c_[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < n; ++j) {
            if (g.c_[j].is_zero()) continue;
            out[i + j] += f.c_[i] * g.c_[j];
        }
    }
    return Series<R>(std::move(out));
}

template <CoeffRing R>
Series<R> scale(const Series<R>& f, const R& s) {
    std::vector<R> out;
    out.reserve(f.order());
    for (const auto& x : f.coeffs()) out.push_back(x * s);
    return Series<R>(std::move(out));
}

/// f^k by repeated truncated multiplication; f^0 is the unit series.
template <CoeffRing R>
Series<R> pow(const Series<R>& f, std::size_t k) {
    Series<R> acc = Series<R>::unit(f.coeffs()[0], f.order());
    for (std::size_t i = 0; i < k; ++i) acc = acc * f;
    return acc;
}

/// Multiplicative inverse: g with f*g = 1 up to the truncation order.
template <CoeffRing R>
Series<R> recip(const Series<R>& f) {
    if (!f.c_[0].is_invertible())
        throw SingularSeriesError("series has a non-invertible constant term");
    const std::size_t n = f.order();
    std::vector<R> out(n, f.c_[0].zero_like());
    const R inv0 = f.c_[0].inverse();
    out[0] = inv0;
    for (std::size_t m = 1; m < n; ++m) {
        R acc = f.c_[0].zero_like();
        for (std::size_t j = 1; j <= m; ++j) acc += f.c_[j] * out[m - j];
        out[m] = -(acc * inv0);
    }
    return Series<R>(std::move(out));
}

/// f(g(t)) truncated to min(N_f, N_g); g must have zero constant term.
template <CoeffRing R>
Series<R> compose(const Series<R>& f, const Series<R>& g) {
    if (!g.c_[0].is_zero())
        throw CompositionOrderError("inner series of a composition must have order >= 1");
    const std::size_t n = std::min(f.order(), g.order());
    const Series<R> gt = g.truncated(n);
    // Horner from the top coefficient down.
    Series<R> acc = Series<R>::zeros(f.c_[0], n);
    for (std::size_t i = n; i-- > 0;) {
        acc = acc * gt;
        acc = acc + scale(Series<R>::unit(f.c_[0], n), f.c_[i]);
    }
    return acc;
}

/// Compositional inverse of h (h_0 = 0, h_1 invertible): the series hbar with
/// h(hbar(t)) = hbar(h(t)) = t up to truncation. Solves the triangular
/// coefficient system by back-substitution, keeping the truncated powers
/// hbar^m updated as each new coefficient becomes known.
template <CoeffRing R>
Series<R> revert(const Series<R>& h) {
    if (!h.c_[0].is_zero())
        throw ReversionDomainError("series to revert must have zero constant term");
    if (h.order() < 2 || !h.c_[1].is_invertible())
        throw ReversionDomainError("series to revert must have an invertible linear term");
    const std::size_t n = h.order();
    const R zero = h.c_[0].zero_like();
    const R inv1 = h.c_[1].inverse();

    // Highest power of hbar that can contribute: degree of h as a polynomial
    // in its argument, capped by the truncation order.
    std::size_t top = 2;
    for (std::size_t m = 2; m < n; ++m)
        if (!h.c_[m].is_zero()) top = m;
    top = std::min(top, n - 1);

    std::vector<R> alpha(n, zero);
    alpha[1] = inv1;
    // powers[m][i] = [t^i] hbar^m for m = 1..top, filled column by column.
    std::vector<std::vector<R>> powers(top + 1, std::vector<R>(n, zero));
    powers[1][1] = alpha[1];

    for (std::size_t i = 2; i < n; ++i) {
        // [t^i] hbar^m for m >= 2 depends only on alpha_1..alpha_{i-1}.
        for (std::size_t m = 2; m <= std::min(top, i); ++m) {
            R acc = zero;
            for (std::size_t j = 1; j + (m - 1) <= i; ++j)
                acc += alpha[j] * powers[m - 1][i - j];
            powers[m][i] = acc;
        }
        // [t^i] sum_m h_m hbar^m = 0 pins alpha_i.
        R rhs = zero;
        for (std::size_t m = 2; m <= std::min(top, i); ++m)
            if (m < n && !h.c_[m].is_zero()) rhs += h.c_[m] * powers[m][i];
        alpha[i] = -(rhs * inv1);
        powers[1][i] = alpha[i];
    }
    return Series<R>(std::move(alpha));
}

/// The geometric series 1/(1 - t^{d+1}): coefficient 1 on every multiple of
/// d+1, zero elsewhere.
template <CoeffRing R>
Series<R> geometric_like(const R& proto, std::size_t d, std::size_t order) {
    Series<R> s = Series<R>::zeros(proto, order);
    std::vector<R> c = s.coeffs();
    for (std::size_t i = 0; i < order; i += d + 1) c[i] = proto.one_like();
    return Series<R>(std::move(c));
}

inline Series<Rational> geometric(std::size_t d, std::size_t order) {
    return geometric_like(Rational(), d, order);
}

/// t * p(t) as a truncated series (shape taken from p's coefficients).
template <CoeffRing R>
Series<R> tp_series(const Polynomial<R>& p, std::size_t order) {
    Series<R> s = Series<R>::zeros(p.constant_term(), order);
    std::vector<R> c = s.coeffs();
    for (std::size_t i = 0; i <= p.degree() && i + 1 < order; ++i) c[i + 1] = p.coeff(i);
    return Series<R>(std::move(c));
}

/// Drops the first `shift` coefficients (all of which must be zero),
/// lowering the truncation order by `shift`.
template <CoeffRing R>
Series<R> shift_down(const Series<R>& f, std::size_t shift) {
    if (shift >= f.order())
        throw TruncationError("shift exceeds series truncation order");
    for (std::size_t i = 0; i < shift; ++i)
        if (!f.coeffs()[i].is_zero())
            throw DomainError("shift_down over a nonzero low-order coefficient");
    return Series<R>(std::vector<R>(f.coeffs().begin() + shift, f.coeffs().end()));
}

}  // namespace riocirc
