#include "riocirc/circulant.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "riocirc/errors.hpp"
#include "riocirc/riordan.hpp"

namespace riocirc {

namespace {

// xi^m for m = 0..n-1, xi = e^{2 pi i/n}, via polar form per residue.
std::vector<std::complex<double>> roots_of_unity(std::size_t n) {
    std::vector<std::complex<double>> xi(n);
    for (std::size_t m = 0; m < n; ++m) {
        const double arg = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
        xi[m] = {std::cos(arg), std::sin(arg)};
    }
    xi[0] = {1.0, 0.0};
    if (n % 2 == 0) xi[n / 2] = {-1.0, 0.0};
    return xi;
}

std::vector<Rational> coefficient_vector(const RationalPoly& p) {
    std::vector<Rational> v;
    v.reserve(p.degree() + 1);
    for (std::size_t i = 0; i <= p.degree(); ++i) v.push_back(p.coeff(i));
    return v;
}

std::vector<std::vector<Rational>> identity_matrix(std::size_t n) {
    std::vector<std::vector<Rational>> id(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = Rational(1);
    return id;
}

std::vector<std::vector<Rational>> mat_mul(const std::vector<std::vector<Rational>>& a,
                                           const std::vector<std::vector<Rational>>& b) {
    const std::size_t n = a.size();
    std::vector<std::vector<Rational>> out(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

}  // namespace

std::vector<Rational> cyclic_shift(const std::vector<Rational>& v) {
    if (v.empty()) throw DomainError("cyclic shift of an empty vector");
    std::vector<Rational> out;
    out.reserve(v.size());
    out.push_back(v.back());
    out.insert(out.end(), v.begin(), v.end() - 1);
    return out;
}

CirculantMatrix::CirculantMatrix(std::vector<Rational> first_row) : row_(std::move(first_row)) {
    if (row_.empty()) throw DomainError("circulant matrix needs size >= 1");
}

CirculantMatrix CirculantMatrix::of(const RationalPoly& p) {
    std::vector<Rational> nu = coefficient_vector(p);
    std::reverse(nu.begin(), nu.end());  // (a_d, ..., a_0)
    return CirculantMatrix(std::move(nu));
}

std::vector<Rational> CirculantMatrix::apply(const std::vector<Rational>& v) const {
    const std::size_t n = size();
    if (v.size() != n) throw DomainError("circulant apply: size mismatch");
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Rational acc;
        for (std::size_t j = 0; j < n; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

std::vector<std::vector<Rational>> CirculantMatrix::dense() const {
    const std::size_t n = size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = at(i, j);
    return m;
}

Rational det_bareiss(std::vector<std::vector<Rational>> m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
    if (n == 0) return Rational(1);

    Rational prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t pivot = k + 1;
            while (pivot < n && m[pivot][k].is_zero()) ++pivot;
            if (pivot == n) return Rational(0);
            std::swap(m[k], m[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
        prev = m[k][k];
    }
    Rational result = m[n - 1][n - 1];
    return sign < 0 ? -result : result;
}

Rational det(const CirculantMatrix& m) {
    return det_bareiss(m.dense());
}

std::vector<Rational> orbit(const RationalPoly& p, std::size_t n) {
    const CirculantMatrix v = CirculantMatrix::of(p);
    std::vector<Rational> x = coefficient_vector(p);
    for (std::size_t i = 0; i < n; ++i) x = v.apply(x);
    return x;
}

Theorem2Report verify_theorem2(const RationalPoly& p, std::size_t nmax) {
    if (nmax == 0) throw DomainError("verify_theorem2 needs nmax >= 1");
    const std::size_t period = p.degree() + 1;
    const std::size_t rows = 1 + (nmax + 1) * period;
    const RiordanArray arr = build(p, rows, nmax + 2);

    const CirculantMatrix v = CirculantMatrix::of(p);
    std::vector<Rational> x = coefficient_vector(p);
    for (std::size_t n = 0; n <= nmax; ++n) {
        const std::vector<Rational> block = periodic_block(arr, n + 1);
        if (x != block) {
            std::ostringstream os;
            os << "orbit iterate " << n << " of p = " << format_poly(p)
               << " differs from the periodic block of column " << (n + 1);
            throw TheoremViolation(os.str());
        }
        x = v.apply(x);
    }
    return Theorem2Report{nmax + 1};
}

EigenData eigenvalues(const RationalPoly& p) {
    const std::size_t d = p.degree();
    const std::size_t n = d + 1;
    const auto xi = roots_of_unity(n);
    EigenData eig;
    eig.lambda.resize(n);

    Rational sum;
    for (std::size_t i = 0; i <= d; ++i) sum += p.coeff(i);
    eig.lambda[0] = {sum.to_double(), 0.0};

    for (std::size_t k = 1; k < n; ++k) {
        const std::complex<double> rot = xi[(d * k) % n];
        const std::complex<double> conj_xi = std::conj(xi[k]);  // xi^{-k}
        eig.lambda[k] = rot * eval_complex(p, conj_xi);
    }
    return eig;
}

FourierMatrix::FourierMatrix(std::size_t n) : n_(n), entries_(n * n) {
    if (n == 0) throw DomainError("Fourier matrix needs size >= 1");
    const auto xi = roots_of_unity(n);
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) entries_[j * n + k] = xi[(j * k) % n] * scale;
}

DiagonalizationReport verify_diagonalization(const RationalPoly& p, double tol) {
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    const std::size_t n = p.degree() + 1;
    const FourierMatrix f(n);
    const CirculantMatrix v = CirculantMatrix::of(p);
    const EigenData eig = eigenvalues(p);

    // A = F^* V F.
    std::vector<std::complex<double>> vf(n * n), a(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) acc += v.at(i, k).to_double() * f.at(k, j);
            vf[i * n + j] = acc;
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            std::complex<double> acc{0.0, 0.0};
            for (std::size_t k = 0; k < n; ++k) acc += std::conj(f.at(k, i)) * vf[k * n + j];
            a[i * n + j] = acc;
        }

    DiagonalizationReport report;
    report.diagonal.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        report.diagonal[i] = a[i * n + i];
        report.max_diag_error =
            std::max(report.max_diag_error, std::abs(a[i * n + i] - eig.lambda[i]));
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) report.max_offdiag = std::max(report.max_offdiag, std::abs(a[i * n + j]));
    }
    report.ok = report.max_offdiag < tol && report.max_diag_error < tol;
    return report;
}

std::vector<std::complex<double>> closed_form_orbit(const RationalPoly& p, std::size_t n) {
    const std::size_t d = p.degree();
    const std::size_t size = d + 1;
    const auto xi = roots_of_unity(size);
    const EigenData eig = eigenvalues(p);

    // lambda_k^{n+1} by iterated multiplication.
    std::vector<std::complex<double>> lpow(size);
    for (std::size_t k = 0; k < size; ++k) {
        std::complex<double> acc{1.0, 0.0};
        for (std::size_t i = 0; i <= n; ++i) acc *= eig.lambda[k];
        lpow[k] = acc;
    }

    std::vector<std::complex<double>> out(size);
    for (std::size_t j = 0; j < size; ++j) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t k = 0; k < size; ++k) acc += xi[(k * (j + 1)) % size] * lpow[k];
        out[j] = acc / static_cast<double>(size);
    }
    return out;
}

std::optional<std::size_t> orbit_period(const RationalPoly& p, std::size_t cap) {
    if (cap == 0) throw DomainError("orbit_period needs cap >= 1");
    const CirculantMatrix v = CirculantMatrix::of(p);
    const std::vector<Rational> start = coefficient_vector(p);
    std::vector<Rational> x = start;
    for (std::size_t m = 1; m <= cap; ++m) {
        x = v.apply(x);
        if (x == start) return m;
    }
    return std::nullopt;
}

std::optional<std::size_t> matrix_order(const RationalPoly& p, std::size_t cap) {
    if (cap == 0) throw DomainError("matrix_order needs cap >= 1");
    const EigenData eig = eigenvalues(p);
    for (const auto& lambda : eig.lambda)
        if (std::abs(std::abs(lambda) - 1.0) > 1e-9) return std::nullopt;

    const CirculantMatrix v = CirculantMatrix::of(p);
    const auto vd = v.dense();
    const auto id = identity_matrix(v.size());
    auto acc = vd;
    for (std::size_t m = 1; m <= cap; ++m) {
        if (acc == id) return m;
        acc = mat_mul(acc, vd);
    }
    return std::nullopt;
}

}  // namespace riocirc
