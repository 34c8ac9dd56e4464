#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "riocirc/polynomial.hpp"
#include "riocirc/rational.hpp"

namespace riocirc {

/// Right-rotation by one: (x_0,...,x_{n-1}) -> (x_{n-1},x_0,...,x_{n-2}).
std::vector<Rational> cyclic_shift(const std::vector<Rational>& v);

/// (d+1)x(d+1) circulant of p: first row (a_d, ..., a_0), row i the i-th
/// iterate of the cyclic shift.
class CirculantMatrix {
public:
    static CirculantMatrix of(const RationalPoly& p);
    explicit CirculantMatrix(std::vector<Rational> first_row);

    std::size_t size() const { return row_.size(); }
    const std::vector<Rational>& first_row() const { return row_; }
    const Rational& at(std::size_t i, std::size_t j) const {
        return row_[(j + size() - i % size()) % size()];
    }

    std::vector<Rational> apply(const std::vector<Rational>& v) const;
    std::vector<std::vector<Rational>> dense() const;

private:
    std::vector<Rational> row_;
};

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational det(const CirculantMatrix& m);
Rational det_bareiss(std::vector<std::vector<Rational>> m);

/// Exact n-th iterate of V_p applied to the coefficient vector (a_0,...,a_d).
std::vector<Rational> orbit(const RationalPoly& p, std::size_t n);

struct Theorem2Report {
    std::size_t checked = 0;  // iterates compared, n = 0..checked-1
};

/// Asserts orbit(p, n) == periodic_block(column n+1) for n = 0..nmax.
/// Throws TheoremViolation on the first mismatch.
Theorem2Report verify_theorem2(const RationalPoly& p, std::size_t nmax);

/// Eigenvalues lambda_k = xi^{dk} p(xi^{-k}) of V_p, xi = e^{2 pi i/(d+1)}.
/// lambda_0 is the exact coefficient sum, stored with zero imaginary part.
struct EigenData {
    std::vector<std::complex<double>> lambda;
};

EigenData eigenvalues(const RationalPoly& p);

/// Unitary DFT matrix, entry (j,k) = xi^{jk}/sqrt(n). Entries are computed
/// from (j*k) mod n, so F = F^T holds bit-for-bit.
class FourierMatrix {
public:
    explicit FourierMatrix(std::size_t n);

    std::size_t size() const { return n_; }
    const std::complex<double>& at(std::size_t j, std::size_t k) const {
        return entries_[j * n_ + k];
    }

private:
    std::size_t n_;
    std::vector<std::complex<double>> entries_;
};

struct DiagonalizationReport {
    bool ok = false;
    double max_offdiag = 0.0;
    double max_diag_error = 0.0;
    std::vector<std::complex<double>> diagonal;  // of F^* V F
};

/// Computes F^* V F numerically and compares it against diag(lambda_0..lambda_d).
DiagonalizationReport verify_diagonalization(const RationalPoly& p, double tol);

/// Orbit point via the eigenvalue form: component j of V^n (a_0..a_d)^T is
/// (1/(d+1)) sum_k xi^{k(j+1)} lambda_k^{n+1}.
std::vector<std::complex<double>> closed_form_orbit(const RationalPoly& p, std::size_t n);

/// Smallest m <= cap with V^m applied to the coefficient vector giving it
/// back exactly; nullopt if none within the cap.
std::optional<std::size_t> orbit_period(const RationalPoly& p, std::size_t cap = 360);

/// Smallest m <= cap with V^m = I exactly; nullopt if none. Returns nullopt
/// immediately when some |lambda_k| is off the unit circle by more than 1e-9.
std::optional<std::size_t> matrix_order(const RationalPoly& p, std::size_t cap = 360);

}  // namespace riocirc
