#include "riocirc/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "riocirc/circulant.hpp"
#include "riocirc/errors.hpp"
#include "riocirc/riordan.hpp"

namespace riocirc {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kSqrt3 = std::numbers::sqrt3;
const double kSqrt6 = std::sqrt(6.0);

// x^t continued to real t: for x < 0 uses |x|^t cos(pi t), which passes
// through x^n at every integer n.
double real_power(double x, double t) {
    if (x >= 0.0) return std::pow(x, t);
    return std::pow(-x, t) * std::cos(std::numbers::pi * t);
}

std::vector<Rational> orbit_limit_constant(const Rational& value, std::size_t dim) {
    return std::vector<Rational>(dim, value);
}

RationalPoly poly_from(const Rational& a, const Rational& b) {
    return RationalPoly({a, b});
}

RationalPoly poly_from(const Rational& a, const Rational& b, const Rational& c) {
    return RationalPoly({a, b, c});
}

// Exact small-cap period scan; rational rotations have order in {1,2,3,4,6},
// so 12 covers every finite case together with the z-part sign.
std::optional<std::size_t> exact_period(const RationalPoly& p) {
    return orbit_period(p, 12);
}

}  // namespace

std::string to_string(OrbitKind kind) {
    switch (kind) {
        case OrbitKind::FixedPoint: return "FixedPoint";
        case OrbitKind::ConvergesToPoint: return "ConvergesToPoint";
        case OrbitKind::EscapesToInfinity: return "EscapesToInfinity";
        case OrbitKind::SplitsTwoLimits: return "SplitsTwoLimits";
        case OrbitKind::SplitsTwoUnboundedBranches: return "SplitsTwoUnboundedBranches";
        case OrbitKind::OnCylinder: return "OnCylinder";
        case OrbitKind::PeriodicOrbit: return "PeriodicOrbit";
    }
    return "Unknown";
}

std::array<std::array<double, 2>, 2> rotation_linear() {
    return {{{1.0 / kSqrt2, 1.0 / kSqrt2}, {-1.0 / kSqrt2, 1.0 / kSqrt2}}};
}

std::array<std::array<double, 3>, 3> rotation_quadratic() {
    return {{{1.0 / kSqrt6, -1.0 / kSqrt2, 1.0 / kSqrt3},
             {1.0 / kSqrt6, 1.0 / kSqrt2, 1.0 / kSqrt3},
             {-std::sqrt(2.0 / 3.0), 0.0, 1.0 / kSqrt3}}};
}

std::array<double, 2> rotated_orbit_linear(const Rational& a, const Rational& b, std::size_t n) {
    if (a.is_zero() || b.is_zero()) throw DomainError("linear orbit needs a*b != 0");
    const long e = static_cast<long>(n) + 1;
    const Rational diff = (b - a).pow(e);
    const Rational sum = (a + b).pow(e);
    return {-diff.to_double() / kSqrt2, sum.to_double() / kSqrt2};
}

std::array<double, 3> rotated_orbit_quadratic(const Rational& a, const Rational& b,
                                              const Rational& c, std::size_t n) {
    const Rational r2 = a * a + b * b + c * c - a * b - a * c - b * c;
    const double r = std::sqrt(r2.to_double());
    const double x0 = (a + b - Rational(2) * c).to_double() / kSqrt6;
    const double y0 = (b - a).to_double() / kSqrt2;

    double x = x0, y = y0;
    if (n > 0 && r > 0.0) {
        const double theta = std::atan2(kSqrt3 * (b - a).to_double() / 2.0,
                                        (Rational(2) * c - a - b).to_double() / 2.0);
        const double rn = std::pow(r, static_cast<double>(n));
        const double cs = std::cos(theta * static_cast<double>(n));
        const double sn = std::sin(theta * static_cast<double>(n));
        x = rn * (cs * x0 + sn * y0);
        y = rn * (-sn * x0 + cs * y0);
    } else if (n > 0) {
        x = 0.0;
        y = 0.0;
    }
    const double z = (a + b + c).pow(static_cast<long>(n) + 1).to_double() / kSqrt3;
    return {x, y, z};
}

double curve_exponent_linear(const Rational& a, const Rational& b) {
    const Rational sum_abs = (a + b).abs();
    const Rational diff_abs = (b - a).abs();
    if (sum_abs.is_zero() || diff_abs.is_zero() || diff_abs == Rational(1))
        throw DomainError("contraction-curve exponent undefined for these eigenvalues");
    return std::log(sum_abs.to_double()) / std::log(diff_abs.to_double());
}

double curve_constant_linear(const Rational& a, const Rational& b) {
    const double exponent = curve_exponent_linear(a, b);
    // |y| = (|a+b|^t)/sqrt2 and |x| = (|b-a|^t)/sqrt2 give C = sqrt2^{E-1}.
    return std::pow(kSqrt2, exponent - 1.0);
}

std::vector<std::array<double, 2>> linear_curve_points(const Rational& a, const Rational& b,
                                                       const std::vector<double>& ts) {
    if (a.is_zero() || b.is_zero()) throw DomainError("linear orbit needs a*b != 0");
    const double diff = (b - a).to_double();
    const double sum = (a + b).to_double();
    std::vector<std::array<double, 2>> out;
    out.reserve(ts.size());
    for (const double t : ts)
        out.push_back({-real_power(diff, t) / kSqrt2, real_power(sum, t) / kSqrt2});
    return out;
}

OrbitClassification classify_linear(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw DomainError("linear classification needs a*b != 0");
    const RationalPoly p = poly_from(a, b);

    OrbitClassification res;
    LinearDiagnostics diag;
    diag.lambda0 = a + b;
    diag.lambda1 = b - a;

    const Rational one(1), minus_one(-1);
    const Rational abs0 = diag.lambda0.abs();
    const Rational abs1 = diag.lambda1.abs();

    if (const auto period = exact_period(p)) {
        res.kind = *period == 1 ? OrbitKind::FixedPoint : OrbitKind::PeriodicOrbit;
        res.period = period;
        res.limits.push_back({a, b});
        res.linear = diag;
        return res;
    }

    const Rational half(1, 2);
    if (diag.lambda0 == one) {
        if (abs1 < one) {
            res.kind = OrbitKind::ConvergesToPoint;
            res.limits.push_back({half, half});
        } else if (diag.lambda1 > one) {
            res.kind = OrbitKind::EscapesToInfinity;
        } else {
            res.kind = OrbitKind::SplitsTwoUnboundedBranches;
        }
    } else if (diag.lambda1 == one) {
        if (abs0 < one) {
            res.kind = OrbitKind::ConvergesToPoint;
            res.limits.push_back({-half, half});
        } else if (diag.lambda0 > one) {
            res.kind = OrbitKind::EscapesToInfinity;
        } else {
            res.kind = OrbitKind::SplitsTwoUnboundedBranches;
        }
    } else if (diag.lambda1 == minus_one) {
        if (abs0 < one) {
            res.kind = OrbitKind::SplitsTwoLimits;
            res.limits.push_back({half, -half});   // even-n subsequence
            res.limits.push_back({-half, half});
        } else {
            res.kind = OrbitKind::SplitsTwoUnboundedBranches;
        }
    } else if (diag.lambda0 == minus_one) {
        if (abs1 < one) {
            res.kind = OrbitKind::SplitsTwoLimits;
            res.limits.push_back({-half, -half});  // even-n subsequence
            res.limits.push_back({half, half});
        } else {
            res.kind = OrbitKind::SplitsTwoUnboundedBranches;
        }
    } else if (abs0 < one && abs1 < one) {
        res.kind = OrbitKind::ConvergesToPoint;
        res.limits.push_back({Rational(0), Rational(0)});
        if (!diag.lambda0.is_zero() && !diag.lambda1.is_zero()) {
            diag.curve_exponent = curve_exponent_linear(a, b);
            diag.curve_constant = curve_constant_linear(a, b);
        }
    } else {
        res.kind = OrbitKind::EscapesToInfinity;
    }
    res.linear = diag;
    return res;
}

OrbitClassification classify_quadratic(const Rational& a, const Rational& b, const Rational& c) {
    const RationalPoly p = poly_from(a, b, c);
    const Rational one(1);

    OrbitClassification res;
    QuadraticDiagnostics diag;
    diag.zscale = (a + b + c).abs();
    diag.r_squared = a * a + b * b + c * c - a * b - a * c - b * c;
    diag.r = std::sqrt(diag.r_squared.to_double());
    const Rational numerator = Rational(2) * c - a - b;
    if (!diag.r_squared.is_zero()) {
        diag.cos_theta = numerator.to_double() / (2.0 * diag.r);
        diag.theta = std::atan2(kSqrt3 * (b - a).to_double() / 2.0, numerator.to_double() / 2.0);
        diag.spirals = numerator.sign() < 0 ? 2 : 1;
    }

    if (const auto period = exact_period(p)) {
        res.kind = *period == 1 ? OrbitKind::FixedPoint : OrbitKind::PeriodicOrbit;
        res.period = period;
        res.limits.push_back({a, b, c});
        res.quadratic = diag;
        return res;
    }

    const Rational third(1, 3);
    if (diag.zscale > one || diag.r_squared > one) {
        res.kind = OrbitKind::EscapesToInfinity;
    } else if (diag.r_squared == one) {
        res.kind = OrbitKind::OnCylinder;
    } else if (diag.zscale == one) {
        if ((a + b + c).sign() > 0) {
            res.kind = OrbitKind::ConvergesToPoint;
            res.limits.push_back(orbit_limit_constant(third, 3));
        } else {
            res.kind = OrbitKind::SplitsTwoLimits;
            res.limits.push_back(orbit_limit_constant(-third, 3));  // even-n subsequence
            res.limits.push_back(orbit_limit_constant(third, 3));
        }
    } else {
        res.kind = OrbitKind::ConvergesToPoint;
        res.limits.push_back(orbit_limit_constant(Rational(0), 3));
    }
    res.quadratic = diag;
    return res;
}

std::vector<std::vector<std::array<double, 3>>> helix_points(const Rational& a, const Rational& b,
                                                             const Rational& c,
                                                             const std::vector<double>& ts) {
    if (a == b && b == c) throw DomainError("helix undefined in the degenerate a = b = c case");
    const Rational r2 = a * a + b * b + c * c - a * b - a * c - b * c;
    const double r = std::sqrt(r2.to_double());
    const double cos_num = (Rational(2) * c - a - b).to_double();
    const double theta = std::atan2(kSqrt3 * (b - a).to_double() / 2.0, cos_num / 2.0);
    const double xc = (a + b - Rational(2) * c).to_double();
    const double yc = kSqrt3 * (b - a).to_double();
    const double zbase = (a + b + c).to_double();

    const bool two_branches = cos_num < 0.0;
    std::vector<std::vector<std::array<double, 3>>> curves(two_branches ? 2 : 1);
    for (auto& curve : curves) curve.reserve(ts.size());
    for (const double t : ts) {
        const double rt = std::pow(r, t);
        const double cs = std::cos(theta * t);
        const double sn = std::sin(theta * t);
        const double x = rt * (xc * cs + yc * sn) / kSqrt6;
        const double y = rt * (-xc * sn + yc * cs) / kSqrt6;
        const double z = real_power(zbase, t + 1.0) / kSqrt3;
        curves[0].push_back({x, y, z});
        if (two_branches) curves[1].push_back({-x, -y, z});
    }
    return curves;
}

std::vector<std::vector<Rational>> AbbreviatedArray::rows() const {
    std::vector<std::vector<Rational>> out;
    if (blocks.empty()) return out;
    const std::size_t period = blocks.front().size();
    out.assign(period * block_reps, std::vector<Rational>(blocks.size()));
    for (std::size_t k = 0; k < blocks.size(); ++k)
        for (std::size_t i = 0; i < period * block_reps; ++i) out[i][k] = blocks[k][i % period];
    return out;
}

AbbreviatedArray abbreviated_array(const RationalPoly& p, std::size_t cols,
                                   std::size_t block_reps, std::size_t period_cap) {
    if (p.constant_term().is_zero())
        throw ImproperArrayError("a_0 = 0: the matrix is not a proper Riordan array");
    if (cols == 0 || block_reps == 0)
        throw DomainError("abbreviated array needs cols >= 1 and block_reps >= 1");
    const std::size_t period = p.degree() + 1;

    AbbreviatedArray arr;
    arr.block_reps = block_reps;
    arr.dropped_counts.resize(cols);
    arr.blocks.resize(cols);

    // Column 0 is the geometric series: block (1, 0, ..., 0), nothing dropped.
    arr.dropped_counts[0] = 0;
    arr.blocks[0].assign(period, Rational(0));
    arr.blocks[0][0] = Rational(1);

    const CirculantMatrix v = CirculantMatrix::of(p);
    std::vector<Rational> block;
    for (std::size_t i = 0; i <= p.degree(); ++i) block.push_back(p.coeff(i));
    for (std::size_t k = 1; k < cols; ++k) {
        arr.dropped_counts[k] = 1 + period * (k - 1);
        arr.blocks[k] = block;
        block = v.apply(block);
    }

    arr.horizontal_prime_period = orbit_period(p, period_cap);

    // Smallest q (dividing d+1) under which every stored block is
    // cyclically q-periodic; the zeroth column's (1,0,...,0) forces d+1
    // unless d = 0.
    arr.vertical_prime_period = period;
    for (std::size_t q = 1; q < period; ++q) {
        if (period % q != 0) continue;
        bool ok = true;
        for (const auto& blk : arr.blocks) {
            for (std::size_t i = 0; ok && i < period; ++i) ok = blk[i] == blk[(i + q) % period];
            if (!ok) break;
        }
        if (ok) {
            arr.vertical_prime_period = q;
            break;
        }
    }
    return arr;
}

Prop5Report verify_prop5(std::size_t n_max) {
    if (n_max == 0) throw DomainError("verify_prop5 needs n_max >= 1");
    const RationalPoly p({Rational(-1, 3), Rational(2, 3), Rational(2, 3)});
    const std::size_t kmax = 6 * (n_max + 1);
    const std::vector<Rational> sums = head_sums(p, kmax);

    const std::vector<Rational> expected_cycle = {Rational(0),      Rational(-1, 3),
                                                  Rational(-2, 3),  Rational(-2, 3),
                                                  Rational(-1, 3),  Rational(0)};
    Prop5Report report;
    report.n_max = n_max;
    for (std::size_t k = 1; k <= 6; ++k) {
        if (sums[k - 1] != expected_cycle[k - 1]) {
            std::ostringstream os;
            os << "head sum of column " << k << " is " << sums[k - 1].str() << ", expected "
               << expected_cycle[k - 1].str();
            throw TheoremViolation(os.str());
        }
        report.cycle.push_back(sums[k - 1]);
        for (std::size_t n = 1; n <= n_max; ++n) {
            const std::size_t shifted = k + 6 * n;
            if (sums[k - 1] != sums[shifted - 1]) {
                std::ostringstream os;
                os << "head-sum periodicity fails: column " << k << " gives "
                   << sums[k - 1].str() << " but column " << shifted << " gives "
                   << sums[shifted - 1].str();
                throw TheoremViolation(os.str());
            }
        }
    }
    return report;
}

}  // namespace riocirc
