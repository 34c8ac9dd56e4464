#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "riocirc/polynomial.hpp"
#include "riocirc/rational.hpp"

namespace riocirc {

enum class OrbitKind {
    FixedPoint,
    ConvergesToPoint,
    EscapesToInfinity,
    SplitsTwoLimits,
    SplitsTwoUnboundedBranches,
    OnCylinder,
    PeriodicOrbit,
};

std::string to_string(OrbitKind kind);

struct LinearDiagnostics {
    Rational lambda0;  // a + b
    Rational lambda1;  // b - a
    // ln|a+b|/ln|b-a| and the constant C of the contraction curve
    // |y| = C |x|^exponent; present only in the contracting case.
    std::optional<double> curve_exponent;
    std::optional<double> curve_constant;
};

struct QuadraticDiagnostics {
    Rational zscale;     // |a+b+c|, exact
    Rational r_squared;  // a^2+b^2+c^2-ab-ac-bc, exact
    double r = 0.0;
    std::optional<double> cos_theta;  // absent in the degenerate a=b=c case
    double theta = 0.0;               // principal angle, sin sign from sqrt(3)(b-a)/2
    int spirals = 1;                  // 2 iff cos_theta < 0
};

/// Qualitative fate of the coefficient-vector orbit, with exact limit points
/// (standard coordinates) where they exist.
struct OrbitClassification {
    OrbitKind kind = OrbitKind::EscapesToInfinity;
    std::optional<std::size_t> period;
    std::vector<std::vector<Rational>> limits;
    std::optional<LinearDiagnostics> linear;
    std::optional<QuadraticDiagnostics> quadratic;
};

/// The clockwise pi/4 rotation used for linear orbits.
std::array<std::array<double, 2>, 2> rotation_linear();
/// The fixed orthogonal matrix used for quadratic orbits.
std::array<std::array<double, 3>, 3> rotation_quadratic();

/// Closed-form rotated orbit point (-(b-a)^{n+1}/sqrt2, (a+b)^{n+1}/sqrt2).
std::array<double, 2> rotated_orbit_linear(const Rational& a, const Rational& b, std::size_t n);

/// Rotated orbit point of a quadratic: scaling-rotation block to the n-th
/// power applied to the rotated coefficient vector.
std::array<double, 3> rotated_orbit_quadratic(const Rational& a, const Rational& b,
                                              const Rational& c, std::size_t n);

OrbitClassification classify_linear(const Rational& a, const Rational& b);
OrbitClassification classify_quadratic(const Rational& a, const Rational& b, const Rational& c);

/// Exponent ln|a+b|/ln|b-a| of the contraction curve.
double curve_exponent_linear(const Rational& a, const Rational& b);
/// Constant C with |y| = C |x|^exponent through the rotated orbit.
double curve_constant_linear(const Rational& a, const Rational& b);

/// Samples of the contraction curve through the rotated linear orbit
/// (orbit point n sits at parameter t = n+1).
std::vector<std::array<double, 2>> linear_curve_points(const Rational& a, const Rational& b,
                                                       const std::vector<double>& ts);

/// Samples of the helical curve(s) through the rotated quadratic orbit;
/// one curve when cos theta >= 0, two (second planar-negated) otherwise.
/// Orbit point n sits at parameter t = n on the first curve.
std::vector<std::vector<std::array<double, 3>>> helix_points(const Rational& a, const Rational& b,
                                                             const Rational& c,
                                                             const std::vector<double>& ts);

/// The doubly periodic "abbreviated" view of RAp: per-column dropped-entry
/// counts plus each column's periodic block.
struct AbbreviatedArray {
    std::vector<std::size_t> dropped_counts;     // entry 0 = 0, entry k = 1+(d+1)(k-1)
    std::vector<std::vector<Rational>> blocks;   // column k's block, k = 0..cols-1
    std::size_t block_reps = 1;                  // repetitions stored per column
    std::optional<std::size_t> horizontal_prime_period;
    std::size_t vertical_prime_period = 1;

    std::vector<std::vector<Rational>> rows() const;  // blocks tiled block_reps times
};

AbbreviatedArray abbreviated_array(const RationalPoly& p, std::size_t cols,
                                   std::size_t block_reps, std::size_t period_cap = 360);

struct Prop5Report {
    std::size_t n_max = 0;
    std::vector<Rational> cycle;  // head sums for k = 1..6
};

/// Head-sum periodicity of p = (-1+2t+2t^2)/3: checks
/// head_sum(k) == head_sum(k+6n) for k = 1..6, n = 1..n_max and the cycle
/// (0,-1/3,-2/3,-2/3,-1/3,0). Throws TheoremViolation on failure.
Prop5Report verify_prop5(std::size_t n_max);

}  // namespace riocirc
