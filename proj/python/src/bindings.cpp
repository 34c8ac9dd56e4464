#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "riocirc/azseq.hpp"
#include "riocirc/circulant.hpp"
#include "riocirc/dynamics.hpp"
#include "riocirc/errors.hpp"
#include "riocirc/oeis.hpp"
#include "riocirc/riordan.hpp"

namespace py = pybind11;
using namespace riocirc;

namespace {

std::vector<std::string> to_strings(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& x : values) out.push_back(x.str());
    return out;
}

py::dict classification_dict(const OrbitClassification& cls) {
    py::dict d;
    d["kind"] = to_string(cls.kind);
    if (cls.period) d["period"] = *cls.period;
    py::list limits;
    for (const auto& point : cls.limits) limits.append(to_strings(point));
    d["limits"] = limits;
    if (cls.linear) {
        d["lambda0"] = cls.linear->lambda0.str();
        d["lambda1"] = cls.linear->lambda1.str();
        if (cls.linear->curve_exponent) d["curve_exponent"] = *cls.linear->curve_exponent;
        if (cls.linear->curve_constant) d["curve_constant"] = *cls.linear->curve_constant;
    }
    if (cls.quadratic) {
        d["zscale"] = cls.quadratic->zscale.str();
        d["zscale_value"] = cls.quadratic->zscale.to_double();
        d["r_squared"] = cls.quadratic->r_squared.str();
        d["r"] = cls.quadratic->r;
        if (cls.quadratic->cos_theta) d["cos_theta"] = *cls.quadratic->cos_theta;
        d["spirals"] = cls.quadratic->spirals;
    }
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Riordan arrays (1/(1-t^{d+1}), t p(t)): periodic columns, "
              "circulant orbits, orbit classification and A/Z sequences. "
              "Rationals cross the boundary as strings like '-17/27'.";

    // Translators run newest-first, so the base class goes in first and the
    // specific kinds afterwards.
    py::register_exception<Error>(m, "LibraryError", PyExc_ValueError);
    py::register_exception<TruncationError>(m, "TruncationError", PyExc_IndexError);
    py::register_exception<TheoremViolation>(m, "TheoremViolation", PyExc_AssertionError);
    py::register_exception<UnavailableError>(m, "UnavailableError", PyExc_ConnectionError);

    m.def(
        "build_array",
        [](const std::string& poly, std::size_t rows, std::size_t cols) {
            const RiordanArray arr = build(parse_poly(poly), rows, cols);
            std::vector<std::vector<std::string>> out;
            out.reserve(arr.rows);
            for (const auto& row : arr.entries) out.push_back(to_strings(row));
            return out;
        },
        py::arg("poly"), py::arg("rows"), py::arg("cols"),
        "Entries of the rows x cols window of (1/(1-t^{d+1}), t p(t)), as strings.");

    m.def(
        "column",
        [](const std::string& poly, std::size_t k, std::size_t order) {
            return to_strings(column_gf(parse_poly(poly), k, order).coeffs());
        },
        py::arg("poly"), py::arg("k"), py::arg("order"),
        "Coefficients of (t p(t))^k/(1-t^{d+1}) up to the truncation order.");

    m.def(
        "periodic_block",
        [](const std::string& poly, std::size_t k) {
            const RationalPoly p = parse_poly(poly);
            const std::size_t period = p.degree() + 1;
            const std::size_t rows = 1 + (k - 1) * period + period;
            return to_strings(periodic_block(build(p, rows, k + 1), k));
        },
        py::arg("poly"), py::arg("k"), "The d+1 entries of column k's periodic tail.");

    m.def(
        "verify_theorem1",
        [](const std::string& poly, std::size_t k, std::size_t reps) {
            const PeriodReport r = verify_theorem1(parse_poly(poly), k, reps);
            py::dict d;
            d["column"] = r.column;
            d["period"] = r.period;
            d["start"] = r.start;
            d["block"] = to_strings(r.block);
            d["prime_period"] = r.prime_period;
            d["verified_depth"] = r.verified_depth;
            return d;
        },
        py::arg("poly"), py::arg("k"), py::arg("reps") = 3,
        "Checks the eventual-periodicity identity for column k; raises on violation.");

    m.def(
        "head_sums",
        [](const std::string& poly, std::size_t kmax) {
            return to_strings(head_sums(parse_poly(poly), kmax));
        },
        py::arg("poly"), py::arg("kmax"),
        "Column head sums (entries before the periodic tail) for k = 1..kmax.");

    m.def(
        "orbit",
        [](const std::string& poly, std::size_t n) {
            return to_strings(orbit(parse_poly(poly), n));
        },
        py::arg("poly"), py::arg("n"), "Exact V^n applied to the coefficient vector.");

    m.def(
        "orbit_period",
        [](const std::string& poly, std::size_t cap) -> std::optional<std::size_t> {
            return orbit_period(parse_poly(poly), cap);
        },
        py::arg("poly"), py::arg("cap") = 360);

    m.def(
        "matrix_order",
        [](const std::string& poly, std::size_t cap) -> std::optional<std::size_t> {
            return matrix_order(parse_poly(poly), cap);
        },
        py::arg("poly"), py::arg("cap") = 360);

    m.def(
        "eigenvalues",
        [](const std::string& poly) { return eigenvalues(parse_poly(poly)).lambda; },
        py::arg("poly"), "Eigenvalues xi^{dk} p(xi^{-k}) of the circulant, as complex numbers.");

    m.def(
        "closed_form_orbit",
        [](const std::string& poly, std::size_t n) {
            std::vector<double> out;
            for (const auto& z : closed_form_orbit(parse_poly(poly), n)) out.push_back(z.real());
            return out;
        },
        py::arg("poly"), py::arg("n"), "Orbit point from the eigenvalue form (numeric).");

    m.def(
        "rotated_orbit",
        [](const std::string& poly, std::size_t n) {
            const RationalPoly p = parse_poly(poly);
            std::vector<double> out;
            if (p.degree() == 1) {
                const auto pt = rotated_orbit_linear(p.coeff(0), p.coeff(1), n);
                out.assign(pt.begin(), pt.end());
            } else if (p.degree() == 2) {
                const auto pt = rotated_orbit_quadratic(p.coeff(0), p.coeff(1), p.coeff(2), n);
                out.assign(pt.begin(), pt.end());
            } else {
                throw DomainError("rotated orbits are defined for degree 1 and 2 only");
            }
            return out;
        },
        py::arg("poly"), py::arg("n"));

    m.def(
        "classify",
        [](const std::string& poly) {
            const RationalPoly p = parse_poly(poly);
            if (p.degree() == 1) return classification_dict(classify_linear(p.coeff(0), p.coeff(1)));
            if (p.degree() == 2)
                return classification_dict(classify_quadratic(p.coeff(0), p.coeff(1), p.coeff(2)));
            throw DomainError("classification is defined for degree 1 and 2 only");
        },
        py::arg("poly"), "Qualitative orbit classification with diagnostics.");

    m.def(
        "az_sequences",
        [](const std::string& poly, std::size_t order) {
            const RationalPoly p = parse_poly(poly);
            const AZPair<Rational> az = az_sequences(p, order);
            py::dict d;
            d["A"] = to_strings(az.A.coeffs());
            d["Z"] = to_strings(az.Z.coeffs());
            d["hbar"] = to_strings(az.hbar.coeffs());
            d["N"] = az.order;
            return d;
        },
        py::arg("poly"), py::arg("order"),
        "A(t) = t/hbar(t) and Z(t) = hbar^d(t) with hbar the reversion of t p(t).");

    m.def(
        "catalan",
        [](unsigned long n) {
            return py::module_::import("builtins").attr("int")(catalan(n).get_str());
        },
        py::arg("n"), "n-th Catalan number as a Python int.");

    m.def(
        "theorem6_sequence",
        [](const std::string& a, const std::string& b, std::size_t n_max) {
            return to_strings(theorem6_sequence(Rational::parse(a), Rational::parse(b), n_max));
        },
        py::arg("a"), py::arg("b"), py::arg("n_max"),
        "c-derivative of [t^{n+2}]A at c = 0 for p = a + bt + ct^2, n = 0..n_max.");

    m.def(
        "theorem6_check",
        [](const std::string& a, const std::string& b, std::size_t n_max) {
            return to_strings(
                theorem6_check(Rational::parse(a), Rational::parse(b), n_max).c1_coefficients);
        },
        py::arg("a"), py::arg("b"), py::arg("n_max"),
        "Same as theorem6_sequence, asserting the binomial closed form; raises on mismatch.");

    m.def(
        "csum_coefficients",
        [](std::size_t order, std::size_t k) {
            const Series<ParamPoly> a_series = csum_expansion(order, k);
            std::vector<std::vector<std::string>> table;
            for (const auto& coeff : a_series.coeffs()) table.push_back(to_strings(coeff.coeffs()));
            return table;
        },
        py::arg("order"), py::arg("k") = 4,
        "A(t) for p = 1 + t + c t^2: rows are powers of t, columns powers of c.");

    m.def(
        "verify_rogers",
        [](const std::string& poly, std::size_t rows) {
            return verify_rogers(parse_poly(poly), rows).checks;
        },
        py::arg("poly"), py::arg("rows"),
        "Checks the Rogers A/Z row recurrences on the rows x rows window.");

    m.def(
        "oeis_check",
        [](const std::vector<std::string>& terms, const std::string& id) {
            std::vector<mpz_class> values;
            for (const auto& t : terms) values.emplace_back(t);
            const MatchReport r = OeisClient().check_sequence(values, id);
            py::dict d;
            d["id"] = r.id;
            d["matched"] = r.matched;
            d["matched_prefix"] = r.matched_prefix;
            d["offset"] = r.offset_used;
            d["abs_compared"] = r.abs_compared;
            d["detail"] = r.detail;
            return d;
        },
        py::arg("terms"), py::arg("id"),
        "Aligns integer terms (strings) against an OEIS b-file (fixtures/cache/network).");
}
