#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <complex>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "riocirc/azseq.hpp"
#include "riocirc/circulant.hpp"
#include "riocirc/dynamics.hpp"
#include "riocirc/errors.hpp"
#include "riocirc/io.hpp"
#include "riocirc/oeis.hpp"
#include "riocirc/riordan.hpp"

using nlohmann::json;
using namespace riocirc;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnavailable = 3;

struct GlobalOptions {
    std::string format = "table";
    std::string out_path;
};

void emit(const GlobalOptions& global, const std::string& text) {
    if (global.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << "\n";
        return;
    }
    std::ofstream out(global.out_path, std::ios::binary | std::ios::trunc);
    if (!out) throw DomainError("cannot open output file " + global.out_path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << "\n";
}

void emit_json(const GlobalOptions& global, const json& j) {
    emit(global, j.dump(2));
}

std::string key_value_lines(const json& j, const std::string& sep) {
    std::string out;
    for (const auto& [key, value] : j.items()) {
        out += key + sep + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
    }
    return out;
}

RationalPoly parse_poly_arg(const std::string& text) {
    return parse_poly(text);
}

std::vector<double> sample_range(double t_max, std::size_t samples) {
    std::vector<double> ts;
    ts.reserve(samples);
    if (samples == 1) {
        ts.push_back(0.0);
        return ts;
    }
    for (std::size_t i = 0; i < samples; ++i)
        ts.push_back(t_max * static_cast<double>(i) / static_cast<double>(samples - 1));
    return ts;
}

int run_array(const GlobalOptions& global, const std::string& poly, std::size_t rows,
              std::size_t cols) {
    const RiordanArray arr = build(parse_poly_arg(poly), rows, cols);
    if (global.format == "json")
        emit_json(global, array_to_json(arr));
    else if (global.format == "csv")
        emit(global, array_to_csv(arr));
    else
        emit(global, array_to_table(arr));
    return kExitOk;
}

int run_column(const GlobalOptions& global, const std::string& poly, std::size_t k,
               std::size_t order) {
    const RationalPoly p = parse_poly_arg(poly);
    const Series<Rational> col = column_gf(p, k, order);
    if (global.format == "json") {
        json coeffs = json::array();
        for (const auto& x : col.coeffs()) coeffs.push_back(x.str());
        emit_json(global, json{{"p", format_poly(p)},
                               {"k", k},
                               {"N", order},
                               {"coefficients", std::move(coeffs)}});
    } else {
        emit(global, rationals_to_csv(col.coeffs()));
    }
    return kExitOk;
}

int run_orbit(const GlobalOptions& global, const std::string& poly, std::size_t nmax, bool rotated,
              bool curve, std::size_t samples) {
    const RationalPoly p = parse_poly_arg(poly);
    const std::size_t d = p.degree();
    if ((rotated || curve) && d != 1 && d != 2)
        throw DomainError("rotated orbits and curves are defined for degree 1 and 2 only");
    rotated = rotated || curve;  // curves live in the rotated coordinates

    if (!rotated) {
        std::vector<std::vector<Rational>> points;
        points.reserve(nmax + 1);
        for (std::size_t n = 0; n <= nmax; ++n) points.push_back(orbit(p, n));
        if (global.format == "json")
            emit_json(global, orbit_to_json(points));
        else
            emit(global, orbit_csv(points));
        return kExitOk;
    }

    std::vector<std::vector<double>> points;
    for (std::size_t n = 0; n <= nmax; ++n) {
        if (d == 1) {
            const auto pt = rotated_orbit_linear(p.coeff(0), p.coeff(1), n);
            points.push_back({pt[0], pt[1]});
        } else {
            const auto pt = rotated_orbit_quadratic(p.coeff(0), p.coeff(1), p.coeff(2), n);
            points.push_back({pt[0], pt[1], pt[2]});
        }
    }

    std::vector<std::vector<std::vector<double>>> branches;
    std::vector<double> ts;
    if (curve) {
        // Linear orbit point n sits at t = n+1, quadratic at t = n.
        ts = sample_range(static_cast<double>(nmax) + (d == 1 ? 1.0 : 0.0), samples);
        if (d == 1) {
            const auto pts = linear_curve_points(p.coeff(0), p.coeff(1), ts);
            branches.emplace_back();
            for (const auto& pt : pts) branches.back().push_back({pt[0], pt[1]});
        } else {
            for (const auto& br : helix_points(p.coeff(0), p.coeff(1), p.coeff(2), ts)) {
                branches.emplace_back();
                for (const auto& pt : br) branches.back().push_back({pt[0], pt[1], pt[2]});
            }
        }
    }

    if (global.format == "json") {
        json j{{"p", format_poly(p)}, {"points", points}};
        if (curve) j["curves"] = branches;
        emit_json(global, j);
    } else {
        std::string text = rotated_orbit_csv(points);
        if (curve) text += "\n" + curves_csv(ts, branches);
        emit(global, text);
    }
    return kExitOk;
}

int run_classify(const GlobalOptions& global, const std::string& poly) {
    const RationalPoly p = parse_poly_arg(poly);
    OrbitClassification cls;
    if (p.degree() == 1)
        cls = classify_linear(p.coeff(0), p.coeff(1));
    else if (p.degree() == 2)
        cls = classify_quadratic(p.coeff(0), p.coeff(1), p.coeff(2));
    else
        throw DomainError("classification is defined for degree 1 and 2 only");
    const json j = classification_to_json(cls);
    if (global.format == "json")
        emit_json(global, j);
    else
        emit(global, key_value_lines(j, global.format == "csv" ? "," : ": "));
    return kExitOk;
}

int run_az(const GlobalOptions& global, const std::string& poly, std::size_t order, bool csum,
           std::size_t k_truncation) {
    if (csum) {
        // Coefficient table of A(t) for p = 1 + t + c t^2 in (t, c) powers.
        const Series<ParamPoly> a_series = csum_expansion(order, k_truncation);
        if (global.format == "json") {
            json table = json::array();
            for (const auto& coeff : a_series.coeffs()) {
                json row = json::array();
                for (const auto& x : coeff.coeffs()) row.push_back(x.str());
                table.push_back(std::move(row));
            }
            emit_json(global, json{{"p", "1,1,c"}, {"N", order}, {"coefficients", table}});
        } else {
            emit(global, param_series_csv(a_series));
        }
        return kExitOk;
    }
    const RationalPoly p = parse_poly_arg(poly);
    const AZPair<Rational> az = az_sequences(p, order);
    if (global.format == "json") {
        emit_json(global, az_to_json(p, az));
    } else {
        std::string text = "A," + rationals_to_csv(az.A.coeffs()) + "\n";
        text += "Z," + rationals_to_csv(az.Z.coeffs()) + "\n";
        text += "hbar," + rationals_to_csv(az.hbar.coeffs()) + "\n";
        emit(global, text);
    }
    return kExitOk;
}

int run_verify(const GlobalOptions& global, const std::string& which, const std::string& poly,
               std::size_t nmax, std::size_t k, std::size_t reps, std::size_t rows,
               std::size_t order) {
    json report{{"check", which}, {"verified", true}};
    try {
        if (which == "theorem1") {
            const RationalPoly p = parse_poly_arg(poly);
            report["report"] = period_report_to_json(verify_theorem1(p, k, reps));
        } else if (which == "theorem2") {
            const RationalPoly p = parse_poly_arg(poly);
            const auto r = verify_theorem2(p, nmax);
            report["checked_iterates"] = r.checked;
        } else if (which == "prop5") {
            if (!poly.empty()) {
                const RationalPoly p = parse_poly_arg(poly);
                const RationalPoly expected({Rational(-1, 3), Rational(2, 3), Rational(2, 3)});
                if (!(p == expected))
                    throw DomainError(
                        "the head-sum periodicity statement is specific to p = -1/3,2/3,2/3");
            }
            const auto r = verify_prop5(nmax);
            json cycle = json::array();
            for (const auto& x : r.cycle) cycle.push_back(x.str());
            report["cycle"] = std::move(cycle);
        } else if (which == "rogers") {
            const RationalPoly p = parse_poly_arg(poly);
            const auto r = verify_rogers(p, rows);
            report["checks"] = r.checks;
        } else if (which == "theorem6") {
            const RationalPoly p = parse_poly_arg(poly);
            if (p.degree() > 1)
                throw DomainError("theorem6 takes the linear part \"a,b\" of p = a+bt+ct^2");
            const auto r = theorem6_check(p.coeff(0), p.coeff(1), nmax);
            json coeffs = json::array();
            for (const auto& x : r.c1_coefficients) coeffs.push_back(x.str());
            report["c1_coefficients"] = std::move(coeffs);
        } else if (which == "catalan") {
            const RationalPoly p = parse_poly_arg(poly);
            if (p.degree() != 1) throw DomainError("catalan forms take a linear p = \"a,b\"");
            const auto r = verify_catalan_forms(p.coeff(0), p.coeff(1), order);
            report["terms_checked"] = r.terms_checked;
        } else {
            throw DomainError("unknown verification '" + which + "'");
        }
    } catch (const TheoremViolation& e) {
        report["verified"] = false;
        report["detail"] = e.what();
        emit_json(global, report);
        return kExitViolation;
    }
    emit_json(global, report);
    return kExitOk;
}

int run_oeis(const GlobalOptions& global, const std::string& id, const std::string& from,
             const std::string& a_str, const std::string& b_str, std::size_t nmax,
             const std::string& terms_str) {
    std::vector<mpz_class> terms;
    if (from == "theorem6" || from == "theorem6-c1") {
        const Rational a = Rational::parse(a_str), b = Rational::parse(b_str);
        for (const auto& x : theorem6_sequence(a, b, nmax)) {
            if (!x.is_integer())
                throw DomainError("theorem6 sequence is not integral for these a, b");
            terms.push_back(abs(x.numerator()));
        }
    } else if (from == "theorem6-c2") {
        const Series<ParamPoly> a_series = csum_expansion(nmax + 5, 3);
        const auto column = c_power_column(a_series, 2);
        for (std::size_t n = 4; n < column.size() && terms.size() <= nmax; ++n)
            terms.push_back(abs(column[n].numerator()));
    } else if (from == "catalan") {
        for (std::size_t n = 0; n <= nmax; ++n) terms.push_back(catalan(n));
    } else if (from == "terms") {
        std::istringstream in(terms_str);
        std::string tok;
        while (std::getline(in, tok, ',')) {
            const Rational r = Rational::parse(tok);
            if (!r.is_integer()) throw DomainError("--terms must be integers");
            terms.push_back(r.numerator());
        }
        if (terms.empty()) throw DomainError("--terms is required with --from terms");
    } else {
        throw DomainError("unknown --from source '" + from + "'");
    }

    const OeisClient client;
    const MatchReport report = client.check_sequence(terms, id);
    emit_json(global, match_report_to_json(report));
    return report.matched ? kExitOk : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Riordan arrays with periodic columns: circulant orbits, "
                 "orbit classification and A/Z characteristic sequences"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOptions global;
    app.add_option("--format", global.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--out", global.out_path, "Write output to a file instead of stdout");

    std::string poly, which, id, from = "terms", a_str = "1", b_str = "1", terms_str;
    std::size_t rows = 8, cols = 0, nmax = 5, k = 3, reps = 3, order = 8, samples = 201;
    bool rotated = false, curve = false;

    auto* cmd_array = app.add_subcommand("array", "Print the rows x cols window of the array");
    cmd_array->add_option("--poly", poly, "Polynomial a0,a1,...,ad")->required();
    cmd_array->add_option("--rows", rows, "Rows")->capture_default_str();
    cmd_array->add_option("--cols", cols, "Columns (default: rows)");

    auto* cmd_column = app.add_subcommand("column", "Print one column's coefficients");
    cmd_column->add_option("--poly", poly, "Polynomial a0,a1,...,ad")->required();
    cmd_column->add_option("--k", k, "Column index")->capture_default_str();
    cmd_column->add_option("--order", order, "Truncation order")->capture_default_str();

    auto* cmd_orbit = app.add_subcommand("orbit", "Dump the coefficient-vector orbit");
    cmd_orbit->add_option("--poly", poly, "Polynomial a0,a1,...,ad")->required();
    cmd_orbit->add_option("--nmax", nmax, "Last iterate")->capture_default_str();
    cmd_orbit->add_flag("--rotated", rotated, "Rotated coordinates (degree 1 or 2 only)");
    cmd_orbit->add_flag("--curve", curve, "Also sample the curve through the orbit");
    cmd_orbit->add_option("--samples", samples, "Curve sample count")->capture_default_str();

    auto* cmd_classify = app.add_subcommand("classify", "Classify the orbit dynamics");
    cmd_classify->add_option("--poly", poly, "Polynomial a0,a1 or a0,a1,a2")->required();

    bool csum = false;
    std::size_t k_truncation = 4;
    auto* cmd_az = app.add_subcommand("az", "Compute the A- and Z-sequences");
    cmd_az->add_option("--poly", poly, "Polynomial a0,a1,...,ad");
    cmd_az->add_option("--order", order, "Truncation order")->capture_default_str();
    cmd_az->add_flag("--csum", csum, "Emit the (t, c) coefficient table of A for p = 1+t+ct^2");
    cmd_az->add_option("--kmax", k_truncation, "c-truncation K for --csum")
        ->capture_default_str();

    auto* cmd_verify = app.add_subcommand("verify", "Run a verification and report pass/fail");
    cmd_verify
        ->add_option("which", which,
                     "One of: theorem1, theorem2, prop5, rogers, theorem6, catalan")
        ->required();
    cmd_verify->add_option("--poly", poly, "Polynomial (see each check)");
    cmd_verify->add_option("--nmax", nmax, "Iteration bound")->capture_default_str();
    cmd_verify->add_option("--k", k, "Column index (theorem1)")->capture_default_str();
    cmd_verify->add_option("--reps", reps, "Repetitions to verify (theorem1)")
        ->capture_default_str();
    cmd_verify->add_option("--rows", rows, "Window size (rogers)")->capture_default_str();
    cmd_verify->add_option("--order", order, "Truncation order (catalan)")->capture_default_str();

    auto* cmd_oeis = app.add_subcommand("oeis", "Check a sequence against an OEIS b-file");
    cmd_oeis->add_option("--id", id, "Sequence id, e.g. A001700")->required();
    cmd_oeis->add_option("--from", from, "theorem6 | theorem6-c2 | catalan | terms")
        ->capture_default_str();
    cmd_oeis->add_option("--a", a_str, "a for --from theorem6")->capture_default_str();
    cmd_oeis->add_option("--b", b_str, "b for --from theorem6")->capture_default_str();
    cmd_oeis->add_option("--nmax", nmax, "Number of terms - 1")->capture_default_str();
    cmd_oeis->add_option("--terms", terms_str, "Comma-separated integers for --from terms");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_array->parsed()) return run_array(global, poly, rows, cols ? cols : rows);
        if (cmd_column->parsed()) return run_column(global, poly, k, order);
        if (cmd_orbit->parsed()) return run_orbit(global, poly, nmax, rotated, curve, samples);
        if (cmd_classify->parsed()) return run_classify(global, poly);
        if (cmd_az->parsed()) {
            if (!csum && poly.empty())
                throw DomainError("az needs --poly (or --csum for the c table)");
            return run_az(global, poly, order, csum, k_truncation);
        }
        if (cmd_verify->parsed())
            return run_verify(global, which, poly, nmax, k, reps, rows, order);
        if (cmd_oeis->parsed())
            return run_oeis(global, id, from, a_str, b_str, nmax, terms_str);
    } catch (const UnavailableError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUnavailable;
    } catch (const TheoremViolation& e) {
        std::cerr << "violation: " << e.what() << "\n";
        return kExitViolation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
