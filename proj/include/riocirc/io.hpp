#pragma once

#include <nlohmann/json_fwd.hpp>

#include <string>
#include <vector>

#include "riocirc/azseq.hpp"
#include "riocirc/circulant.hpp"
#include "riocirc/dynamics.hpp"
#include "riocirc/oeis.hpp"
#include "riocirc/riordan.hpp"

namespace riocirc {

// Riordan array: {"p": "a0,...,ad", "rows": n, "cols": m,
//                 "entries": [["p/q", ...], ...]} (row-major strings).
nlohmann::json array_to_json(const RiordanArray& arr);
RiordanArray array_from_json(const nlohmann::json& j);
std::string array_to_csv(const RiordanArray& arr);
std::string array_to_table(const RiordanArray& arr);

// Circulant: {"n": size, "first_row": ["p/q", ...]}.
nlohmann::json circulant_to_json(const CirculantMatrix& m);

// Eigenvalue report: {"lambda": [{"re": x, "im": y}, ...]}.
nlohmann::json eigen_to_json(const EigenData& eig);

nlohmann::json classification_to_json(const OrbitClassification& cls);

nlohmann::json az_to_json(const RationalPoly& p, const AZPair<Rational>& az);

nlohmann::json period_report_to_json(const PeriodReport& report);

nlohmann::json match_report_to_json(const MatchReport& report);

nlohmann::json abbreviated_to_json(const AbbreviatedArray& arr);

// Exact orbit points: CSV header "n,x,y" / "n,x,y,z" (generic "n,c0,..." for
// higher degree), rationals rendered as "p/q".
std::string orbit_csv(const std::vector<std::vector<Rational>>& points);
nlohmann::json orbit_to_json(const std::vector<std::vector<Rational>>& points);

// Rotated orbit points and sampled curves (doubles).
std::string rotated_orbit_csv(const std::vector<std::vector<double>>& points);
std::string curves_csv(const std::vector<double>& ts,
                       const std::vector<std::vector<std::vector<double>>>& branches);

std::string rationals_to_csv(const std::vector<Rational>& values);

// Coefficient table of a series over Q[c]/(c^K): row = power of t,
// columns = powers of c. Header "t^n,c^0,...,c^{K-1}".
std::string param_series_csv(const Series<ParamPoly>& s);

}  // namespace riocirc
