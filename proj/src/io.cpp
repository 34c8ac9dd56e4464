#include "riocirc/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "riocirc/errors.hpp"

namespace riocirc {

using nlohmann::json;

json array_to_json(const RiordanArray& arr) {
    json entries = json::array();
    for (const auto& row : arr.entries) {
        json jrow = json::array();
        for (const auto& x : row) jrow.push_back(x.str());
        entries.push_back(std::move(jrow));
    }
    return json{{"p", format_poly(arr.p)},
                {"rows", arr.rows},
                {"cols", arr.cols},
                {"entries", std::move(entries)}};
}

RiordanArray array_from_json(const json& j) {
    try {
        RiordanArray arr;
        arr.p = parse_poly(j.at("p").get<std::string>());
        arr.rows = j.at("rows").get<std::size_t>();
        arr.cols = j.at("cols").get<std::size_t>();
        const json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != arr.rows)
            throw ParseError("entries shape does not match rows");
        for (const auto& jrow : entries) {
            if (!jrow.is_array() || jrow.size() != arr.cols)
                throw ParseError("entries shape does not match cols");
            std::vector<Rational> row;
            row.reserve(arr.cols);
            for (const auto& cell : jrow) row.push_back(Rational::parse(cell.get<std::string>()));
            arr.entries.push_back(std::move(row));
        }
        return arr;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad Riordan array JSON: ") + e.what());
    }
}

std::string array_to_csv(const RiordanArray& arr) {
    std::ostringstream out;
    for (const auto& row : arr.entries) {
        for (std::size_t k = 0; k < row.size(); ++k) {
            if (k) out << ",";
            out << row[k].str();
        }
        out << "\n";
    }
    return out.str();
}

std::string array_to_table(const RiordanArray& arr) {
    std::vector<std::size_t> widths(arr.cols, 1);
    for (const auto& row : arr.entries)
        for (std::size_t k = 0; k < row.size(); ++k)
            widths[k] = std::max(widths[k], row[k].str().size());
    std::ostringstream out;
    for (const auto& row : arr.entries) {
        for (std::size_t k = 0; k < row.size(); ++k)
            out << (k ? "  " : "") << std::setw(static_cast<int>(widths[k])) << row[k].str();
        out << "\n";
    }
    return out.str();
}

json circulant_to_json(const CirculantMatrix& m) {
    json row = json::array();
    for (const auto& x : m.first_row()) row.push_back(x.str());
    return json{{"n", m.size()}, {"first_row", std::move(row)}};
}

json eigen_to_json(const EigenData& eig) {
    json values = json::array();
    for (const auto& lambda : eig.lambda)
        values.push_back(json{{"re", lambda.real()}, {"im", lambda.imag()}});
    return json{{"lambda", std::move(values)}};
}

json classification_to_json(const OrbitClassification& cls) {
    json j{{"kind", to_string(cls.kind)}};
    if (cls.period) j["period"] = *cls.period;
    if (!cls.limits.empty()) {
        json limits = json::array();
        for (const auto& point : cls.limits) {
            json jp = json::array();
            for (const auto& x : point) jp.push_back(x.str());
            limits.push_back(std::move(jp));
        }
        j["limits"] = std::move(limits);
    }
    if (cls.linear) {
        j["lambda0"] = cls.linear->lambda0.str();
        j["lambda1"] = cls.linear->lambda1.str();
        if (cls.linear->curve_exponent) j["curve_exponent"] = *cls.linear->curve_exponent;
        if (cls.linear->curve_constant) j["curve_constant"] = *cls.linear->curve_constant;
    }
    if (cls.quadratic) {
        j["zscale"] = cls.quadratic->zscale.str();
        j["zscale_value"] = cls.quadratic->zscale.to_double();
        j["r_squared"] = cls.quadratic->r_squared.str();
        j["r"] = cls.quadratic->r;
        if (cls.quadratic->cos_theta) j["cos_theta"] = *cls.quadratic->cos_theta;
        j["spirals"] = cls.quadratic->spirals;
    }
    return j;
}

json az_to_json(const RationalPoly& p, const AZPair<Rational>& az) {
    const auto dump = [](const Series<Rational>& s) {
        json out = json::array();
        for (const auto& x : s.coeffs()) out.push_back(x.str());
        return out;
    };
    return json{{"p", format_poly(p)},
                {"N", az.order},
                {"A", dump(az.A)},
                {"Z", dump(az.Z)},
                {"hbar", dump(az.hbar)}};
}

json period_report_to_json(const PeriodReport& report) {
    json block = json::array();
    for (const auto& x : report.block) block.push_back(x.str());
    return json{{"column", report.column},
                {"period", report.period},
                {"start", report.start},
                {"block", std::move(block)},
                {"prime_period", report.prime_period},
                {"verified_depth", report.verified_depth}};
}

json match_report_to_json(const MatchReport& report) {
    return json{{"id", report.id},
                {"offered", report.offered},
                {"matched_prefix", report.matched_prefix},
                {"offset", report.offset_used},
                {"abs_compared", report.abs_compared},
                {"matched", report.matched},
                {"detail", report.detail}};
}

json abbreviated_to_json(const AbbreviatedArray& arr) {
    json blocks = json::array();
    for (const auto& block : arr.blocks) {
        json jb = json::array();
        for (const auto& x : block) jb.push_back(x.str());
        blocks.push_back(std::move(jb));
    }
    json j{{"dropped_counts", arr.dropped_counts},
           {"blocks", std::move(blocks)},
           {"vertical_prime_period", arr.vertical_prime_period}};
    if (arr.horizontal_prime_period) j["horizontal_prime_period"] = *arr.horizontal_prime_period;
    return j;
}

namespace {

std::string point_header(std::size_t dim, const std::string& lead) {
    std::string header = lead;
    if (dim <= 3) {
        const char* names[] = {"x", "y", "z"};
        for (std::size_t i = 0; i < dim; ++i) header += std::string(",") + names[i];
    } else {
        for (std::size_t i = 0; i < dim; ++i) header += ",c" + std::to_string(i);
    }
    return header;
}

}  // namespace

std::string orbit_csv(const std::vector<std::vector<Rational>>& points) {
    if (points.empty()) return "";
    std::ostringstream out;
    out << point_header(points.front().size(), "n") << "\n";
    for (std::size_t n = 0; n < points.size(); ++n) {
        out << n;
        for (const auto& x : points[n]) out << "," << x.str();
        out << "\n";
    }
    return out.str();
}

json orbit_to_json(const std::vector<std::vector<Rational>>& points) {
    json out = json::array();
    for (const auto& point : points) {
        json jp = json::array();
        for (const auto& x : point) jp.push_back(x.str());
        out.push_back(std::move(jp));
    }
    return json{{"points", std::move(out)}};
}

std::string rotated_orbit_csv(const std::vector<std::vector<double>>& points) {
    if (points.empty()) return "";
    std::ostringstream out;
    out << point_header(points.front().size(), "n") << "\n";
    out << std::setprecision(17);
    for (std::size_t n = 0; n < points.size(); ++n) {
        out << n;
        for (const double x : points[n]) out << "," << x;
        out << "\n";
    }
    return out.str();
}

std::string curves_csv(const std::vector<double>& ts,
                       const std::vector<std::vector<std::vector<double>>>& branches) {
    if (branches.empty() || ts.empty()) return "";
    std::ostringstream out;
    out << point_header(branches.front().front().size(), "t") << ",branch\n";
    out << std::setprecision(17);
    for (std::size_t b = 0; b < branches.size(); ++b)
        for (std::size_t i = 0; i < ts.size(); ++i) {
            out << ts[i];
            for (const double x : branches[b][i]) out << "," << x;
            out << "," << b << "\n";
        }
    return out.str();
}

std::string rationals_to_csv(const std::vector<Rational>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += values[i].str();
    }
    return out;
}

std::string param_series_csv(const Series<ParamPoly>& s) {
    std::ostringstream out;
    const std::size_t k = s.coeff(0).truncation();
    out << "t^n";
    for (std::size_t j = 0; j < k; ++j) out << ",c^" << j;
    out << "\n";
    for (std::size_t n = 0; n < s.order(); ++n) {
        out << n;
        for (std::size_t j = 0; j < k; ++j) out << "," << s.coeff(n).coeff(j).str();
        out << "\n";
    }
    return out.str();
}

}  // namespace riocirc
