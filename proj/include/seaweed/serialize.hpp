#pragma once

#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seaweed/checks.hpp"
#include "seaweed/series.hpp"
#include "seaweed/stats.hpp"

namespace seaweed {

using json = nlohmann::ordered_json;

// Exact values travel as decimal strings.
inline json to_json(const GaussInt& z) { return json{{"re", to_decimal(z.re)}, {"im", to_decimal(z.im)}}; }

inline json to_json(const IntSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_decimal(c));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const GaussSeries& s) {
    json coeffs = json::array();
    for (const auto& c : s.coeffs())
        coeffs.push_back(to_json(c));
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

inline json to_json(const BivariateSeries& s) {
    json rows = json::array();
    for (std::size_t n = 0; n <= s.order(); ++n) {
        json row = json::array();
        for (const auto& c : s.row(n))
            row.push_back(to_decimal(c));
        rows.push_back(row);
    }
    return json{{"order", s.order()}, {"coeffs", rows}};
}

inline IntSeries int_series_from_json(const json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (arr.size() != order + 1)
        throw std::invalid_argument("series JSON: expected " + std::to_string(order + 1) + " coefficients, got " +
                                    std::to_string(arr.size()));
    std::vector<Integer> c;
    for (const auto& x : arr)
        c.push_back(parse_integer(x.get<std::string>()));
    return IntSeries(order, std::move(c));
}

inline GaussInt gauss_from_json(const json& j) {
    return {parse_integer(j.at("re").get<std::string>()), parse_integer(j.at("im").get<std::string>())};
}

inline GaussSeries gauss_series_from_json(const json& j) {
    const std::size_t order = j.at("order").get<std::size_t>();
    const auto& arr = j.at("coeffs");
    if (arr.size() != order + 1)
        throw std::invalid_argument("series JSON: coefficient count does not match order");
    std::vector<GaussInt> c;
    for (const auto& x : arr)
        c.push_back(gauss_from_json(x));
    return GaussSeries(order, std::move(c));
}

inline json to_json(const StatRecord& r) {
    return json{{"n", r.n},           {"e", r.e},
                {"o", r.o},           {"ebar", r.ebar},
                {"obar", r.obar},     {"op0", r.op_residue[0]},
                {"op1", r.op_residue[1]}, {"op2", r.op_residue[2]},
                {"op3", r.op_residue[3]}};
}

// Body excludes timing so identical runs serialize identically.
inline json report_body(const CheckReport& r) {
    json range = json::object();
    for (const auto& [k, v] : r.range)
        range[k] = v;
    json j{{"check", r.name}, {"range", range}, {"status", to_string(r.status)}};
    if (r.non_falsification)
        j["kind"] = "NON-FALSIFICATION";
    if (r.witness)
        j["witness"] = json{{"at", r.witness->where},
                            {"left", r.witness->left},
                            {"right", r.witness->right},
                            {"formulation", r.witness->formulation}};
    j["columns"] = r.columns;
    j["rows"] = r.rows;
    j["notes"] = r.notes;
    return j;
}

inline json to_json(const CheckReport& r) {
    return json{{"body", report_body(r)}, {"timing", json{{"elapsed_ms", r.elapsed_ms}}}};
}

inline std::string to_text(const CheckReport& r, bool with_rows = false) {
    std::ostringstream os;
    os << r.name;
    for (const auto& [k, v] : r.range)
        os << ' ' << k << '=' << v;
    os << ": " << to_string(r.status);
    if (r.non_falsification)
        os << " (NON-FALSIFICATION: consistent with the conjecture on this range, not a proof)";
    os << '\n';
    if (r.witness) {
        os << "  first counterexample at " << r.witness->where << ": " << r.witness->left << " vs " << r.witness->right;
        if (!r.witness->formulation.empty())
            os << " [" << r.witness->formulation << "]";
        os << '\n';
    }
    for (const auto& note : r.notes)
        os << "  " << note << '\n';
    if (with_rows) {
        for (std::size_t i = 0; i < r.columns.size(); ++i)
            os << (i ? "," : "  ") << r.columns[i];
        os << '\n';
        for (const auto& row : r.rows) {
            for (std::size_t i = 0; i < row.size(); ++i)
                os << (i ? "," : "  ") << row[i];
            os << '\n';
        }
    }
    os << "  elapsed " << std::fixed << std::setprecision(1) << r.elapsed_ms << " ms\n";
    return os.str();
}

// Column-oriented table with CSV (comma, LF, header row) and JSON renderings.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        auto line = [&out](const std::vector<std::string>& cells) {
            for (std::size_t i = 0; i < cells.size(); ++i) {
                if (i)
                    out += ',';
                out += cells[i];
            }
            out += '\n';
        };
        line(columns);
        for (const auto& r : rows)
            line(r);
        return out;
    }

    // integer-valued cells become JSON numbers when they fit, strings otherwise
    std::string json_text() const {
        json arr = json::array();
        for (const auto& r : rows) {
            json obj = json::object();
            for (std::size_t i = 0; i < columns.size(); ++i) {
                const std::string& cell = r[i];
                bool numeric = !cell.empty() && cell.size() < 18 &&
                               cell.find_first_not_of("-0123456789") == std::string::npos;
                if (numeric)
                    obj[columns[i]] = std::stoll(cell);
                else
                    obj[columns[i]] = cell;
            }
            arr.push_back(obj);
        }
        return arr.dump(2) + "\n";
    }
};

// n, E_ind(n), (-1)^ceil(n/2) E_ind(n), |E_ind(n)|
inline Table eind_table(std::size_t max_n, unsigned jobs = 1) {
    Table t{{"n", "eind", "signed", "abs"}, {}};
    for (const auto& r : census_range(PartitionClass::odd_parts(), max_n, jobs)) {
        std::int64_t e = r.diff();
        t.rows.push_back({std::to_string(r.n), std::to_string(e), std::to_string(sign_ceil_half(r.n) * e),
                          std::to_string(e < 0 ? -e : e)});
    }
    return t;
}

inline Table census_table(const PartitionClass& cls, std::size_t max_n, unsigned jobs = 1) {
    Table t{{"n", "e", "o", "ebar", "obar", "op0", "op1", "op2", "op3"}, {}};
    for (const auto& r : census_range(cls, max_n, jobs))
        t.rows.push_back({std::to_string(r.n), std::to_string(r.e), std::to_string(r.o), std::to_string(r.ebar),
                          std::to_string(r.obar), std::to_string(r.op_residue[0]), std::to_string(r.op_residue[1]),
                          std::to_string(r.op_residue[2]), std::to_string(r.op_residue[3])});
    return t;
}

// one row per (n, k) with n <= 3*max_k and k <= max_k
inline Table cnk_export_table(std::size_t max_k) {
    CnkTable c = cnk_table(max_k, 0);
    Table t{{"n", "k", "c", "ctilde"}, {}};
    for (std::size_t n = 0; n <= 3 * max_k; ++n)
        for (std::size_t k = 0; k <= max_k; ++k)
            t.rows.push_back({std::to_string(n), std::to_string(k), std::to_string(c.c[n][k]),
                              std::to_string(c.c_tilde[n][k])});
    return t;
}

}  // namespace seaweed
