/*
   Copyright 2026 The fwe-zeta Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FWEZETA_ENUMERATOR_IO_HPP
#define FWEZETA_ENUMERATOR_IO_HPP

#include <cstddef>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "golden_table_data.hpp"
#include "rational.hpp"
#include "zeta.hpp"

namespace fwezeta {

/// Malformed user input (files, rational strings, schema violations).
class InputError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::size_t parse_index(const std::string& key) {
    if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos ||
        (key.size() > 1 && key.front() == '0'))
        throw InputError("coefficient index '" + key + "' is not a non-negative decimal integer");
    return static_cast<std::size_t>(std::stoul(key));
}

inline Rational parse_rational_value(const nlohmann::json& v, const std::string& where) {
    if (!v.is_string()) throw InputError(where + ": coefficient must be a rational string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw InputError(where + ": " + e.what());
    }
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Enumerator files: {"degree": n, "coefficients": {"0": "1", "4": "-33", ...}}

inline RationalPoly enumerator_from_json(const nlohmann::json& j) {
    if (!j.is_object()) throw InputError("enumerator file: top level must be an object");
    if (!j.contains("degree") || !j["degree"].is_number_integer() || j["degree"].get<long long>() < 0)
        throw InputError("enumerator file: 'degree' must be a non-negative integer");
    if (!j.contains("coefficients") || !j["coefficients"].is_object())
        throw InputError("enumerator file: 'coefficients' must be an object");
    const auto degree = j["degree"].get<long long>();
    if (degree > 100000) throw InputError("enumerator file: degree too large");

    RationalPoly w(static_cast<std::size_t>(degree));
    for (const auto& [key, value] : j["coefficients"].items()) {
        const std::size_t idx = detail::parse_index(key);
        if (idx > w.degree())
            throw InputError("enumerator file: coefficient index " + key + " exceeds degree " +
                             std::to_string(degree));
        w.set(idx, detail::parse_rational_value(value, "coefficient " + key));
    }
    if (!j["coefficients"].contains("0") || !w[0].is_one())
        throw InputError("enumerator file: coefficient '0' must be \"1\" (monic in x)");
    return w;
}

inline nlohmann::json enumerator_to_json(const RationalPoly& w) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (std::size_t i = 0; i <= w.degree(); ++i)
        if (!w[i].is_zero()) coeffs[std::to_string(i)] = w[i].to_string();
    // nlohmann::json orders keys lexicographically; that is stable, if not numeric.
    return {{"degree", w.degree()}, {"coefficients", coeffs}};
}

inline RationalPoly read_enumerator_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw InputError("'" + path + "' is not valid JSON: " + e.what());
    }
    return enumerator_from_json(j);
}

inline void write_enumerator_file(const std::string& path, const RationalPoly& w) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << enumerator_to_json(w).dump(2) << '\n';
}

/// Left half of a palindromic enumerator in the form "A_8=-495, A_12=-19005".
inline std::string format_symmetric(const RationalPoly& w) {
    std::string s;
    const std::size_t n = w.degree();
    for (std::size_t i = 1; 2 * i < n; ++i) {
        if (w[i].is_zero()) continue;
        if (!s.empty()) s += ", ";
        s += "A_" + std::to_string(i) + "=" + w[i].to_string();
    }
    return s;
}

// ---------------------------------------------------------------------------
// Golden table of extremal formal weight enumerators

struct GoldenTableEntry {
    std::size_t n = 0;
    std::size_t d = 0;
    std::map<std::size_t, Rational> coefficients;  // A_{4j}, j = d/4 .. (n-4)/8
    std::map<std::size_t, std::string> errata;     // published value where it differs

    /// x^n + y^n + sum A_{4j} (x^{n-4j} y^{4j} + x^{4j} y^{n-4j})
    RationalPoly expand() const {
        RationalPoly w(n);
        w.set(0, 1);
        w.set(n, 1);
        for (const auto& [i, a] : coefficients) {
            w.set(i, a);
            w.set(n - i, a);
        }
        return w;
    }
};

inline std::vector<GoldenTableEntry> parse_golden_table(const nlohmann::json& j) {
    if (!j.is_array()) throw InputError("golden table: expected a JSON array");
    std::vector<GoldenTableEntry> table;
    for (const auto& e : j) {
        GoldenTableEntry g;
        g.n = e.at("n").get<std::size_t>();
        g.d = e.at("d").get<std::size_t>();
        if (g.n % 8 != 4 || g.d == 0 || g.d % 4 != 0) throw InputError("golden table: bad (n, d) row");
        std::size_t expect = g.d;
        for (const auto& [key, value] : e.at("coefficients").items()) {
            const std::size_t idx = detail::parse_index(key);
            g.coefficients.emplace(idx, detail::parse_rational_value(value, "golden n=" + std::to_string(g.n)));
        }
        for (const auto& [idx, a] : g.coefficients) {
            (void)a;
            if (idx != expect) throw InputError("golden table n=" + std::to_string(g.n) + ": non-contiguous indices");
            expect += 4;
        }
        if (expect - 4 != (g.n - 4) / 2)
            throw InputError("golden table n=" + std::to_string(g.n) + ": left half incomplete");
        if (e.contains("errata"))
            for (const auto& [key, value] : e["errata"].items())
                g.errata.emplace(detail::parse_index(key), value.get<std::string>());
        table.push_back(std::move(g));
    }
    return table;
}

inline const std::vector<GoldenTableEntry>& golden_table() {
    static const std::vector<GoldenTableEntry> table = parse_golden_table(nlohmann::json::parse(kGoldenTableJson));
    return table;
}

}  // namespace fwezeta

#endif  // FWEZETA_ENUMERATOR_IO_HPP
