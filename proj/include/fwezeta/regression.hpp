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

#ifndef FWEZETA_REGRESSION_HPP
#define FWEZETA_REGRESSION_HPP

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "analysis.hpp"
#include "enumerator_io.hpp"
#include "fwe.hpp"
#include "zeta.hpp"

namespace fwezeta {

inline constexpr std::size_t kGoldenMaxDegree = 196;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct DegreeResult {
    std::size_t n = 0;
    std::size_t d = 0;
    std::vector<CheckResult> checks;

    bool pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

struct RegressionResult {
    std::vector<DegreeResult> degrees;

    bool pass() const {
        for (const auto& d : degrees)
            if (!d.pass()) return false;
        return true;
    }
};

namespace detail {

inline void require_golden_range(std::size_t max_degree) {
    if (max_degree < 12 || max_degree > kGoldenMaxDegree)
        throw InputError("max degree must lie in [12, " + std::to_string(kGoldenMaxDegree) + "], got " +
                         std::to_string(max_degree));
}

inline CheckResult compare_with_golden(const FweCombination& built, const GoldenTableEntry& g) {
    CheckResult c{"golden", true, ""};
    const RationalPoly expected = g.expand();
    if (built.d != g.d) {
        c.pass = false;
        c.detail += "d: built " + std::to_string(built.d) + ", table " + std::to_string(g.d) + "; ";
    }
    for (std::size_t i = 0; i <= built.n; ++i) {
        if (built.expanded[i] != expected[i]) {
            c.pass = false;
            c.detail += "A_" + std::to_string(i) + ": built " + built.expanded[i].to_string() + ", table " +
                        expected[i].to_string() + "; ";
        }
    }
    for (const auto& [idx, printed] : g.errata)
        c.detail += "published A_" + std::to_string(idx) + "=" + printed + " is an erratum; ";
    if (c.pass && c.detail.empty()) c.detail = std::to_string(g.coefficients.size()) + " coefficients match";
    return c;
}

}  // namespace detail

/// Builds every extremal FWE up to max_degree and diffs it against the golden table.
inline RegressionResult run_table(std::size_t max_degree) {
    detail::require_golden_range(max_degree);
    RegressionResult out;
    for (const auto& g : golden_table()) {
        if (g.n > max_degree) break;
        const FweCombination built = build_extremal(g.n);
        out.degrees.push_back({g.n, built.d, {detail::compare_with_golden(built, g)}});
    }
    return out;
}

struct VerifyOptions {
    long precision_bits = 256;
    double tolerance = 1e-9;
};

/// Every property check for a single formal weight enumerator.
inline std::vector<CheckResult> verify_enumerator(const RationalPoly& w, const VerifyOptions& opts) {
    std::vector<CheckResult> checks;
    auto add = [&](std::string name, bool pass, std::string detail = "") {
        checks.push_back({std::move(name), pass, std::move(detail)});
    };

    const FweVerdict def = is_formal_weight_enumerator(w);
    std::string why;
    for (const auto& r : def.reasons) why += r + "; ";
    add("definition", def.holds, why);
    const Lemma22Report l22 = lemma22_checks(w);
    add("structure", l22.all(),
        std::string(l22.degree_4_mod_8 ? "" : "degree not 4 mod 8; ") + (l22.even_term_count ? "" : "odd term count; ") +
            (l22.palindromic ? "" : "not palindromic"));
    add("g8-invariance", check_invariance_g8(w));

    const auto ctx = EnumeratorContext::make(w, 2);
    const ZetaPolynomial z = compute_zeta(ctx);
    const ZetaPolynomial zo = zeta_oracle(ctx);
    add("zeta-oracle", z.p == zo.p);

    const auto sign = functional_equation_sign(z);
    add("functional-equation", sign && *sign == -1, sign ? "sign " + std::to_string(*sign) : "no functional equation");
    const long g = z.g.value_or(-1);
    add("degree-2g", z.p.degree() == 2 * g,
        "deg P = " + std::to_string(z.p.degree()) + ", g = " + std::to_string(g));

    const auto [mp, mm] = exact_sqrt2_multiplicities(z.p);
    add("sqrt2-parity", mp % 2 == 1 && mm % 2 == 1, "(" + std::to_string(mp) + ", " + std::to_string(mm) + ")");
    if (g >= 0 && z.p.degree() == 2 * g) {
        const Rational ratio = z.p[0] / z.p[static_cast<std::size_t>(2 * g)];
        add("root-product", ratio == -pow(Rational(2), -g), "a0/a2g = " + ratio.to_string());
    } else {
        add("root-product", false, "degree mismatch");
    }

    const RootSet roots = find_roots(z.p, {.precision_bits = opts.precision_bits});
    const PairingReport pr = pairing_from_roots(roots, 2, default_pairing_tolerance(2));
    add("root-pairing", pr.paired, std::to_string(pr.pairs) + " pairs, " + std::to_string(pr.fixed) + " fixed");
    const RhReport rh = rh_from_roots(roots, 2, opts.tolerance);
    std::ostringstream dev;
    dev << "max deviation " << rh.max_relative_deviation;
    add("rh", rh.holds, dev.str());

    if (ctx.d >= 8) {
        const DivisibilityReport dr = check_divisibility_theorem(w);
        add("divisibility", dr.passed);
    }
    if (is_symmetric_form(w)) {
        add("closed-form-oracle", diff_op_closed_form_oracle(w) == apply_diff_operator(divisibility_operator(), w));
    }
    if (ctx.n % 8 == 4) {
        const BoundReport b = mallows_sloane_bound(BoundKind::fwe, ctx.n, ctx.d);
        add("bound", b.respected, "d = " + std::to_string(ctx.d) + ", bound = " + std::to_string(b.bound));
    } else {
        add("bound", false, "degree " + std::to_string(ctx.n) + " is not 4 mod 8");
    }
    return checks;
}

/// Complete replication suite for every extremal FWE up to max_degree.
inline RegressionResult run_verify_all(std::size_t max_degree, const VerifyOptions& opts = {}) {
    detail::require_golden_range(max_degree);
    RegressionResult out;
    for (const auto& g : golden_table()) {
        if (g.n > max_degree) break;
        const FweCombination built = build_extremal(g.n);
        DegreeResult r{g.n, built.d, {detail::compare_with_golden(built, g)}};
        for (auto& c : verify_enumerator(built.expanded, opts)) r.checks.push_back(std::move(c));
        const BoundReport b = mallows_sloane_bound(BoundKind::fwe, g.n, built.d);
        r.checks.push_back({"bound-tight", b.tight, "bound " + std::to_string(b.bound)});
        out.degrees.push_back(std::move(r));
    }
    return out;
}

inline nlohmann::json to_json(const RegressionResult& r) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& d : r.degrees) {
        nlohmann::json checks = nlohmann::json::array();
        for (const auto& c : d.checks) checks.push_back({{"check", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        arr.push_back({{"n", d.n}, {"d", d.d}, {"pass", d.pass()}, {"checks", checks}});
    }
    return {{"pass", r.pass()}, {"degrees", arr}};
}

}  // namespace fwezeta

#endif  // FWEZETA_REGRESSION_HPP
