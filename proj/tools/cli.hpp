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

#ifndef FWEZETA_TOOLS_CLI_HPP
#define FWEZETA_TOOLS_CLI_HPP

#include <complex>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fwezeta/fwezeta.hpp"

namespace fwezeta::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kUsage = 2 };

struct Flags {
    std::string input;
    std::string output;
    long q = 2;
    std::optional<long> degree;
    long max_degree = static_cast<long>(kGoldenMaxDegree);
    long precision = 256;
    double tol = 1e-9;
    std::string format = "text";
    bool oracle = false;
    std::vector<std::string> positional;
};

namespace detail {

using nlohmann::json;

inline void add_flags(CLI::App* sub, Flags& f) {
    sub->add_option("--input", f.input, "enumerator file (JSON)");
    sub->add_option("--output", f.output, "output file");
    sub->add_option("--q", f.q, "alphabet size")->capture_default_str();
    sub->add_option("--degree", f.degree, "degree n");
    sub->add_option("--max-degree", f.max_degree, "largest degree for table and verify-all")->capture_default_str();
    sub->add_option("--precision", f.precision, "working precision in bits")->capture_default_str();
    sub->add_option("--tol", f.tol, "relative tolerance for |alpha| sqrt(q) = 1")->capture_default_str();
    sub->add_option("--format", f.format, "json or text")->check(CLI::IsMember({"json", "text"}))->capture_default_str();
    sub->add_flag("--oracle", f.oracle, "cross-check against the dense oracle");
    sub->add_option("args", f.positional, "positional arguments");
}

inline long parse_long(const std::string& s, const char* what) {
    try {
        std::size_t pos = 0;
        const long v = std::stol(s, &pos);
        if (pos == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw InputError(std::string(what) + " must be an integer, got '" + s + "'");
}

inline RationalPoly load_input(const Flags& f) {
    if (!f.positional.empty()) throw InputError("unexpected argument '" + f.positional.front() + "'");
    if (f.input.empty()) throw InputError("--input is required");
    return read_enumerator_file(f.input);
}

inline void require_q(const Flags& f) {
    if (f.q < 2) throw InputError("--q must be at least 2");
}

inline void require_precision(const Flags& f) {
    if (f.precision < 53) throw InputError("--precision must be at least 53 bits");
    if (!(f.tol > 0)) throw InputError("--tol must be positive");
}

inline std::size_t degree_arg(const Flags& f, std::size_t pos_index, const char* what) {
    long n = 0;
    if (f.degree)
        n = *f.degree;
    else if (f.positional.size() > pos_index)
        n = parse_long(f.positional[pos_index], what);
    else
        throw InputError(std::string(what) + " is required");
    if (n <= 0) throw InputError(std::string(what) + " must be positive");
    return static_cast<std::size_t>(n);
}

inline std::size_t max_degree_arg(const Flags& f) {
    long n = f.max_degree;
    if (!f.positional.empty()) n = parse_long(f.positional.front(), "max degree");
    if (n < 12 || n > static_cast<long>(kGoldenMaxDegree))
        throw InputError("max degree must lie in [12, " + std::to_string(kGoldenMaxDegree) + "]");
    return static_cast<std::size_t>(n);
}

inline void emit(const Flags& f, std::ostream& out, const json& j, const std::string& text) {
    const std::string body = f.format == "json" ? j.dump(2) + "\n" : text;
    out << body;
}

inline void write_output(const Flags& f, const json& j) {
    if (f.output.empty()) return;
    std::ofstream o(f.output);
    if (!o) throw InputError("cannot write '" + f.output + "'");
    o << j.dump(2) << '\n';
}

inline std::string complex_str(std::complex<double> z) {
    std::ostringstream s;
    s << std::setprecision(12) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return s.str();
}

inline json coeff_array(const RationalUniPoly& p) {
    json a = json::array();
    for (long i = 0; i <= p.degree(); ++i) a.push_back(p[static_cast<std::size_t>(i)].to_string());
    return a;
}

// ---------------------------------------------------------------------------

inline int cmd_zeta(const Flags& f, std::ostream& out) {
    require_q(f);
    const auto ctx = EnumeratorContext::make(load_input(f), f.q);
    const ZetaPolynomial z = compute_zeta(ctx);
    const auto sign = functional_equation_sign(z);

    json j{{"n", ctx.n}, {"d", ctx.d}, {"q", ctx.q}, {"degree", z.p.degree()}, {"coefficients", coeff_array(z.p)}};
    j["g"] = z.g ? json(*z.g) : json(nullptr);
    j["sign"] = sign ? json(*sign) : json(nullptr);
    std::ostringstream t;
    t << "n = " << ctx.n << ", d = " << ctx.d << ", q = " << ctx.q << "\n";
    t << "P(T) = " << z.p.to_string() << "\n";
    for (long i = 0; i <= z.p.degree(); ++i) t << "  a_" << i << " = " << z.p[static_cast<std::size_t>(i)] << "\n";
    t << "g = " << (z.g ? std::to_string(*z.g) : "undefined (odd n)") << "\n";
    t << "deg P = " << z.p.degree() << "\n";
    t << "functional equation sign: " << (sign ? (*sign > 0 ? "+1" : "-1") : "none") << "\n";

    int code = kOk;
    if (f.oracle) {
        const bool agree = zeta_oracle(ctx).p == z.p;
        j["oracle_agrees"] = agree;
        t << "oracle: " << (agree ? "agrees" : "DISAGREES") << "\n";
        if (!agree) code = kFailed;
    }
    write_output(f, j);
    emit(f, out, j, t.str());
    return code;
}

inline int cmd_transform(const Flags& f, std::ostream& out) {
    require_q(f);
    const RationalPoly w = load_input(f);
    const RationalPoly t = macwilliams_transform(w, f.q);
    if (!f.output.empty()) write_enumerator_file(f.output, t);
    std::string rel = "neither";
    if (t == w) rel = "fixed";
    else if (t == -w) rel = "negated";
    json j = enumerator_to_json(t);
    j["relation"] = rel;
    emit(f, out, j, "MacWilliams transform (q = " + std::to_string(f.q) + "): " + t.to_string() + "\nW is " + rel + "\n");
    return kOk;
}

inline int cmd_check(const Flags& f, std::ostream& out) {
    const RationalPoly w = load_input(f);
    const FweVerdict v = is_formal_weight_enumerator(w);
    const Lemma22Report l = lemma22_checks(w);
    const bool g8 = check_invariance_g8(w);
    const bool pass = v.holds && l.all() && g8;
    json j{{"n", w.degree()},
           {"definition", v.holds},
           {"reasons", v.reasons},
           {"degree_4_mod_8", l.degree_4_mod_8},
           {"even_term_count", l.even_term_count},
           {"palindromic", l.palindromic},
           {"g8_invariant", g8},
           {"pass", pass}};
    std::ostringstream t;
    t << "formal weight enumerator: " << (v.holds ? "yes" : "no") << "\n";
    for (const auto& r : v.reasons) t << "  " << r << "\n";
    t << "degree = 4 mod 8: " << (l.degree_4_mod_8 ? "yes" : "no") << "\n";
    t << "even number of terms: " << (l.even_term_count ? "yes" : "no") << "\n";
    t << "palindromic: " << (l.palindromic ? "yes" : "no") << "\n";
    t << "G8 invariant: " << (g8 ? "yes" : "no") << "\n";
    emit(f, out, j, t.str());
    return pass ? kOk : kFailed;
}

inline int cmd_extremal(const Flags& f, std::ostream& out) {
    const std::size_t n = degree_arg(f, 0, "degree");
    if (n < 12 || n % 8 != 4) throw InputError("degree must satisfy n = 4 (mod 8) and n >= 12, got " + std::to_string(n));
    const FweCombination c = build_extremal(n);
    if (!f.output.empty()) write_enumerator_file(f.output, c.expanded);

    json terms = json::array();
    std::string combo, coeffs;
    for (const auto& [b, a] : c.terms) {
        terms.push_back({{"element", b.name()}, {"s", b.s}, {"t", b.t}, {"coefficient", a.to_string()}});
        combo += (combo.empty() ? "" : " + ") + ("(" + a.to_string() + ")*" + b.name());
        coeffs += (coeffs.empty() ? "" : ", ") + a.to_string();
    }
    json j{{"n", n}, {"d", c.d}, {"terms", terms}, {"enumerator", enumerator_to_json(c.expanded)}};
    std::ostringstream t;
    t << "n = " << n << ", d = " << c.d << "\n";
    t << "W = " << combo << "\n";
    t << "coefficients: " << coeffs << "\n";
    t << format_symmetric(c.expanded) << "\n";
    emit(f, out, j, t.str());
    return kOk;
}

inline int cmd_rh(const Flags& f, std::ostream& out) {
    require_q(f);
    require_precision(f);
    const auto ctx = EnumeratorContext::make(load_input(f), f.q);
    const ZetaPolynomial z = compute_zeta(ctx);
    if (z.p.degree() < 1) throw InputError("zeta polynomial is constant; no roots to test");
    const RhReport r = check_rh(z, f.tol, f.precision);

    json bad = json::array();
    std::ostringstream t;
    std::ostringstream dev;
    dev << std::setprecision(3) << r.max_relative_deviation;
    if (r.holds) {
        t << "RH holds, max deviation " << dev.str() << " < " << f.tol << "\n";
    } else {
        t << "RH fails, max deviation " << dev.str() << " (tolerance " << f.tol << ")\n";
        t << "offending roots (|alpha| vs 1/sqrt(q) = " << r.target_modulus << "):\n";
    }
    for (const auto& a : r.offending_roots) {
        bad.push_back({{"re", a.real()}, {"im", a.imag()}, {"modulus", std::abs(a)}});
        t << "  " << complex_str(a) << "   |alpha| = " << std::abs(a) << "\n";
    }
    t << r.root_count << " roots at " << r.precision_bits << " bits\n";
    json j{{"holds", r.holds},
           {"max_relative_deviation", r.max_relative_deviation},
           {"tolerance", r.tolerance},
           {"precision_bits", r.precision_bits},
           {"root_count", r.root_count},
           {"offending_roots", bad}};
    emit(f, out, j, t.str());
    return r.holds ? kOk : kFailed;
}

inline int cmd_divisibility(const Flags& f, std::ostream& out) {
    const RationalPoly w = load_input(f);
    if (min_weight_index(w) < 8) throw InputError("divisibility check needs d >= 8, got d = " + std::to_string(min_weight_index(w)));
    const DivisibilityReport r = check_divisibility_theorem(w);
    json factors = json::array();
    std::ostringstream t;
    t << "d = " << r.d << "\n";
    for (const auto& fc : r.divisor_factors) {
        factors.push_back({{"factor", fc.name}, {"divides", fc.divides}});
        t << "  " << fc.name << ": " << (fc.divides ? "divides" : "does NOT divide") << "\n";
    }
    t << (r.passed ? "divisibility verified" : "divisibility FAILS") << "\n";
    json j{{"d", r.d}, {"factors", factors}, {"passed", r.passed}};
    emit(f, out, j, t.str());
    return r.passed ? kOk : kFailed;
}

inline int cmd_bound(const Flags& f, std::ostream& out) {
    if (f.positional.empty()) throw InputError("bound kind (type2 or fwe) is required");
    BoundKind kind;
    if (f.positional[0] == "type2") kind = BoundKind::type2;
    else if (f.positional[0] == "fwe") kind = BoundKind::fwe;
    else throw InputError("bound kind must be type2 or fwe, got '" + f.positional[0] + "'");

    std::optional<std::size_t> observed;
    std::size_t n = 0;
    if (!f.input.empty()) {
        if (f.positional.size() > 1 || f.degree) throw InputError("give either --input or a degree, not both");
        const RationalPoly w = read_enumerator_file(f.input);
        n = w.degree();
        observed = min_weight_index(w);
    } else {
        n = degree_arg(f, 1, "degree");
    }
    BoundReport r;
    try {
        r = mallows_sloane_bound(kind, n, observed);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    json j{{"kind", f.positional[0]}, {"n", n}, {"bound", r.bound}};
    std::string text = std::to_string(r.bound) + "\n";
    if (observed) {
        j["observed_d"] = *observed;
        j["tight"] = r.tight;
        j["respected"] = r.respected;
        text += "observed d = " + std::to_string(*observed) + (r.respected ? ", bound respected" : ", bound VIOLATED") +
                (r.tight ? " (tight)" : "") + "\n";
    }
    emit(f, out, j, text);
    return r.respected ? kOk : kFailed;
}

inline std::string regression_text(const RegressionResult& r, bool details) {
    std::ostringstream t;
    for (const auto& d : r.degrees) {
        t << "n = " << std::setw(3) << d.n << "  d = " << std::setw(2) << d.d << "  " << (d.pass() ? "ok" : "FAIL");
        if (!details) {
            t << "  " << d.checks.front().detail << "\n";
            continue;
        }
        t << "\n";
        for (const auto& c : d.checks)
            if (!c.pass || !c.detail.empty())
                t << "    " << (c.pass ? "ok   " : "FAIL ") << c.name << (c.detail.empty() ? "" : ": " + c.detail) << "\n";
    }
    t << (r.pass() ? "all degrees verified" : "verification FAILED") << "\n";
    return t.str();
}

inline int cmd_table(const Flags& f, std::ostream& out) {
    const RegressionResult r = run_table(max_degree_arg(f));
    const json j = to_json(r);
    write_output(f, j);
    emit(f, out, j, regression_text(r, false));
    return r.pass() ? kOk : kFailed;
}

inline int cmd_verify_all(const Flags& f, std::ostream& out) {
    require_precision(f);
    const RegressionResult r = run_verify_all(max_degree_arg(f), {f.precision, f.tol});
    const json j = to_json(r);
    write_output(f, j);
    emit(f, out, j, regression_text(r, true));
    return r.pass() ? kOk : kFailed;
}

}  // namespace detail

/// Entry point shared by the executable and the tests.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Duursma zeta polynomials of formal weight enumerators", "fwe-zeta"};
    app.require_subcommand(1);
    Flags f;
    struct Sub {
        const char* name;
        const char* help;
        int (*fn)(const Flags&, std::ostream&);
    };
    const Sub subs[] = {
        {"zeta", "zeta polynomial of an enumerator file", detail::cmd_zeta},
        {"transform", "MacWilliams transform", detail::cmd_transform},
        {"check", "formal weight enumerator checks", detail::cmd_check},
        {"extremal", "extremal formal weight enumerator of a degree", detail::cmd_extremal},
        {"rh", "Riemann hypothesis check on the zeta roots", detail::cmd_rh},
        {"divisibility", "divisibility of the differentiated enumerator", detail::cmd_divisibility},
        {"bound", "Mallows-Sloane type bound: bound <type2|fwe> <n>", detail::cmd_bound},
        {"table", "rebuild and diff the stored extremal table", detail::cmd_table},
        {"verify-all", "full property suite for every extremal enumerator", detail::cmd_verify_all},
    };
    std::vector<std::pair<CLI::App*, const Sub*>> registered;
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        detail::add_flags(sub, f);
        registered.emplace_back(sub, &s);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return kOk;
        }
        err << "fwe-zeta: " << e.what() << "\n";
        return kUsage;
    }

    for (const auto& [sub, s] : registered) {
        if (!sub->parsed()) continue;
        try {
            return s->fn(f, out);
        } catch (const InputError& e) {
            err << "fwe-zeta " << s->name << ": " << e.what() << "\n";
            return kUsage;
        } catch (const std::invalid_argument& e) {
            err << "fwe-zeta " << s->name << ": " << e.what() << "\n";
            return kUsage;
        } catch (const std::domain_error& e) {
            err << "fwe-zeta " << s->name << ": " << e.what() << "\n";
            return kUsage;
        } catch (const std::exception& e) {
            err << "fwe-zeta " << s->name << ": " << e.what() << "\n";
            return kFailed;
        }
    }
    return kUsage;
}

}  // namespace fwezeta::cli

#endif  // FWEZETA_TOOLS_CLI_HPP
