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

// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fwezeta/fwezeta.hpp"
#include "oracles.hpp"

using namespace fwezeta;

namespace {

// Pinned tolerances and budgets.
constexpr double kRhTolerance = 1e-9;
constexpr long kPrecisionBits = 256;
constexpr double kTableBudgetSeconds = 120.0;
constexpr double kRhBudgetSeconds = 300.0;
constexpr int kRandomZetaCases = 60;
constexpr std::size_t kRandomZetaMaxDegree = 16;
constexpr int kChainRuleCases = 500;
constexpr std::size_t kChainRuleMaxDegree = 10;
constexpr int kInvolutionCases = 100;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Fixture {
    std::string name;
    RationalPoly w;
    bool rh_expected;
};

RationalPoly w8() { return generator(Generator::W8); }
RationalPoly w12() { return generator(Generator::W12); }
RationalPoly w8s_w12t(unsigned s, unsigned t) { return pow(w8(), s) * pow(w12(), t); }

/// The twelve small-degree enumerators with their published RH verdicts.
std::vector<Fixture> small_degree_table() {
    return {
        {"W12", w8s_w12t(0, 1), true},          {"W8 W12", w8s_w12t(1, 1), true},
        {"W8^2 W12", w8s_w12t(2, 1), true},     {"W8^3 W12", w8s_w12t(3, 1), false},
        {"W12^3", w8s_w12t(0, 3), false},       {"W8^4 W12", w8s_w12t(4, 1), false},
        {"W8 W12^3", w8s_w12t(1, 3), false},    {"W8^5 W12", w8s_w12t(5, 1), false},
        {"W8^2 W12^3", w8s_w12t(2, 3), false},  {"W8^6 W12", w8s_w12t(6, 1), false},
        {"W8^3 W12^3", w8s_w12t(3, 3), false},  {"W12^5", w8s_w12t(0, 5), false},
    };
}

/// The four extremal enumerators with explicit combinations, all RH true.
std::vector<Fixture> extremal_examples() {
    auto comb = [](std::vector<std::pair<Rational, RationalPoly>> terms) {
        RationalPoly w(terms.front().second.degree());
        for (const auto& [a, p] : terms) w += a * p;
        return w;
    };
    return {
        {"deg 36", comb({{Rational(11, 12), w8s_w12t(3, 1)}, {Rational(1, 12), w8s_w12t(0, 3)}}), true},
        {"deg 44", comb({{Rational(85, 108), w8s_w12t(4, 1)}, {Rational(23, 108), w8s_w12t(1, 3)}}), true},
        {"deg 52", comb({{Rational(71, 108), w8s_w12t(5, 1)}, {Rational(37, 108), w8s_w12t(2, 3)}}), true},
        {"deg 60",
         comb({{Rational(1045, 1944), w8s_w12t(6, 1)},
               {Rational(880, 1944), w8s_w12t(3, 3)},
               {Rational(19, 1944), w8s_w12t(0, 5)}}),
         true},
    };
}

RationalUniPoly up(std::initializer_list<long> c) {
    std::vector<Rational> v;
    for (long x : c) v.emplace_back(x);
    return RationalUniPoly(std::move(v));
}

struct Gate {
    int failures = 0;
    void report(int id, const std::string& title, bool pass, const std::string& detail) {
        std::cout << "AC" << id << " " << (pass ? "PASS" : "FAIL") << "  " << title << "  [" << detail << "]"
                  << std::endl;
        if (!pass) ++failures;
    }
};

struct ExtremalData {
    std::vector<FweCombination> built;
    std::vector<ZetaPolynomial> zeta;
};

}  // namespace

int main() {
    Gate gate;
    const auto small = small_degree_table();
    const auto examples = extremal_examples();

    // AC1: golden table reproduction.
    ExtremalData ext;
    {
        const auto t0 = Clock::now();
        std::size_t printed = 0, printed_match = 0, corrected_match = 0, errata_seen = 0;
        bool all_exact = true, errata_rows_invalid = true;
        std::string mismatches;
        for (const auto& g : golden_table()) {
            FweCombination c = build_extremal(g.n);
            if (c.d != g.d) all_exact = false;
            for (const auto& [idx, value] : g.coefficients) {
                ++printed;
                const auto e = g.errata.find(idx);
                const Rational shown = e == g.errata.end() ? value : Rational::parse(e->second);
                if (c.expanded[idx] == shown) ++printed_match;
                if (c.expanded[idx] == value) ++corrected_match;
                else {
                    all_exact = false;
                    mismatches += " n=" + std::to_string(g.n) + ":A_" + std::to_string(idx);
                }
            }
            if (c.expanded != g.expand()) all_exact = false;
            if (!g.errata.empty()) {
                RationalPoly as_printed = g.expand();
                for (const auto& [idx, s] : g.errata) {
                    ++errata_seen;
                    as_printed.set(idx, Rational::parse(s));
                    as_printed.set(g.n - idx, Rational::parse(s));
                }
                if (is_formal_weight_enumerator(as_printed).holds) errata_rows_invalid = false;
            }
            ext.built.push_back(std::move(c));
        }
        auto coeff = [&](std::size_t n, std::size_t i) { return ext.built[(n - 12) / 8].expanded[i]; };
        const bool anchors = coeff(12, 4) == Rational(-33) && coeff(36, 16) == Rational(-111573) &&
                             coeff(100, 48) == Rational::parse("-331136219602650") &&
                             coeff(196, 96) == Rational::parse("-69281975548885761832168515738");
        const double secs = seconds_since(t0);
        std::ostringstream d;
        d << ext.built.size() << " degrees; " << printed_match << "/" << printed << " printed values verbatim, "
          << corrected_match << "/" << printed << " after " << errata_seen
          << " recorded erratum (n=60 A_24 printed as -15622728, exact -134295800; the printed row fails the "
             "definition); anchors "
          << (anchors ? "ok" : "MISMATCH") << mismatches << "; " << secs << " s of " << kTableBudgetSeconds << " s";
        gate.report(1, "golden table reproduction",
                    all_exact && anchors && corrected_match == printed && printed_match + errata_seen == printed &&
                        errata_rows_invalid && ext.built.size() == 24 && secs < kTableBudgetSeconds,
                    d.str());
    }
    for (const auto& c : ext.built) ext.zeta.push_back(compute_zeta(EnumeratorContext::make(c.expanded)));

    // AC2: zeta fixtures.
    {
        const RationalUniPoly a = up({-1, 0, 2}), b = up({1, 2, 2}), c = up({1, 0, 2});
        const RationalUniPoly p12 = Rational(1, 15) * (a * c * b);
        const RationalUniPoly p20 = Rational(1, 255) * (a * b * c * up({1, 0, 0, 0, 0, 0, 0, 0, 16}));
        const RationalUniPoly p28 = Rational(1, 4095) * (a * b * c * up({1, 0, -2, 0, 4}) * up({1, 0, 2, 0, 4}) *
                                                         up({1, 2, 2, 4, 4}) * up({1, -2, 2, -4, 4}));
        const RationalUniPoly big = up({195,     1170,    4290,    11700,   26311,   50950,   88136,
                                        139548,  208096,  299272,  424720,  598544,  832384,  1116384,
                                        1410176, 1630400, 1683904, 1497600, 1098240, 599040,  199680});
        const RationalUniPoly p36 = Rational(1, 11920740) * (a * big);
        const bool ok12 = compute_zeta(EnumeratorContext::make(small[0].w)).p == p12;
        const bool ok20 = compute_zeta(EnumeratorContext::make(small[1].w)).p == p20;
        const bool ok28 = compute_zeta(EnumeratorContext::make(small[2].w)).p == p28;
        const bool ok36 = compute_zeta(EnumeratorContext::make(examples[0].w)).p == p36;
        std::ostringstream d;
        d << "P12 " << (ok12 ? "ok" : "MISMATCH") << ", P20 " << (ok20 ? "ok" : "MISMATCH") << ", P28 "
          << (ok28 ? "ok" : "MISMATCH") << ", P36 " << (ok36 ? "ok" : "MISMATCH") << " (constant " << p36[0]
          << ", T^22 coefficient " << p36[22] << ")";
        gate.report(2, "zeta polynomial fixtures", ok12 && ok20 && ok28 && ok36, d.str());
    }

    // AC3: oracle equivalence.
    {
        std::size_t fixtures = 0, agree = 0;
        auto check = [&](const RationalPoly& w, long q) {
            ++fixtures;
            const auto ctx = EnumeratorContext::make(w, q);
            if (compute_zeta(ctx).p == zeta_oracle(ctx).p) ++agree;
        };
        check(w8(), 2);
        check(pow(w8(), 2), 2);
        for (const auto& f : small) check(f.w, 2);
        for (const auto& f : examples) check(f.w, 2);
        for (const auto& c : ext.built) check(c.expanded, 2);
        std::mt19937_64 rng(20260101);
        std::uniform_int_distribution<int> deg(1, static_cast<int>(kRandomZetaMaxDegree)), qd(2, 4);
        std::size_t random_agree = 0, independent_agree = 0;
        for (int k = 0; k < kRandomZetaCases; ++k) {
            const RationalPoly w = oracle::random_monic(rng, static_cast<std::size_t>(deg(rng)));
            const long q = qd(rng);
            const auto ctx = EnumeratorContext::make(w, q);
            const ZetaPolynomial z = compute_zeta(ctx);
            if (z.p == zeta_oracle(ctx).p) ++random_agree;
            std::vector<oracle::Q> raw;
            for (const auto& c : z.p.coefficients()) raw.push_back(c.raw());
            if (raw == oracle::zeta(w, q)) ++independent_agree;
        }
        std::ostringstream d;
        d << agree << "/" << fixtures << " fixtures, " << random_agree << "/" << kRandomZetaCases
          << " random (degree <= " << kRandomZetaMaxDegree << ", q in {2,3,4}); independent series oracle "
          << independent_agree << "/" << kRandomZetaCases;
        gate.report(3, "compute_zeta equals zeta_oracle",
                    agree == fixtures && random_agree == kRandomZetaCases && independent_agree == kRandomZetaCases,
                    d.str());
    }

    // AC4: functional-equation dichotomy.
    {
        std::size_t total = 0, good = 0;
        auto fwe_case = [&](const ZetaPolynomial& z) {
            ++total;
            if (functional_equation_sign(z) == -1 && z.g && z.p.degree() == 2 * *z.g) ++good;
        };
        for (const auto& f : small) fwe_case(compute_zeta(EnumeratorContext::make(f.w)));
        for (const auto& f : examples) fwe_case(compute_zeta(EnumeratorContext::make(f.w)));
        for (const auto& z : ext.zeta) fwe_case(z);
        const bool w8_plus = functional_equation_sign(compute_zeta(EnumeratorContext::make(w8()))) == 1;
        const bool w8sq_plus = functional_equation_sign(compute_zeta(EnumeratorContext::make(pow(w8(), 2)))) == 1;
        std::ostringstream d;
        d << good << "/" << total << " formal weight enumerators with sign -1 and deg P = 2g; W8 "
          << (w8_plus ? "+1" : "not +1") << ", W8^2 " << (w8sq_plus ? "+1" : "not +1");
        gate.report(4, "functional equation sign", good == total && w8_plus && w8sq_plus, d.str());
    }

    // AC5 and AC6 share the root computations.
    {
        const auto t0 = Clock::now();
        std::size_t table_ok = 0, table_total = 0, extremal_ok = 0;
        std::string table_row;
        double worst_true = 0;
        auto rh = [&](const ZetaPolynomial& z) { return check_rh(z, kRhTolerance, kPrecisionBits); };
        for (const auto* set : {&small, &examples}) {
            for (const auto& f : *set) {
                ++table_total;
                const RhReport r = rh(compute_zeta(EnumeratorContext::make(f.w)));
                table_row += r.holds ? "T" : "F";
                if (r.holds == f.rh_expected) ++table_ok;
                if (r.holds) worst_true = std::max(worst_true, r.max_relative_deviation);
            }
            table_row += set == &small ? "|" : "";
        }
        for (const auto& z : ext.zeta) {
            const RhReport r = rh(z);
            if (r.holds) ++extremal_ok;
            worst_true = std::max(worst_true, r.max_relative_deviation);
        }
        const double secs = seconds_since(t0);
        std::ostringstream d;
        d << "truth table " << table_row << " (" << table_ok << "/" << table_total << " as published); extremal "
          << extremal_ok << "/" << ext.zeta.size() << " hold; worst deviation among true rows " << worst_true
          << " vs tol " << kRhTolerance << " at " << kPrecisionBits << " bits; " << secs << " s of "
          << kRhBudgetSeconds << " s";
        gate.report(5, "Riemann hypothesis truth table",
                    table_ok == table_total && table_total == 16 && extremal_ok == ext.zeta.size() &&
                        secs < kRhBudgetSeconds,
                    d.str());
    }

    {
        std::size_t published_ones = 0, published_total = 0, odd = 0, ratio_ok = 0, total = 0;
        auto test = [&](const ZetaPolynomial& z, bool published) {
            ++total;
            const auto [mp, mm] = exact_sqrt2_multiplicities(z.p);
            if (mp % 2 == 1 && mm % 2 == 1) ++odd;
            if (published) {
                ++published_total;
                if (mp == 1 && mm == 1) ++published_ones;
            }
            const long g = *z.g;
            if (z.p[0] / z.p[static_cast<std::size_t>(2 * g)] == -pow(Rational(2), -g)) ++ratio_ok;
        };
        for (const auto& f : small) test(compute_zeta(EnumeratorContext::make(f.w)), true);
        for (const auto& f : examples) test(compute_zeta(EnumeratorContext::make(f.w)), true);
        for (const auto& z : ext.zeta) test(z, false);
        std::ostringstream d;
        d << odd << "/" << total << " with odd multiplicities of +-1/sqrt 2; " << published_ones << "/" << published_total
          << " published fixtures exactly (1,1); a0/a2g = -1/2^g in " << ratio_ok << "/" << total;
        gate.report(6, "root parity at +-1/sqrt 2",
                    odd == total && published_ones == published_total && ratio_ok == total, d.str());
    }

    // AC7: divisibility theorem.
    {
        std::size_t total = 0, ok = 0;
        for (const auto& c : ext.built) {
            if (c.d < 8) continue;
            ++total;
            if (check_divisibility_theorem(c.expanded).passed) ++ok;
        }
        gate.report(7, "divisibility theorem", ok == total && total == 21,
                    std::to_string(ok) + "/" + std::to_string(total) + " extremal enumerators with 36 <= n <= 196");
    }

    // AC8: bound tightness.
    {
        std::size_t tight = 0, respected = 0;
        for (const auto& c : ext.built)
            if (mallows_sloane_bound(BoundKind::fwe, c.n, c.d).tight) ++tight;
        for (const auto& f : small) {
            const std::size_t d = min_weight_index(f.w);
            if (d == 4 && mallows_sloane_bound(BoundKind::fwe, f.w.degree(), d).respected) ++respected;
        }
        std::ostringstream d;
        d << tight << "/" << ext.built.size() << " extremal d equal the bound; " << respected << "/" << small.size()
          << " small-degree fixtures (d = 4) within it";
        gate.report(8, "Mallows-Sloane type bound", tight == ext.built.size() && respected == small.size(), d.str());
    }

    // AC9: structural property suite.
    {
        std::vector<std::string> failed;
        std::size_t checks = 0;
        auto expect = [&](bool ok, const std::string& what) {
            ++checks;
            if (!ok) failed.push_back(what);
        };
        for (const auto& c : ext.built) {
            const std::string n = std::to_string(c.n);
            const FweVerdict v = is_formal_weight_enumerator(c.expanded);
            expect(v.holds, "definition n=" + n);
            const Lemma22Report l = lemma22_checks(c.expanded);
            expect(l.degree_4_mod_8 && l.even_term_count && l.palindromic, "structure n=" + n);
            expect(check_invariance_g8(c.expanded), "G8 n=" + n);
            expect(diff_op_closed_form_oracle(c.expanded) == apply_diff_operator(divisibility_operator(), c.expanded),
                   "closed form n=" + n);
        }
        for (const auto& f : small) {
            expect(is_formal_weight_enumerator(f.w).holds && lemma22_checks(f.w).all(), "definition " + f.name);
            expect(check_invariance_g8(f.w), "G8 " + f.name);
        }
        expect(!is_formal_weight_enumerator(w8()).holds, "W8 rejected");
        expect(check_invariance_g8(w8()), "G8 W8");
        expect(pow(w8(), 3) - pow(w12(), 2) == Rational(108) * generator(Generator::W24prime), "W8^3 - W12^2 = 108 W'24");

        std::mt19937_64 rng(424242);
        std::size_t involutions = 0;
        for (int k = 0; k < kInvolutionCases; ++k) {
            const RationalPoly w = oracle::random_homogeneous(rng, 2 * static_cast<std::size_t>(k % 10));
            const long q = 2 + k % 3;
            if (macwilliams_transform(macwilliams_transform(w, q), q) == w) ++involutions;
        }
        expect(involutions == kInvolutionCases, "MacWilliams involution");

        std::size_t chain_rule = 0;
        std::uniform_int_distribution<int> deg(0, static_cast<int>(kChainRuleMaxDegree));
        for (int k = 0; k < kChainRuleCases; ++k) {
            const auto na = static_cast<std::size_t>(deg(rng));
            const auto np = static_cast<std::size_t>(std::uniform_int_distribution<int>(0, static_cast<int>(na))(rng));
            const RationalPoly a = oracle::random_homogeneous(rng, na), p = oracle::random_homogeneous(rng, np);
            const Matrix2<Rational> m{oracle::random_rational(rng, 4), oracle::random_rational(rng, 4),
                                      oracle::random_rational(rng, 4), oracle::random_rational(rng, 4)};
            if (lemma51_check(p, a, m)) ++chain_rule;
        }
        expect(chain_rule == kChainRuleCases, "chain-rule suite");

        std::ostringstream d;
        d << checks - failed.size() << "/" << checks << " checks; MacWilliams involution " << involutions << "/"
          << kInvolutionCases << "; chain-rule identity " << chain_rule << "/" << kChainRuleCases;
        for (const auto& f : failed) d << "; failed: " << f;
        gate.report(9, "structural property suite", failed.empty(), d.str());
    }

    std::cout << (gate.failures == 0 ? "ALL ACCEPTANCE CRITERIA PASS" : "ACCEPTANCE FAILED") << std::endl;
    return gate.failures == 0 ? 0 : 1;
}
