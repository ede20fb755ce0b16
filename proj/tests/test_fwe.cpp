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

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "fwezeta/fwezeta.hpp"
#include "oracles.hpp"

using namespace fwezeta;

namespace {

const RationalPoly& w8() {
    static const RationalPoly p = generator(Generator::W8);
    return p;
}
const RationalPoly& w12() {
    static const RationalPoly p = generator(Generator::W12);
    return p;
}
const RationalPoly& w24p() {
    static const RationalPoly p = generator(Generator::W24prime);
    return p;
}

std::vector<Rational> coefficients_of(const FweCombination& c) {
    std::vector<Rational> v;
    for (const auto& t : c.terms) v.push_back(t.second);
    return v;
}

/// Extremal enumerator through the W'24 sequences: sum_r a_r W'24^r W8^k W12^(2m-2r+1)
/// with a_0 = 1 (only r = 0 contributes x^n) and A_4 = ... = A_4m = 0.
RationalPoly extremal_by_sequence(std::size_t n) {
    const std::size_t k = ((n - 12) % 24) / 8;
    const std::size_t m = (n - 12 - 8 * k) / 24;
    std::vector<RationalPoly> terms;
    for (std::size_t r = 0; r <= m; ++r)
        terms.push_back(pow(w24p(), static_cast<unsigned>(r)) * pow(w8(), static_cast<unsigned>(k)) *
                        pow(w12(), static_cast<unsigned>(2 * m - 2 * r + 1)));
    std::vector<std::vector<oracle::Q>> a(m + 1, std::vector<oracle::Q>(m + 1));
    std::vector<oracle::Q> rhs(m + 1);
    a[0][0] = 1;
    rhs[0] = 1;
    for (std::size_t j = 1; j <= m; ++j)
        for (std::size_t r = 0; r <= m; ++r) a[j][r] = terms[r][4 * j].raw();
    const auto sol = oracle::solve_consistent(a, rhs, m + 1);
    if (!sol) throw std::logic_error("sequence system singular");
    RationalPoly w(n);
    for (std::size_t r = 0; r <= m; ++r) w += Rational((*sol)[r]) * terms[r];
    return w;
}

}  // namespace

TEST(Generators, Coefficients) {
    EXPECT_EQ(w8().to_string(), "x^8 + 14*x^4*y^4 + y^8");
    EXPECT_EQ(w12().to_string(), "x^12 - 33*x^8*y^4 - 33*x^4*y^8 + y^12");
    EXPECT_EQ(generator_from_name("W12"), Generator::W12);
    EXPECT_THROW(generator_from_name("W10"), std::invalid_argument);
}

TEST(Generators, CubeMinusSquareIdentity) {
    EXPECT_EQ(pow(w8(), 3) - pow(w12(), 2), Rational(108) * w24p());
}

TEST(Definition, AcceptsW12AndRejectsTypeII) {
    EXPECT_TRUE(is_formal_weight_enumerator(w12()).holds);
    const FweVerdict v = is_formal_weight_enumerator(w8());
    EXPECT_FALSE(v.holds);
    ASSERT_EQ(v.reasons.size(), 1U);
    EXPECT_NE(v.reasons[0].find("fixes"), std::string::npos);
}

TEST(Definition, ConditionOneNeedsMultiplesOfFour) {
    RationalPoly w = w12();
    w.set(2, 1);
    const FweVerdict v = is_formal_weight_enumerator(w);
    EXPECT_FALSE(v.holds);
    EXPECT_NE(v.reasons.front().find("exponent condition"), std::string::npos);
}

TEST(Definition, OddDegreeFailsConditionTwo) {
    RationalPoly w(5);
    w.set(0, 1);
    w.set(4, 1);
    EXPECT_FALSE(is_formal_weight_enumerator(w).holds);
}

TEST(StructuralChecks, HoldsForEveryBasisElement) {
    for (std::size_t n = 12; n <= 100; n += 8)
        for (const auto& b : enumerate_basis(n)) {
            const RationalPoly w = b.expand();
            EXPECT_TRUE(is_formal_weight_enumerator(w).holds) << b.name();
            EXPECT_TRUE(lemma22_checks(w).all()) << b.name();
        }
}

TEST(StructuralChecks, DetectsViolations) {
    const Lemma22Report r = lemma22_checks(w8());
    EXPECT_FALSE(r.degree_4_mod_8);
    EXPECT_FALSE(r.even_term_count);
    EXPECT_TRUE(r.palindromic);
    RationalPoly lop = w12();
    lop.set(4, -32);
    EXPECT_FALSE(lemma22_checks(lop).palindromic);
}

TEST(G8, GeneratorsAreInvariant) {
    EXPECT_TRUE(check_invariance_g8(w8()));
    EXPECT_TRUE(check_invariance_g8(w12()));
    EXPECT_TRUE(check_invariance_g8(w24p()));
}

TEST(G8, RandomCombinationsStayInvariant) {
    std::mt19937_64 rng(12);
    for (int k = 0; k < 10; ++k) {
        const RationalPoly w = oracle::random_rational(rng) * pow(w8(), 3) + oracle::random_rational(rng) * pow(w12(), 2);
        EXPECT_TRUE(check_invariance_g8(w));
    }
}

TEST(G8, RejectsNonInvariants) {
    RationalPoly x4_plus_y4(4);
    x4_plus_y4.set(0, 1);
    x4_plus_y4.set(4, 1);
    EXPECT_FALSE(check_invariance_g8(x4_plus_y4));
    RationalPoly w = w12();
    w.set(6, 1);
    EXPECT_FALSE(check_invariance_g8(w));
}

TEST(Basis, SizeMatchesFormula) {
    for (std::size_t n = 12; n <= 196; n += 8) {
        const auto basis = enumerate_basis(n);
        EXPECT_EQ(basis.size(), (n - 12) / 24 + 1) << n;
        for (const auto& b : basis) EXPECT_EQ(b.degree(), n);
        for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_GT(basis[i - 1].s, basis[i].s);
    }
}

TEST(Basis, RejectsOtherDegrees) {
    for (std::size_t n : {0U, 4U, 8U, 16U, 30U, 200U}) EXPECT_THROW(enumerate_basis(n), std::invalid_argument) << n;
    EXPECT_THROW(build_extremal(16), std::invalid_argument);
}

TEST(Extremal, SmallDegreesAreBasisElements) {
    EXPECT_EQ(build_extremal(12).expanded, w12());
    const FweCombination c20 = build_extremal(20);
    ASSERT_EQ(c20.terms.size(), 1U);
    EXPECT_EQ(c20.terms[0].first.name(), "W8*W12");
    EXPECT_EQ(c20.expanded, w8() * w12());
    EXPECT_EQ(build_extremal(28).expanded, pow(w8(), 2) * w12());
}

TEST(Extremal, CombinationCoefficients) {
    EXPECT_EQ(coefficients_of(build_extremal(36)), (std::vector<Rational>{Rational(11, 12), Rational(1, 12)}));
    EXPECT_EQ(coefficients_of(build_extremal(44)), (std::vector<Rational>{Rational(85, 108), Rational(23, 108)}));
    EXPECT_EQ(coefficients_of(build_extremal(52)), (std::vector<Rational>{Rational(71, 108), Rational(37, 108)}));
    EXPECT_EQ(coefficients_of(build_extremal(60)),
              (std::vector<Rational>{Rational(1045, 1944), Rational(880, 1944), Rational(19, 1944)}));
}

TEST(Extremal, Degree36Expansion) {
    const RationalPoly& w = build_extremal(36).expanded;
    EXPECT_EQ(w[8], Rational(-495));
    EXPECT_EQ(w[12], Rational(-19005));
    EXPECT_EQ(w[16], Rational(-111573));
    const RationalPoly a = pow(w8(), 3) * w12(), b = pow(w12(), 3);
    EXPECT_EQ(a[4], Rational(9));
    EXPECT_EQ(a[8], Rational(-828));
    EXPECT_EQ(b[4], Rational(-99));
    EXPECT_EQ(b[8], Rational(3168));
}

TEST(Extremal, SequenceReparametrisationAgrees) {
    for (std::size_t n = 12; n <= 124; n += 8) EXPECT_EQ(extremal_by_sequence(n), build_extremal(n).expanded) << n;
}

TEST(Extremal, MinimumWeightMatchesFormula) {
    for (std::size_t n = 12; n <= 196; n += 8) {
        const FweCombination c = build_extremal(n);
        EXPECT_EQ(c.d, extremal_min_weight(n));
        Rational sum;
        for (const auto& t : c.terms) sum += t.second;
        EXPECT_EQ(sum, Rational(1));
    }
}
