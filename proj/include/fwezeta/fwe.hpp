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

#ifndef FWEZETA_FWE_HPP
#define FWEZETA_FWE_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "homogeneous_poly.hpp"
#include "linear_solve.hpp"
#include "quad_rational.hpp"
#include "rational.hpp"
#include "zeta.hpp"

namespace fwezeta {

enum class Generator { W8, W12, W24prime };

inline RationalPoly generator(Generator g) {
    switch (g) {
        case Generator::W8: {
            RationalPoly p(8);
            p.set(0, 1);
            p.set(4, 14);
            p.set(8, 1);
            return p;
        }
        case Generator::W12: {
            RationalPoly p(12);
            p.set(0, 1);
            p.set(4, -33);
            p.set(8, -33);
            p.set(12, 1);
            return p;
        }
        case Generator::W24prime: {
            // x^4 y^4 (x^4 - y^4)^4
            RationalPoly x4_minus_y4(4);
            x4_minus_y4.set(0, 1);
            x4_minus_y4.set(4, -1);
            return RationalPoly::monomial(8, 4) * pow(x4_minus_y4, 4);
        }
    }
    throw std::invalid_argument("unknown generator");
}

inline Generator generator_from_name(std::string_view name) {
    if (name == "W8") return Generator::W8;
    if (name == "W12") return Generator::W12;
    if (name == "W24prime") return Generator::W24prime;
    throw std::invalid_argument("unknown generator '" + std::string(name) + "'");
}

/// W8^s * W12^(2t+1).
struct FweBasisElement {
    unsigned s = 0;
    unsigned t = 0;

    std::size_t degree() const { return 8 * s + 12 * (2 * t + 1); }
    RationalPoly expand() const { return pow(generator(Generator::W8), s) * pow(generator(Generator::W12), 2 * t + 1); }
    std::string name() const {
        std::string r;
        if (s > 0) r += "W8" + (s > 1 ? "^" + std::to_string(s) : std::string());
        if (!r.empty()) r += "*";
        r += "W12" + (t > 0 ? "^" + std::to_string(2 * t + 1) : std::string());
        return r;
    }
    friend bool operator==(const FweBasisElement&, const FweBasisElement&) = default;
};

struct FweCombination {
    std::size_t n = 0;
    std::vector<std::pair<FweBasisElement, Rational>> terms;
    RationalPoly expanded;
    std::size_t d = 0;
};

struct FweVerdict {
    bool holds = true;
    std::vector<std::string> reasons;  // one per failed condition

    explicit operator bool() const noexcept { return holds; }
    void fail(std::string why) {
        holds = false;
        reasons.push_back(std::move(why));
    }
};

/// (i) A_i != 0 implies 4 | i, and (ii) the binary MacWilliams transform
/// negates W.
inline FweVerdict is_formal_weight_enumerator(const RationalPoly& w) {
    FweVerdict v;
    if (!w[0].is_one()) v.fail("coefficient of x^n is " + w[0].to_string() + ", expected 1");
    for (std::size_t i = 0; i <= w.degree(); ++i) {
        if (i % 4 != 0 && !w[i].is_zero()) {
            v.fail("exponent condition: A_" + std::to_string(i) + " = " + w[i].to_string() + " with 4 not dividing " +
                   std::to_string(i));
            break;
        }
    }
    if (w.degree() % 2 != 0) {
        v.fail("anti-invariance condition: odd degree " + std::to_string(w.degree()));
    } else {
        const RationalPoly t = macwilliams_transform(w, 2);
        if (t != -w) v.fail(t == w ? "anti-invariance condition: MacWilliams transform fixes W (Type II-like)"
                                   : "anti-invariance condition: MacWilliams transform is not -W");
    }
    return v;
}

struct Lemma22Report {
    bool degree_4_mod_8 = false;
    bool even_term_count = false;
    bool palindromic = false;

    bool all() const noexcept { return degree_4_mod_8 && even_term_count && palindromic; }
};

inline Lemma22Report lemma22_checks(const RationalPoly& w) {
    Lemma22Report r;
    const std::size_t n = w.degree();
    r.degree_4_mod_8 = n % 8 == 4;
    r.even_term_count = w.nonzero_terms() % 2 == 0;
    r.palindromic = swap_variables(w) == w;
    return r;
}

/// Exact invariance under the two generators of G8, acting by
/// A(x,y) -> A(ax + by, cx + dy) over Q(i).
inline bool check_invariance_g8(const RationalPoly& w) {
    using G = GaussianRational;
    const auto lifted = w.lift<G>();
    const G half_one_minus_i(Rational(1, 2), Rational(-1, 2));
    const Matrix2<G> sigma1 = half_one_minus_i * Matrix2<G>{G(1), G(-1), G(1), G(1)};
    const Matrix2<G> sigma2{-G::root(), G(0), G(0), G(1)};
    return substitute_linear(lifted, sigma2, Convention::column) == lifted &&
           substitute_linear(lifted, sigma1, Convention::column) == lifted;
}

/// 4 floor((n - 12)/24) + 4 for n >= 12.
inline std::size_t extremal_min_weight(std::size_t n) { return 4 * ((n - 12) / 24) + 4; }

/// All (s, t) with 8s + 12(2t + 1) = n, by descending s.
inline std::vector<FweBasisElement> enumerate_basis(std::size_t n) {
    if (n < 12 || n % 8 != 4)
        throw std::invalid_argument("no formal weight enumerator basis in degree " + std::to_string(n) +
                                    " (need n = 4 mod 8, n >= 12)");
    std::vector<FweBasisElement> basis;
    for (std::size_t s = (n - 12) / 8 + 1; s-- > 0;) {
        const std::size_t rest = n - 8 * s;
        if (rest >= 12 && (rest - 12) % 24 == 0)
            basis.push_back({static_cast<unsigned>(s), static_cast<unsigned>((rest - 12) / 24)});
    }
    return basis;
}

/// The combination sum a_r W8^s W12^(2t+1) with sum a_r = 1 whose
/// coefficients of x^{n-4j} y^{4j}, j = 1..m, vanish (m + 1 = basis size).
inline FweCombination build_extremal(std::size_t n) {
    const auto basis = enumerate_basis(n);
    const std::size_t size = basis.size();
    std::vector<RationalPoly> polys;
    polys.reserve(size);
    for (const auto& b : basis) polys.push_back(b.expand());

    RationalMatrix m(size, std::vector<Rational>(size));
    std::vector<Rational> rhs(size);
    for (std::size_t r = 0; r < size; ++r) m[0][r] = 1;
    rhs[0] = 1;
    for (std::size_t j = 1; j < size; ++j)
        for (std::size_t r = 0; r < size; ++r) m[j][r] = polys[r][4 * j];

    std::vector<Rational> a;
    try {
        a = solve_linear(std::move(m), std::move(rhs));
    } catch (const SingularMatrixError&) {
        throw std::runtime_error("no unique extremal combination in degree " + std::to_string(n));
    }

    FweCombination c;
    c.n = n;
    c.expanded = RationalPoly(n);
    for (std::size_t r = 0; r < size; ++r) {
        c.expanded += a[r] * polys[r];
        c.terms.emplace_back(basis[r], a[r]);
    }
    c.d = min_weight_index(c.expanded);
    if (c.d != extremal_min_weight(n))
        throw std::logic_error("extremal construction in degree " + std::to_string(n) + " reached d = " +
                               std::to_string(c.d) + ", expected " + std::to_string(extremal_min_weight(n)));
    return c;
}

}  // namespace fwezeta

#endif  // FWEZETA_FWE_HPP
