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

#ifndef FWEZETA_ANALYSIS_HPP
#define FWEZETA_ANALYSIS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bigfloat.hpp"
#include "fwe.hpp"
#include "homogeneous_poly.hpp"
#include "quad_rational.hpp"
#include "rational.hpp"
#include "roots.hpp"
#include "uni_poly.hpp"
#include "zeta.hpp"

namespace fwezeta {

// ---------------------------------------------------------------------------
// Riemann hypothesis and root pairing

struct RhReport {
    bool holds = false;
    double target_modulus = 0;  // 1/sqrt(q)
    double tolerance = 0;
    /// max over roots of | |z| sqrt(q) - 1 |
    double max_relative_deviation = 0;
    std::vector<std::complex<double>> offending_roots;
    std::size_t root_count = 0;
    long precision_bits = 0;
};

inline RhReport rh_from_roots(const RootSet& roots, long q, double tolerance) {
    const auto bits = static_cast<mpfr_prec_t>(roots.precision_bits);
    const BigFloat sqrt_q = sqrt(BigFloat(Rational(q), bits));
    const BigFloat one(1.0, bits);
    RhReport r;
    r.tolerance = tolerance;
    r.target_modulus = (one / sqrt_q).to_double();
    r.root_count = roots.roots.size();
    r.precision_bits = roots.precision_bits;
    for (const auto& z : roots.roots) {
        const double dev = abs(z.modulus() * sqrt_q - one).to_double();
        r.max_relative_deviation = std::max(r.max_relative_deviation, dev);
        if (dev > tolerance) r.offending_roots.push_back(z.to_complex());
    }
    r.holds = r.max_relative_deviation <= tolerance;
    return r;
}

/// Every root of P has modulus 1/sqrt(q) up to `tolerance` on | |z| sqrt(q) - 1 |.
inline RhReport check_rh(const ZetaPolynomial& z, double tolerance = 1e-9, long precision_bits = 256) {
    if (z.p.degree() < 1) {
        RhReport r;
        r.holds = true;  // no zeros
        r.tolerance = tolerance;
        r.target_modulus = 1.0 / std::sqrt(static_cast<double>(z.context.q));
        r.precision_bits = precision_bits;
        return r;
    }
    return rh_from_roots(find_roots(z.p, {.precision_bits = precision_bits}), z.context.q, tolerance);
}

struct PairingReport {
    bool paired = false;
    std::size_t pairs = 0;  // alpha != 1/(q alpha)
    std::size_t fixed = 0;  // roots at +-1/sqrt(q)

    explicit operator bool() const noexcept { return paired; }
};

inline double default_pairing_tolerance(long q) { return 1e-6 / std::sqrt(static_cast<double>(q)); }

inline PairingReport pairing_from_roots(const RootSet& roots, long q, double tolerance) {
    const auto bits = static_cast<mpfr_prec_t>(roots.precision_bits);
    const BigFloat tol(tolerance, bits);
    const BigComplex one(BigFloat(1.0, bits), BigFloat(bits));
    const BigComplex qc(BigFloat(Rational(q), bits), BigFloat(bits));
    const auto& z = roots.roots;

    PairingReport rep;
    std::vector<bool> used(z.size(), false);
    for (std::size_t i = 0; i < z.size(); ++i) {
        if (used[i]) continue;
        if (z[i].re.is_zero() && z[i].im.is_zero()) return rep;
        const BigComplex partner = one / (qc * z[i]);
        used[i] = true;
        if ((z[i] - partner).modulus() <= tol) {
            ++rep.fixed;
            continue;
        }
        std::optional<std::size_t> best;
        BigFloat best_dist(bits);
        for (std::size_t j = 0; j < z.size(); ++j) {
            if (used[j]) continue;
            BigFloat dist = (z[j] - partner).modulus();
            if (dist <= tol && (!best || dist < best_dist)) {
                best = j;
                best_dist = std::move(dist);
            }
        }
        if (!best) return rep;
        used[*best] = true;
        ++rep.pairs;
    }
    rep.paired = true;
    return rep;
}

/// Matches each root alpha with a distinct root within `tolerance` of
/// 1/(q alpha); roots equal to their own partner (+-1/sqrt(q)) pair with
/// themselves.
inline PairingReport verify_root_pairing(const ZetaPolynomial& z, std::optional<double> tolerance = std::nullopt,
                                         long precision_bits = 256) {
    const double tol = tolerance.value_or(default_pairing_tolerance(z.context.q));
    if (z.p.degree() < 1) return {true, 0, 0};
    return pairing_from_roots(find_roots(z.p, {.precision_bits = precision_bits}), z.context.q, tol);
}

/// Exact multiplicities of 1/sqrt(2) and -1/sqrt(2) as roots of p, by repeated
/// division in Q(sqrt 2)[T].
inline std::pair<unsigned, unsigned> exact_sqrt2_multiplicities(const UniPoly<Rational>& p) {
    if (p.is_zero()) throw std::invalid_argument("exact_sqrt2_multiplicities: zero polynomial");
    using Q2 = Sqrt2Rational;
    auto multiplicity = [&](const Q2& r) {
        UniPoly<Q2> rest = p.lift<Q2>();
        const UniPoly<Q2> linear{-r, Q2(1)};
        unsigned m = 0;
        while (rest.degree() >= 1) {
            auto [quot, rem] = divmod(rest, linear);
            if (!rem.is_zero()) break;
            rest = std::move(quot);
            ++m;
        }
        return m;
    };
    const Q2 inv_sqrt2(Rational(0), Rational(1, 2));
    return {multiplicity(inv_sqrt2), multiplicity(-inv_sqrt2)};
}

// ---------------------------------------------------------------------------
// Divisibility of xy(x^4 - y^4)(D) W

/// xy(x^4 - y^4) = x^5 y - x y^5
inline RationalPoly divisibility_operator() {
    RationalPoly p(6);
    p.set(1, 1);
    p.set(5, -1);
    return p;
}

struct FactorCheck {
    std::string name;
    RationalPoly factor;
    bool divides = false;
};

struct DivisibilityReport {
    std::size_t d = 0;
    RationalPoly derivative_poly;
    std::vector<FactorCheck> divisor_factors;  // last entry is the full product
    std::optional<RationalPoly> quotient;
    bool passed = false;
};

/// (xy)^{d-5} (x^4 - y^4)^{d-5} (x^4 + y^4)(x^4 + 6x^2y^2 + y^4) divides
/// xy(x^4 - y^4)(D) W, for a formal weight enumerator W with d >= 8.
inline DivisibilityReport check_divisibility_theorem(const RationalPoly& w) {
    DivisibilityReport rep;
    rep.d = min_weight_index(w);
    if (rep.d < 8)
        throw std::domain_error("divisibility theorem needs d >= 8, got d = " + std::to_string(rep.d));
    rep.derivative_poly = apply_diff_operator(divisibility_operator(), w);

    const unsigned e = static_cast<unsigned>(rep.d - 5);
    RationalPoly x4_minus_y4(4), x4_plus_y4(4), sixes(4);
    x4_minus_y4.set(0, 1);
    x4_minus_y4.set(4, -1);
    x4_plus_y4.set(0, 1);
    x4_plus_y4.set(4, 1);
    sixes.set(0, 1);
    sixes.set(2, 6);
    sixes.set(4, 1);
    const RationalPoly xy_e = RationalPoly::monomial(2 * e, e);
    const RationalPoly diff_e = pow(x4_minus_y4, e);
    const std::string es = std::to_string(e);

    rep.divisor_factors = {
        {"(xy)^" + es, xy_e, false},
        {"(x^4-y^4)^" + es, diff_e, false},
        {"(xy)^" + es + "(x^4-y^4)^" + es, xy_e * diff_e, false},
        {"x^4+y^4", x4_plus_y4, false},
        {"x^4+6x^2y^2+y^4", sixes, false},
        {"full product", xy_e * diff_e * x4_plus_y4 * sixes, false},
    };
    bool all = true;
    for (auto& f : rep.divisor_factors) {
        auto q = exact_divide(rep.derivative_poly, f.factor);
        f.divides = q.has_value();
        all = all && f.divides;
        if (&f == &rep.divisor_factors.back() && q) rep.quotient = std::move(q);
    }
    rep.passed = all;
    return rep;
}

/// Chain rule for a linear change of variables (u, v) = (x, y) M:
///
///     [p((u,v) M^T)(D) A](u,v) evaluated at (u,v) = (x,y) M  ==  p(x,y)(D) [A((x,y) M)].
///
/// p((u,v) M^T) is column-convention substitution of M into p.
template <class S>
bool lemma51_check(const HomogeneousPoly<S>& p, const HomogeneousPoly<S>& a, const Matrix2<S>& m) {
    const auto lhs_uv = apply_diff_operator(substitute_linear(p, m, Convention::column), a);
    const auto lhs = substitute_linear(lhs_uv, m, Convention::row);
    const auto rhs = apply_diff_operator(p, substitute_linear(a, m, Convention::row));
    return lhs == rhs;
}

/// x^n + y^n + sum_j A_{4j}(x^{n-4j} y^{4j} + x^{4j} y^{n-4j}) with n = 4 (mod 8).
inline bool is_symmetric_form(const RationalPoly& w) {
    const std::size_t n = w.degree();
    if (n % 8 != 4 || !w[0].is_one() || !w[n].is_one()) return false;
    for (std::size_t i = 0; i <= n; ++i) {
        if (w[i] != w[n - i]) return false;
        if (i % 4 != 0 && !w[i].is_zero()) return false;
    }
    return true;
}

/// xy(x^4 - y^4)(D) W from the explicit termwise formula
///
///     sum_j A_{4j} { (n-4j)_4 4j(n-4j-4) (x^{n-4j-5} y^{4j-1} - x^{4j-1} y^{n-4j-5})
///                  + (4j)_4 (n-4j) 4(j-1) (x^{4j-5} y^{n-4j-1} - x^{n-4j-1} y^{4j-5}) }.
///
/// The operator has a y-derivative and an x-derivative in every term, so it
/// annihilates x^n and y^n; those contribute nothing.
inline RationalPoly diff_op_closed_form_oracle(const RationalPoly& w) {
    if (!is_symmetric_form(w)) throw std::invalid_argument("diff_op_closed_form_oracle: W is not in symmetric form");
    const long n = static_cast<long>(w.degree());
    RationalPoly r(static_cast<std::size_t>(n - 6));
    auto add = [&](long y_power, const Rational& c) {
        if (c.is_zero()) return;
        const auto idx = static_cast<std::size_t>(y_power);
        r.set(idx, r[idx] + c);
    };
    for (long j = 1; 8 * j <= n - 4; ++j) {
        const Rational& a = w[static_cast<std::size_t>(4 * j)];
        if (a.is_zero()) continue;
        const Rational k1 = a * Rational(Integer(falling_factorial(n - 4 * j, 4) * (4 * j) * (n - 4 * j - 4)));
        const Rational k2 = a * Rational(Integer(falling_factorial(4 * j, 4) * (n - 4 * j) * (4 * (j - 1))));
        add(4 * j - 1, k1);
        add(n - 4 * j - 5, -k1);
        add(n - 4 * j - 1, k2);
        add(4 * j - 5, -k2);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Mallows-Sloane type bounds

enum class BoundKind { type2, fwe };

struct BoundReport {
    BoundKind kind = BoundKind::fwe;
    std::size_t n = 0;
    std::size_t bound = 0;
    std::optional<std::size_t> observed_d;
    bool tight = false;
    bool respected = true;
};

namespace detail {
inline long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0)) ? 1 : 0); }
}  // namespace detail

/// type2: 4 floor(n/24) + 4 for 8 | n.  fwe: 4 floor((n-12)/24) + 4 for n = 4 (mod 8).
inline BoundReport mallows_sloane_bound(BoundKind kind, std::size_t n, std::optional<std::size_t> observed_d = {}) {
    if (n == 0) throw std::invalid_argument("bound: degree must be positive");
    BoundReport r;
    r.kind = kind;
    r.n = n;
    const long ln = static_cast<long>(n);
    if (kind == BoundKind::type2) {
        if (n % 8 != 0) throw std::invalid_argument("type2 bound needs 8 | n, got n = " + std::to_string(n));
        r.bound = static_cast<std::size_t>(4 * detail::floor_div(ln, 24) + 4);
    } else {
        if (n % 8 != 4) throw std::invalid_argument("fwe bound needs n = 4 (mod 8), got n = " + std::to_string(n));
        r.bound = static_cast<std::size_t>(4 * detail::floor_div(ln - 12, 24) + 4);
    }
    if (observed_d) {
        r.observed_d = observed_d;
        r.tight = *observed_d == r.bound;
        r.respected = *observed_d <= r.bound;
    }
    return r;
}

}  // namespace fwezeta

#endif  // FWEZETA_ANALYSIS_HPP
