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

#ifndef FWEZETA_ZETA_HPP
#define FWEZETA_ZETA_HPP

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "homogeneous_poly.hpp"
#include "linear_solve.hpp"
#include "rational.hpp"
#include "uni_poly.hpp"

namespace fwezeta {

using RationalPoly = HomogeneousPoly<Rational>;
using RationalUniPoly = UniPoly<Rational>;

/// Smallest i >= 1 with a nonzero coefficient of x^{n-i} y^i.
inline std::size_t min_weight_index(const RationalPoly& w) {
    for (std::size_t i = 1; i <= w.degree(); ++i)
        if (!w[i].is_zero()) return i;
    throw std::invalid_argument("min_weight_index: polynomial is a pure power of x");
}

/// A polynomial x^n + sum_{i>=d} A_i x^{n-i} y^i together with n, d and q.
/// d is always derived from the polynomial.
struct EnumeratorContext {
    RationalPoly w;
    std::size_t n = 0;
    std::size_t d = 0;
    long q = 2;

    static EnumeratorContext make(RationalPoly w, long q = 2) {
        if (q < 2) throw std::invalid_argument("enumerator context: q must be at least 2, got " + std::to_string(q));
        if (!w[0].is_one()) throw std::invalid_argument("enumerator context: coefficient of x^n must be 1");
        EnumeratorContext ctx;
        ctx.n = w.degree();
        ctx.d = min_weight_index(w);
        ctx.w = std::move(w);
        ctx.q = q;
        return ctx;
    }
};

/// g = n/2 + 1 - d; may be negative.
inline long genus(std::size_t n, std::size_t d) {
    if (n % 2 != 0) throw std::invalid_argument("genus: degree " + std::to_string(n) + " is odd");
    return static_cast<long>(n / 2) + 1 - static_cast<long>(d);
}

struct ZetaPolynomial {
    RationalUniPoly p;
    EnumeratorContext context;
    std::optional<long> g;  // set when n is even
};

namespace detail {

inline ZetaPolynomial finish_zeta(std::vector<Rational> a, const EnumeratorContext& ctx) {
    ZetaPolynomial z{RationalUniPoly(std::move(a)), ctx, std::nullopt};
    if (ctx.n % 2 == 0) z.g = genus(ctx.n, ctx.d);
    return z;
}

}  // namespace detail

/// Duursma zeta polynomial: the unique P with deg P <= n - d such that the
/// T^{n-d} coefficient of P(T) (y(1-T) + xT)^n / ((1-T)(1-qT)) equals
/// (W - x^n)/(q - 1).
///
/// Writing f(T) = sum_m F_m T^m, the coefficient of x^e y^{n-e} in F_m is
///
///     Phi(m, e) = sum_{j=e}^{m} c_{m-j} C(n,j) C(j,e) (-1)^{j-e},
///     c_k = (q^{k+1} - 1)/(q - 1),
///
/// so F_m has x-degree m with leading coefficient C(n, m). Matching x^e y^{n-e}
/// for e = n-d, n-d-1, ..., 0 determines a_0, a_1, ..., a_{n-d} one at a time.
inline ZetaPolynomial compute_zeta(const EnumeratorContext& ctx) {
    if (ctx.q < 2) throw std::invalid_argument("compute_zeta: q must be at least 2");
    const std::size_t n = ctx.n;
    const std::size_t top = n - ctx.d;

    std::vector<Integer> c(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        Integer qk;
        mpz_ui_pow_ui(qk.get_mpz_t(), static_cast<unsigned long>(ctx.q), k + 1);
        c[k] = Integer((qk - 1) / (ctx.q - 1));
    }
    std::vector<Integer> choose_n(n + 1);
    for (std::size_t j = 0; j <= n; ++j) choose_n[j] = binomial(n, j);

    // phi[m][e], e <= m <= top
    std::vector<std::vector<Integer>> phi(top + 1);
    for (std::size_t m = 0; m <= top; ++m) {
        phi[m].resize(m + 1);
        for (std::size_t e = 0; e <= m; ++e) {
            Integer s = 0;
            Integer choose_je = 1;  // C(j, e) starting at j = e
            for (std::size_t j = e; j <= m; ++j) {
                if (j > e) choose_je = Integer(choose_je * j / (j - e));
                Integer term = c[m - j] * choose_n[j] * choose_je;
                if ((j - e) % 2 == 0)
                    s += term;
                else
                    s -= term;
            }
            phi[m][e] = s;
        }
    }

    const Rational inv_q1 = Rational(1) / Rational(ctx.q - 1);
    std::vector<Rational> a(top + 1);
    for (std::size_t k = 0; k <= top; ++k) {
        const std::size_t e = top - k;
        Rational rhs = ctx.w[n - e] * inv_q1;
        for (std::size_t i = 0; i < k; ++i)
            if (!a[i].is_zero()) rhs -= a[i] * Rational(phi[top - i][e]);
        a[k] = rhs / Rational(phi[e][e]);
    }
    return detail::finish_zeta(std::move(a), ctx);
}

namespace detail {

/// T-coefficients f_0 .. f_top of (y(1-T) + xT)^n / ((1-T)(1-qT)), by direct
/// series multiplication.
inline std::vector<RationalPoly> expand_generating_series(std::size_t n, long q, std::size_t top) {
    std::vector<Rational> ones(top + 1, Rational(1));
    std::vector<Rational> geometric(top + 1);
    Rational qk(1);
    for (std::size_t k = 0; k <= top; ++k, qk *= Rational(q)) geometric[k] = qk;
    const RationalUniPoly series = RationalUniPoly(ones) * RationalUniPoly(geometric);

    // (y + (x - y) T)^n, truncated at T^top.
    const RationalPoly y_form(std::vector<Rational>{Rational(0), Rational(1)});
    const RationalPoly xy_form(std::vector<Rational>{Rational(1), Rational(-1)});
    std::vector<RationalPoly> power{RationalPoly::monomial(0, 0)};
    for (std::size_t step = 1; step <= n; ++step) {
        std::vector<RationalPoly> next;
        const std::size_t len = std::min(power.size() + 1, top + 1);
        for (std::size_t k = 0; k < len; ++k) {
            RationalPoly t(step);
            if (k < power.size()) t += power[k] * y_form;
            if (k >= 1) t += power[k - 1] * xy_form;
            next.push_back(std::move(t));
        }
        power = std::move(next);
    }
    power.resize(top + 1, RationalPoly(n));

    std::vector<RationalPoly> f;
    for (std::size_t m = 0; m <= top; ++m) {
        RationalPoly fm(n);
        for (std::size_t j = 0; j <= m; ++j) fm += series[m - j] * power[j];
        f.push_back(std::move(fm));
    }
    return f;
}

}  // namespace detail

/// Cross-check for compute_zeta: expands the generating series directly and
/// solves the full dense system with generic elimination.
inline ZetaPolynomial zeta_oracle(const EnumeratorContext& ctx) {
    if (ctx.q < 2) throw std::invalid_argument("zeta_oracle: q must be at least 2");
    const std::size_t n = ctx.n;
    const std::size_t top = n - ctx.d;
    const auto f = detail::expand_generating_series(n, ctx.q, top);
    const Rational inv_q1 = Rational(1) / Rational(ctx.q - 1);

    RationalMatrix m(top + 1, std::vector<Rational>(top + 1));
    std::vector<Rational> rhs(top + 1);
    for (std::size_t row = 0; row <= top; ++row) {
        const std::size_t idx = ctx.d + row;
        for (std::size_t i = 0; i <= top; ++i) m[row][i] = f[top - i][idx];
        rhs[row] = ctx.w[idx] * inv_q1;
    }
    return detail::finish_zeta(solve_linear(std::move(m), std::move(rhs)), ctx);
}

/// The T^{n-d} coefficient of P(T) f(T), expanded independently of both solvers.
inline RationalPoly zeta_condition_lhs(const RationalUniPoly& p, const EnumeratorContext& ctx) {
    const std::size_t top = ctx.n - ctx.d;
    const auto f = detail::expand_generating_series(ctx.n, ctx.q, top);
    RationalPoly r(ctx.n);
    for (std::size_t i = 0; i <= top; ++i)
        if (!p[i].is_zero()) r += p[i] * f[top - i];
    return r;
}

/// q^{-n/2} W(x + (q-1)y, x - y), exact over the rationals.
inline RationalPoly macwilliams_transform(const RationalPoly& w, long q = 2) {
    if (q < 2) throw std::invalid_argument("macwilliams_transform: q must be at least 2");
    if (w.degree() % 2 != 0)
        throw std::invalid_argument("macwilliams_transform: degree " + std::to_string(w.degree()) + " is odd");
    const Matrix2<Rational> m{Rational(1), Rational(q - 1), Rational(1), Rational(-1)};
    return pow(Rational(q), -static_cast<long>(w.degree() / 2)) * substitute_linear(w, m, Convention::column);
}

/// +1 or -1 when P(T) = eps * P(1/(qT)) q^g T^{2g} with deg P = 2g, i.e.
/// a_{2g-i} = eps q^{g-i} a_i for all i; nullopt otherwise.
inline std::optional<int> functional_equation_sign(const ZetaPolynomial& z) {
    if (!z.g || *z.g < 0) return std::nullopt;
    const long g = *z.g;
    if (z.p.degree() != 2 * g) return std::nullopt;
    const Rational q(z.context.q);
    const Rational& a0 = z.p[0];
    if (a0.is_zero()) return std::nullopt;
    const Rational ratio = z.p[static_cast<std::size_t>(2 * g)] / (pow(q, g) * a0);
    int eps = 0;
    if (ratio == Rational(1))
        eps = 1;
    else if (ratio == Rational(-1))
        eps = -1;
    else
        return std::nullopt;
    for (long i = 0; i <= 2 * g; ++i) {
        const Rational lhs = z.p[static_cast<std::size_t>(2 * g - i)];
        const Rational rhs = Rational(eps) * pow(q, g - i) * z.p[static_cast<std::size_t>(i)];
        if (lhs != rhs) return std::nullopt;
    }
    return eps;
}

}  // namespace fwezeta

#endif  // FWEZETA_ZETA_HPP
