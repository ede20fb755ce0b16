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

#ifndef FWEZETA_ROOTS_HPP
#define FWEZETA_ROOTS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "bigfloat.hpp"
#include "rational.hpp"
#include "uni_poly.hpp"

namespace fwezeta {

class RootFindingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

struct RootSet {
    std::vector<BigComplex> roots;
    long precision_bits = 0;
    /// |P(z)| / sum |a_k| |z|^k per root: relative backward error.
    std::vector<double> residual_bound;
    int iterations = 0;
};

struct RootFinderOptions {
    long precision_bits = 256;
    int max_iterations = 1000;
    int polish_sweeps = 2;
};

namespace detail {

/// P(z) and P'(z) by Horner.
inline void horner(const std::vector<BigComplex>& a, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    const mpfr_prec_t bits = z.precision();
    p = BigComplex(bits);
    dp = BigComplex(bits);
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        dp = dp * z + p;
        p = p * z + *it;
    }
}

}  // namespace detail

/// All complex roots of p (with multiplicity) by Aberth-Ehrlich simultaneous
/// iteration at the requested working precision. Converged when every
/// correction is below 2^{-bits/2} relative to max(1, |z|); a few polishing
/// sweeps follow. Exact zero roots are split off before iterating.
inline RootSet find_roots(const UniPoly<Rational>& p, const RootFinderOptions& opts = {}) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: polynomial must have degree >= 1");
    if (opts.precision_bits < 53) throw std::invalid_argument("find_roots: precision must be at least 53 bits");
    const auto bits = static_cast<mpfr_prec_t>(opts.precision_bits);

    RootSet out;
    out.precision_bits = opts.precision_bits;

    std::size_t zeros = 0;
    while (p[zeros].is_zero()) ++zeros;
    for (std::size_t k = 0; k < zeros; ++k) out.roots.emplace_back(bits);

    // Monic coefficients of p / T^zeros.
    const auto deg = static_cast<std::size_t>(p.degree());
    const std::size_t m = deg - zeros;
    std::vector<BigComplex> a;
    std::vector<BigFloat> abs_a;
    for (std::size_t k = zeros; k <= deg; ++k) {
        BigFloat c(p[k] / p.leading(), bits);
        abs_a.push_back(abs(c));
        a.emplace_back(c, BigFloat(bits));
    }

    std::vector<BigComplex> z;
    if (m > 0) {
        const BigFloat radius = root(abs_a.front(), static_cast<unsigned long>(m));
        const BigFloat two_pi = BigFloat(2.0, bits) * BigFloat::pi(bits);
        const BigFloat offset(0.7, bits);
        for (std::size_t k = 0; k < m; ++k) {
            const BigFloat theta = two_pi * BigFloat(static_cast<double>(k), bits) /
                                       BigFloat(static_cast<double>(m), bits) +
                                   offset;
            z.emplace_back(radius * cos(theta), radius * sin(theta));
        }

        const BigFloat tol = BigFloat::exp2(-opts.precision_bits / 2, bits);
        const BigFloat one(1.0, bits);
        int sweeps_after = -1;
        BigComplex pv(bits), dpv(bits);
        for (int it = 0;; ++it) {
            if (it >= opts.max_iterations)
                throw RootFindingError("find_roots: no convergence after " + std::to_string(opts.max_iterations) +
                                       " iterations (degree " + std::to_string(deg) + ")");
            bool converged = true;
            for (std::size_t i = 0; i < m; ++i) {
                detail::horner(a, z[i], pv, dpv);
                if (pv.re.is_zero() && pv.im.is_zero()) continue;
                BigComplex sum(bits);
                for (std::size_t j = 0; j < m; ++j) {
                    if (j == i) continue;
                    const BigComplex diff = z[i] - z[j];
                    if (diff.re.is_zero() && diff.im.is_zero()) continue;
                    sum = sum + BigComplex(one, BigFloat(bits)) / diff;
                }
                const BigComplex ratio = pv / dpv;
                const BigComplex w = ratio / (BigComplex(one, BigFloat(bits)) - ratio * sum);
                z[i] = z[i] - w;
                const BigFloat mod = z[i].modulus();
                if (tol * (one < mod ? mod : one) < w.modulus()) converged = false;
            }
            out.iterations = it + 1;
            if (sweeps_after >= 0) {
                if (++sweeps_after >= opts.polish_sweeps) break;
            } else if (converged) {
                sweeps_after = 0;
                if (opts.polish_sweeps == 0) break;
            }
        }
    }

    for (auto& r : z) out.roots.push_back(std::move(r));

    BigComplex pv(bits), dpv(bits);
    for (const auto& r : out.roots) {
        detail::horner(a, r, pv, dpv);
        BigFloat denom(bits);
        BigFloat mod = r.modulus();
        BigFloat power(1.0, bits);
        for (const auto& c : abs_a) {
            denom += c * power;
            power *= mod;
        }
        // Zero roots split off exactly.
        out.residual_bound.push_back(r.re.is_zero() && r.im.is_zero() && zeros > 0 ? 0.0
                                                                                   : (pv.modulus() / denom).to_double());
    }
    return out;
}

}  // namespace fwezeta

#endif  // FWEZETA_ROOTS_HPP
