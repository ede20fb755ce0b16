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

#ifndef FWEZETA_HOMOGENEOUS_POLY_HPP
#define FWEZETA_HOMOGENEOUS_POLY_HPP

#include <cstddef>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"
#include "uni_poly.hpp"

namespace fwezeta {

/// Homogeneous bivariate polynomial of nominal degree n,
///
///     c_0 x^n + c_1 x^{n-1} y + ... + c_n y^n,
///
/// stored densely. The degree is never reduced: the zero polynomial of degree n
/// is distinct from the zero polynomial of degree m != n.
template <class S>
class HomogeneousPoly {
   public:
    using scalar_type = S;

    HomogeneousPoly() : c_(1) {}
    explicit HomogeneousPoly(std::size_t degree) : c_(degree + 1) {}
    explicit HomogeneousPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("HomogeneousPoly: empty coefficient vector");
    }

    /// c * x^{n-i} y^i
    static HomogeneousPoly monomial(std::size_t degree, std::size_t y_power, S c = S(1)) {
        if (y_power > degree) throw std::invalid_argument("HomogeneousPoly::monomial: y power exceeds degree");
        HomogeneousPoly p(degree);
        p.c_[y_power] = std::move(c);
        return p;
    }

    std::size_t degree() const noexcept { return c_.size() - 1; }
    const std::vector<S>& coefficients() const noexcept { return c_; }
    /// Coefficient of x^{n-i} y^i.
    const S& operator[](std::size_t i) const { return c_.at(i); }
    void set(std::size_t i, S value) { c_.at(i) = std::move(value); }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!c.is_zero()) return false;
        return true;
    }
    std::size_t nonzero_terms() const {
        std::size_t k = 0;
        for (const auto& c : c_) k += c.is_zero() ? 0 : 1;
        return k;
    }

    template <class T>
    HomogeneousPoly<T> lift() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.emplace_back(c);
        return HomogeneousPoly<T>(std::move(v));
    }

    HomogeneousPoly operator-() const {
        HomogeneousPoly r(*this);
        for (auto& c : r.c_) c = -c;
        return r;
    }
    HomogeneousPoly& operator+=(const HomogeneousPoly& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
        return *this;
    }
    HomogeneousPoly& operator-=(const HomogeneousPoly& o) {
        require_same_degree(o);
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
        return *this;
    }
    HomogeneousPoly& operator*=(const S& s) {
        for (auto& c : c_) c *= s;
        return *this;
    }

    friend HomogeneousPoly operator+(HomogeneousPoly a, const HomogeneousPoly& b) { return a += b; }
    friend HomogeneousPoly operator-(HomogeneousPoly a, const HomogeneousPoly& b) { return a -= b; }
    friend HomogeneousPoly operator*(const S& s, HomogeneousPoly p) { return p *= s; }
    friend HomogeneousPoly operator*(HomogeneousPoly p, const S& s) { return p *= s; }

    /// Convolution of the coefficient vectors; degrees add.
    friend HomogeneousPoly operator*(const HomogeneousPoly& a, const HomogeneousPoly& b) {
        HomogeneousPoly r(a.degree() + b.degree());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j].is_zero()) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend bool operator==(const HomogeneousPoly& a, const HomogeneousPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const {
        const std::size_t n = degree();
        std::string s;
        for (std::size_t i = 0; i <= n; ++i) {
            if (c_[i].is_zero()) continue;
            const std::string coeff = c_[i].to_string();
            bool neg = false;
            std::string mag = coeff;
            if (coeff.find(' ') != std::string::npos) {
                mag = "(" + coeff + ")";
            } else if (coeff.front() == '-') {
                neg = true;
                mag = coeff.substr(1);
            }
            s += s.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
            std::string mono;
            if (n - i > 0) mono += "x" + (n - i > 1 ? "^" + std::to_string(n - i) : "");
            if (i > 0) mono += std::string(mono.empty() ? "" : "*") + "y" + (i > 1 ? "^" + std::to_string(i) : "");
            if (mono.empty())
                s += mag;
            else if (mag == "1")
                s += mono;
            else
                s += mag + "*" + mono;
        }
        return s.empty() ? "0" : s;
    }
    friend std::ostream& operator<<(std::ostream& os, const HomogeneousPoly& p) { return os << p.to_string(); }

   private:
    void require_same_degree(const HomogeneousPoly& o) const {
        if (o.degree() != degree())
            throw std::invalid_argument("HomogeneousPoly: degree mismatch (" + std::to_string(degree()) + " vs " +
                                        std::to_string(o.degree()) + ")");
    }

    std::vector<S> c_;
};

template <class S>
HomogeneousPoly<S> pow(const HomogeneousPoly<S>& p, unsigned k) {
    HomogeneousPoly<S> r = HomogeneousPoly<S>::monomial(0, 0);
    HomogeneousPoly<S> b = p;
    for (; k != 0; k >>= 1) {
        if (k & 1U) r = r * b;
        if (k > 1) b = b * b;
    }
    return r;
}

/// W(y, x).
template <class S>
HomogeneousPoly<S> swap_variables(const HomogeneousPoly<S>& p) {
    std::vector<S> v(p.coefficients().rbegin(), p.coefficients().rend());
    return HomogeneousPoly<S>(std::move(v));
}

/// 2x2 matrix (a b; c d).
template <class S>
struct Matrix2 {
    S a, b, c, d;

    static Matrix2 identity() { return {S(1), S(0), S(0), S(1)}; }
    Matrix2 transpose() const { return {a, c, b, d}; }

    template <class T>
    Matrix2<T> lift() const {
        return {T(a), T(b), T(c), T(d)};
    }

    friend Matrix2 operator*(const Matrix2& l, const Matrix2& r) {
        return {l.a * r.a + l.b * r.c, l.a * r.b + l.b * r.d, l.c * r.a + l.d * r.c, l.c * r.b + l.d * r.d};
    }
    friend Matrix2 operator*(const S& s, const Matrix2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// How a matrix acts on the variable pair.
///   column: A(x,y) -> A(ax + by, cx + dy)
///   row:    A(x,y) -> A((x,y) M) = A(ax + cy, bx + dy)
enum class Convention { row, column };

template <class S>
HomogeneousPoly<S> substitute_linear(const HomogeneousPoly<S>& w, const Matrix2<S>& m, Convention convention) {
    const std::size_t n = w.degree();
    // New x and y as linear forms, coefficient vectors over (x, y).
    const HomogeneousPoly<S> nx(convention == Convention::column ? std::vector<S>{m.a, m.b} : std::vector<S>{m.a, m.c});
    const HomogeneousPoly<S> ny(convention == Convention::column ? std::vector<S>{m.c, m.d} : std::vector<S>{m.b, m.d});

    std::vector<HomogeneousPoly<S>> xp{HomogeneousPoly<S>::monomial(0, 0)};
    std::vector<HomogeneousPoly<S>> yp{HomogeneousPoly<S>::monomial(0, 0)};
    for (std::size_t k = 1; k <= n; ++k) {
        xp.push_back(xp.back() * nx);
        yp.push_back(yp.back() * ny);
    }
    HomogeneousPoly<S> r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (w[i].is_zero()) continue;
        r += w[i] * (xp[n - i] * yp[i]);
    }
    return r;
}

/// p(d/dx, d/dy) applied to w; a monomial x^a y^b of p acts as the mixed
/// partial of order (a, b). Result degree is deg w - deg p.
template <class S>
HomogeneousPoly<S> apply_diff_operator(const HomogeneousPoly<S>& p, const HomogeneousPoly<S>& w) {
    const std::size_t m = p.degree();
    const std::size_t n = w.degree();
    if (m > n)
        throw std::invalid_argument("apply_diff_operator: operator degree " + std::to_string(m) +
                                    " exceeds polynomial degree " + std::to_string(n));
    HomogeneousPoly<S> r(n - m);
    for (std::size_t k = 0; k <= m; ++k) {
        if (p[k].is_zero()) continue;
        const std::size_t dx = m - k;
        const std::size_t dy = k;
        for (std::size_t i = dy; i <= n; ++i) {
            if (w[i].is_zero() || n - i < dx) continue;
            const Integer f = falling_factorial(static_cast<long>(n - i), static_cast<unsigned>(dx)) *
                              falling_factorial(static_cast<long>(i), static_cast<unsigned>(dy));
            r.set(i - dy, r[i - dy] + p[k] * w[i] * S(Rational(f)));
        }
    }
    return r;
}

namespace detail {

/// Index of the lowest nonzero y power; nullopt for zero.
template <class S>
std::optional<std::size_t> y_valuation(const HomogeneousPoly<S>& p) {
    for (std::size_t i = 0; i <= p.degree(); ++i)
        if (!p[i].is_zero()) return i;
    return std::nullopt;
}

/// A(x, 1) / y^v as a polynomial in x.
template <class S>
UniPoly<S> dehomogenize(const HomogeneousPoly<S>& p, std::size_t v) {
    const std::size_t n = p.degree();
    std::vector<S> u(n - v + 1);
    for (std::size_t i = v; i <= n; ++i) u[n - i] = p[i];
    return UniPoly<S>(std::move(u));
}

}  // namespace detail

/// Q with A = B * Q, or nullopt if B does not divide A.
template <class S>
std::optional<HomogeneousPoly<S>> exact_divide(const HomogeneousPoly<S>& a, const HomogeneousPoly<S>& b) {
    const auto vb = detail::y_valuation(b);
    if (!vb) throw std::domain_error("exact_divide: division by the zero polynomial");
    if (a.degree() < b.degree()) return std::nullopt;
    const std::size_t qdeg = a.degree() - b.degree();
    const auto va = detail::y_valuation(a);
    if (!va) return HomogeneousPoly<S>(qdeg);
    if (*vb > *va) return std::nullopt;

    const auto [quot, rem] = divmod(detail::dehomogenize(a, *va), detail::dehomogenize(b, *vb));
    if (!rem.is_zero()) return std::nullopt;
    // deg quot = (deg A - vA) - (deg B - vB); reattach y^{vA - vB}.
    const std::size_t shift = *va - *vb;
    HomogeneousPoly<S> q(qdeg);
    const std::size_t top = qdeg - shift;
    for (std::size_t e = 0; e <= top; ++e) q.set(top - e + shift, quot[e]);
    return q;
}

}  // namespace fwezeta

#endif  // FWEZETA_HOMOGENEOUS_POLY_HPP
