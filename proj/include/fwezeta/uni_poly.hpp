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

#ifndef FWEZETA_UNI_POLY_HPP
#define FWEZETA_UNI_POLY_HPP

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace fwezeta {

/// Dense univariate polynomial a_0 + a_1 T + ... + a_m T^m in canonical form
/// (no trailing zero coefficients; the zero polynomial has no coefficients).
template <class S>
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<S> coeffs) : c_(std::move(coeffs)) { trim(); }
    UniPoly(std::initializer_list<S> coeffs) : c_(coeffs) { trim(); }

    static UniPoly monomial(std::size_t power, S c) {
        std::vector<S> v(power + 1);
        v[power] = std::move(c);
        return UniPoly(std::move(v));
    }

    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    const std::vector<S>& coefficients() const noexcept { return c_; }

    S operator[](std::size_t i) const { return i < c_.size() ? c_[i] : S{}; }
    const S& leading() const {
        if (c_.empty()) throw std::domain_error("UniPoly: zero polynomial has no leading coefficient");
        return c_.back();
    }

    S evaluate(const S& t) const {
        S acc{};
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
        return acc;
    }

    template <class T>
    UniPoly<T> lift() const {
        std::vector<T> v;
        v.reserve(c_.size());
        for (const auto& c : c_) v.emplace_back(c);
        return UniPoly<T>(std::move(v));
    }

    UniPoly operator-() const {
        std::vector<S> v(c_);
        for (auto& c : v) c = -c;
        return UniPoly(std::move(v));
    }
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
        std::vector<S> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
        return UniPoly(std::move(v));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<S> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i].is_zero()) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
        }
        return UniPoly(std::move(v));
    }
    friend UniPoly operator*(const S& s, const UniPoly& p) {
        std::vector<S> v(p.c_);
        for (auto& c : v) c *= s;
        return UniPoly(std::move(v));
    }
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "T") const {
        if (c_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!s.empty()) s += " + ";
            s += "(" + c_[i].to_string() + ")";
            if (i > 0) s += "*" + var + (i > 1 ? "^" + std::to_string(i) : "");
        }
        return s;
    }
    friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.to_string(); }

   private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<S> c_;
};

/// Euclidean division over a field: returns (quotient, remainder).
template <class S>
std::pair<UniPoly<S>, UniPoly<S>> divmod(const UniPoly<S>& a, const UniPoly<S>& b) {
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly<S>{}, a};
    std::vector<S> rem = a.coefficients();
    const auto db = static_cast<std::size_t>(b.degree());
    std::vector<S> quot(rem.size() - db);
    const S& lead = b.leading();
    for (std::size_t k = quot.size(); k-- > 0;) {
        if (rem[k + db].is_zero()) continue;
        S f = rem[k + db] / lead;
        for (std::size_t j = 0; j <= db; ++j) rem[k + j] -= f * b[j];
        quot[k] = std::move(f);
    }
    return {UniPoly<S>(std::move(quot)), UniPoly<S>(std::move(rem))};
}

}  // namespace fwezeta

#endif  // FWEZETA_UNI_POLY_HPP
