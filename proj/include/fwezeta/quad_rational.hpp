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

#ifndef FWEZETA_QUAD_RATIONAL_HPP
#define FWEZETA_QUAD_RATIONAL_HPP

#include <ostream>
#include <stdexcept>
#include <string>

#include "rational.hpp"

namespace fwezeta {

/// a + b*sqrt(D) with rational a, b.
///
/// The radicand is part of the type, so values from Q(i) and Q(sqrt 2) cannot be
/// mixed. Only D = -1 and D = 2 are supported; for both sqrt(D) is irrational,
/// hence the value is zero iff a = b = 0.
template <int D>
class QuadRational {
    static_assert(D == -1 || D == 2, "QuadRational supports only Q(i) and Q(sqrt 2)");

   public:
    static constexpr int radicand = D;

    QuadRational() = default;
    QuadRational(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
    QuadRational(int a) : a_(a) {}                  // NOLINT(google-explicit-constructor)
    QuadRational(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    /// sqrt(D) itself.
    static QuadRational root() { return {Rational(0), Rational(1)}; }

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& radical_part() const noexcept { return b_; }

    bool is_zero() const noexcept { return a_.is_zero() && b_.is_zero(); }
    bool is_rational() const noexcept { return b_.is_zero(); }

    QuadRational conjugate() const { return {a_, -b_}; }
    /// a^2 - D b^2, the field norm.
    Rational norm() const { return a_ * a_ - Rational(D) * b_ * b_; }

    QuadRational operator-() const { return {-a_, -b_}; }
    QuadRational& operator+=(const QuadRational& o) {
        a_ += o.a_;
        b_ += o.b_;
        return *this;
    }
    QuadRational& operator-=(const QuadRational& o) {
        a_ -= o.a_;
        b_ -= o.b_;
        return *this;
    }
    QuadRational& operator*=(const QuadRational& o) {
        if (o.b_.is_zero()) {
            a_ *= o.a_;
            b_ *= o.a_;
            return *this;
        }
        Rational a = a_ * o.a_ + Rational(D) * b_ * o.b_;
        Rational b = a_ * o.b_ + b_ * o.a_;
        a_ = std::move(a);
        b_ = std::move(b);
        return *this;
    }
    QuadRational& operator/=(const QuadRational& o) {
        const Rational n = o.norm();
        if (n.is_zero()) throw std::domain_error("QuadRational: division by zero");
        *this *= o.conjugate();
        a_ /= n;
        b_ /= n;
        return *this;
    }

    friend QuadRational operator+(QuadRational x, const QuadRational& y) { return x += y; }
    friend QuadRational operator-(QuadRational x, const QuadRational& y) { return x -= y; }
    friend QuadRational operator*(QuadRational x, const QuadRational& y) { return x *= y; }
    friend QuadRational operator/(QuadRational x, const QuadRational& y) { return x /= y; }
    friend bool operator==(const QuadRational& x, const QuadRational& y) = default;

    std::string to_string() const {
        if (b_.is_zero()) return a_.to_string();
        const std::string r = D == -1 ? "i" : "sqrt(2)";
        std::string s = a_.is_zero() ? "" : a_.to_string() + (b_.sign() > 0 ? " + " : " - ");
        const Rational mag = a_.is_zero() ? b_ : abs(b_);
        return s + (mag.is_one() ? "" : (mag == Rational(-1) ? "-" : mag.to_string() + "*")) + r;
    }
    friend std::ostream& operator<<(std::ostream& os, const QuadRational& v) { return os << v.to_string(); }

   private:
    Rational a_;
    Rational b_;
};

using GaussianRational = QuadRational<-1>;
using Sqrt2Rational = QuadRational<2>;

}  // namespace fwezeta

#endif  // FWEZETA_QUAD_RATIONAL_HPP
