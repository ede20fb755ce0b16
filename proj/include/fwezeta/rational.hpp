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

#ifndef FWEZETA_RATIONAL_HPP
#define FWEZETA_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fwezeta {

using Integer = mpz_class;

/// Exact fraction, always kept in lowest terms with a positive denominator.
class Rational {
   public:
    Rational() = default;
    Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(int v) : q_(static_cast<long>(v)) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        q_.get_num() = num;
        q_.get_den() = den;
        q_.canonicalize();
    }
    explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Parses the canonical text form: `-?N` or `-?N/D`, lowest terms, D > 1.
    static Rational parse(std::string_view text);

    Integer numerator() const { return q_.get_num(); }
    Integer denominator() const { return q_.get_den(); }
    const mpq_class& raw() const noexcept { return q_; }

    bool is_zero() const noexcept { return sgn(q_) == 0; }
    bool is_one() const noexcept { return q_ == 1; }
    bool is_integer() const noexcept { return q_.get_den() == 1; }
    int sign() const noexcept { return sgn(q_); }

    std::string to_string() const { return q_.get_str(); }
    double to_double() const { return q_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-q_), Raw{}); }
    Rational& operator+=(const Rational& o) {
        q_ += o.q_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        q_ -= o.q_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        q_ *= o.q_;
        return *this;
    }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

   private:
    struct Raw {};
    Rational(mpq_class q, Raw) : q_(std::move(q)) {}

    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

inline Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) return pow(Rational(1) / base, -exponent);
    Rational result(1);
    Rational b = base;
    for (unsigned long e = static_cast<unsigned long>(exponent); e != 0; e >>= 1) {
        if (e & 1U) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// (a)_k = a (a-1) ... (a-k+1); zero whenever 0 <= a < k.
inline Integer falling_factorial(long a, unsigned k) {
    Integer r(1);
    for (unsigned i = 0; i < k; ++i) r *= (a - static_cast<long>(i));
    return r;
}

inline Rational Rational::parse(std::string_view text) {
    auto digits_ok = [](std::string_view s) {
        if (s.empty()) return false;
        for (char c : s)
            if (c < '0' || c > '9') return false;
        return s.size() == 1 || s.front() != '0';
    };
    const std::string original(text);
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && body.front() == '-') {
        negative = true;
        body.remove_prefix(1);
    }
    const auto slash = body.find('/');
    const std::string_view num = body.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{} : body.substr(slash + 1);
    if (!digits_ok(num) || (slash != std::string_view::npos && !digits_ok(den)))
        throw std::invalid_argument("malformed rational '" + original + "'");

    Integer n(std::string(num), 10);
    Integer d = slash == std::string_view::npos ? Integer(1) : Integer(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
    if (slash != std::string_view::npos && d == 1)
        throw std::invalid_argument("non-canonical rational '" + original + "' (denominator 1)");
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1 && !(n == 0 && slash == std::string_view::npos))
        throw std::invalid_argument("rational '" + original + "' is not in lowest terms");
    if (negative && n == 0) throw std::invalid_argument("negative zero in '" + original + "'");
    if (negative) n = -n;
    return Rational(n, d);
}

}  // namespace fwezeta

#endif  // FWEZETA_RATIONAL_HPP
