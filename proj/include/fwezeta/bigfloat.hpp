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

#ifndef FWEZETA_BIGFLOAT_HPP
#define FWEZETA_BIGFLOAT_HPP

#include <mpfr.h>

#include <algorithm>
#include <complex>
#include <string>
#include <utility>

#include "rational.hpp"

namespace fwezeta {

/// Owning MPFR value with an explicit precision in bits. Binary operations
/// produce the larger of the two operand precisions, rounded to nearest.
class BigFloat {
   public:
    explicit BigFloat(mpfr_prec_t bits = 53) {
        mpfr_init2(v_, bits);
        mpfr_set_zero(v_, 1);
    }
    BigFloat(double x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_d(v_, x, MPFR_RNDN);
    }
    BigFloat(const Rational& x, mpfr_prec_t bits) {
        mpfr_init2(v_, bits);
        mpfr_set_q(v_, x.raw().get_mpq_t(), MPFR_RNDN);
    }
    BigFloat(const BigFloat& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    BigFloat(BigFloat&& o) noexcept : BigFloat(mpfr_get_prec(o.v_)) { mpfr_swap(v_, o.v_); }
    BigFloat& operator=(const BigFloat& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    BigFloat& operator=(BigFloat&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~BigFloat() { mpfr_clear(v_); }

    static BigFloat pi(mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_const_pi(r.v_, MPFR_RNDN);
        return r;
    }
    /// 2^e
    static BigFloat exp2(long e, mpfr_prec_t bits) {
        BigFloat r(bits);
        mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
        return r;
    }

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    /// Scientific notation with the given number of significant digits.
    std::string to_string(int digits = 20) const {
        char* buf = nullptr;
        mpfr_asprintf(&buf, "%.*Re", digits - 1, v_);
        std::string s(buf);
        mpfr_free_str(buf);
        return s;
    }

    BigFloat operator-() const {
        BigFloat r(precision());
        mpfr_neg(r.v_, v_, MPFR_RNDN);
        return r;
    }
    friend BigFloat operator+(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_add); }
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_sub); }
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_mul); }
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_div); }
    BigFloat& operator+=(const BigFloat& o) { return *this = *this + o; }
    BigFloat& operator-=(const BigFloat& o) { return *this = *this - o; }
    BigFloat& operator*=(const BigFloat& o) { return *this = *this * o; }

    friend bool operator<(const BigFloat& a, const BigFloat& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigFloat& a, const BigFloat& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
    friend bool operator<=(const BigFloat& a, const BigFloat& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }

    friend BigFloat abs(const BigFloat& a) { return unary(a, mpfr_abs); }
    friend BigFloat sqrt(const BigFloat& a) { return unary(a, mpfr_sqrt); }
    friend BigFloat cos(const BigFloat& a) { return unary(a, mpfr_cos); }
    friend BigFloat sin(const BigFloat& a) { return unary(a, mpfr_sin); }
    friend BigFloat hypot(const BigFloat& a, const BigFloat& b) { return binary(a, b, mpfr_hypot); }
    /// a^(1/k)
    friend BigFloat root(const BigFloat& a, unsigned long k) {
        BigFloat r(a.precision());
        mpfr_rootn_ui(r.v_, a.v_, k, MPFR_RNDN);
        return r;
    }

   private:
    template <class Op>
    static BigFloat binary(const BigFloat& a, const BigFloat& b, Op op) {
        BigFloat r(std::max(a.precision(), b.precision()));
        op(r.v_, a.v_, b.v_, MPFR_RNDN);
        return r;
    }
    template <class Op>
    static BigFloat unary(const BigFloat& a, Op op) {
        BigFloat r(a.precision());
        op(r.v_, a.v_, MPFR_RNDN);
        return r;
    }

    mpfr_t v_;
};

/// Complex number over BigFloat.
struct BigComplex {
    BigFloat re;
    BigFloat im;

    explicit BigComplex(mpfr_prec_t bits = 53) : re(bits), im(bits) {}
    BigComplex(BigFloat r, BigFloat i) : re(std::move(r)), im(std::move(i)) {}

    mpfr_prec_t precision() const { return re.precision(); }
    BigComplex conj() const { return {re, -im}; }
    BigFloat modulus() const { return hypot(re, im); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend BigComplex operator+(const BigComplex& a, const BigComplex& b) { return {a.re + b.re, a.im + b.im}; }
    friend BigComplex operator-(const BigComplex& a, const BigComplex& b) { return {a.re - b.re, a.im - b.im}; }
    friend BigComplex operator*(const BigComplex& a, const BigComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend BigComplex operator*(const BigFloat& s, const BigComplex& a) { return {s * a.re, s * a.im}; }
    friend BigComplex operator/(const BigComplex& a, const BigComplex& b) {
        const BigFloat den = b.re * b.re + b.im * b.im;
        return {(a.re * b.re + a.im * b.im) / den, (a.im * b.re - a.re * b.im) / den};
    }
};

}  // namespace fwezeta

#endif  // FWEZETA_BIGFLOAT_HPP
