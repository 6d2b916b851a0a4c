/**
 * @file quadratic.hpp
 * @brief Exact arithmetic in Q(sqrt d).
 *
 * A value a + b sqrt(d) with rational a, b. Rationals are the values with
 * b = 0 and carry radicand 1. When d is a perfect square the irrational part
 * is folded into a, so equality is structural.
 */
#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "langdual/rational.hpp"

namespace langdual {

class QuadNum {
public:
    QuadNum() = default;
    QuadNum(Int n) : a_(n) {}                 // NOLINT: implicit embedding
    QuadNum(const Rational& r) : a_(r) {}     // NOLINT: implicit embedding
    QuadNum(const Rational& a, const Rational& b, Int radicand);

    /// The element sqrt(d) itself.
    static QuadNum sqrt_of(Int radicand);

    const Rational& rational_part() const noexcept { return a_; }
    const Rational& irrational_part() const noexcept { return b_; }
    Int radicand() const noexcept { return d_; }
    bool is_rational() const noexcept { return b_ == 0; }
    bool is_zero() const noexcept { return a_ == 0 && b_ == 0; }

    /// a - b sqrt(d): the nontrivial automorphism of the field.
    QuadNum conjugate() const;
    Rational norm() const;
    QuadNum inverse() const;  // throws std::domain_error on zero

    QuadNum& operator+=(const QuadNum& o);
    QuadNum& operator-=(const QuadNum& o);
    QuadNum& operator*=(const QuadNum& o);
    QuadNum& operator/=(const QuadNum& o);
    friend QuadNum operator+(QuadNum x, const QuadNum& y) { return x += y; }
    friend QuadNum operator-(QuadNum x, const QuadNum& y) { return x -= y; }
    friend QuadNum operator*(QuadNum x, const QuadNum& y) { return x *= y; }
    friend QuadNum operator/(QuadNum x, const QuadNum& y) { return x /= y; }
    friend QuadNum operator-(const QuadNum& x);
    friend bool operator==(const QuadNum& x, const QuadNum& y)
    {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
    }
    /// Total order on (a, b, d); only used to pick canonical representatives.
    friend std::strong_ordering lex_compare(const QuadNum& x, const QuadNum& y);

    long double to_long_double() const;  // requires d >= 0 when irrational
    std::string to_string() const;

private:
    void normalize();
    Int unify(const QuadNum& o) const;

    Rational a_{0};
    Rational b_{0};
    Int d_ = 1;
};

QuadNum pow(const QuadNum& x, Int exponent);

std::ostream& operator<<(std::ostream& os, const QuadNum& x);

}  // namespace langdual
