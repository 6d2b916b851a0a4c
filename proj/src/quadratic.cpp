#include "langdual/quadratic.hpp"

#include <cmath>
#include <stdexcept>

namespace langdual {

namespace {

bool perfect_square(Int d, Int* root)
{
    if (d < 0) return false;
    Int s = static_cast<Int>(std::sqrt(static_cast<long double>(d)));
    while (s * s > d) --s;
    while ((s + 1) * (s + 1) <= d) ++s;
    if (s * s != d) return false;
    *root = s;
    return true;
}

std::strong_ordering cmp(const Rational& x, const Rational& y)
{
    if (x < y) return std::strong_ordering::less;
    if (y < x) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

}  // namespace

QuadNum::QuadNum(const Rational& a, const Rational& b, Int radicand) : a_(a), b_(b), d_(radicand)
{
    if (radicand == 0) throw std::invalid_argument("radicand must be nonzero");
    normalize();
}

QuadNum QuadNum::sqrt_of(Int radicand)
{
    return QuadNum(0, 1, radicand);
}

void QuadNum::normalize()
{
    Int root = 0;
    if (b_ != 0 && perfect_square(d_, &root)) {
        a_ += b_ * root;
        b_ = 0;
    }
    if (b_ == 0) d_ = 1;
}

Int QuadNum::unify(const QuadNum& o) const
{
    if (b_ == 0) return o.d_;
    if (o.b_ == 0 || o.d_ == d_) return d_;
    throw std::invalid_argument("mixing Q(sqrt " + std::to_string(d_) + ") and Q(sqrt " + std::to_string(o.d_) + ")");
}

QuadNum QuadNum::conjugate() const
{
    QuadNum r = *this;
    r.b_ = -r.b_;
    return r;
}

Rational QuadNum::norm() const
{
    return a_ * a_ - b_ * b_ * d_;
}

QuadNum QuadNum::inverse() const
{
    if (is_zero()) throw std::domain_error("division by zero in Q(sqrt d)");
    const Rational n = norm();
    QuadNum r;
    r.a_ = a_ / n;
    r.b_ = -b_ / n;
    r.d_ = d_;
    r.normalize();
    return r;
}

QuadNum& QuadNum::operator+=(const QuadNum& o)
{
    d_ = unify(o);
    a_ += o.a_;
    b_ += o.b_;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator-=(const QuadNum& o)
{
    return *this += -o;
}

QuadNum& QuadNum::operator*=(const QuadNum& o)
{
    const Int d = unify(o);
    const Rational a = a_ * o.a_ + b_ * o.b_ * d;
    const Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = d;
    normalize();
    return *this;
}

QuadNum& QuadNum::operator/=(const QuadNum& o)
{
    return *this *= o.inverse();
}

QuadNum operator-(const QuadNum& x)
{
    QuadNum r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
}

std::strong_ordering lex_compare(const QuadNum& x, const QuadNum& y)
{
    if (auto c = cmp(x.a_, y.a_); c != 0) return c;
    if (auto c = cmp(x.b_, y.b_); c != 0) return c;
    return x.d_ <=> y.d_;
}

long double QuadNum::to_long_double() const
{
    if (b_ == 0) return langdual::to_long_double(a_);
    if (d_ < 0) throw std::domain_error("value in Q(sqrt " + std::to_string(d_) + ") is not real");
    return langdual::to_long_double(a_) + langdual::to_long_double(b_) * std::sqrt(static_cast<long double>(d_));
}

std::string QuadNum::to_string() const
{
    if (b_ == 0) return langdual::to_string(a_);
    std::string s;
    if (a_ != 0) s = langdual::to_string(a_) + (b_ < 0 ? " - " : " + ");
    else if (b_ < 0) s = "-";
    const Rational mag = b_ < 0 ? Rational(-b_) : b_;
    if (mag != 1) s += langdual::to_string(mag) + "*";
    return s + "sqrt(" + std::to_string(d_) + ")";
}

QuadNum pow(const QuadNum& x, Int exponent)
{
    QuadNum base = exponent < 0 ? x.inverse() : x;
    Int e = exponent < 0 ? -exponent : exponent;
    QuadNum r(1);
    while (e > 0) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

std::ostream& operator<<(std::ostream& os, const QuadNum& x)
{
    return os << x.to_string();
}

}  // namespace langdual
