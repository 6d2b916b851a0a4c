#include "langdual/rational.hpp"

#include <stdexcept>

#include "langdual/errors.hpp"

namespace langdual {

Rational pow(const Rational& base, Int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    auto e = static_cast<std::uint64_t>(exponent);
    while (e) {
        if (e & 1u) result *= b;
        e >>= 1u;
        if (e) b *= b;
    }
    return result;
}

Rational parse_rational(const std::string& text)
{
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(BigInt(text));
        const BigInt num(text.substr(0, slash));
        const BigInt den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("not a rational number: '" + text + "'");
    }
}

std::string to_string(const Rational& r)
{
    return r.str();
}

bool is_integral(const Rational& r)
{
    return boost::multiprecision::denominator(r) == 1;
}

namespace {

bool integer_sqrt(const BigInt& n, BigInt* root)
{
    if (n < 0) return false;
    BigInt s = boost::multiprecision::sqrt(n);
    if (s * s != n) return false;
    if (root) *root = s;
    return true;
}

}  // namespace

bool is_rational_square(const Rational& r, Rational* root)
{
    BigInt a, b;
    if (!integer_sqrt(boost::multiprecision::numerator(r), &a)) return false;
    if (!integer_sqrt(boost::multiprecision::denominator(r), &b)) return false;
    if (root) *root = Rational(a, b);
    return true;
}

long double to_long_double(const Rational& r)
{
    return static_cast<long double>(boost::multiprecision::numerator(r)) /
           static_cast<long double>(boost::multiprecision::denominator(r));
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(std::vector<RationalVector>& m, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
        std::size_t p = row;
        while (p < m.size() && m[p][c] == 0) ++p;
        if (p == m.size()) continue;
        std::swap(m[p], m[row]);
        const Rational inv = Rational(1) / m[row][c];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][c] == 0) continue;
            const Rational f = m[r][c];
            for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rational_rank(const std::vector<IntVector>& rows)
{
    if (rows.empty()) return 0;
    const std::size_t cols = rows.front().size();
    std::vector<RationalVector> m;
    for (const auto& r : rows) {
        if (r.size() != cols) throw StructuralError("ragged matrix");
        m.emplace_back(r.begin(), r.end());
    }
    return rref(m, cols).size();
}

std::optional<RationalVector> solve_rational(const std::vector<IntVector>& rows, const IntVector& rhs,
                                             std::size_t unknowns)
{
    if (rows.size() != rhs.size()) throw StructuralError("system has mismatched right-hand side");
    std::vector<RationalVector> m;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != unknowns) throw StructuralError("ragged system");
        RationalVector r(rows[i].begin(), rows[i].end());
        r.emplace_back(rhs[i]);
        m.push_back(std::move(r));
    }
    const auto pivots = rref(m, unknowns + 1);
    if (!pivots.empty() && pivots.back() == unknowns) return std::nullopt;
    RationalVector x(unknowns, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = m[i][unknowns];
    return x;
}

}  // namespace langdual
