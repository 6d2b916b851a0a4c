#include "langdual/lattice.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

#include "langdual/errors.hpp"

namespace langdual {

Int checked_add(Int a, Int b)
{
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b)
{
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b)
{
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

IntVector zero_vector(std::size_t n) { return IntVector(n, 0); }

IntVector unit_vector(std::size_t n, std::size_t k)
{
    if (k >= n) throw StructuralError("unit vector index out of range");
    IntVector v(n, 0);
    v[k] = 1;
    return v;
}

namespace {

void require_same_length(const IntVector& a, const IntVector& b)
{
    if (a.size() != b.size()) {
        throw StructuralError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
    }
}

}  // namespace

Int dot(const IntVector& a, const IntVector& b)
{
    require_same_length(a, b);
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
    return s;
}

IntVector operator+(const IntVector& a, const IntVector& b)
{
    require_same_length(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_add(a[i], b[i]);
    return r;
}

IntVector operator-(const IntVector& a, const IntVector& b)
{
    require_same_length(a, b);
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(a[i], b[i]);
    return r;
}

IntVector operator-(const IntVector& a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_sub(0, a[i]);
    return r;
}

IntVector operator*(Int s, const IntVector& a)
{
    IntVector r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = checked_mul(s, a[i]);
    return r;
}

bool is_zero(const IntVector& v)
{
    for (Int x : v)
        if (x != 0) return false;
    return true;
}

IntVector concat(const IntVector& head, const IntVector& tail)
{
    IntVector r = head;
    r.insert(r.end(), tail.begin(), tail.end());
    return r;
}

std::string to_string(const IntVector& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(v[i]);
    }
    return s + ")";
}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols)
{
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw StructuralError("row length mismatch");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& cols, std::size_t rows)
{
    return from_rows(cols, rows).transpose();
}

IntVector IntMatrix::row(std::size_t r) const
{
    return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                     data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

IntVector IntMatrix::column(std::size_t c) const
{
    IntVector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

IntVector IntMatrix::apply(const IntVector& v) const
{
    if (v.size() != cols_) {
        throw StructuralError("matrix/vector dimension mismatch: " + std::to_string(cols_) + " vs " +
                              std::to_string(v.size()));
    }
    IntVector r(rows_, 0);
    for (std::size_t i = 0; i < rows_; ++i) {
        Int s = 0;
        for (std::size_t j = 0; j < cols_; ++j) s = checked_add(s, checked_mul((*this)(i, j), v[j]));
        r[i] = s;
    }
    return r;
}

Int IntMatrix::determinant() const
{
    if (rows_ != cols_) throw StructuralError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int num = checked_sub(checked_mul(a(i, j), a(k, k)), checked_mul(a(i, k), a(k, j)));
                a(i, j) = num / prev;
            }
        }
        prev = a(k, k);
    }
    return checked_mul(sign, a(n - 1, n - 1));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b)
{
    if (a.cols_ != b.rows_) throw StructuralError("matrix product dimension mismatch");
    IntMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Int aik = a(i, k);
            if (aik == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) = checked_add(r(i, j), checked_mul(aik, b(k, j)));
        }
    return r;
}

std::string to_string(const IntMatrix& m)
{
    std::ostringstream os;
    os << m;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    os << "[";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r) os << ",";
        os << to_string(m.row(r));
    }
    return os << "]";
}

}  // namespace langdual
