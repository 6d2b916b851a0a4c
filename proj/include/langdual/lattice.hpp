/**
 * @file lattice.hpp
 * @brief Integer vectors and matrices for lattices presented as Z^n.
 *
 * Every lattice in the library is Z^n with the standard dot product as the
 * pairing between a lattice and its dual, so a linear map is just an integer
 * matrix and duality is a transpose. All arithmetic is overflow-checked.
 */
#pragma once

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

namespace langdual {

using Int = std::int64_t;
using IntVector = std::vector<Int>;

Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

IntVector zero_vector(std::size_t n);
IntVector unit_vector(std::size_t n, std::size_t k);

Int dot(const IntVector& a, const IntVector& b);
IntVector operator+(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a, const IntVector& b);
IntVector operator-(const IntVector& a);
IntVector operator*(Int s, const IntVector& a);

bool is_zero(const IntVector& v);

/// The vector `(head, tail)`.
IntVector concat(const IntVector& head, const IntVector& tail);

std::string to_string(const IntVector& v);

/// Dense row-major integer matrix.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols);

    static IntMatrix identity(std::size_t n);
    static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
    static IntMatrix from_columns(const std::vector<IntVector>& cols, std::size_t rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Int operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    IntVector row(std::size_t r) const;
    IntVector column(std::size_t c) const;

    IntMatrix transpose() const;
    IntVector apply(const IntVector& v) const;

    /// Exact determinant (fraction-free Bareiss elimination).
    Int determinant() const;

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
    friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;
    friend auto operator<=>(const IntMatrix& a, const IntMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> data_;
};

std::string to_string(const IntMatrix& m);
std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

}  // namespace langdual
