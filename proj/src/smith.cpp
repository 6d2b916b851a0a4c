#include "langdual/smith.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "langdual/errors.hpp"

namespace langdual {

namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int abs_int(Int a) { return a < 0 ? checked_sub(0, a) : a; }

void swap_rows(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(i, c), m(j, c));
}

void swap_cols(IntMatrix& m, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, i), m(r, j));
}

// row_dst -= f * row_src
void add_row(IntMatrix& m, std::size_t dst, std::size_t src, Int f)
{
    if (f == 0) return;
    for (std::size_t c = 0; c < m.cols(); ++c) m(dst, c) = checked_sub(m(dst, c), checked_mul(f, m(src, c)));
}

void add_col(IntMatrix& m, std::size_t dst, std::size_t src, Int f)
{
    if (f == 0) return;
    for (std::size_t r = 0; r < m.rows(); ++r) m(r, dst) = checked_sub(m(r, dst), checked_mul(f, m(r, src)));
}

void negate_row(IntMatrix& m, std::size_t i)
{
    for (std::size_t c = 0; c < m.cols(); ++c) m(i, c) = checked_sub(0, m(i, c));
}

}  // namespace

std::vector<Int> SmithForm::diagonal() const
{
    std::vector<Int> out;
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) out.push_back(d(i, i));
    return out;
}

SmithForm smith_normal_form(const IntMatrix& a)
{
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm s{IntMatrix::identity(m), IntMatrix::identity(n), a, 0};
    IntMatrix& d = s.d;

    for (std::size_t t = 0; t < std::min(m, n); ++t) {
        for (;;) {
            // Smallest nonzero entry of the trailing block becomes the pivot.
            std::size_t pr = m, pc = n;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j)
                    if (d(i, j) != 0 && (pr == m || abs_int(d(i, j)) < abs_int(d(pr, pc)))) {
                        pr = i;
                        pc = j;
                    }
            if (pr == m) return s;
            swap_rows(d, t, pr);
            swap_rows(s.u, t, pr);
            swap_cols(d, t, pc);
            swap_cols(s.v, t, pc);

            bool clean = true;
            for (std::size_t i = t + 1; i < m; ++i) {
                const Int f = floor_div(d(i, t), d(t, t));
                add_row(d, i, t, f);
                add_row(s.u, i, t, f);
                if (d(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                const Int f = floor_div(d(t, j), d(t, t));
                add_col(d, j, t, f);
                add_col(s.v, j, t, f);
                if (d(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility: fold any offending row into row t and go again.
            bool divides = true;
            for (std::size_t i = t + 1; i < m && divides; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        add_row(d, t, i, -1);
                        add_row(s.u, t, i, -1);
                        divides = false;
                        break;
                    }
            if (divides) break;
        }
        if (d(t, t) < 0) {
            negate_row(d, t);
            negate_row(s.u, t);
        }
        s.rank = t + 1;
    }
    return s;
}

std::vector<IntVector> hermite_basis(const std::vector<IntVector>& rows)
{
    if (rows.empty()) return {};
    const std::size_t n = rows.front().size();
    std::vector<IntVector> m = rows;
    std::vector<IntVector> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < m.size(); ++c) {
        // Euclid on column c among rows r..end.
        for (;;) {
            std::size_t p = m.size();
            for (std::size_t i = r; i < m.size(); ++i)
                if (m[i][c] != 0 && (p == m.size() || abs_int(m[i][c]) < abs_int(m[p][c]))) p = i;
            if (p == m.size()) break;
            std::swap(m[r], m[p]);
            bool done = true;
            for (std::size_t i = r + 1; i < m.size(); ++i) {
                if (m[i][c] == 0) continue;
                const Int f = floor_div(m[i][c], m[r][c]);
                m[i] = m[i] - f * m[r];
                if (m[i][c] != 0) done = false;
            }
            if (done) break;
        }
        if (m[r][c] == 0) continue;
        if (m[r][c] < 0) m[r] = -m[r];
        for (std::size_t i = 0; i < r; ++i) {
            const Int f = floor_div(m[i][c], m[r][c]);
            m[i] = m[i] - f * m[r];
        }
        ++r;
    }
    for (std::size_t i = 0; i < r; ++i) out.push_back(m[i]);
    return out;
}

IntVector reduce_modulo(IntVector x, const std::vector<IntVector>& hnf)
{
    for (const auto& row : hnf) {
        std::size_t p = 0;
        while (p < row.size() && row[p] == 0) ++p;
        if (p == row.size()) continue;
        const Int f = floor_div(x[p], row[p]);
        x = x - f * row;
    }
    return x;
}

std::optional<IntegerSolution> solve_integer(const IntMatrix& a, const IntVector& b)
{
    if (b.size() != a.rows()) throw StructuralError("right-hand side length differs from row count");
    const SmithForm s = smith_normal_form(a);
    const IntVector ub = s.u.apply(b);
    IntVector y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            const Int di = s.d(i, i);
            if (ub[i] % di != 0) return std::nullopt;
            y[i] = ub[i] / di;
        } else if (ub[i] != 0) {
            return std::nullopt;
        }
    }
    // Canonical form: Hermite reduction with pivots taken from the last
    // coordinate backwards.
    auto reversed = [](IntVector v) {
        std::reverse(v.begin(), v.end());
        return v;
    };
    std::vector<IntVector> kernel;
    for (std::size_t j = s.rank; j < a.cols(); ++j) kernel.push_back(reversed(s.v.column(j)));
    const auto hnf = hermite_basis(kernel);
    IntegerSolution sol;
    for (const auto& k : hnf) sol.kernel.push_back(reversed(k));
    sol.particular = reversed(reduce_modulo(reversed(s.v.apply(y)), hnf));
    return sol;
}

}  // namespace langdual
