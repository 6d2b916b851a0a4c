#include "langdual/rootdatum.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

#include "langdual/errors.hpp"
#include "langdual/rational.hpp"
#include "langdual/smith.hpp"

namespace langdual {

IntMatrix RootDatum::cartan_matrix() const
{
    const std::size_t k = semisimple_rank();
    IntMatrix c(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) c(i, j) = dot(simple_roots[j], simple_coroots[i]);
    return c;
}

IntMatrix RootDatum::reflection_x(std::size_t i) const
{
    IntMatrix m = IntMatrix::identity(rank);
    for (std::size_t r = 0; r < rank; ++r)
        for (std::size_t c = 0; c < rank; ++c)
            m(r, c) = checked_sub(m(r, c), checked_mul(simple_roots[i][r], simple_coroots[i][c]));
    return m;
}

IntMatrix RootDatum::reflection_y(std::size_t i) const
{
    return reflection_x(i).transpose();
}

namespace {

const char* kAlpha = "α";
const char* kCoroot = "α̌";

std::string root_label(std::size_t i) { return std::string(kAlpha) + "_" + std::to_string(i + 1); }
std::string coroot_label(std::size_t i) { return std::string(kCoroot) + "_" + std::to_string(i + 1); }

bool shape_ok(const RootDatum& d, std::vector<std::string>* violations)
{
    bool ok = true;
    if (d.simple_roots.size() != d.simple_coroots.size()) {
        violations->push_back("number of simple roots (" + std::to_string(d.simple_roots.size()) +
                              ") differs from number of simple coroots (" +
                              std::to_string(d.simple_coroots.size()) + ")");
        ok = false;
    }
    for (std::size_t i = 0; i < d.simple_roots.size(); ++i)
        if (d.simple_roots[i].size() != d.rank) {
            violations->push_back("simple root " + root_label(i) + " has length " +
                                  std::to_string(d.simple_roots[i].size()) + ", expected rank " +
                                  std::to_string(d.rank));
            ok = false;
        }
    for (std::size_t i = 0; i < d.simple_coroots.size(); ++i)
        if (d.simple_coroots[i].size() != d.rank) {
            violations->push_back("simple coroot " + coroot_label(i) + " has length " +
                                  std::to_string(d.simple_coroots[i].size()) + ", expected rank " +
                                  std::to_string(d.rank));
            ok = false;
        }
    return ok;
}

// Highest-root coefficients never exceed 6 in finite type (E8).
constexpr Int kMaxRootCoefficient = 64;

struct RootRecord {
    IntVector coroot;
    IntVector coefficients;
};

// Orbit closure of the simple roots under simple reflections. Returns false
// when the cap is exceeded or coefficients grow beyond any finite-type bound.
bool close_roots(const RootDatum& d, std::size_t cap, std::map<IntVector, RootRecord>* roots)
{
    const std::size_t k = d.semisimple_rank();
    std::deque<IntVector> queue;
    for (std::size_t i = 0; i < k; ++i) {
        roots->emplace(d.simple_roots[i], RootRecord{d.simple_coroots[i], unit_vector(k, i)});
        queue.push_back(d.simple_roots[i]);
    }
    while (!queue.empty()) {
        const IntVector x = queue.front();
        queue.pop_front();
        const RootRecord rec = roots->at(x);
        for (std::size_t i = 0; i < k; ++i) {
            const Int px = dot(x, d.simple_coroots[i]);
            const Int py = dot(d.simple_roots[i], rec.coroot);
            IntVector nx = x - px * d.simple_roots[i];
            if (roots->count(nx)) continue;
            IntVector nc = rec.coefficients;
            nc[i] = checked_sub(nc[i], px);
            if (nc[i] > kMaxRootCoefficient || nc[i] < -kMaxRootCoefficient) return false;
            roots->emplace(nx, RootRecord{rec.coroot - py * d.simple_coroots[i], nc});
            if (roots->size() > cap) return false;
            queue.push_back(std::move(nx));
        }
    }
    return true;
}

}  // namespace

std::vector<std::string> validate_datum(const RootDatum& d)
{
    std::vector<std::string> v;
    if (!shape_ok(d, &v)) return v;
    const std::size_t k = d.semisimple_rank();
    const IntMatrix c = d.cartan_matrix();
    for (std::size_t i = 0; i < k; ++i)
        if (c(i, i) != 2) {
            v.push_back("pairing ⟨" + root_label(i) + "," + coroot_label(i) + "⟩ = " +
                        std::to_string(c(i, i)) + " ≠ 2");
        }
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            if (i == j) continue;
            if (c(i, j) > 0) {
                v.push_back("Cartan entry ⟨" + root_label(j) + "," + coroot_label(i) + "⟩ = " +
                            std::to_string(c(i, j)) + " is positive");
            }
            if (i < j && ((c(i, j) == 0) != (c(j, i) == 0))) {
                v.push_back("Cartan entries (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                            ") and (" + std::to_string(j + 1) + "," + std::to_string(i + 1) +
                            ") are not both zero or both nonzero");
            }
        }
    if (rational_rank(d.simple_roots) != k) v.push_back("simple roots are linearly dependent");
    if (rational_rank(d.simple_coroots) != k) v.push_back("simple coroots are linearly dependent");
    if (!v.empty()) return v;

    std::map<IntVector, RootRecord> roots;
    if (!close_roots(d, 20'000, &roots)) {
        v.push_back("root system is not of finite type (orbit of simple roots exceeds 20000)");
        return v;
    }
    for (const auto& [x, rec] : roots) {
        const bool pos = std::all_of(rec.coefficients.begin(), rec.coefficients.end(), [](Int a) { return a >= 0; });
        const bool neg = std::all_of(rec.coefficients.begin(), rec.coefficients.end(), [](Int a) { return a <= 0; });
        if (!pos && !neg) {
            v.push_back("root " + to_string(x) + " is neither positive nor negative");
            break;
        }
    }
    return v;
}

void require_valid(const RootDatum& d)
{
    auto v = validate_datum(d);
    if (!v.empty()) throw ValidationError(std::move(v));
}

RootDatum dual_datum(const RootDatum& d)
{
    require_valid(d);
    RootDatum out;
    out.name = d.name.empty() ? std::string() : "dual(" + d.name + ")";
    out.rank = d.rank;
    out.simple_roots = d.simple_coroots;
    out.simple_coroots = d.simple_roots;
    return out;
}

IntVector RootSystem::sum_of_positive_roots(std::size_t rank) const
{
    IntVector t = zero_vector(rank);
    for (const auto& a : positive_roots) t = t + a;
    return t;
}

RootSystem generate_roots(const RootDatum& d, std::size_t cap)
{
    require_valid(d);
    std::map<IntVector, RootRecord> roots;
    if (!close_roots(d, cap, &roots)) {
        throw ResourceCapError("root generation exceeded cap of " + std::to_string(cap) + " roots");
    }
    struct Entry {
        Int height;
        IntVector root;
        const RootRecord* rec;
    };
    std::vector<Entry> pos;
    for (const auto& [x, rec] : roots) {
        if (std::all_of(rec.coefficients.begin(), rec.coefficients.end(), [](Int a) { return a >= 0; })) {
            pos.push_back({std::accumulate(rec.coefficients.begin(), rec.coefficients.end(), Int{0}), x, &rec});
        }
    }
    std::sort(pos.begin(), pos.end(), [](const Entry& a, const Entry& b) {
        return a.height != b.height ? a.height < b.height : a.root < b.root;
    });
    RootSystem rs;
    for (const auto& e : pos) {
        rs.positive_roots.push_back(e.root);
        rs.positive_coroots.push_back(e.rec->coroot);
        rs.root_coefficients.push_back(e.rec->coefficients);
    }
    return rs;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, std::size_t cap)
{
    require_valid(d);
    const std::size_t k = d.semisimple_rank();
    std::vector<IntMatrix> sx, sy;
    for (std::size_t i = 0; i < k; ++i) {
        sx.push_back(d.reflection_x(i));
        sy.push_back(d.reflection_y(i));
    }
    std::vector<WeylElement> group;
    std::set<IntMatrix> seen;
    group.push_back({{}, IntMatrix::identity(d.rank), IntMatrix::identity(d.rank)});
    seen.insert(group.front().mat_x);
    // Elements are appended layer by layer, so the first word found is reduced.
    for (std::size_t idx = 0; idx < group.size(); ++idx) {
        for (std::size_t i = 0; i < k; ++i) {
            IntMatrix mx = group[idx].mat_x * sx[i];
            if (seen.count(mx)) continue;
            if (group.size() >= cap) {
                throw ResourceCapError("Weyl group enumeration exceeded cap of " + std::to_string(cap) +
                                       " elements");
            }
            seen.insert(mx);
            WeylElement w;
            w.word = group[idx].word;
            w.word.push_back(i);
            w.mat_x = std::move(mx);
            w.mat_y = group[idx].mat_y * sy[i];
            group.push_back(std::move(w));
        }
    }
    return group;
}

const WeylElement& longest_element(const std::vector<WeylElement>& group)
{
    if (group.empty()) throw std::invalid_argument("empty Weyl group");
    return group.back();
}

std::size_t inversion_count(const RootDatum& d, const RootSystem& roots, const WeylElement& w)
{
    (void)d;
    std::set<IntVector> positive(roots.positive_roots.begin(), roots.positive_roots.end());
    std::size_t count = 0;
    for (const auto& a : roots.positive_roots)
        if (!positive.count(w.mat_x.apply(a))) ++count;
    return count;
}

bool is_dominant(const RootDatum& d, const IntVector& coweight)
{
    for (const auto& a : d.simple_roots)
        if (dot(a, coweight) < 0) return false;
    return true;
}

bool dominance_leq(const RootDatum& d, const IntVector& nu, const IntVector& lambda)
{
    const IntVector diff = lambda - nu;
    if (is_zero(diff)) return true;
    const std::size_t k = d.semisimple_rank();
    std::vector<IntVector> rows(d.rank, IntVector(k));
    for (std::size_t r = 0; r < d.rank; ++r)
        for (std::size_t i = 0; i < k; ++i) rows[r][i] = d.simple_coroots[i][r];
    const auto sol = solve_rational(rows, diff, k);
    if (!sol) return false;
    for (const auto& c : *sol)
        if (!is_integral(c) || c < 0) return false;
    return true;
}

std::vector<IntVector> dominant_below(const RootDatum& d, const IntVector& lambda, std::size_t cap)
{
    if (lambda.size() != d.rank) throw StructuralError("coweight has wrong length");
    if (!is_dominant(d, lambda)) throw ValidationError({"coweight " + to_string(lambda) + " is not dominant"});
    const std::size_t k = d.semisimple_rank();
    if (k == 0) return {lambda};

    // nu = lambda - sum c_j coroot_j is dominant iff c^T C <= b^T with
    // b_i = <alpha_i, lambda>; C^{-1} is entrywise nonnegative for finite
    // type, so c^T <= b^T C^{-1} bounds the search box.
    const IntMatrix c = d.cartan_matrix();
    std::vector<RationalVector> inv(k, RationalVector(k));
    for (std::size_t col = 0; col < k; ++col) {
        std::vector<IntVector> rows;
        for (std::size_t r = 0; r < k; ++r) rows.push_back(c.row(r));
        const auto sol = solve_rational(rows, unit_vector(k, col), k);
        for (std::size_t r = 0; r < k; ++r) inv[r][col] = (*sol)[r];
    }
    std::vector<Int> bound(k);
    std::size_t volume = 1;
    for (std::size_t j = 0; j < k; ++j) {
        Rational s = 0;
        for (std::size_t i = 0; i < k; ++i) s += Rational(dot(d.simple_roots[i], lambda)) * inv[i][j];
        bound[j] = static_cast<Int>(boost::multiprecision::numerator(s) / boost::multiprecision::denominator(s));
        volume *= static_cast<std::size_t>(bound[j] + 1);
        if (volume > cap) throw ResourceCapError("dominant_below search exceeds cap");
    }

    struct Candidate {
        Int height;
        IntVector nu;
    };
    std::vector<Candidate> found;
    IntVector coeff(k, 0);
    for (;;) {
        IntVector nu = lambda;
        Int height = 0;
        for (std::size_t j = 0; j < k; ++j) {
            nu = nu - coeff[j] * d.simple_coroots[j];
            height += coeff[j];
        }
        if (is_dominant(d, nu)) found.push_back({height, nu});
        std::size_t j = 0;
        while (j < k && coeff[j] == bound[j]) coeff[j++] = 0;
        if (j == k) break;
        ++coeff[j];
    }
    std::sort(found.begin(), found.end(), [](const Candidate& a, const Candidate& b) {
        return a.height != b.height ? a.height < b.height : a.nu > b.nu;
    });
    std::vector<IntVector> out;
    for (auto& f : found) out.push_back(std::move(f.nu));
    return out;
}

LaurentScalar stabilizer_poincare(const RootDatum& d, const IntVector& lambda, std::size_t cap)
{
    LaurentScalar p;
    for (const auto& w : enumerate_weyl(d, cap))
        if (w.mat_y.apply(lambda) == lambda) p += LaurentScalar::monomial(static_cast<Int>(w.length()));
    return p;
}

namespace {

// Appends the linear equations of "M a = b" (M n x n, row-major unknowns).
void equations_mx(std::size_t n, const IntVector& a, const IntVector& b, std::vector<IntVector>* rows,
                  IntVector* rhs)
{
    for (std::size_t r = 0; r < n; ++r) {
        IntVector eq(n * n, 0);
        for (std::size_t c = 0; c < n; ++c) eq[r * n + c] = a[c];
        rows->push_back(std::move(eq));
        rhs->push_back(b[r]);
    }
}

// Appends the equations of "M^T a = b".
void equations_mtx(std::size_t n, const IntVector& a, const IntVector& b, std::vector<IntVector>* rows,
                   IntVector* rhs)
{
    for (std::size_t c = 0; c < n; ++c) {
        IntVector eq(n * n, 0);
        for (std::size_t r = 0; r < n; ++r) eq[r * n + c] = a[r];
        rows->push_back(std::move(eq));
        rhs->push_back(b[c]);
    }
}

bool anchors_hold(const IntMatrix& m, const std::vector<IsoAnchor>& anchors)
{
    for (const auto& a : anchors) {
        if (a.side == IsoAnchor::Side::weight) {
            if (m.apply(a.in_second) != a.in_first) return false;
        } else if (m.transpose().apply(a.in_first) != a.in_second) {
            return false;
        }
    }
    return true;
}

constexpr Int kIsoSearchRadius = 3;

}  // namespace

std::optional<IntMatrix> datum_isomorphic(const RootDatum& d1, const RootDatum& d2,
                                          const std::vector<IsoAnchor>& anchors)
{
    require_valid(d1);
    require_valid(d2);
    if (d1.rank != d2.rank || d1.semisimple_rank() != d2.semisimple_rank()) return std::nullopt;
    const std::size_t n = d1.rank;
    const std::size_t k = d1.semisimple_rank();
    for (const auto& a : anchors)
        if (a.in_first.size() != n || a.in_second.size() != n) throw StructuralError("anchor has wrong length");

    if (d1 == d2 && anchors_hold(IntMatrix::identity(n), anchors)) return IntMatrix::identity(n);

    const IntMatrix c1 = d1.cartan_matrix();
    const IntMatrix c2 = d2.cartan_matrix();
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool diagram_ok = true;
        for (std::size_t i = 0; i < k && diagram_ok; ++i)
            for (std::size_t j = 0; j < k; ++j)
                if (c1(i, j) != c2(perm[i], perm[j])) {
                    diagram_ok = false;
                    break;
                }
        if (!diagram_ok) continue;

        std::vector<IntVector> rows;
        IntVector rhs;
        for (std::size_t i = 0; i < k; ++i) {
            equations_mx(n, d2.simple_roots[perm[i]], d1.simple_roots[i], &rows, &rhs);
            equations_mtx(n, d1.simple_coroots[i], d2.simple_coroots[perm[i]], &rows, &rhs);
        }
        for (const auto& a : anchors) {
            if (a.side == IsoAnchor::Side::weight) {
                equations_mx(n, a.in_second, a.in_first, &rows, &rhs);
            } else {
                equations_mtx(n, a.in_first, a.in_second, &rows, &rhs);
            }
        }
        if (rows.empty()) {
            rows.push_back(IntVector(n * n, 0));
            rhs.push_back(0);
        }
        const auto sol = solve_integer(IntMatrix::from_rows(rows, n * n), rhs);
        if (!sol) continue;

        // Search integer combinations of the kernel by increasing max-norm for a unimodular M.
        const std::size_t dim = sol->kernel.size();
        if (dim > 6) throw ResourceCapError("isomorphism search has too many free parameters");
        for (Int radius = 0; radius <= kIsoSearchRadius; ++radius) {
            std::vector<Int> coeff(dim, -radius);
            for (;;) {
                const Int norm = std::accumulate(coeff.begin(), coeff.end(), Int{0},
                                                 [](Int acc, Int x) { return std::max(acc, x < 0 ? -x : x); });
                if (norm == radius) {
                    IntVector x = sol->particular;
                    for (std::size_t t = 0; t < dim; ++t) x = x + coeff[t] * sol->kernel[t];
                    IntMatrix m(n, n);
                    for (std::size_t r = 0; r < n; ++r)
                        for (std::size_t c = 0; c < n; ++c) m(r, c) = x[r * n + c];
                    const Int det = m.determinant();
                    if (det == 1 || det == -1) return m;
                }
                std::size_t t = 0;
                while (t < dim && coeff[t] == radius) coeff[t++] = -radius;
                if (t == dim) break;
                ++coeff[t];
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

}  // namespace langdual
