#include "ssekit/exactmat.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <optional>

namespace ssekit {

namespace {

void require_square(const RatMatrix& a, const char* who) {
    if (!a.is_square())
        throw dimension_error(std::string(who) + ": matrix must be square");
}

void require_nonnegative(const RatMatrix& a, const char* who) {
    if (!a.is_nonnegative())
        throw domain_error(std::string(who) + ": matrix must be nonnegative");
}

// Row-scale to integers (rank and |det| change predictably), then run
// fraction-free Bareiss elimination with full pivoting.
struct BareissResult {
    size_t rank;
    mpz_class scaled_det; // det of the integer matrix, square inputs only
};

BareissResult bareiss(const RatMatrix& a, mpz_class* row_scale_product) {
    const size_t m = a.rows(), n = a.cols();
    std::vector<std::vector<mpz_class>> w(m, std::vector<mpz_class>(n));
    mpz_class scale_product = 1;
    for (size_t i = 0; i < m; ++i) {
        mpz_class l = 1;
        for (size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).denominator().get_mpz_t());
        scale_product *= l;
        for (size_t j = 0; j < n; ++j)
            w[i][j] = a(i, j).numerator() * (l / a(i, j).denominator());
    }
    if (row_scale_product)
        *row_scale_product = scale_product;

    int sign = 1;
    mpz_class prev = 1;
    size_t r = 0;
    const size_t steps = std::min(m, n);
    for (size_t k = 0; k < steps; ++k) {
        size_t pi = k, pj = k;
        bool found = false;
        for (size_t i = k; i < m && !found; ++i)
            for (size_t j = k; j < n && !found; ++j)
                if (w[i][j] != 0) {
                    pi = i;
                    pj = j;
                    found = true;
                }
        if (!found)
            break;
        if (pi != k) {
            std::swap(w[pi], w[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (size_t i = 0; i < m; ++i)
                std::swap(w[i][pj], w[i][k]);
            sign = -sign;
        }
        ++r;
        for (size_t i = k + 1; i < m; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                mpz_class t = w[i][j] * w[k][k] - w[i][k] * w[k][j];
                mpz_divexact(w[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            w[i][k] = 0;
        }
        prev = w[k][k];
    }
    mpz_class d = 0;
    if (m == n && r == n)
        d = sign * w[n - 1][n - 1];
    return {r, d};
}

constexpr size_t kDenseCharpolyCutoff = 8;

RatPoly charpoly_faddeev_leverrier(const RatMatrix& a) {
    const size_t n = a.rows();
    std::vector<Rat> c(n + 1);
    c[n] = Rat(1);
    RatMatrix m = a;
    c[n - 1] = -m.trace();
    for (size_t k = 2; k <= n; ++k) {
        RatMatrix shifted = m;
        for (size_t i = 0; i < n; ++i)
            shifted(i, i) += c[n - k + 1];
        m = a * shifted;
        c[n - k] = -(m.trace() / Rat(static_cast<long long>(k)));
    }
    return RatPoly::from_coeffs(std::move(c));
}

} // namespace

Rref rref(const RatMatrix& a) {
    RatMatrix w = a;
    const size_t m = w.rows(), n = w.cols();
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < n && row < m; ++col) {
        size_t p = row;
        while (p < m && w(p, col).is_zero())
            ++p;
        if (p == m)
            continue;
        if (p != row)
            for (size_t j = 0; j < n; ++j)
                std::swap(w(row, j), w(p, j));
        Rat inv = w(row, col).reciprocal();
        for (size_t j = col; j < n; ++j)
            w(row, j) *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == row || w(i, col).is_zero())
                continue;
            Rat f = w(i, col);
            for (size_t j = col; j < n; ++j)
                w(i, j) -= f * w(row, j);
        }
        pivots.push_back(col);
        ++row;
    }
    return {w, pivots};
}

RatPoly charpoly(const RatMatrix& a) {
    require_square(a, "charpoly");
    const size_t n = a.rows();
    if (n <= kDenseCharpolyCutoff)
        return charpoly_faddeev_leverrier(a);

    // A = C * R with C the pivot columns and R the nonzero rows of rref(A);
    // the nonzero spectrum of A equals that of the r x r product R * C.
    Rref rr = rref(a);
    const size_t r = rr.pivot_cols.size();
    if (r == 0)
        return RatPoly::monomial(Rat(1), n);
    if (r == n)
        return charpoly_faddeev_leverrier(a);
    RatMatrix c(n, r), rows(r, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < r; ++k)
            c(i, k) = a(i, rr.pivot_cols[k]);
    for (size_t k = 0; k < r; ++k)
        for (size_t j = 0; j < n; ++j)
            rows(k, j) = rr.reduced(k, j);
    return charpoly(rows * c).shift_up(n - r);
}

RatPoly nonzero_charpoly(const RatMatrix& a) {
    return charpoly(a).strip_t_factors().second;
}

size_t rank(const RatMatrix& a) {
    return bareiss(a, nullptr).rank;
}

Rat det(const RatMatrix& a) {
    require_square(a, "det");
    mpz_class scale;
    BareissResult r = bareiss(a, &scale);
    if (r.rank < a.rows())
        return Rat(0);
    mpq_class q(r.scaled_det);
    q /= mpq_class(scale);
    return Rat(q);
}

RatMatrix matrix_power(const RatMatrix& a, unsigned long k) {
    require_square(a, "matrix_power");
    const size_t n = a.rows();
    if (k <= 2 || n <= kDenseCharpolyCutoff)
        return a.pow(k);
    Rref rr = rref(a);
    const size_t r = rr.pivot_cols.size();
    if (r >= n / 2)
        return a.pow(k);
    if (r == 0)
        return RatMatrix(n, n); // zero matrix, k >= 1 here
    RatMatrix f(n, r), g(r, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t c = 0; c < r; ++c)
            f(i, c) = a(i, rr.pivot_cols[c]);
    for (size_t c = 0; c < r; ++c)
        for (size_t j = 0; j < n; ++j)
            g(c, j) = rr.reduced(c, j);
    return f * (g * f).pow(k - 1) * g;
}

bool is_irreducible(const RatMatrix& a) {
    require_square(a, "is_irreducible");
    require_nonnegative(a, "is_irreducible");
    const size_t n = a.rows();
    if (n == 1)
        return a(0, 0).is_positive();
    auto reaches_all = [&](bool transposed) {
        std::vector<char> seen(n, 0);
        std::vector<size_t> stack{0};
        seen[0] = 1;
        size_t count = 1;
        while (!stack.empty()) {
            size_t u = stack.back();
            stack.pop_back();
            for (size_t v = 0; v < n; ++v) {
                const Rat& e = transposed ? a(v, u) : a(u, v);
                if (!seen[v] && e.is_positive()) {
                    seen[v] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == n;
    };
    return reaches_all(false) && reaches_all(true);
}

bool is_primitive(const RatMatrix& a) {
    require_square(a, "is_primitive");
    require_nonnegative(a, "is_primitive");
    const size_t n = a.rows();
    const size_t words = (n + 63) / 64;
    using BoolMat = std::vector<std::vector<uint64_t>>;
    BoolMat b(n, std::vector<uint64_t>(words, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            if (a(i, j).is_positive())
                b[i][j / 64] |= uint64_t(1) << (j % 64);

    auto all_ones = [&](const BoolMat& m) {
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (!((m[i][j / 64] >> (j % 64)) & 1))
                    return false;
        return true;
    };
    auto square = [&](const BoolMat& m) {
        BoolMat out(n, std::vector<uint64_t>(words, 0));
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < n; ++k)
                if ((m[i][k / 64] >> (k % 64)) & 1)
                    for (size_t w = 0; w < words; ++w)
                        out[i][w] |= m[k][w];
        return out;
    };

    // Squaring j times tests exponent 2^j; stop once 2^j clears the
    // Wielandt bound. Positivity persists upward for primitive matrices.
    const size_t wielandt = n * n - 2 * n + 2;
    size_t exponent = 1;
    while (true) {
        if (all_ones(b))
            return true;
        if (exponent >= wielandt)
            return false;
        b = square(b);
        exponent *= 2;
    }
}

namespace {

using PolyMat = std::vector<std::vector<RatPoly>>;

bool submatrix_lone(const PolyMat& m, size_t s) {
    const size_t n = m.size();
    for (size_t i = s + 1; i < n; ++i)
        if (!m[i][s].is_zero())
            return false;
    for (size_t j = s + 1; j < n; ++j)
        if (!m[s][j].is_zero())
            return false;
    return true;
}

std::optional<std::pair<size_t, size_t>> min_degree_entry(const PolyMat& m, size_t s) {
    const size_t n = m.size();
    std::optional<std::pair<size_t, size_t>> best;
    size_t best_deg = 0;
    for (size_t i = s; i < n; ++i)
        for (size_t j = s; j < n; ++j) {
            if (m[i][j].is_zero())
                continue;
            if (!best || m[i][j].degree() < best_deg) {
                best = {{i, j}};
                best_deg = m[i][j].degree();
            }
        }
    return best;
}

} // namespace

std::vector<RatPoly> invariant_factors(const RatMatrix& a) {
    require_square(a, "invariant_factors");
    const size_t n = a.rows();
    PolyMat m(n, std::vector<RatPoly>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            m[i][j] = RatPoly::constant(-a(i, j));
            if (i == j)
                m[i][j] += RatPoly{Rat(0), Rat(1)};
        }

    // Smith normal form over Q[t]: drive each pivot position to a lone,
    // everything-dividing entry. Degrees strictly drop, so this terminates.
    for (size_t s = 0; s < n; ++s) {
        while (true) {
            auto pos = min_degree_entry(m, s);
            if (!pos)
                break; // remaining submatrix is zero
            auto [pi, pj] = *pos;
            if (pi != s)
                std::swap(m[pi], m[s]);
            if (pj != s)
                for (size_t i = 0; i < n; ++i)
                    std::swap(m[i][pj], m[i][s]);

            for (size_t i = s + 1; i < n; ++i) {
                if (m[i][s].is_zero())
                    continue;
                RatPoly q = m[i][s].divmod(m[s][s]).first;
                if (!q.is_zero())
                    for (size_t j = s; j < n; ++j)
                        m[i][j] -= q * m[s][j];
            }
            for (size_t j = s + 1; j < n; ++j) {
                if (m[s][j].is_zero())
                    continue;
                RatPoly q = m[s][j].divmod(m[s][s]).first;
                if (!q.is_zero())
                    for (size_t i = s; i < n; ++i)
                        m[i][j] -= q * m[i][s];
            }
            if (!submatrix_lone(m, s))
                continue;

            bool divides_all = true;
            for (size_t i = s + 1; i < n && divides_all; ++i)
                for (size_t j = s + 1; j < n && divides_all; ++j)
                    if (!m[i][j].divmod(m[s][s]).second.is_zero()) {
                        for (size_t jj = s; jj < n; ++jj)
                            m[s][jj] += m[i][jj];
                        divides_all = false;
                    }
            if (divides_all)
                break;
        }
        m[s][s] = m[s][s].monic();
    }

    std::vector<RatPoly> out(n);
    for (size_t s = 0; s < n; ++s)
        out[s] = m[s][s];
    return out;
}

bool similar_over_rationals(const RatMatrix& a, const RatMatrix& b) {
    require_square(a, "similar_over_rationals");
    require_square(b, "similar_over_rationals");
    if (a.rows() != b.rows())
        throw dimension_error("similar_over_rationals: size mismatch");
    return invariant_factors(a) == invariant_factors(b);
}

RatMatrix inverse(const RatMatrix& a) {
    require_square(a, "inverse");
    const size_t n = a.rows();
    RatMatrix w = a;
    RatMatrix inv = RatMatrix::identity(n);
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && w(p, col).is_zero())
            ++p;
        if (p == n)
            throw domain_error("inverse: singular matrix");
        if (p != col)
            for (size_t j = 0; j < n; ++j) {
                std::swap(w(col, j), w(p, j));
                std::swap(inv(col, j), inv(p, j));
            }
        Rat d = w(col, col).reciprocal();
        for (size_t j = 0; j < n; ++j) {
            w(col, j) *= d;
            inv(col, j) *= d;
        }
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col).is_zero())
                continue;
            Rat f = w(i, col);
            for (size_t j = 0; j < n; ++j) {
                w(i, j) -= f * w(col, j);
                inv(i, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

RatVector solve(const RatMatrix& a, const RatVector& b) {
    require_square(a, "solve");
    const size_t n = a.rows();
    if (b.size() != n)
        throw dimension_error("solve: right-hand side length mismatch");
    RatMatrix w = a;
    RatVector rhs = b;
    for (size_t col = 0; col < n; ++col) {
        size_t p = col;
        while (p < n && w(p, col).is_zero())
            ++p;
        if (p == n)
            throw domain_error("solve: singular matrix");
        if (p != col) {
            for (size_t j = 0; j < n; ++j)
                std::swap(w(col, j), w(p, j));
            std::swap(rhs[col], rhs[p]);
        }
        Rat d = w(col, col).reciprocal();
        for (size_t j = col; j < n; ++j)
            w(col, j) *= d;
        rhs[col] *= d;
        for (size_t i = 0; i < n; ++i) {
            if (i == col || w(i, col).is_zero())
                continue;
            Rat f = w(i, col);
            for (size_t j = col; j < n; ++j)
                w(i, j) -= f * w(col, j);
            rhs[i] -= f * rhs[col];
        }
    }
    return rhs;
}

} // namespace ssekit
