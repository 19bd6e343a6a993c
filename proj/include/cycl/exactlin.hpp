// Exact sparse linear algebra: rank, kernel, inverse, and homology dimensions
// of finite chain-complex slices.
//
// Rationals go through fraction-free (Bareiss) elimination after clearing row
// denominators, so intermediate entries stay integral minors. Prime fields use
// plain Gaussian elimination. Pivot choice is deterministic: smallest column,
// then smallest row.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cycl/errors.hpp"
#include "cycl/scalar.hpp"

namespace cycl {

template <class F>
struct SparseMatrix {
    std::size_t rows = 0, cols = 0;
    std::map<std::pair<std::size_t, std::size_t>, F> entries;  // nonzero only

    SparseMatrix() = default;
    SparseMatrix(std::size_t r, std::size_t c) : rows(r), cols(c) {}

    static SparseMatrix identity(std::size_t n) {
        SparseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.entries[{i, i}] = F::one();
        return m;
    }

    F get(std::size_t r, std::size_t c) const {
        auto it = entries.find({r, c});
        return it == entries.end() ? F::zero() : it->second;
    }

    void set(std::size_t r, std::size_t c, const F& v) {
        check_range(r, c);
        if (v.is_zero())
            entries.erase({r, c});
        else
            entries[{r, c}] = v;
    }

    void add(std::size_t r, std::size_t c, const F& v) {
        check_range(r, c);
        auto it = entries.find({r, c});
        if (it == entries.end()) {
            if (!v.is_zero()) entries[{r, c}] = v;
            return;
        }
        it->second += v;
        if (it->second.is_zero()) entries.erase(it);
    }

    SparseMatrix transposed() const {
        SparseMatrix t(cols, rows);
        for (const auto& [rc, v] : entries) t.entries[{rc.second, rc.first}] = v;
        return t;
    }

    friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
        if (a.cols != b.rows) throw std::runtime_error("matrix shape mismatch");
        SparseMatrix c(a.rows, b.cols);
        for (const auto& [rc, va] : a.entries) {
            auto [i, k] = rc;
            for (std::size_t j = 0; j < b.cols; ++j) {
                F vb = b.get(k, j);
                if (!vb.is_zero()) c.add(i, j, va * vb);
            }
        }
        return c;
    }

    bool is_zero() const { return entries.empty(); }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.entries == b.entries;
    }

  private:
    void check_range(std::size_t r, std::size_t c) const {
        if (r >= rows || c >= cols) throw std::runtime_error("matrix index out of range");
    }
};

template <class F>
struct RankKernel {
    std::size_t rank = 0;
    std::vector<std::vector<F>> kernel;  // column vectors, length = cols
};

namespace detail {

// Row echelon form over a field, deterministic pivoting. Returns pivot
// (row, col) pairs; m is reduced in place to echelon (not fully reduced).
template <class F>
std::vector<std::pair<std::size_t, std::size_t>> echelon(
    std::vector<std::vector<F>>& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!m[i][c].is_zero()) { pr = i; break; }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (m[i][c].is_zero()) continue;
            F factor = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= factor * m[r][j];
        }
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

// Kernel basis from an echelon form (any field), by back substitution.
template <class F>
std::vector<std::vector<F>> kernel_from_echelon(
    const std::vector<std::vector<F>>& m,
    const std::vector<std::pair<std::size_t, std::size_t>>& pivots,
    std::size_t cols) {
    std::vector<bool> is_pivot(cols, false);
    for (auto& [r, c] : pivots) is_pivot[c] = true;
    std::vector<std::vector<F>> basis;
    for (std::size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<F> x(cols, F::zero());
        x[fc] = F::one();
        for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
            auto [pr, pc] = *it;
            if (pc > fc) continue;
            F s = F::zero();
            for (std::size_t j = pc + 1; j < cols; ++j)
                if (!x[j].is_zero() && !m[pr][j].is_zero()) s += m[pr][j] * x[j];
            x[pc] = -s / m[pr][pc];
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

// Fraction-free Bareiss echelon on an integer matrix. Entries after step k
// are k x k minors of the input, which bounds coefficient growth.
inline std::vector<std::pair<std::size_t, std::size_t>> bareiss_echelon(
    std::vector<std::vector<mpz_class>>& m) {
    std::vector<std::pair<std::size_t, std::size_t>> pivots;
    if (m.empty()) return pivots;
    std::size_t rows = m.size(), cols = m[0].size();
    mpz_class prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pr = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (sgn(m[i][c]) != 0) { pr = i; break; }
        if (pr == rows) continue;
        std::swap(m[r], m[pr]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        pivots.emplace_back(r, c);
        ++r;
    }
    return pivots;
}

template <class F>
std::vector<std::vector<F>> to_dense(const SparseMatrix<F>& m) {
    std::vector<std::vector<F>> d(m.rows, std::vector<F>(m.cols, F::zero()));
    for (const auto& [rc, v] : m.entries) d[rc.first][rc.second] = v;
    return d;
}

}  // namespace detail

// Generic path: plain elimination over the field.
template <class F>
RankKernel<F> rank_and_kernel(const SparseMatrix<F>& m) {
    auto d = detail::to_dense(m);
    auto pivots = detail::echelon(d);
    RankKernel<F> out;
    out.rank = pivots.size();
    out.kernel = detail::kernel_from_echelon(d, pivots, m.cols);
    return out;
}

// Rational path: clear row denominators, Bareiss on integers, then exact
// rational back substitution from the integer echelon form.
template <>
inline RankKernel<Rational> rank_and_kernel(const SparseMatrix<Rational>& m) {
    std::vector<std::vector<mpz_class>> z(m.rows, std::vector<mpz_class>(m.cols, 0));
    for (std::size_t r = 0; r < m.rows; ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols; ++c) {
            Rational v = m.get(r, c);
            if (!v.is_zero()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.den().get_mpz_t());
        }
        for (std::size_t c = 0; c < m.cols; ++c) {
            Rational v = m.get(r, c);
            if (!v.is_zero()) z[r][c] = v.num() * (l / v.den());
        }
    }
    auto pivots = detail::bareiss_echelon(z);
    std::vector<std::vector<Rational>> e(m.rows, std::vector<Rational>(m.cols));
    for (std::size_t r = 0; r < m.rows; ++r)
        for (std::size_t c = 0; c < m.cols; ++c) e[r][c] = Rational(z[r][c]);
    RankKernel<Rational> out;
    out.rank = pivots.size();
    out.kernel = detail::kernel_from_echelon(e, pivots, m.cols);
    return out;
}

template <class F>
std::size_t rank(const SparseMatrix<F>& m) {
    return rank_and_kernel(m).rank;
}

// Gauss-Jordan inverse. Throws SingularMatrix when rank < size.
template <class F>
SparseMatrix<F> invert(const SparseMatrix<F>& m) {
    if (m.rows != m.cols) throw SingularMatrix("matrix not square");
    std::size_t n = m.rows;
    auto a = detail::to_dense(m);
    std::vector<std::vector<F>> inv(n, std::vector<F>(n, F::zero()));
    for (std::size_t i = 0; i < n; ++i) inv[i][i] = F::one();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t pr = n;
        for (std::size_t i = c; i < n; ++i)
            if (!a[i][c].is_zero()) { pr = i; break; }
        if (pr == n) throw SingularMatrix("rank deficient at column " + std::to_string(c));
        std::swap(a[c], a[pr]);
        std::swap(inv[c], inv[pr]);
        F piv = a[c][c];
        for (std::size_t j = 0; j < n; ++j) {
            a[c][j] /= piv;
            inv[c][j] /= piv;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            F f = a[i][c];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[c][j];
                inv[i][j] -= f * inv[c][j];
            }
        }
    }
    SparseMatrix<F> out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!inv[i][j].is_zero()) out.entries[{i, j}] = inv[i][j];
    return out;
}

// A finite window of a chain complex: differentials[d] maps degree d to d-1.
template <class F>
struct ChainComplexSlice {
    int deg_lo = 0, deg_hi = -1;  // inclusive; empty when lo > hi
    std::map<int, std::size_t> basis_sizes;
    std::map<int, SparseMatrix<F>> differentials;

    std::size_t size_at(int d) const {
        auto it = basis_sizes.find(d);
        return it == basis_sizes.end() ? 0 : it->second;
    }

    const SparseMatrix<F>* diff_at(int d) const {
        auto it = differentials.find(d);
        return it == differentials.end() ? nullptr : &it->second;
    }

    void validate() const {
        for (const auto& [d, m] : differentials) {
            if (m.cols != size_at(d) || m.rows != size_at(d - 1))
                throw NotAComplex("differential shape mismatch at degree " + std::to_string(d));
            const SparseMatrix<F>* next = diff_at(d + 1);
            if (next && !(m * *next).is_zero())
                throw NotAComplex("d(d(x)) != 0 between degrees " + std::to_string(d + 1) +
                                  " and " + std::to_string(d - 1));
        }
    }
};

struct HomologyEntry {
    std::size_t dim = 0;
    bool reliable = true;
};

// dim H_d = dim ker(d_d) - rank(d_{d+1}); degrees at the window boundary are
// flagged unreliable (the incoming or outgoing differential is unknown there).
template <class F>
std::map<int, HomologyEntry> homology_dims(const ChainComplexSlice<F>& c) {
    c.validate();
    std::map<int, HomologyEntry> out;
    for (int d = c.deg_lo; d <= c.deg_hi; ++d) {
        std::size_t n = c.size_at(d);
        HomologyEntry e;
        std::size_t ker = n;
        if (const SparseMatrix<F>* m = c.diff_at(d)) ker = n - rank(*m);
        std::size_t im = 0;
        if (const SparseMatrix<F>* m = c.diff_at(d + 1)) im = rank(*m);
        e.dim = ker - im;
        e.reliable = (d > c.deg_lo && d < c.deg_hi);
        out[d] = e;
    }
    return out;
}

}  // namespace cycl
