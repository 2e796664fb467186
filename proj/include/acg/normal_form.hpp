#pragma once

// Lattice normal forms: column-style Hermite normal form with a unimodular
// witness, Smith normal form with left/right witnesses, exact lattice
// membership, and determinants.  Everything is exact integer arithmetic.

#include <optional>
#include <stdexcept>
#include <vector>

#include "acg/int.hpp"
#include "acg/int_matrix.hpp"

namespace acg {

// One entry per nonzero column of H; H = M * U with det(U) = det_u = +/-1.
// Column j of H (j < rank) has its first nonzero entry at row pivot_rows[j];
// that entry is positive, and in its row all entries to the left lie in
// [0, pivot).  Columns >= rank are zero and gathered at the right.
template <class T>
struct HermiteBasis {
    BasicMatrix<T> H;
    BasicMatrix<T> U;
    int det_u = 1;
    std::vector<std::size_t> pivot_rows;

    std::size_t rank() const { return pivot_rows.size(); }
};

template <class T>
HermiteBasis<T> column_hnf(const BasicMatrix<T>& M) {
    const std::size_t m = M.rows();
    const std::size_t r = M.cols();
    HermiteBasis<T> out;
    out.H = M;
    out.U = r > 0 ? BasicMatrix<T>::identity(r) : BasicMatrix<T>(1, 0);
    out.det_u = 1;
    if (r == 0) {
        out.U = BasicMatrix<T>(1, 0);  // unused when there are no columns
        return out;
    }

    BasicMatrix<T>& H = out.H;
    BasicMatrix<T>& U = out.U;
    std::size_t col = 0;
    for (std::size_t i = 0; i < m && col < r; ++i) {
        // Fold columns col..r-1 of row i into column col.
        for (std::size_t j = col + 1; j < r; ++j) {
            if (H.at(i, j) == T(0)) continue;
            T p = H.at(i, col), q = H.at(i, j);
            ExtGcd<T> eg = ext_gcd(p, q);
            // Column transform of determinant +1 producing (g, 0) at row i.
            T nb = T(0) - q / eg.g;
            T pb = p / eg.g;
            H.combine_cols(col, j, eg.x, eg.y, nb, pb);
            U.combine_cols(col, j, eg.x, eg.y, nb, pb);
        }
        if (H.at(i, col) == T(0)) continue;  // no pivot in this row
        if (H.at(i, col) < T(0)) {
            H.negate_col(col);
            U.negate_col(col);
            out.det_u = -out.det_u;
        }
        const T piv = H.at(i, col);
        for (std::size_t j = 0; j < col; ++j) {
            T k = T(0) - floor_div(H.at(i, j), piv);
            if (k == T(0)) continue;
            H.add_col_multiple(j, col, k);
            U.add_col_multiple(j, col, k);
        }
        out.pivot_rows.push_back(i);
        ++col;
    }

    if (M.multiply(U) != H) throw std::logic_error("hnf witness check failed");
    return out;
}

// Coefficients of x over the nonzero columns of H (length = rank), or absent
// when x is outside the column lattice.  Forward substitution down the pivot
// rows, then the residual must vanish everywhere.
template <class T>
std::optional<std::vector<T>> solve_in_basis(const HermiteBasis<T>& hb, const std::vector<T>& x) {
    const BasicMatrix<T>& H = hb.H;
    if (x.size() != H.rows()) throw std::invalid_argument("vector length != matrix rows");
    std::vector<T> resid = x;
    std::vector<T> coef(hb.rank(), T(0));
    for (std::size_t t = 0; t < hb.rank(); ++t) {
        const std::size_t p = hb.pivot_rows[t];
        const T& piv = H.at(p, t);
        if (!divides(piv, resid[p])) return std::nullopt;
        T c = resid[p] / piv;
        if (c != T(0))
            for (std::size_t i = p; i < H.rows(); ++i) resid[i] = resid[i] - c * H.at(i, t);
        coef[t] = c;
    }
    for (const T& v : resid)
        if (v != T(0)) return std::nullopt;
    return coef;
}

// Coefficients of x over the columns of the ORIGINAL matrix M (length =
// M.cols()), obtained by mapping basis coefficients back through U.
template <class T>
std::optional<std::vector<T>> solve_in_lattice(const HermiteBasis<T>& hb,
                                               const std::vector<T>& x) {
    auto c = solve_in_basis(hb, x);
    if (!c) return std::nullopt;
    std::vector<T> padded(hb.U.rows(), T(0));
    for (std::size_t i = 0; i < c->size(); ++i) padded[i] = (*c)[i];
    return hb.U.multiply_vec(padded);
}

template <class T>
std::optional<std::vector<T>> lattice_member(const BasicMatrix<T>& M, const std::vector<T>& x) {
    return solve_in_lattice(column_hnf(M), x);
}

template <class T>
std::size_t lattice_rank(const BasicMatrix<T>& M) {
    return column_hnf(M).rank();
}

// Unique representative of the coset x + L, where L is the column lattice
// described by hb: on each pivot row (taken top-down) the representative is
// reduced into [0, pivot).  Uniqueness: two representatives differing by a
// lattice vector first differ on some pivot row, where both lie in the same
// residue window.
template <class T>
std::vector<T> canonical_coset_rep(const HermiteBasis<T>& hb, std::vector<T> x) {
    const BasicMatrix<T>& H = hb.H;
    if (x.size() != H.rows()) throw std::invalid_argument("vector length != matrix rows");
    for (std::size_t t = 0; t < hb.rank(); ++t) {
        const std::size_t p = hb.pivot_rows[t];
        T c = floor_div(x[p], H.at(p, t));
        if (c == T(0)) continue;
        for (std::size_t i = p; i < H.rows(); ++i) x[i] = x[i] - c * H.at(i, t);
    }
    return x;
}

// Fraction-free (Bareiss) determinant.
template <class T>
T determinant(BasicMatrix<T> a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const std::size_t n = a.rows();
    T prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a.at(k, k) == T(0)) {
            std::size_t s = k + 1;
            while (s < n && a.at(s, k) == T(0)) ++s;
            if (s == n) return T(0);
            a.swap_rows(k, s);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a.at(i, j) = (a.at(k, k) * a.at(i, j) - a.at(i, k) * a.at(k, j)) / prev;
            a.at(i, k) = T(0);
        }
        prev = a.at(k, k);
    }
    T det = a.at(n - 1, n - 1);
    return sign < 0 ? T(0) - det : det;
}

template <class T>
bool is_unimodular(const BasicMatrix<T>& u) {
    if (u.rows() != u.cols()) return false;
    T d = determinant(u);
    return d == T(1) || d == T(0) - T(1);
}

template <class T>
bool is_signed_permutation(const BasicMatrix<T>& p) {
    if (p.rows() != p.cols()) return false;
    const std::size_t n = p.rows();
    std::vector<bool> col_used(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t nonzero = 0, jnz = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (p.at(i, j) == T(0)) continue;
            if (p.at(i, j) != T(1) && p.at(i, j) != T(0) - T(1)) return false;
            ++nonzero;
            jnz = j;
        }
        if (nonzero != 1 || col_used[jnz]) return false;
        col_used[jnz] = true;
    }
    return true;
}

// L * M * R = diag(invariant_factors) (padded with zeros); factors positive
// with d_1 | d_2 | ... ; free_rank = rows - rank.
template <class T>
struct SmithForm {
    std::vector<T> invariant_factors;
    std::size_t rank = 0;
    std::size_t free_rank = 0;
    BasicMatrix<T> L;
    BasicMatrix<T> R;
};

template <class T>
SmithForm<T> smith_normal_form(const BasicMatrix<T>& M) {
    const std::size_t m = M.rows();
    const std::size_t r = M.cols();
    if (r == 0) throw std::invalid_argument("smith_normal_form requires at least one column");
    BasicMatrix<T> A = M;
    SmithForm<T> out;
    out.L = BasicMatrix<T>::identity(m);
    out.R = BasicMatrix<T>::identity(r);
    BasicMatrix<T>& L = out.L;
    BasicMatrix<T>& R = out.R;

    const std::size_t bound = m < r ? m : r;
    std::size_t t = 0;
    while (t < bound) {
        // Locate a nonzero entry of smallest magnitude in the trailing block.
        bool found = false;
        std::size_t pi = t, pj = t;
        T best(0);
        for (std::size_t i = t; i < m; ++i)
            for (std::size_t j = t; j < r; ++j) {
                const T& v = A.at(i, j);
                if (v == T(0)) continue;
                T av = abs_val(v);
                if (!found || av < best) {
                    found = true;
                    best = av;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        if (pi != t) {
            A.swap_rows(t, pi);
            L.swap_rows(t, pi);
        }
        if (pj != t) {
            A.swap_cols(t, pj);
            R.swap_cols(t, pj);
        }

        for (;;) {
            // Clear column t below the pivot.
            for (std::size_t i = t + 1; i < m; ++i) {
                if (A.at(i, t) == T(0)) continue;
                T p = A.at(t, t), q = A.at(i, t);
                if (divides(p, q)) {
                    T k = T(0) - q / p;
                    A.add_row_multiple(i, t, k);
                    L.add_row_multiple(i, t, k);
                } else {
                    ExtGcd<T> eg = ext_gcd(p, q);
                    T nb = T(0) - q / eg.g;
                    T pb = p / eg.g;
                    A.combine_rows(t, i, eg.x, eg.y, nb, pb);
                    L.combine_rows(t, i, eg.x, eg.y, nb, pb);
                }
            }
            // Clear row t right of the pivot (may reintroduce column entries).
            bool row_dirty = false;
            for (std::size_t j = t + 1; j < r; ++j) {
                if (A.at(t, j) == T(0)) continue;
                T p = A.at(t, t), q = A.at(t, j);
                if (divides(p, q)) {
                    T k = T(0) - q / p;
                    A.add_col_multiple(j, t, k);
                    R.add_col_multiple(j, t, k);
                } else {
                    ExtGcd<T> eg = ext_gcd(p, q);
                    T nb = T(0) - q / eg.g;
                    T pb = p / eg.g;
                    A.combine_cols(t, j, eg.x, eg.y, nb, pb);
                    R.combine_cols(t, j, eg.x, eg.y, nb, pb);
                    row_dirty = true;
                }
            }
            bool col_clear = true;
            for (std::size_t i = t + 1; i < m; ++i)
                if (A.at(i, t) != T(0)) col_clear = false;
            if (row_dirty || !col_clear) continue;

            // Pivot must divide the whole trailing block for the chain.
            bool fixed = false;
            for (std::size_t i = t + 1; i < m && !fixed; ++i)
                for (std::size_t j = t + 1; j < r && !fixed; ++j)
                    if (!divides(A.at(t, t), A.at(i, j))) {
                        A.add_row_multiple(t, i, T(1));
                        L.add_row_multiple(t, i, T(1));
                        fixed = true;
                    }
            if (!fixed) break;
        }
        if (A.at(t, t) < T(0)) {
            A.negate_row(t);
            L.negate_row(t);
        }
        ++t;
    }

    out.rank = t;
    out.free_rank = m - t;
    for (std::size_t i = 0; i < t; ++i) out.invariant_factors.push_back(A.at(i, i));
    for (std::size_t i = 0; i + 1 < t; ++i)
        if (!divides(out.invariant_factors[i], out.invariant_factors[i + 1]))
            throw std::logic_error("smith form divisibility chain broken");
    if (L.multiply(M).multiply(R) != A) throw std::logic_error("smith witness check failed");
    return out;
}

}  // namespace acg
