#pragma once

// The structure-preserving matrix moves: loop detection, bipartiteness,
// zero-row deletion, dependent-column removal, row collapsing, column
// reduction, and the 5x2 three-divisible-pair search.

#include <optional>
#include <stdexcept>
#include <vector>

#include "acg/int.hpp"
#include "acg/int_matrix.hpp"
#include "acg/normal_form.hpp"

namespace acg {

// e_{index} = M * coefficients (index 0-based internally).
template <class T>
struct LoopWitness {
    std::size_t index = 0;
    std::vector<T> coefficients;
};

template <class T>
std::optional<LoopWitness<T>> has_loops(const BasicMatrix<T>& M) {
    HermiteBasis<T> hb = column_hnf(M);
    for (std::size_t i = 0; i < M.rows(); ++i) {
        std::vector<T> e(M.rows(), T(0));
        e[i] = T(1);
        auto c = solve_in_lattice(hb, e);
        if (c) return LoopWitness<T>{i, *c};
    }
    return std::nullopt;
}

template <class T>
bool is_bipartite(const BasicMatrix<T>& M) {
    for (const T& s : M.column_sums())
        if (!divides(T(2), s)) return false;
    return true;
}

template <class T>
struct ZeroRowRemoval {
    BasicMatrix<T> matrix;
    std::vector<std::size_t> removed_rows;  // 0-based indices into the input
};

// Removes every all-zero row.  The all-zero matrix has no nonzero row to keep,
// so it is rejected; the dispatcher handles that degenerate case first.
template <class T>
ZeroRowRemoval<T> delete_zero_rows(const BasicMatrix<T>& M) {
    std::vector<std::size_t> keep, removed;
    for (std::size_t i = 0; i < M.rows(); ++i)
        (M.is_zero_row(i) ? removed : keep).push_back(i);
    if (keep.empty()) throw std::invalid_argument("all rows are zero");
    BasicMatrix<T> out(keep.size(), M.cols());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = 0; j < M.cols(); ++j) out.at(i, j) = M.at(keep[i], j);
    return {out, removed};
}

// Same column lattice, Z-linearly independent columns: the nonzero columns of
// the column Hermite form.
template <class T>
BasicMatrix<T> drop_dependent_columns(const BasicMatrix<T>& M) {
    HermiteBasis<T> hb = column_hnf(M);
    std::vector<std::size_t> keep;
    for (std::size_t j = 0; j < hb.rank(); ++j) keep.push_back(j);
    return hb.H.keep_cols(keep);
}

// Row i <- row i + eps * row j, then delete row j.
template <class T>
BasicMatrix<T> collapse_rows(const BasicMatrix<T>& M, std::size_t i, std::size_t j, int eps) {
    if (i == j) throw std::invalid_argument("collapse_rows requires distinct rows");
    if (i >= M.rows() || j >= M.rows()) throw std::out_of_range("row index out of range");
    if (eps != 1 && eps != -1) throw std::invalid_argument("eps must be +1 or -1");
    BasicMatrix<T> tmp = M;
    tmp.add_row_multiple(i, j, eps == 1 ? T(1) : T(0) - T(1));
    return tmp.without_row(j);
}

// Divide column j by the gcd of its entries.
template <class T>
BasicMatrix<T> reduce_column(const BasicMatrix<T>& M, std::size_t j) {
    if (j >= M.cols()) throw std::out_of_range("column index out of range");
    if (M.is_zero_col(j)) throw std::invalid_argument("cannot reduce a zero column");
    T g(0);
    for (std::size_t i = 0; i < M.rows(); ++i) g = gcd_val(g, M.at(i, j));
    BasicMatrix<T> out = M;
    for (std::size_t i = 0; i < M.rows(); ++i) out.at(i, j) = out.at(i, j) / g;
    return out;
}

// Either a single row already divisible by 3, or a pair whose signed sum is.
struct RowCombo {
    bool single = false;
    std::size_t i = 0;  // the divisible row, or the row kept by the collapse
    std::size_t j = 0;  // the row folded in (pairs only)
    int eps = 1;        // pairs only
};

// Every 5x2 integer matrix has one: the eight nonzero residue vectors mod 3
// split into four {v, -v} classes, so five rows either contain a zero residue
// row or two rows in one class.  Scan order: single rows first, then pairs in
// lexicographic (i, j) order trying eps = -1 before +1.
template <class T>
RowCombo find_three_divisible_pair(const BasicMatrix<T>& M) {
    if (M.rows() != 5 || M.cols() != 2)
        throw std::invalid_argument("find_three_divisible_pair expects a 5x2 matrix");
    auto res = [&](std::size_t i, std::size_t j) { return mod_floor(M.at(i, j), T(3)); };
    for (std::size_t i = 0; i < 5; ++i)
        if (res(i, 0) == T(0) && res(i, 1) == T(0)) return {true, i, 0, 1};
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = i + 1; j < 5; ++j)
            for (int eps : {-1, 1}) {
                T a = res(i, 0) + T(eps) * res(j, 0);
                T b = res(i, 1) + T(eps) * res(j, 1);
                if (mod_floor(a, T(3)) == T(0) && mod_floor(b, T(3)) == T(0))
                    return {false, i, j, eps};
            }
    throw std::logic_error("no three-divisible pair found in a 5x2 matrix");
}

template <class T>
bool has_row_divisible_by(const BasicMatrix<T>& M, const T& n) {
    for (std::size_t i = 0; i < M.rows(); ++i) {
        bool all = true;
        for (std::size_t j = 0; j < M.cols(); ++j)
            if (!divides(n, M.at(i, j))) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

}  // namespace acg
