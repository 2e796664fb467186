#pragma once

// Dense integer matrices over an exact integer type (BigInt or CheckedI64).
// Row-major storage.  Matrices always have at least one row; zero columns are
// allowed (the lattice then is trivial and the Cayley graph is K_1-free space
// Z^m with no generators identified -- callers treat that case explicitly).

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "acg/int.hpp"

namespace acg {

template <class T>
class BasicMatrix {
  public:
    BasicMatrix() : rows_(1), cols_(0), data_(0) {}

    BasicMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {
        if (rows == 0) throw std::invalid_argument("matrix must have at least one row");
    }

    static BasicMatrix from_rows(std::initializer_list<std::initializer_list<long long>> rows) {
        if (rows.size() == 0) throw std::invalid_argument("matrix must have at least one row");
        std::size_t cols = rows.begin()->size();
        BasicMatrix m(rows.size(), cols);
        std::size_t i = 0;
        for (const auto& row : rows) {
            if (row.size() != cols) throw std::invalid_argument("ragged matrix literal");
            std::size_t j = 0;
            for (long long v : row) m.at(i, j++) = T(v);
            ++i;
        }
        return m;
    }

    static BasicMatrix identity(std::size_t n) {
        BasicMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    T& at(std::size_t i, std::size_t j) {
        check(i, j);
        return data_[i * cols_ + j];
    }
    const T& at(std::size_t i, std::size_t j) const {
        check(i, j);
        return data_[i * cols_ + j];
    }

    std::vector<T> row(std::size_t i) const {
        std::vector<T> r(cols_);
        for (std::size_t j = 0; j < cols_; ++j) r[j] = at(i, j);
        return r;
    }
    std::vector<T> col(std::size_t j) const {
        std::vector<T> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
        return c;
    }

    bool is_zero_row(std::size_t i) const {
        for (std::size_t j = 0; j < cols_; ++j)
            if (at(i, j) != T(0)) return false;
        return true;
    }
    bool is_zero_col(std::size_t j) const {
        for (std::size_t i = 0; i < rows_; ++i)
            if (at(i, j) != T(0)) return false;
        return true;
    }
    bool is_zero() const {
        for (const T& v : data_)
            if (v != T(0)) return false;
        return true;
    }

    std::vector<T> column_sums() const {
        std::vector<T> s(cols_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) s[j] = s[j] + at(i, j);
        return s;
    }

    // Column elementary operations (act on the lattice basis, preserve the
    // column span up to the operation's effect).
    void swap_cols(std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < rows_; ++i) std::swap(at(i, a), at(i, b));
    }
    void negate_col(std::size_t j) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, j) = T(0) - at(i, j);
    }
    // col a += k * col b
    void add_col_multiple(std::size_t a, std::size_t b, const T& k) {
        for (std::size_t i = 0; i < rows_; ++i) at(i, a) = at(i, a) + k * at(i, b);
    }
    // Replace columns (a, b) by (x*a + y*b, u*a + v*b) simultaneously.
    void combine_cols(std::size_t a, std::size_t b, const T& x, const T& y, const T& u,
                      const T& v) {
        for (std::size_t i = 0; i < rows_; ++i) {
            T va = at(i, a), vb = at(i, b);
            at(i, a) = x * va + y * vb;
            at(i, b) = u * va + v * vb;
        }
    }

    void swap_rows(std::size_t a, std::size_t b) {
        for (std::size_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
    }
    void negate_row(std::size_t i) {
        for (std::size_t j = 0; j < cols_; ++j) at(i, j) = T(0) - at(i, j);
    }
    // row a += k * row b
    void add_row_multiple(std::size_t a, std::size_t b, const T& k) {
        for (std::size_t j = 0; j < cols_; ++j) at(a, j) = at(a, j) + k * at(b, j);
    }
    // Replace rows (a, b) by (x*a + y*b, u*a + v*b) simultaneously.
    void combine_rows(std::size_t a, std::size_t b, const T& x, const T& y, const T& u,
                      const T& v) {
        for (std::size_t j = 0; j < cols_; ++j) {
            T va = at(a, j), vb = at(b, j);
            at(a, j) = x * va + y * vb;
            at(b, j) = u * va + v * vb;
        }
    }

    BasicMatrix without_row(std::size_t drop) const {
        if (rows_ == 1) throw std::invalid_argument("cannot remove the only row");
        BasicMatrix m(rows_ - 1, cols_);
        std::size_t di = 0;
        for (std::size_t i = 0; i < rows_; ++i) {
            if (i == drop) continue;
            for (std::size_t j = 0; j < cols_; ++j) m.at(di, j) = at(i, j);
            ++di;
        }
        return m;
    }

    BasicMatrix without_col(std::size_t drop) const {
        BasicMatrix m(rows_, cols_ - 1);
        for (std::size_t i = 0; i < rows_; ++i) {
            std::size_t dj = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (j == drop) continue;
                m.at(i, dj++) = at(i, j);
            }
        }
        return m;
    }

    BasicMatrix keep_cols(const std::vector<std::size_t>& keep) const {
        BasicMatrix m(rows_, keep.size());
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < keep.size(); ++j) m.at(i, j) = at(i, keep[j]);
        return m;
    }

    BasicMatrix multiply(const BasicMatrix& rhs) const {
        if (cols_ != rhs.rows_) throw std::invalid_argument("dimension mismatch in multiply");
        BasicMatrix out(rows_, rhs.cols_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const T& v = at(i, k);
                if (v == T(0)) continue;
                for (std::size_t j = 0; j < rhs.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + v * rhs.at(k, j);
            }
        return out;
    }

    std::vector<T> multiply_vec(const std::vector<T>& x) const {
        if (cols_ != x.size()) throw std::invalid_argument("dimension mismatch in multiply_vec");
        std::vector<T> out(rows_, T(0));
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out[i] = out[i] + at(i, j) * x[j];
        return out;
    }

    BasicMatrix transpose() const {
        if (cols_ == 0) throw std::invalid_argument("cannot transpose a zero-column matrix");
        BasicMatrix m(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
        return m;
    }

    bool operator==(const BasicMatrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && data_ == rhs.data_;
    }
    bool operator!=(const BasicMatrix& rhs) const { return !(*this == rhs); }

    // Row-major lexicographic order; used to pick canonical representatives
    // among equally valid normal forms.
    bool lex_less(const BasicMatrix& rhs) const {
        if (rows_ != rhs.rows_ || cols_ != rhs.cols_)
            throw std::invalid_argument("lex_less requires equal shapes");
        for (std::size_t k = 0; k < data_.size(); ++k) {
            if (data_[k] < rhs.data_[k]) return true;
            if (rhs.data_[k] < data_[k]) return false;
        }
        return false;
    }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < rows_; ++i) {
            out += (i == 0 ? "[" : " [");
            for (std::size_t j = 0; j < cols_; ++j) {
                out += to_decimal(at(i, j));
                if (j + 1 < cols_) out += " ";
            }
            out += "]";
            if (i + 1 < rows_) out += "\n";
        }
        out += "]";
        return out;
    }

  private:
    void check(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_) throw std::out_of_range("matrix index out of range");
    }

    std::size_t rows_;
    std::size_t cols_;
    std::vector<T> data_;
};

using IntMatrix = BasicMatrix<BigInt>;
using IntMatrix64 = BasicMatrix<CheckedI64>;

inline BasicMatrix<BigInt> to_big(const BasicMatrix<BigInt>& m) { return m; }

inline BasicMatrix<BigInt> to_big(const BasicMatrix<CheckedI64>& m) {
    BasicMatrix<BigInt> out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out.at(i, j) = BigInt(m.at(i, j).value());
    return out;
}

}  // namespace acg
