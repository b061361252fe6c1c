#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <cstring>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hgpopt {

/// Dense bit-packed matrix over GF(2). Rows are stored contiguously as
/// 64-bit words, least significant bit first; padding bits past `cols` are
/// kept zero by every operation so whole-word comparisons and XORs are safe.
class BitMatrix {
  public:
    BitMatrix() = default;

    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_(words_for(cols)), data_(rows * words_, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
        return m;
    }

    /// Test convenience: build from 0/1 row literals.
    static BitMatrix from_rows(const std::vector<std::vector<int>>& rows) {
        const std::size_t r = rows.size();
        const std::size_t c = r ? rows.front().size() : 0;
        BitMatrix m(r, c);
        for (std::size_t i = 0; i < r; ++i) {
            if (rows[i].size() != c) throw std::invalid_argument("from_rows: ragged rows");
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j] != 0);
        }
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t words_per_row() const { return words_; }

    bool get(std::size_t i, std::size_t j) const {
        assert(i < rows_ && j < cols_);
        return (data_[i * words_ + (j >> 6)] >> (j & 63)) & 1u;
    }

    void set(std::size_t i, std::size_t j, bool value) {
        assert(i < rows_ && j < cols_);
        const std::uint64_t mask = std::uint64_t{1} << (j & 63);
        if (value)
            data_[i * words_ + (j >> 6)] |= mask;
        else
            data_[i * words_ + (j >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row(std::size_t i) const {
        return {data_.data() + i * words_, words_};
    }

    std::span<std::uint64_t> row(std::size_t i) { return {data_.data() + i * words_, words_}; }

    bool is_zero() const {
        for (const auto w : data_)
            if (w) return false;
        return true;
    }

    std::size_t popcount() const {
        std::size_t n = 0;
        for (const auto w : data_) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    std::size_t row_weight(std::size_t i) const {
        std::size_t n = 0;
        for (const auto w : row(i)) n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    BitMatrix transpose() const {
        BitMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for_each_set_bit(row(i), [&](std::size_t j) { t.set(j, i, true); });
        return t;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

    /// Padding bits beyond `cols` must stay zero; checked by tests and debug builds.
    bool padding_is_zero() const {
        if (cols_ % 64 == 0 || words_ == 0) return true;
        const std::uint64_t tail = ~std::uint64_t{0} << (cols_ & 63);
        for (std::size_t i = 0; i < rows_; ++i)
            if (data_[i * words_ + words_ - 1] & tail) return false;
        return true;
    }

    /// Calls fn(bit_index) for every set bit of a packed row, low to high.
    template <typename Fn>
    static void for_each_set_bit(std::span<const std::uint64_t> row, Fn&& fn) {
        for (std::size_t w = 0; w < row.size(); ++w) {
            std::uint64_t word = row[w];
            while (word) {
                fn((w << 6) + static_cast<std::size_t>(std::countr_zero(word)));
                word &= word - 1;
            }
        }
    }

    static std::size_t words_for(std::size_t cols) { return (cols + 63) / 64; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::vector<std::uint64_t> data_;
};

/// Incremental row-echelon basis over GF(2). Rows are fed one at a time;
/// each independent row is stored with its lowest set bit as pivot. This is
/// the workhorse behind rank(): feeding rows in any order yields the same
/// rank, and callers in hot loops can stop feeding once the answer is
/// determined (e.g. the basis is full).
class GaussEliminator {
  public:
    void reset(std::size_t cols) {
        cols_ = cols;
        words_ = BitMatrix::words_for(cols);
        rank_ = 0;
        rows_.clear();
        pivot_row_.assign(cols, -1);
        scratch_.assign(words_, 0);
    }

    std::size_t rank() const { return rank_; }
    bool full() const { return rank_ == cols_; }

    /// Reduces `row` against the basis; if a nonzero remainder survives it
    /// joins the basis and the call returns true.
    bool insert(std::span<const std::uint64_t> row) {
        assert(row.size() == words_);
        if (full()) return false;
        std::memcpy(scratch_.data(), row.data(), words_ * sizeof(std::uint64_t));
        return insert_scratch();
    }

    /// Same as insert() but consumes the caller's scratch row in place.
    bool insert_destructive(std::uint64_t* row) {
        if (full()) return false;
        std::memcpy(scratch_.data(), row, words_ * sizeof(std::uint64_t));
        return insert_scratch();
    }

    /// True iff `row` lies in the span of the basis, i.e. stacking it onto
    /// the rows fed so far would not raise the rank. Does not modify state.
    bool reduces_to_zero(std::span<const std::uint64_t> row) const {
        assert(row.size() == words_);
        if (full()) return true;
        std::vector<std::uint64_t> r(row.begin(), row.end());
        for (std::size_t w = 0; w < words_; ++w) {
            while (r[w]) {
                const std::size_t bit = (w << 6) + static_cast<std::size_t>(std::countr_zero(r[w]));
                const std::int32_t owner = pivot_row_[bit];
                if (owner < 0) return false;
                const std::uint64_t* b = rows_.data() + static_cast<std::size_t>(owner) * words_;
                for (std::size_t k = w; k < words_; ++k) r[k] ^= b[k];
            }
        }
        return true;
    }

  private:
    bool insert_scratch() {
        std::uint64_t* r = scratch_.data();
        for (std::size_t w = 0; w < words_; ++w) {
            while (r[w]) {
                const std::size_t bit = (w << 6) + static_cast<std::size_t>(std::countr_zero(r[w]));
                const std::int32_t owner = pivot_row_[bit];
                if (owner < 0) {
                    // New pivot: append the reduced row to the basis.
                    pivot_row_[bit] = static_cast<std::int32_t>(rank_);
                    const std::size_t base = rows_.size();
                    rows_.resize(base + words_);
                    std::memcpy(rows_.data() + base, r, words_ * sizeof(std::uint64_t));
                    ++rank_;
                    return true;
                }
                // Basis row `owner` leads at `bit`; XOR clears it. Words
                // before w are already zero in both rows.
                const std::uint64_t* b = rows_.data() + static_cast<std::size_t>(owner) * words_;
                for (std::size_t k = w; k < words_; ++k) r[k] ^= b[k];
            }
        }
        return false;
    }

    std::size_t cols_ = 0;
    std::size_t words_ = 0;
    std::size_t rank_ = 0;
    std::vector<std::uint64_t> rows_;        // rank_ packed rows
    std::vector<std::int32_t> pivot_row_;    // bit index -> basis row, or -1
    std::vector<std::uint64_t> scratch_;
};

/// Rank over GF(2); the input is not modified.
inline std::size_t rank(const BitMatrix& m) {
    GaussEliminator elim;
    elim.reset(m.cols());
    for (std::size_t i = 0; i < m.rows() && !elim.full(); ++i) elim.insert(m.row(i));
    return elim.rank();
}

/// Rows of the result form a basis of the right kernel {v : m v^T = 0}.
/// Row count is cols − rank; no normal form beyond that is promised.
inline BitMatrix kernel_basis(const BitMatrix& m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    BitMatrix a = m;  // scratch copy, reduced in place

    std::vector<std::size_t> pivot_cols;
    std::vector<char> is_pivot(cols, 0);
    std::size_t next_row = 0;
    for (std::size_t col = 0; col < cols && next_row < rows; ++col) {
        std::size_t pivot = next_row;
        while (pivot < rows && !a.get(pivot, col)) ++pivot;
        if (pivot == rows) continue;
        if (pivot != next_row)
            for (std::size_t w = 0; w < a.words_per_row(); ++w)
                std::swap(a.row(next_row)[w], a.row(pivot)[w]);
        // Clear the column everywhere else (RREF) so back-substitution is direct.
        for (std::size_t i = 0; i < rows; ++i) {
            if (i != next_row && a.get(i, col)) {
                auto dst = a.row(i);
                auto src = a.row(next_row);
                for (std::size_t w = 0; w < a.words_per_row(); ++w) dst[w] ^= src[w];
            }
        }
        pivot_cols.push_back(col);
        is_pivot[col] = 1;
        ++next_row;
    }

    const std::size_t r = pivot_cols.size();
    BitMatrix basis(cols - r, cols);
    std::size_t out = 0;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        basis.set(out, free_col, true);
        for (std::size_t i = 0; i < r; ++i)
            if (a.get(i, free_col)) basis.set(out, pivot_cols[i], true);
        ++out;
    }
    assert(out == cols - r);
    return basis;
}

/// Matrix product over GF(2).
inline BitMatrix mul(const BitMatrix& a, const BitMatrix& b) {
    if (a.cols() != b.rows())
        throw std::invalid_argument("mul: inner dimensions differ (" + std::to_string(a.cols()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    BitMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        auto dst = c.row(i);
        BitMatrix::for_each_set_bit(a.row(i), [&](std::size_t j) {
            auto src = b.row(j);
            for (std::size_t w = 0; w < src.size(); ++w) dst[w] ^= src[w];
        });
    }
    return c;
}

/// Kronecker product: entry ((i1,i2),(j1,j2)) = a(i1,j1) * b(i2,j2).
inline BitMatrix kron(const BitMatrix& a, const BitMatrix& b) {
    BitMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
        BitMatrix::for_each_set_bit(a.row(i1), [&](std::size_t j1) {
            for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
                BitMatrix::for_each_set_bit(b.row(i2), [&](std::size_t j2) {
                    k.set(i1 * b.rows() + i2, j1 * b.cols() + j2, true);
                });
            }
        });
    }
    return k;
}

/// Horizontal concatenation [a | b].
inline BitMatrix hstack(const BitMatrix& a, const BitMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row counts differ (" + std::to_string(a.rows()) +
                                    " vs " + std::to_string(b.rows()) + ")");
    BitMatrix h(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        BitMatrix::for_each_set_bit(a.row(i), [&](std::size_t j) { h.set(i, j, true); });
        BitMatrix::for_each_set_bit(b.row(i), [&](std::size_t j) { h.set(i, a.cols() + j, true); });
    }
    return h;
}

/// Submatrix with the given columns, which must be strictly increasing.
inline BitMatrix select_columns(const BitMatrix& m, std::span<const std::size_t> idx) {
    for (std::size_t k = 0; k < idx.size(); ++k) {
        if (idx[k] >= m.cols())
            throw std::out_of_range("select_columns: index " + std::to_string(idx[k]) +
                                    " out of range for " + std::to_string(m.cols()) + " columns");
        if (k > 0 && idx[k] <= idx[k - 1])
            throw std::invalid_argument("select_columns: indices must be strictly increasing");
    }
    BitMatrix s(m.rows(), idx.size());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t k = 0; k < idx.size(); ++k)
            if (m.get(i, idx[k])) s.set(i, k, true);
    return s;
}

inline BitMatrix select_columns(const BitMatrix& m, const std::vector<std::size_t>& idx) {
    return select_columns(m, std::span<const std::size_t>(idx));
}

}  // namespace hgpopt
