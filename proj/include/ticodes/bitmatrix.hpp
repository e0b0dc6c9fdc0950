// Copyright 2026 The ticodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TICODES_BITMATRIX_HPP
#define TICODES_BITMATRIX_HPP

#include <bit>
#include <cstdint>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ticodes/error.hpp"

namespace ticodes {

inline size_t words_for(size_t bits) {
    return (bits + 63) / 64;
}

/// Packed vector over F2.
class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t n) : size_(n), words_(words_for(n), 0) {
    }

    static BitVector from_bits(const std::vector<int> &bits) {
        BitVector v(bits.size());
        for (size_t i = 0; i < bits.size(); i++) {
            if (bits[i] & 1) {
                v.set(i);
            }
        }
        return v;
    }

    size_t size() const {
        return size_;
    }
    bool get(size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }
    void set(size_t i, bool value = true) {
        uint64_t mask = uint64_t{1} << (i & 63);
        if (value) {
            words_[i >> 6] |= mask;
        } else {
            words_[i >> 6] &= ~mask;
        }
    }
    void flip(size_t i) {
        words_[i >> 6] ^= uint64_t{1} << (i & 63);
    }

    size_t weight() const {
        size_t w = 0;
        for (uint64_t x : words_) {
            w += static_cast<size_t>(std::popcount(x));
        }
        return w;
    }
    bool is_zero() const {
        for (uint64_t x : words_) {
            if (x) {
                return false;
            }
        }
        return true;
    }

    std::vector<size_t> support() const {
        std::vector<size_t> out;
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t x = words_[w];
            while (x) {
                out.push_back(w * 64 + static_cast<size_t>(std::countr_zero(x)));
                x &= x - 1;
            }
        }
        return out;
    }

    BitVector &operator^=(const BitVector &o) {
        if (o.size_ != size_) {
            throw DimensionMismatch("BitVector xor: sizes differ");
        }
        for (size_t i = 0; i < words_.size(); i++) {
            words_[i] ^= o.words_[i];
        }
        return *this;
    }
    BitVector operator^(const BitVector &o) const {
        BitVector r = *this;
        r ^= o;
        return r;
    }

    /// Parity of the bitwise AND.
    bool dot(const BitVector &o) const {
        if (o.size_ != size_) {
            throw DimensionMismatch("BitVector dot: sizes differ");
        }
        uint64_t acc = 0;
        for (size_t i = 0; i < words_.size(); i++) {
            acc ^= words_[i] & o.words_[i];
        }
        return std::popcount(acc) & 1;
    }

    std::span<uint64_t> words() {
        return words_;
    }
    std::span<const uint64_t> words() const {
        return words_;
    }

    std::string to_string() const {
        std::string s(size_, '0');
        for (size_t i = 0; i < size_; i++) {
            if (get(i)) {
                s[i] = '1';
            }
        }
        return s;
    }

    bool operator==(const BitVector &) const = default;

  private:
    size_t size_ = 0;
    std::vector<uint64_t> words_;
};

/// Dense row-major matrix over F2, each row packed into 64-bit words.
class BinaryMatrix {
  public:
    BinaryMatrix() = default;
    BinaryMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), stride_(words_for(cols)) {
        data_.assign(rows_ * stride_, 0);
    }

    static BinaryMatrix identity(size_t n) {
        BinaryMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m.set(i, i);
        }
        return m;
    }

    static BinaryMatrix from_rows(const std::vector<std::vector<int>> &rows) {
        size_t cols = rows.empty() ? 0 : rows.front().size();
        BinaryMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); i++) {
            if (rows[i].size() != cols) {
                throw DimensionMismatch("BinaryMatrix::from_rows: ragged rows");
            }
            for (size_t j = 0; j < cols; j++) {
                if (rows[i][j] & 1) {
                    m.set(i, j);
                }
            }
        }
        return m;
    }

    static BinaryMatrix from_row_vectors(const std::vector<BitVector> &rows, size_t cols) {
        BinaryMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); i++) {
            m.set_row(i, rows[i]);
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    bool get(size_t r, size_t c) const {
        return (row_words(r)[c >> 6] >> (c & 63)) & 1;
    }
    void set(size_t r, size_t c, bool value = true) {
        uint64_t mask = uint64_t{1} << (c & 63);
        uint64_t &w = data_[r * stride_ + (c >> 6)];
        w = value ? (w | mask) : (w & ~mask);
    }
    void flip(size_t r, size_t c) {
        data_[r * stride_ + (c >> 6)] ^= uint64_t{1} << (c & 63);
    }

    std::span<uint64_t> row_words(size_t r) {
        return {data_.data() + r * stride_, stride_};
    }
    std::span<const uint64_t> row_words(size_t r) const {
        return {data_.data() + r * stride_, stride_};
    }

    BitVector row(size_t r) const {
        BitVector v(cols_);
        auto src = row_words(r);
        std::copy(src.begin(), src.end(), v.words().begin());
        return v;
    }
    void set_row(size_t r, const BitVector &v) {
        if (v.size() != cols_) {
            throw DimensionMismatch("set_row: length differs from column count");
        }
        auto src = v.words();
        std::copy(src.begin(), src.end(), row_words(r).begin());
    }
    size_t row_weight(size_t r) const {
        size_t w = 0;
        for (uint64_t x : row_words(r)) {
            w += static_cast<size_t>(std::popcount(x));
        }
        return w;
    }
    size_t col_weight(size_t c) const {
        size_t w = 0;
        for (size_t r = 0; r < rows_; r++) {
            w += get(r, c);
        }
        return w;
    }

    /// row[dst] ^= row[src]
    void xor_row(size_t dst, size_t src) {
        uint64_t *d = data_.data() + dst * stride_;
        const uint64_t *s = data_.data() + src * stride_;
        for (size_t i = 0; i < stride_; i++) {
            d[i] ^= s[i];
        }
    }
    void swap_rows(size_t a, size_t b) {
        if (a == b) {
            return;
        }
        for (size_t i = 0; i < stride_; i++) {
            std::swap(data_[a * stride_ + i], data_[b * stride_ + i]);
        }
    }

    bool is_zero() const {
        for (uint64_t x : data_) {
            if (x) {
                return false;
            }
        }
        return true;
    }

    size_t nonzeros() const {
        size_t w = 0;
        for (uint64_t x : data_) {
            w += static_cast<size_t>(std::popcount(x));
        }
        return w;
    }

    BinaryMatrix transpose() const {
        BinaryMatrix t(cols_, rows_);
        for (size_t r = 0; r < rows_; r++) {
            auto w = row_words(r);
            for (size_t k = 0; k < stride_; k++) {
                uint64_t x = w[k];
                while (x) {
                    size_t c = k * 64 + static_cast<size_t>(std::countr_zero(x));
                    t.set(c, r);
                    x &= x - 1;
                }
            }
        }
        return t;
    }

    /// M v over F2.
    BitVector multiply(const BitVector &v) const {
        if (v.size() != cols_) {
            throw DimensionMismatch("matrix-vector product: length differs from column count");
        }
        BitVector out(rows_);
        auto vw = v.words();
        for (size_t r = 0; r < rows_; r++) {
            auto w = row_words(r);
            uint64_t acc = 0;
            for (size_t k = 0; k < stride_; k++) {
                acc ^= w[k] & vw[k];
            }
            if (std::popcount(acc) & 1) {
                out.set(r);
            }
        }
        return out;
    }

    /// this * other^T; handy for H_X H_Z^T.
    BinaryMatrix multiply_transpose(const BinaryMatrix &other) const {
        if (other.cols_ != cols_) {
            throw DimensionMismatch("A B^T: column counts differ");
        }
        BinaryMatrix out(rows_, other.rows_);
        for (size_t i = 0; i < rows_; i++) {
            auto a = row_words(i);
            for (size_t j = 0; j < other.rows_; j++) {
                auto b = other.row_words(j);
                uint64_t acc = 0;
                for (size_t k = 0; k < stride_; k++) {
                    acc ^= a[k] & b[k];
                }
                if (std::popcount(acc) & 1) {
                    out.set(i, j);
                }
            }
        }
        return out;
    }

    BinaryMatrix operator*(const BinaryMatrix &o) const {
        return multiply_transpose(o.transpose());
    }

    /// Stacks `other` below this matrix.
    BinaryMatrix vstack(const BinaryMatrix &other) const {
        if (other.cols_ != cols_) {
            throw DimensionMismatch("vstack: column counts differ");
        }
        BinaryMatrix out(rows_ + other.rows_, cols_);
        std::copy(data_.begin(), data_.end(), out.data_.begin());
        std::copy(other.data_.begin(), other.data_.end(), out.data_.begin() + static_cast<long>(data_.size()));
        return out;
    }

    /// In-place reduced row echelon form; returns pivot columns in row order.
    /// Rows below the rank are zero afterwards.
    std::vector<size_t> rref() {
        std::vector<size_t> pivots;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; c++) {
            const size_t wi = c >> 6;
            const uint64_t mask = uint64_t{1} << (c & 63);
            size_t p = r;
            while (p < rows_ && !(data_[p * stride_ + wi] & mask)) {
                p++;
            }
            if (p == rows_) {
                continue;
            }
            swap_rows(p, r);
            const uint64_t *src = data_.data() + r * stride_;
            for (size_t i = 0; i < rows_; i++) {
                if (i != r && (data_[i * stride_ + wi] & mask)) {
                    uint64_t *dst = data_.data() + i * stride_;
                    for (size_t k = wi; k < stride_; k++) {
                        dst[k] ^= src[k];
                    }
                }
            }
            pivots.push_back(c);
            r++;
        }
        return pivots;
    }

    size_t rank() const {
        // Forward elimination only.
        BinaryMatrix m = *this;
        size_t r = 0;
        for (size_t c = 0; c < cols_ && r < rows_; c++) {
            const size_t wi = c >> 6;
            const uint64_t mask = uint64_t{1} << (c & 63);
            size_t p = r;
            while (p < rows_ && !(m.data_[p * stride_ + wi] & mask)) {
                p++;
            }
            if (p == rows_) {
                continue;
            }
            m.swap_rows(p, r);
            const uint64_t *src = m.data_.data() + r * stride_;
            for (size_t i = r + 1; i < rows_; i++) {
                if (m.data_[i * stride_ + wi] & mask) {
                    uint64_t *dst = m.data_.data() + i * stride_;
                    for (size_t k = wi; k < stride_; k++) {
                        dst[k] ^= src[k];
                    }
                }
            }
            r++;
        }
        return r;
    }

    /// Basis of { v : M v = 0 }, one vector per free column.
    std::vector<BitVector> nullspace() const {
        BinaryMatrix m = *this;
        std::vector<size_t> pivots = m.rref();
        std::vector<char> is_pivot(cols_, 0);
        for (size_t c : pivots) {
            is_pivot[c] = 1;
        }
        std::vector<BitVector> basis;
        for (size_t free = 0; free < cols_; free++) {
            if (is_pivot[free]) {
                continue;
            }
            BitVector v(cols_);
            v.set(free);
            for (size_t i = 0; i < pivots.size(); i++) {
                if (m.get(i, free)) {
                    v.set(pivots[i]);
                }
            }
            basis.push_back(std::move(v));
        }
        return basis;
    }

    /// True iff v is a sum of rows of this matrix.
    bool row_space_contains(const BitVector &v) const {
        if (v.size() != cols_) {
            throw DimensionMismatch("row_space_contains: vector length differs from column count");
        }
        BinaryMatrix ext(rows_ + 1, cols_);
        std::copy(data_.begin(), data_.end(), ext.data_.begin());
        ext.set_row(rows_, v);
        return ext.rank() == rank();
    }

    bool operator==(const BinaryMatrix &) const = default;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    size_t stride_ = 0;
    std::vector<uint64_t> data_;
};

/// Incremental echelon basis: answers "is v in the span so far?" and grows.
class SpanBuilder {
  public:
    explicit SpanBuilder(size_t n) : n_(n) {
    }

    /// Reduces v against the basis; returns the residue (zero iff in span).
    BitVector reduce(BitVector v) const {
        for (size_t i = 0; i < basis_.size(); i++) {
            if (v.get(pivots_[i])) {
                v ^= basis_[i];
            }
        }
        return v;
    }

    /// Adds v if independent; returns whether the span grew.
    bool insert(const BitVector &v) {
        BitVector r = reduce(v);
        auto supp = r.support();
        if (supp.empty()) {
            return false;
        }
        size_t p = supp.front();
        for (auto &b : basis_) {
            if (b.get(p)) {
                b ^= r;
            }
        }
        basis_.push_back(std::move(r));
        pivots_.push_back(p);
        return true;
    }

    bool contains(const BitVector &v) const {
        return reduce(v).is_zero();
    }
    size_t dimension() const {
        return basis_.size();
    }
    size_t length() const {
        return n_;
    }

  private:
    size_t n_;
    std::vector<BitVector> basis_;
    std::vector<size_t> pivots_;
};

}  // namespace ticodes

#endif
