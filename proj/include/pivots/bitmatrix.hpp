#pragma once

#include <bit>
#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

namespace pivots {

// Dense matrix over GF(2) with at most 64 columns; each row is one word.
// Addition is XOR, multiplication is AND, so row operations are single
// word instructions.
struct BitMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint64_t> data;  // data[r] bit c == entry (r, c)

    BitMatrix() = default;
    BitMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r, 0) {}

    static BitMatrix identity(std::size_t n) {
        BitMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.data[i] = std::uint64_t(1) << i;
        return m;
    }

    bool get(std::size_t r, std::size_t c) const { return (data[r] >> c) & 1u; }

    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t(1) << c;
        if (v)
            data[r] |= mask;
        else
            data[r] &= ~mask;
    }

    bool is_symmetric() const {
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = r + 1; c < cols; ++c)
                if (get(r, c) != get(c, r)) return false;
        return rows == cols;
    }

    BitMatrix transposed() const {
        BitMatrix t(cols, rows);
        for (std::size_t r = 0; r < rows; ++r) {
            std::uint64_t w = data[r];
            while (w) {
                const int c = std::countr_zero(w);
                w &= w - 1;
                t.data[c] |= std::uint64_t(1) << r;
            }
        }
        return t;
    }

    friend BitMatrix operator*(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix out(a.rows, b.cols);
        for (std::size_t r = 0; r < a.rows; ++r) {
            std::uint64_t w = a.data[r];
            while (w) {
                const int k = std::countr_zero(w);
                w &= w - 1;
                out.data[r] ^= b.data[k];
            }
        }
        return out;
    }

    friend BitMatrix operator^(const BitMatrix& a, const BitMatrix& b) {
        BitMatrix out = a;
        for (std::size_t r = 0; r < out.rows; ++r) out.data[r] ^= b.data[r];
        return out;
    }

    friend bool operator==(const BitMatrix& a, const BitMatrix& b) {
        return a.rows == b.rows && a.cols == b.cols && a.data == b.data;
    }

    // Determinant of a square matrix: 1 iff elimination finds a full set
    // of pivots. Row swaps cost no sign over GF(2).
    int det() const {
        std::vector<std::uint64_t> m = data;
        for (std::size_t c = 0; c < rows; ++c) {
            const std::uint64_t mask = std::uint64_t(1) << c;
            std::size_t piv = c;
            while (piv < rows && !(m[piv] & mask)) ++piv;
            if (piv == rows) return 0;
            std::swap(m[c], m[piv]);
            for (std::size_t r = c + 1; r < rows; ++r)
                if (m[r] & mask) m[r] ^= m[c];
        }
        return 1;
    }

    std::size_t rank() const {
        std::vector<std::uint64_t> m = data;
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols && rk < rows; ++c) {
            const std::uint64_t mask = std::uint64_t(1) << c;
            std::size_t piv = rk;
            while (piv < rows && !(m[piv] & mask)) ++piv;
            if (piv == rows) continue;
            std::swap(m[rk], m[piv]);
            for (std::size_t r = 0; r < rows; ++r)
                if (r != rk && (m[r] & mask)) m[r] ^= m[rk];
            ++rk;
        }
        return rk;
    }

    std::optional<BitMatrix> inverted() const {
        const std::size_t n = rows;
        std::vector<std::uint64_t> m = data;
        BitMatrix inv = identity(n);
        for (std::size_t c = 0; c < n; ++c) {
            const std::uint64_t mask = std::uint64_t(1) << c;
            std::size_t piv = c;
            while (piv < n && !(m[piv] & mask)) ++piv;
            if (piv == n) return std::nullopt;
            std::swap(m[c], m[piv]);
            std::swap(inv.data[c], inv.data[piv]);
            for (std::size_t r = 0; r < n; ++r) {
                if (r != c && (m[r] & mask)) {
                    m[r] ^= m[c];
                    inv.data[r] ^= inv.data[c];
                }
            }
        }
        return inv;
    }

    // Basis of {x : Mx = 0}, one vector per free column. Pivot columns are
    // chosen in increasing column order, which makes the result canonical
    // for a given matrix.
    std::vector<std::uint64_t> kernel_basis() const {
        std::vector<std::uint64_t> m = data;
        std::vector<int> pivot_row_of_col(cols, -1);
        std::size_t rk = 0;
        for (std::size_t c = 0; c < cols && rk < rows; ++c) {
            const std::uint64_t mask = std::uint64_t(1) << c;
            std::size_t piv = rk;
            while (piv < rows && !(m[piv] & mask)) ++piv;
            if (piv == rows) continue;
            std::swap(m[rk], m[piv]);
            for (std::size_t r = 0; r < rows; ++r)
                if (r != rk && (m[r] & mask)) m[r] ^= m[rk];
            pivot_row_of_col[c] = static_cast<int>(rk);
            ++rk;
        }
        std::vector<std::uint64_t> basis;
        for (std::size_t f = 0; f < cols; ++f) {
            if (pivot_row_of_col[f] >= 0) continue;
            std::uint64_t v = std::uint64_t(1) << f;
            for (std::size_t c = 0; c < f; ++c) {
                const int pr = pivot_row_of_col[c];
                if (pr >= 0 && ((m[pr] >> f) & 1u)) v |= std::uint64_t(1) << c;
            }
            basis.push_back(v);
        }
        return basis;
    }
};

}  // namespace pivots
