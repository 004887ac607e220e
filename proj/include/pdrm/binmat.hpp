#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "pdrm/bitvec.hpp"

namespace pdrm {

// Dense GF(2) matrix with bit-packed rows; elimination is word-level XOR.
class BinMatrix {
public:
    BinMatrix() = default;
    BinMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (w_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (c & 63);
        if (v)
            w_[r * wpr_ + (c >> 6)] |= mask;
        else
            w_[r * wpr_ + (c >> 6)] &= ~mask;
    }

    std::span<const std::uint64_t> row_words(std::size_t r) const {
        return {w_.data() + r * wpr_, wpr_};
    }

    void xor_row_into(std::size_t src, std::size_t dst) {
        auto* s = w_.data() + src * wpr_;
        auto* d = w_.data() + dst * wpr_;
        for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
    }

    void swap_rows(std::size_t a, std::size_t b);

    BitVec row_copy(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    // H * v^T as a length-rows() vector of row parities.
    BitVec mul_vec(const BitVec& v) const;

    bool row_is_zero(std::size_t r) const;

    bool operator==(const BinMatrix&) const = default;

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> w_;
};

std::size_t rank_of(BinMatrix a);  // destructive on the copy

// Reduced row echelon form; returns pivot columns in row order.
std::vector<std::uint32_t> rref_in_place(BinMatrix& a);

// Basis of the right null space, one vector per row, free columns ascending.
BinMatrix null_space(const BinMatrix& a);

BinMatrix stack_rows(const BinMatrix& top, const BinMatrix& bottom);
BinMatrix select_columns(const BinMatrix& a, std::span<const std::uint32_t> cols);

}  // namespace pdrm
