#include "pdrm/binmat.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pdrm {

void BinMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    auto* pa = w_.data() + a * wpr_;
    auto* pb = w_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

BitVec BinMatrix::row_copy(std::size_t r) const {
    BitVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c, true);
    return v;
}

void BinMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BinMatrix::set_row: size mismatch");
    auto words = v.words();
    auto* d = w_.data() + r * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] = words[i];
}

BitVec BinMatrix::mul_vec(const BitVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("BinMatrix::mul_vec: size mismatch");
    BitVec out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        std::uint64_t acc = 0;
        auto rw = row_words(r);
        auto vw = v.words();
        for (std::size_t i = 0; i < wpr_; ++i) acc ^= rw[i] & vw[i];
        if (std::popcount(acc) & 1) out.set(r, true);
    }
    return out;
}

bool BinMatrix::row_is_zero(std::size_t r) const {
    auto rw = row_words(r);
    for (auto w : rw)
        if (w) return false;
    return true;
}

std::vector<std::uint32_t> rref_in_place(BinMatrix& a) {
    std::vector<std::uint32_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && !a.get(p, col)) ++p;
        if (p == a.rows()) continue;
        a.swap_rows(p, row);
        for (std::size_t r = 0; r < a.rows(); ++r)
            if (r != row && a.get(r, col)) a.xor_row_into(row, r);
        pivots.push_back(static_cast<std::uint32_t>(col));
        ++row;
    }
    return pivots;
}

std::size_t rank_of(BinMatrix a) { return rref_in_place(a).size(); }

BinMatrix null_space(const BinMatrix& a) {
    BinMatrix r = a;
    auto pivots = rref_in_place(r);
    std::vector<bool> is_pivot(a.cols(), false);
    for (auto c : pivots) is_pivot[c] = true;

    std::vector<std::uint32_t> free_cols;
    for (std::size_t c = 0; c < a.cols(); ++c)
        if (!is_pivot[c]) free_cols.push_back(static_cast<std::uint32_t>(c));

    BinMatrix basis(free_cols.size(), a.cols());
    for (std::size_t k = 0; k < free_cols.size(); ++k) {
        const std::uint32_t f = free_cols[k];
        basis.set(k, f, true);
        for (std::size_t i = 0; i < pivots.size(); ++i)
            if (r.get(i, f)) basis.set(k, pivots[i], true);
    }
    return basis;
}

BinMatrix stack_rows(const BinMatrix& top, const BinMatrix& bottom) {
    if (top.cols() != bottom.cols()) throw std::invalid_argument("stack_rows: column mismatch");
    BinMatrix out(top.rows() + bottom.rows(), top.cols());
    for (std::size_t r = 0; r < top.rows(); ++r) out.set_row(r, top.row_copy(r));
    for (std::size_t r = 0; r < bottom.rows(); ++r) out.set_row(top.rows() + r, bottom.row_copy(r));
    return out;
}

BinMatrix select_columns(const BinMatrix& a, std::span<const std::uint32_t> cols) {
    BinMatrix out(a.rows(), cols.size());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (a.get(r, cols[j])) out.set(r, j, true);
    return out;
}

}  // namespace pdrm
