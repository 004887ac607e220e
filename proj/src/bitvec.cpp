#include "pdrm/bitvec.hpp"

#include <bit>
#include <stdexcept>

namespace pdrm {

BitVec BitVec::from_positions(std::size_t nbits, std::span<const std::uint32_t> ones) {
    BitVec v(nbits);
    for (auto p : ones) {
        if (p >= nbits) throw std::out_of_range("BitVec::from_positions: position out of range");
        v.set(p, true);
    }
    return v;
}

std::size_t BitVec::weight() const noexcept {
    std::size_t w = 0;
    for (auto word : w_) w += static_cast<std::size_t>(std::popcount(word));
    return w;
}

bool BitVec::any() const noexcept {
    for (auto word : w_)
        if (word) return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (o.n_ != n_) throw std::invalid_argument("BitVec: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

BitVec operator^(BitVec a, const BitVec& b) {
    a ^= b;
    return a;
}

std::vector<std::uint32_t> BitVec::support() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < n_; ++i)
        if (get(i)) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

bool dot_parity(const BitVec& a, const BitVec& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot_parity: size mismatch");
    std::uint64_t acc = 0;
    auto wa = a.words(), wb = b.words();
    for (std::size_t i = 0; i < wa.size(); ++i) acc ^= wa[i] & wb[i];
    return std::popcount(acc) & 1;
}

std::string to_hex(const BitVec& v) {
    if (v.size() % 4 != 0) throw std::invalid_argument("to_hex: length not a multiple of 4");
    static const char digits[] = "0123456789abcdef";
    std::string out(v.size() / 4, '0');
    for (std::size_t d = 0; d < out.size(); ++d) {
        unsigned nib = 0;
        for (unsigned b = 0; b < 4; ++b)
            if (v.get(4 * d + b)) nib |= 8u >> b;
        out[d] = digits[nib];
    }
    return out;
}

static unsigned hex_digit(char c) {
    if (c >= '0' && c <= '9') return static_cast<unsigned>(c - '0');
    if (c >= 'a' && c <= 'f') return static_cast<unsigned>(c - 'a' + 10);
    if (c >= 'A' && c <= 'F') return static_cast<unsigned>(c - 'A' + 10);
    throw std::invalid_argument("bitvec_from_hex: invalid hex digit");
}

BitVec bitvec_from_hex(std::string_view hex, std::size_t nbits) {
    if (nbits % 4 != 0 || hex.size() * 4 != nbits)
        throw std::invalid_argument("bitvec_from_hex: length mismatch");
    BitVec v(nbits);
    for (std::size_t d = 0; d < hex.size(); ++d) {
        unsigned nib = hex_digit(hex[d]);
        for (unsigned b = 0; b < 4; ++b)
            if (nib & (8u >> b)) v.set(4 * d + b, true);
    }
    return v;
}

}  // namespace pdrm
