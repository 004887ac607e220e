#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdrm {

// Fixed-length bit vector packed into 64-bit words. Bit p of a length-2^m
// vector is the coefficient at position p of the order [0, a^0, ..., a^{n-1}].
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t nbits) : n_(nbits), w_((nbits + 63) / 64, 0) {}

    static BitVec from_positions(std::size_t nbits, std::span<const std::uint32_t> ones);

    std::size_t size() const noexcept { return n_; }

    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }

    void set(std::size_t i, bool v) {
        const std::uint64_t mask = std::uint64_t{1} << (i & 63);
        if (v)
            w_[i >> 6] |= mask;
        else
            w_[i >> 6] &= ~mask;
    }

    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t weight() const noexcept;
    bool any() const noexcept;

    BitVec& operator^=(const BitVec& o);
    bool operator==(const BitVec&) const = default;

    std::span<const std::uint64_t> words() const noexcept { return w_; }
    std::vector<std::uint32_t> support() const;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

BitVec operator^(BitVec a, const BitVec& b);

// Parity of the AND of two equal-length vectors (GF(2) dot product).
bool dot_parity(const BitVec& a, const BitVec& b);

// Hex serialization: the first hex digit holds positions 0..3 with position 0
// as its most significant bit. Length must be a multiple of 4 bits.
std::string to_hex(const BitVec& v);
BitVec bitvec_from_hex(std::string_view hex, std::size_t nbits);

}  // namespace pdrm
