#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace pdrm {

// Number of ones in the binary expansion of k.
inline int weight2(std::uint64_t k) noexcept { return std::popcount(k); }

// GF(2^m), 3 <= m <= 16, with a fixed primitive element alpha generating the
// cyclic group of order n = 2^m - 1. Elements are m-bit coordinate vectors in
// the polynomial basis {1, alpha, ..., alpha^{m-1}}; zero is the zero vector.
// Immutable after construction; all operations are pure.
class Gf2m {
public:
    using Elem = std::uint32_t;

    // poly is the full degree-m bitmask (bit m set). When absent, the
    // smallest-bitmask primitive polynomial of degree m is used.
    static Gf2m make(int m, std::optional<std::uint32_t> poly = std::nullopt);

    static std::uint32_t default_primitive_poly(int m);
    // Brute-force check: the class of X modulo poly has multiplicative order
    // exactly 2^m - 1 (which also forces irreducibility).
    static bool is_primitive_poly(int m, std::uint32_t poly);

    int m() const noexcept { return m_; }
    std::uint32_t n() const noexcept { return n_; }                  // 2^m - 1
    std::uint32_t field_size() const noexcept { return n_ + 1; }     // 2^m
    std::uint32_t poly() const noexcept { return poly_; }

    static Elem add(Elem x, Elem y) noexcept { return x ^ y; }
    Elem mul(Elem x, Elem y) const;
    Elem inv(Elem x) const;
    // pow(0, 0) = 1 by the usual convention; pow(0, k) = 0 otherwise.
    Elem pow(Elem x, std::int64_t k) const;

    Elem alpha_pow(std::int64_t e) const;  // alpha^e, exponent reduced mod n
    std::uint32_t log(Elem x) const;       // exponent of a nonzero element

    // Position order [0, alpha^0, ..., alpha^{n-1}] used by all vectors.
    std::uint32_t pos_of(Elem x) const { return x == 0 ? 0 : 1 + log(x); }
    Elem elem_at(std::uint32_t pos) const;

private:
    Gf2m() = default;

    int m_ = 0;
    std::uint32_t n_ = 0;
    std::uint32_t poly_ = 0;
    std::vector<std::uint16_t> antilog_;  // e -> alpha^e
    std::vector<std::uint16_t> log_;      // nonzero element -> e
};

}  // namespace pdrm
