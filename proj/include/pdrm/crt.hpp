#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "pdrm/gf2m.hpp"
#include "pdrm/rm_code.hpp"

namespace pdrm {

// Coprime splitting n = r1 * r2 with both factors > 1; a = Ord_{r1}(2).
struct Factorization {
    std::uint32_t r1 = 0;
    std::uint32_t r2 = 0;
    std::uint32_t a = 0;

    bool operator==(const Factorization&) const = default;
};

// Least a > 0 with x^a = 1 (mod modulus); rejects gcd(x, modulus) != 1.
std::uint32_t mult_order(std::uint64_t x, std::uint64_t modulus);

// All coprime splittings of 2^m - 1, both orientations, sorted by r1.
// Empty when 2^m - 1 is a prime power (m = 3, 5, 7, 13 in range).
std::vector<Factorization> valid_factorizations(int m);

// Orientation with Ord_{r1}(2) = m, chosen to maximize the correctable count
// s of the T_alpha PD-like set; ties break toward the smaller r1. An explicit
// r1 must name a full-order orientation.
Factorization select_full_order_factorization(int m, std::optional<std::uint32_t> r1_override = std::nullopt);

// The fixed ring isomorphism Z_n -> Z_{r1} x Z_{r2}, i -> (i mod r1, i mod r2),
// with the inverse precomputed from Bezout coefficients.
class CrtMap {
public:
    CrtMap(std::uint32_t r1, std::uint32_t r2);

    std::uint32_t r1() const noexcept { return r1_; }
    std::uint32_t r2() const noexcept { return r2_; }
    std::uint32_t n() const noexcept { return n_; }

    std::pair<std::uint32_t, std::uint32_t> forward(std::uint32_t i) const {
        return {i % r1_, i % r2_};
    }
    std::uint32_t inverse(std::uint32_t i1, std::uint32_t i2) const {
        return static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(i1) * u_ + static_cast<std::uint64_t>(i2) * v_) % n_);
    }

private:
    std::uint32_t r1_, r2_, n_;
    std::uint64_t u_, v_;  // u = (1,0), v = (0,1) under forward
};

struct GammaSet {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;  // (i1, i2)
};

// {(i1, i2) : 0 <= i1 < a, 0 <= i2 < m/a}; requires a | m. Size m.
GammaSet gamma_set(std::uint32_t a, int m);

struct InformationSet {
    std::vector<std::uint32_t> positions;  // sorted, size m+1, includes 0
    std::vector<std::uint32_t> exponents;  // sorted preimage of Gamma, size m
    bool contains_zero = true;
    std::vector<std::uint32_t> i_prime;    // positions without 0
};

// I = {0} u {a^i : phi(i) in Gamma}. Validity is enforced by a rank check of
// the generator columns at I; a failure would indicate a construction bug.
InformationSet build_info_set(const Gf2m& gf, const Factorization& fact);

}  // namespace pdrm
