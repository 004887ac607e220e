#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pdrm/crt.hpp"
#include "pdrm/gf2m.hpp"

namespace pdrm {

// Largest lambda >= 1 with m < ceil(r1 / lambda); rejects r1 <= m.
std::uint32_t lambda0(int m, std::uint32_t r1);

// s = (lambda0 + 1) * r2 - 1 for a full-order factorization (a = m).
std::uint32_t s_value(const Factorization& fact, int m);

// Smallest mu in [0, r) with ceil(r/h) - 1 <= [x_i + mu]_r < r for all i and
// [x_j + mu]_r = r - 1 for some j. xs must be sorted, distinct, in [0, r).
std::uint32_t junta_mu(std::uint32_t r, std::span<const std::uint32_t> xs);

// The cyclic group <T_alpha> together with everything needed to use it as an
// s-PD-like set: the full-order factorization, the CRT map, and the fixed
// information set I (I' = I minus the zero position).
struct PdLikeSet {
    std::shared_ptr<const Gf2m> gf;
    Factorization fact;  // a = m
    CrtMap crt;
    std::uint32_t lambda0_value = 0;
    std::uint32_t s = 0;
    InformationSet info;
    std::vector<std::uint8_t> exp_in_iprime;  // indicator over Z_n
};

PdLikeSet make_pd_like_set(std::shared_ptr<const Gf2m> gf, const Factorization& fact);
PdLikeSet make_pd_like_set(std::shared_ptr<const Gf2m> gf,
                           std::optional<std::uint32_t> r1_override = std::nullopt);

struct WitnessResult {
    std::uint32_t exponent = 0;  // T_alpha power moving B off I'
    std::optional<std::pair<std::uint32_t, std::uint32_t>> crt_parts;  // (mu, delta)
};

// True iff {[b + e]_n : b in B} avoids the exponents of I'.
bool exponent_shift_clears(const PdLikeSet& pd, std::span<const std::uint32_t> b_exponents,
                           std::uint32_t e);

// First e in scan order 0..n-1 that clears B, or nullopt.
std::optional<std::uint32_t> scan_witness(const PdLikeSet& pd,
                                          std::span<const std::uint32_t> b_exponents);

// Scan strategy; throws when no exponent clears B (possible only for |B| > s).
WitnessResult find_witness(const PdLikeSet& pd, std::span<const std::uint32_t> b_exponents);

// Mirrors the existence proof: shift the r2 coordinate so a small fibre lands
// on 0, then push its r1 coordinates past m-1 with junta_mu, and CRT-combine
// (mu, delta) into a T_alpha exponent. Valid for |B| <= s.
WitnessResult find_witness_constructive(const PdLikeSet& pd,
                                        std::span<const std::uint32_t> b_exponents);

enum class VerifyMode { exhaustive, sampled };

struct VerifyReport {
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    std::optional<std::vector<std::uint32_t>> example_failure;
    std::uint64_t cross_checked = 0;  // subsets where both strategies ran and agreed
    std::uint32_t subset_size = 0;
    VerifyMode mode = VerifyMode::exhaustive;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
};

// Exhaustive enumeration is capped at 10^7 subsets; larger spaces must use
// sampled mode. The constructive strategy is cross-checked whenever the
// subset size is within the proven bound s.
VerifyReport verify_pd_like(const PdLikeSet& pd, VerifyMode mode, std::uint64_t trials = 0,
                            std::uint64_t seed = 0,
                            std::optional<std::uint32_t> subset_size = std::nullopt,
                            bool cross_check = true);

struct BaselineRow {
    int m = 0;
    std::uint64_t col_a = 0;                 // min(floor((2^m-1)/(1+m)), 2^{m-2}-1)
    std::optional<std::uint64_t> col_b1;     // tabulated constant, absent otherwise
    std::uint64_t col_b2 = 0;                // floor(2^m/(m+1)) - 1
    std::optional<std::uint64_t> s_alg2;     // absent when n has no coprime splitting
    std::uint64_t gs_min_pd_size = 0;        // Gordon-Schonheim display: col_a + 1
    std::vector<std::string> flags;
};

BaselineRow baselines(int m);

// Overflow-safe binomial coefficient, saturating at cap.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap);

// Lexicographic successor of a k-subset of {0..n-1}; false when exhausted.
bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n);

}  // namespace pdrm
