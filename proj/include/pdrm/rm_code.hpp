#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "pdrm/binmat.hpp"
#include "pdrm/bitvec.hpp"
#include "pdrm/gf2m.hpp"

namespace pdrm {

// Extended cyclic code of length 2^m described by its defining set of
// exponents. The main pipeline uses rho = 1.
struct CodeSpec {
    std::shared_ptr<const Gf2m> gf;
    int rho = 1;
    std::vector<std::uint32_t> defining;  // sorted exponents in [0, n)
    std::size_t dimension = 0;            // 2^m - |defining|
    std::size_t design_distance = 0;      // 2^{m-rho}

    std::size_t length() const { return gf->field_size(); }
};

// {i : 0 <= i < 2^m - 1, wt(i) < m - rho}
std::vector<std::uint32_t> defining_set(int rho, int m);

CodeSpec make_rm_code(std::shared_ptr<const Gf2m> gf, int rho = 1);

// phi_s(b X^0 + sum a_i X^{a^i}) = 0^s b + sum a_i a^{is}, with 0^0 = 1.
Gf2m::Elem phi_eval(const Gf2m& gf, std::uint32_t s, const BitVec& v);

// One binary row per basis coordinate of each coset constraint phi_s = 0,
// plus the all-ones parity row for s = 0. Null space is exactly the code;
// throws if the defining set is not closed under doubling mod n or if the
// rank differs from |defining|.
BinMatrix build_parity_check(const CodeSpec& code);

// Independent construction of R(1,m): all-ones row plus the m coordinate
// evaluation rows g -> g_j over the 2^m field elements.
BinMatrix classical_rm1_generator(const Gf2m& gf);

// Parity check in standard form: identity on the columns outside the
// information set.
struct StandardParityCheck {
    BinMatrix h_std;                       // (2^m - k) x 2^m
    std::vector<std::uint32_t> info_pos;   // sorted positions, size k
    std::vector<std::uint32_t> check_pos;  // sorted complement, size 2^m - k
};

// Fails with "not an information set" when elimination cannot put the
// identity on the complement columns.
StandardParityCheck standardize(const BinMatrix& h, std::span<const std::uint32_t> info_positions);

// Unique codeword agreeing with info_bits on the information set positions
// (info_bits[j] goes to the j-th smallest position).
BitVec encode(const StandardParityCheck& sf, const BitVec& info_bits);

BitVec syndrome(const StandardParityCheck& sf, const BitVec& r);

// True iff weight(H_std * r^T) <= limit; stops counting once exceeded.
bool syndrome_weight_within(const StandardParityCheck& sf, const BitVec& r, std::size_t limit);

BitVec project_positions(const BitVec& v, std::span<const std::uint32_t> positions);

// Minimum weight over the 2^{m+1} - 1 nonzero codewords; refuses m > 8.
std::size_t min_distance_bruteforce(const CodeSpec& code);

// Membership via the defining set: phi_s(v) = 0 for every s in D.
bool is_codeword(const CodeSpec& code, const BitVec& v);

}  // namespace pdrm
