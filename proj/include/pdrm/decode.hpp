#pragma once

#include <cstdint>
#include <span>

#include "pdrm/bitvec.hpp"
#include "pdrm/pd_like.hpp"
#include "pdrm/perm.hpp"
#include "pdrm/rm_code.hpp"

namespace pdrm {

struct DecoderConfig {
    std::size_t t_check = 0;          // syndrome-weight threshold (packing radius)
    std::size_t max_phases = 0;       // translation phases tried, identity included
    std::size_t guarantee_limit = 0;  // min(s, t_check)
    bool best_effort = false;         // widen the phase budget to all of Sigma

    // t_check = 2^{m-2} - 1, max_phases = s + 1 (or n + 1 in best-effort runs).
    static DecoderConfig defaults(const PdLikeSet& pd, bool best_effort = false);
};

enum class DecodeStatus { decoded, failure };

struct DecodeResult {
    DecodeStatus status = DecodeStatus::failure;
    BitVec codeword;
    PointPermutation total_perm;      // composition applied to r before recovery
    std::size_t phase_index = 0;      // index into Sigma (0 = identity)
    std::uint32_t pd_exponent = 0;    // successful T_alpha power
    std::uint64_t syndrome_checks = 0;
    int err_weight_observed = -1;     // dist(r, codeword) when decoded
};

// The information symbols of r are correct iff the
// standard-form syndrome weight is at most t_check.
bool info_symbols_correct(const StandardParityCheck& sf, const BitVec& r,
                          const DecoderConfig& cfg);

// Classical permutation decoding over an explicit automorphism list.
DecodeResult decode_alg1(const BitVec& r, std::span<const PointPermutation> perms,
                         const StandardParityCheck& sf, const DecoderConfig& cfg);

// Translation-phase variant: each phase applies one Sigma element to the
// original received word, then scans all T_alpha powers. On success the full
// composition T_alpha^e o sigma is inverted.
DecodeResult decode_alg2(const BitVec& r, const PdLikeSet& pd, const SigmaSequence& sigmas,
                         const StandardParityCheck& sf, const DecoderConfig& cfg);

// Nearest-codeword oracle over all 2^{m+1} codewords of the evaluation
// construction; refuses m > 8.
class MdOracle {
public:
    explicit MdOracle(const Gf2m& gf);

    struct Nearest {
        BitVec codeword;      // first codeword in enumeration order at best distance
        std::size_t distance = 0;
        std::size_t ties = 0;  // number of codewords at best distance
    };

    Nearest nearest(const BitVec& r) const;

private:
    std::vector<BitVec> codewords_;
};

}  // namespace pdrm
