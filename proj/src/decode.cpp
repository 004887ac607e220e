#include "pdrm/decode.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdrm {

DecoderConfig DecoderConfig::defaults(const PdLikeSet& pd, bool best_effort) {
    DecoderConfig cfg;
    cfg.t_check = (std::size_t{1} << (pd.gf->m() - 2)) - 1;
    cfg.guarantee_limit = std::min<std::size_t>(pd.s, cfg.t_check);
    const std::size_t all_phases = pd.gf->n() + std::size_t{1};
    cfg.max_phases = best_effort ? all_phases : std::min<std::size_t>(pd.s + 1, all_phases);
    cfg.best_effort = best_effort;
    return cfg;
}

bool info_symbols_correct(const StandardParityCheck& sf, const BitVec& r,
                          const DecoderConfig& cfg) {
    return syndrome_weight_within(sf, r, cfg.t_check);
}

namespace {

DecodeResult recover(const BitVec& r, const BitVec& permuted, PointPermutation total,
                     std::size_t phase_index, std::uint32_t pd_exponent, std::uint64_t checks,
                     const StandardParityCheck& sf) {
    const BitVec info = project_positions(permuted, sf.info_pos);
    const BitVec cw_permuted = encode(sf, info);
    DecodeResult res;
    res.status = DecodeStatus::decoded;
    res.codeword = apply(invert(total), cw_permuted);
    res.total_perm = std::move(total);
    res.phase_index = phase_index;
    res.pd_exponent = pd_exponent;
    res.syndrome_checks = checks;
    res.err_weight_observed = static_cast<int>((r ^ res.codeword).weight());
    return res;
}

}  // namespace

DecodeResult decode_alg1(const BitVec& r, std::span<const PointPermutation> perms,
                         const StandardParityCheck& sf, const DecoderConfig& cfg) {
    std::uint64_t checks = 0;
    for (std::size_t i = 0; i < perms.size(); ++i) {
        const BitVec moved = apply(perms[i], r);
        ++checks;
        if (syndrome_weight_within(sf, moved, cfg.t_check))
            return recover(r, moved, perms[i], 0, static_cast<std::uint32_t>(i), checks, sf);
    }
    DecodeResult res;
    res.syndrome_checks = checks;
    return res;
}

DecodeResult decode_alg2(const BitVec& r, const PdLikeSet& pd, const SigmaSequence& sigmas,
                         const StandardParityCheck& sf, const DecoderConfig& cfg) {
    const Gf2m& gf = *pd.gf;
    if (r.size() != gf.field_size()) throw std::invalid_argument("decode_alg2: length mismatch");

    const std::size_t phases = std::min<std::size_t>(cfg.max_phases, sigmas.size());
    const PointPermutation step = t_alpha_power(gf, 1);
    std::uint64_t checks = 0;

    for (std::size_t phase = 0; phase < phases; ++phase) {
        const PointPermutation sigma_p = sigmas.at(phase);
        // Each phase restarts from the original received word.
        BitVec moved = apply(sigma_p, r);
        for (std::uint32_t e = 0; e < gf.n(); ++e) {
            if (e > 0) moved = apply(step, moved);
            ++checks;
            if (syndrome_weight_within(sf, moved, cfg.t_check)) {
                PointPermutation total =
                    (phase == 0) ? t_alpha_power(gf, e) : compose(t_alpha_power(gf, e), sigma_p);
                return recover(r, moved, std::move(total), phase, e, checks, sf);
            }
        }
    }
    DecodeResult res;
    res.syndrome_checks = checks;
    return res;
}

MdOracle::MdOracle(const Gf2m& gf) {
    if (gf.m() > 8) throw std::invalid_argument("MdOracle: refused for m > 8");
    const BinMatrix gen = classical_rm1_generator(gf);
    const std::size_t k = gen.rows();
    codewords_.reserve(std::size_t{1} << k);
    for (std::uint64_t u = 0; u < (std::uint64_t{1} << k); ++u) {
        BitVec c(gf.field_size());
        for (std::size_t j = 0; j < k; ++j)
            if ((u >> j) & 1u) c ^= gen.row_copy(j);
        codewords_.push_back(std::move(c));
    }
}

MdOracle::Nearest MdOracle::nearest(const BitVec& r) const {
    Nearest best;
    best.distance = r.size() + 1;
    for (const auto& c : codewords_) {
        const std::size_t d = (r ^ c).weight();
        if (d < best.distance) {
            best.codeword = c;
            best.distance = d;
            best.ties = 1;
        } else if (d == best.distance) {
            ++best.ties;
        }
    }
    return best;
}

}  // namespace pdrm
