#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pdrm/bitvec.hpp"
#include "pdrm/gf2m.hpp"

namespace pdrm {

// Bijection on the 2^m positions, stored as an explicit image array.
// apply() moves coefficients so that new[image[p]] = old[p].
struct PointPermutation {
    std::vector<std::uint32_t> image;
    std::string label;

    std::size_t size() const noexcept { return image.size(); }
    std::uint32_t operator()(std::uint32_t p) const { return image[p]; }
};

PointPermutation identity_perm(std::size_t len);

// sigma_k: position of g -> position of g + a^k. An involution, no fixed points.
PointPermutation sigma(const Gf2m& gf, std::uint32_t k);

// T_alpha^e: fixes position 0, a^i -> a^{i+e}; exponent reduced mod n.
PointPermutation t_alpha_power(const Gf2m& gf, std::uint64_t e);

// x -> a*x + b with a nonzero.
PointPermutation affine_perm(const Gf2m& gf, Gf2m::Elem a, Gf2m::Elem b);

// (p o q)(x) = p(q(x))
PointPermutation compose(const PointPermutation& p, const PointPermutation& q);
PointPermutation invert(const PointPermutation& p);

BitVec apply(const PointPermutation& p, const BitVec& v);

// The ordered set [1_G, sigma_0, ..., sigma_{n-1}], materialized lazily so the
// decoder's phase order is fixed without storing n+1 arrays.
class SigmaSequence {
public:
    explicit SigmaSequence(const Gf2m& gf) : gf_(&gf) {}

    std::size_t size() const noexcept { return gf_->n() + 1; }
    PointPermutation at(std::size_t idx) const;

private:
    const Gf2m* gf_;
};

}  // namespace pdrm
