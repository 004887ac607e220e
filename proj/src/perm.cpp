#include "pdrm/perm.hpp"

#include <stdexcept>

namespace pdrm {

PointPermutation identity_perm(std::size_t len) {
    PointPermutation p;
    p.image.resize(len);
    for (std::size_t i = 0; i < len; ++i) p.image[i] = static_cast<std::uint32_t>(i);
    p.label = "1";
    return p;
}

PointPermutation sigma(const Gf2m& gf, std::uint32_t k) {
    if (k >= gf.n()) throw std::invalid_argument("sigma: k out of range");
    const Gf2m::Elem t = gf.alpha_pow(k);
    PointPermutation p;
    p.image.resize(gf.field_size());
    for (std::uint32_t pos = 0; pos < gf.field_size(); ++pos)
        p.image[pos] = gf.pos_of(gf.elem_at(pos) ^ t);
    p.label = "sigma_" + std::to_string(k);
    return p;
}

PointPermutation t_alpha_power(const Gf2m& gf, std::uint64_t e) {
    const std::uint32_t r = static_cast<std::uint32_t>(e % gf.n());
    PointPermutation p;
    p.image.resize(gf.field_size());
    p.image[0] = 0;
    for (std::uint32_t i = 0; i < gf.n(); ++i) {
        std::uint32_t j = i + r;
        if (j >= gf.n()) j -= gf.n();
        p.image[1 + i] = 1 + j;
    }
    p.label = "t_alpha^" + std::to_string(r);
    return p;
}

PointPermutation affine_perm(const Gf2m& gf, Gf2m::Elem a, Gf2m::Elem b) {
    if (a == 0) throw std::invalid_argument("affine_perm: a must be nonzero");
    PointPermutation p;
    p.image.resize(gf.field_size());
    for (std::uint32_t pos = 0; pos < gf.field_size(); ++pos)
        p.image[pos] = gf.pos_of(gf.mul(a, gf.elem_at(pos)) ^ b);
    p.label = "affine(" + std::to_string(a) + "," + std::to_string(b) + ")";
    return p;
}

PointPermutation compose(const PointPermutation& p, const PointPermutation& q) {
    if (p.size() != q.size()) throw std::invalid_argument("compose: size mismatch");
    PointPermutation out;
    out.image.resize(p.size());
    for (std::size_t x = 0; x < q.size(); ++x) out.image[x] = p.image[q.image[x]];
    out.label = p.label + " * " + q.label;
    return out;
}

PointPermutation invert(const PointPermutation& p) {
    PointPermutation out;
    out.image.resize(p.size());
    for (std::size_t x = 0; x < p.size(); ++x) out.image[p.image[x]] = static_cast<std::uint32_t>(x);
    out.label = "inv(" + p.label + ")";
    return out;
}

BitVec apply(const PointPermutation& p, const BitVec& v) {
    if (p.size() != v.size()) throw std::invalid_argument("apply: size mismatch");
    BitVec out(v.size());
    for (std::uint32_t pos = 0; pos < v.size(); ++pos)
        if (v.get(pos)) out.set(p.image[pos], true);
    return out;
}

PointPermutation SigmaSequence::at(std::size_t idx) const {
    if (idx >= size()) throw std::out_of_range("SigmaSequence: index out of range");
    if (idx == 0) return identity_perm(gf_->field_size());
    return sigma(*gf_, static_cast<std::uint32_t>(idx - 1));
}

}  // namespace pdrm
