#include "pdrm/gf2m.hpp"

#include <stdexcept>

namespace pdrm {

namespace {

// Fills antilog with the n powers of X modulo poly. Returns false when the
// class of X fails to have order exactly n (early cycle or no return to 1).
bool build_antilog(int m, std::uint32_t poly, std::vector<std::uint16_t>& antilog) {
    const std::uint32_t size = 1u << m;
    const std::uint32_t n = size - 1;
    antilog.assign(n, 0);
    std::uint32_t elem = 1;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (elem == 1 && e != 0) return false;  // order divides e < n
        antilog[e] = static_cast<std::uint16_t>(elem);
        elem <<= 1;
        if (elem & size) elem ^= poly;
    }
    return elem == 1;  // X^n = 1
}

}  // namespace

bool Gf2m::is_primitive_poly(int m, std::uint32_t poly) {
    if (m < 1 || m > 16) return false;
    const std::uint32_t size = 1u << m;
    if ((poly & size) == 0 || poly >= (size << 1) || (poly & 1u) == 0) return false;
    std::vector<std::uint16_t> tmp;
    return build_antilog(m, poly, tmp);
}

std::uint32_t Gf2m::default_primitive_poly(int m) {
    if (m < 3 || m > 16) throw std::invalid_argument("Gf2m: m must be in [3, 16]");
    const std::uint32_t lo = (1u << m) | 1u;
    const std::uint32_t hi = 1u << (m + 1);
    for (std::uint32_t cand = lo; cand < hi; cand += 2)
        if (is_primitive_poly(m, cand)) return cand;
    throw std::logic_error("Gf2m: no primitive polynomial found");  // unreachable
}

Gf2m Gf2m::make(int m, std::optional<std::uint32_t> poly) {
    if (m < 3 || m > 16)
        throw std::invalid_argument("Gf2m: m must be in [3, 16] (m <= 2 gives trivial codes)");
    const std::uint32_t p = poly ? *poly : default_primitive_poly(m);
    if (poly) {
        const std::uint32_t size = 1u << m;
        if ((p & size) == 0 || p >= (size << 1))
            throw std::invalid_argument("Gf2m: polynomial bitmask must have degree exactly m");
    }

    Gf2m gf;
    gf.m_ = m;
    gf.n_ = (1u << m) - 1;
    gf.poly_ = p;
    if (!build_antilog(m, p, gf.antilog_))
        throw std::invalid_argument("Gf2m: polynomial is not primitive");

    gf.log_.assign(gf.n_ + 1, 0);
    std::vector<bool> seen(gf.n_ + 1, false);
    for (std::uint32_t e = 0; e < gf.n_; ++e) {
        const std::uint16_t x = gf.antilog_[e];
        if (x == 0 || seen[x]) throw std::invalid_argument("Gf2m: polynomial is not primitive");
        seen[x] = true;
        gf.log_[x] = static_cast<std::uint16_t>(e);
    }
    return gf;
}

Gf2m::Elem Gf2m::mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    const std::uint32_t e = log_[x] + static_cast<std::uint32_t>(log_[y]);
    return antilog_[e >= n_ ? e - n_ : e];
}

Gf2m::Elem Gf2m::inv(Elem x) const {
    if (x == 0) throw std::invalid_argument("Gf2m::inv: zero has no inverse");
    const std::uint32_t e = log_[x];
    return antilog_[e == 0 ? 0 : n_ - e];
}

Gf2m::Elem Gf2m::pow(Elem x, std::int64_t k) const {
    if (x == 0) return k == 0 ? 1 : 0;
    const std::int64_t e = (static_cast<std::int64_t>(log_[x]) * (k % n_)) % n_;
    return alpha_pow(e);
}

Gf2m::Elem Gf2m::alpha_pow(std::int64_t e) const {
    std::int64_t r = e % static_cast<std::int64_t>(n_);
    if (r < 0) r += n_;
    return antilog_[static_cast<std::size_t>(r)];
}

std::uint32_t Gf2m::log(Elem x) const {
    if (x == 0 || x > n_) throw std::invalid_argument("Gf2m::log: argument must be a nonzero element");
    return log_[x];
}

Gf2m::Elem Gf2m::elem_at(std::uint32_t pos) const {
    if (pos > n_) throw std::out_of_range("Gf2m::elem_at: position out of range");
    return pos == 0 ? 0 : antilog_[pos - 1];
}

}  // namespace pdrm
