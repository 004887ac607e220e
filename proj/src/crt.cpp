#include "pdrm/crt.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "pdrm/pd_like.hpp"

namespace pdrm {

std::uint32_t mult_order(std::uint64_t x, std::uint64_t modulus) {
    if (modulus == 0) throw std::invalid_argument("mult_order: modulus must be positive");
    if (std::gcd(x, modulus) != 1)
        throw std::invalid_argument("mult_order: arguments must be coprime");
    if (modulus == 1) return 1;
    std::uint64_t acc = x % modulus;
    for (std::uint32_t a = 1;; ++a) {
        if (acc == 1) return a;
        acc = (acc * (x % modulus)) % modulus;
    }
}

std::vector<Factorization> valid_factorizations(int m) {
    if (m <= 2) throw std::invalid_argument("valid_factorizations: m must exceed 2");
    const std::uint64_t n = (std::uint64_t{1} << m) - 1;
    std::vector<Factorization> out;
    for (std::uint64_t d = 2; d < n; ++d) {
        if (n % d != 0) continue;
        const std::uint64_t cof = n / d;
        if (cof <= 1 || std::gcd(d, cof) != 1) continue;
        out.push_back({static_cast<std::uint32_t>(d), static_cast<std::uint32_t>(cof),
                       mult_order(2, d)});
    }
    return out;  // already sorted by r1
}

Factorization select_full_order_factorization(int m, std::optional<std::uint32_t> r1_override) {
    const auto all = valid_factorizations(m);
    if (all.empty())
        throw std::runtime_error("no valid decomposition: 2^m - 1 has no coprime splitting");

    if (r1_override) {
        for (const auto& f : all)
            if (f.r1 == *r1_override) {
                if (f.a != static_cast<std::uint32_t>(m))
                    throw std::invalid_argument(
                        "requested r1 does not have full order: Ord_{r1}(2) != m");
                return f;
            }
        throw std::invalid_argument("requested r1 is not a valid coprime factor of 2^m - 1");
    }

    const Factorization* best = nullptr;
    std::uint64_t best_s = 0;
    for (const auto& f : all) {
        if (f.a != static_cast<std::uint32_t>(m)) continue;
        const std::uint64_t s = s_value(f, m);
        if (!best || s > best_s || (s == best_s && f.r1 < best->r1)) {
            best = &f;
            best_s = s;
        }
    }
    if (!best) throw std::runtime_error("no full-order decomposition found");  // one factor always carries the full order
    return *best;
}

CrtMap::CrtMap(std::uint32_t r1, std::uint32_t r2) : r1_(r1), r2_(r2), n_(r1 * r2) {
    if (r1 <= 1 || r2 <= 1 || std::gcd(r1, r2) != 1)
        throw std::invalid_argument("CrtMap: factors must be coprime and > 1");
    // u = r2 * (r2^-1 mod r1) maps to (1, 0); v analogously to (0, 1).
    auto inv_mod = [](std::uint64_t x, std::uint64_t mod) {
        std::int64_t t = 0, new_t = 1;
        std::int64_t r = static_cast<std::int64_t>(mod), new_r = static_cast<std::int64_t>(x % mod);
        while (new_r != 0) {
            const std::int64_t q = r / new_r;
            t = std::exchange(new_t, t - q * new_t);
            r = std::exchange(new_r, r - q * new_r);
        }
        if (t < 0) t += static_cast<std::int64_t>(mod);
        return static_cast<std::uint64_t>(t);
    };
    u_ = (static_cast<std::uint64_t>(r2) * inv_mod(r2, r1)) % n_;
    v_ = (static_cast<std::uint64_t>(r1) * inv_mod(r1, r2)) % n_;
}

GammaSet gamma_set(std::uint32_t a, int m) {
    if (a == 0 || static_cast<std::uint32_t>(m) % a != 0)
        throw std::invalid_argument("gamma_set: a must divide m");
    GammaSet g;
    const std::uint32_t h = static_cast<std::uint32_t>(m) / a;
    for (std::uint32_t i1 = 0; i1 < a; ++i1)
        for (std::uint32_t i2 = 0; i2 < h; ++i2) g.pairs.emplace_back(i1, i2);
    return g;
}

InformationSet build_info_set(const Gf2m& gf, const Factorization& fact) {
    if (static_cast<std::uint64_t>(fact.r1) * fact.r2 != gf.n())
        throw std::invalid_argument("build_info_set: factorization does not match the field");
    if (fact.a != mult_order(2, fact.r1))
        throw std::invalid_argument("build_info_set: stored order is wrong");

    const CrtMap crt(fact.r1, fact.r2);
    const GammaSet gamma = gamma_set(fact.a, gf.m());

    InformationSet info;
    for (auto [i1, i2] : gamma.pairs) info.exponents.push_back(crt.inverse(i1, i2));
    std::sort(info.exponents.begin(), info.exponents.end());

    info.positions.push_back(0);
    for (auto e : info.exponents) info.positions.push_back(1 + e);
    info.contains_zero = true;
    info.i_prime.assign(info.positions.begin() + 1, info.positions.end());

    const BinMatrix gen = classical_rm1_generator(gf);
    const BinMatrix cols = select_columns(gen, info.positions);
    if (rank_of(cols) != static_cast<std::size_t>(gf.m()) + 1)
        throw std::runtime_error("build_info_set: rank check failed (construction bug)");
    return info;
}

}  // namespace pdrm
