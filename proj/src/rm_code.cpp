#include "pdrm/rm_code.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdrm {

std::vector<std::uint32_t> defining_set(int rho, int m) {
    if (rho <= 0 || rho > m) throw std::invalid_argument("defining_set: need 0 < rho <= m");
    const std::uint32_t n = (1u << m) - 1;
    std::vector<std::uint32_t> d;
    for (std::uint32_t i = 0; i < n; ++i)
        if (weight2(i) < m - rho) d.push_back(i);
    return d;
}

CodeSpec make_rm_code(std::shared_ptr<const Gf2m> gf, int rho) {
    CodeSpec code;
    code.gf = std::move(gf);
    code.rho = rho;
    code.defining = defining_set(rho, code.gf->m());
    code.dimension = code.gf->field_size() - code.defining.size();
    code.design_distance = std::size_t{1} << (code.gf->m() - rho);
    return code;
}

Gf2m::Elem phi_eval(const Gf2m& gf, std::uint32_t s, const BitVec& v) {
    if (v.size() != gf.field_size()) throw std::invalid_argument("phi_eval: length mismatch");
    if (s > gf.n()) throw std::invalid_argument("phi_eval: s out of range");
    Gf2m::Elem acc = 0;
    for (std::uint32_t i = 0; i < gf.n(); ++i)
        if (v.get(1 + i)) acc ^= gf.alpha_pow(static_cast<std::int64_t>(i) * s);
    if (s == 0 && v.get(0)) acc ^= 1;  // 0^0 = 1
    return acc;
}

BinMatrix build_parity_check(const CodeSpec& code) {
    const Gf2m& gf = *code.gf;
    const std::uint32_t n = gf.n();
    const std::size_t len = gf.field_size();

    std::vector<bool> in_d(n, false);
    for (auto s : code.defining) {
        if (s >= n) throw std::invalid_argument("build_parity_check: exponent out of range");
        in_d[s] = true;
    }
    for (auto s : code.defining)
        if (!in_d[(2ull * s) % n])
            throw std::invalid_argument("build_parity_check: defining set not closed under doubling");

    // Coset representatives: smallest member of each cyclotomic coset in D.
    std::vector<std::uint32_t> reps;
    std::vector<bool> visited(n, false);
    for (std::uint32_t s = 0; s < n; ++s) {
        if (!in_d[s] || visited[s]) continue;
        reps.push_back(s);
        std::uint32_t t = s;
        do {
            visited[t] = true;
            t = static_cast<std::uint32_t>((2ull * t) % n);
        } while (t != s);
    }

    std::size_t rows = 0;
    for (auto s : reps) rows += (s == 0) ? 1 : static_cast<std::size_t>(gf.m());

    BinMatrix h(rows, len);
    std::size_t row = 0;
    for (auto s : reps) {
        if (s == 0) {
            for (std::size_t c = 0; c < len; ++c) h.set(row, c, true);
            ++row;
            continue;
        }
        for (int j = 0; j < gf.m(); ++j, ++row)
            for (std::uint32_t i = 0; i < n; ++i) {
                const Gf2m::Elem e = gf.alpha_pow(static_cast<std::int64_t>(i) * s);
                if ((e >> j) & 1u) h.set(row, 1 + i, true);
            }
    }

    if (rank_of(h) != code.defining.size())
        throw std::runtime_error("build_parity_check: rank does not match |defining set|");
    return h;
}

BinMatrix classical_rm1_generator(const Gf2m& gf) {
    const std::size_t len = gf.field_size();
    BinMatrix g(static_cast<std::size_t>(gf.m()) + 1, len);
    for (std::size_t c = 0; c < len; ++c) g.set(0, c, true);
    for (int j = 0; j < gf.m(); ++j)
        for (std::size_t c = 0; c < len; ++c) {
            const Gf2m::Elem e = gf.elem_at(static_cast<std::uint32_t>(c));
            if ((e >> j) & 1u) g.set(1 + static_cast<std::size_t>(j), c, true);
        }
    return g;
}

StandardParityCheck standardize(const BinMatrix& h, std::span<const std::uint32_t> info_positions) {
    const std::size_t len = h.cols();
    std::vector<bool> in_info(len, false);
    for (auto p : info_positions) {
        if (p >= len) throw std::invalid_argument("standardize: position out of range");
        if (in_info[p]) throw std::invalid_argument("standardize: duplicate position");
        in_info[p] = true;
    }

    StandardParityCheck sf;
    sf.info_pos.assign(info_positions.begin(), info_positions.end());
    std::sort(sf.info_pos.begin(), sf.info_pos.end());
    for (std::uint32_t p = 0; p < len; ++p)
        if (!in_info[p]) sf.check_pos.push_back(p);

    // Eliminate with pivots restricted to the complement columns, in order.
    BinMatrix work = h;
    std::size_t row = 0;
    for (auto col : sf.check_pos) {
        std::size_t p = row;
        while (p < work.rows() && !work.get(p, col)) ++p;
        if (p == work.rows())
            throw std::runtime_error("standardize: not an information set");
        work.swap_rows(p, row);
        for (std::size_t r = 0; r < work.rows(); ++r)
            if (r != row && work.get(r, col)) work.xor_row_into(row, r);
        ++row;
    }
    // Remaining rows must be zero, else H has rank beyond the complement.
    for (std::size_t r = row; r < work.rows(); ++r)
        if (!work.row_is_zero(r)) throw std::runtime_error("standardize: not an information set");

    sf.h_std = BinMatrix(sf.check_pos.size(), len);
    for (std::size_t r = 0; r < sf.check_pos.size(); ++r) sf.h_std.set_row(r, work.row_copy(r));
    return sf;
}

BitVec encode(const StandardParityCheck& sf, const BitVec& info_bits) {
    if (info_bits.size() != sf.info_pos.size())
        throw std::invalid_argument("encode: info length must equal the code dimension");
    BitVec c(sf.h_std.cols());
    for (std::size_t j = 0; j < sf.info_pos.size(); ++j)
        if (info_bits.get(j)) c.set(sf.info_pos[j], true);
    // Row i has its identity 1 at check_pos[i] and zeros at the other
    // complement columns, so each check bit is the parity over the info part.
    for (std::size_t i = 0; i < sf.check_pos.size(); ++i)
        if (dot_parity(sf.h_std.row_copy(i), c)) c.set(sf.check_pos[i], true);
    return c;
}

BitVec syndrome(const StandardParityCheck& sf, const BitVec& r) { return sf.h_std.mul_vec(r); }

bool syndrome_weight_within(const StandardParityCheck& sf, const BitVec& r, std::size_t limit) {
    std::size_t w = 0;
    auto vw = r.words();
    for (std::size_t row = 0; row < sf.h_std.rows(); ++row) {
        std::uint64_t acc = 0;
        auto rw = sf.h_std.row_words(row);
        for (std::size_t i = 0; i < rw.size(); ++i) acc ^= rw[i] & vw[i];
        w += std::popcount(acc) & 1;
        if (w > limit) return false;
    }
    return true;
}

BitVec project_positions(const BitVec& v, std::span<const std::uint32_t> positions) {
    BitVec out(positions.size());
    for (std::size_t j = 0; j < positions.size(); ++j)
        if (v.get(positions[j])) out.set(j, true);
    return out;
}

std::size_t min_distance_bruteforce(const CodeSpec& code) {
    if (code.gf->m() > 8)
        throw std::invalid_argument("min_distance_bruteforce: refused for m > 8");
    const BinMatrix basis = null_space(build_parity_check(code));
    const std::size_t k = basis.rows();
    std::size_t best = code.length();
    for (std::uint64_t u = 1; u < (std::uint64_t{1} << k); ++u) {
        BitVec c(code.length());
        for (std::size_t j = 0; j < k; ++j)
            if ((u >> j) & 1u) c ^= basis.row_copy(j);
        best = std::min(best, c.weight());
    }
    return best;
}

bool is_codeword(const CodeSpec& code, const BitVec& v) {
    for (auto s : code.defining)
        if (phi_eval(*code.gf, s, v) != 0) return false;
    return true;
}

}  // namespace pdrm
