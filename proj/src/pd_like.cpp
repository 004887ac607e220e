#include "pdrm/pd_like.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "pdrm/rng.hpp"

namespace pdrm {

std::uint32_t lambda0(int m, std::uint32_t r1) {
    if (r1 <= static_cast<std::uint32_t>(m))
        throw std::invalid_argument("lambda0: r1 must exceed m, no lambda qualifies");
    std::uint32_t best = 0;
    for (std::uint32_t lam = 1; lam <= r1; ++lam) {
        const std::uint32_t ceil_div = (r1 + lam - 1) / lam;
        if (static_cast<std::uint32_t>(m) < ceil_div)
            best = lam;
        else
            break;  // ceil(r1/lambda) is nonincreasing in lambda
    }
    return best;
}

std::uint32_t s_value(const Factorization& fact, int m) {
    if (fact.a != static_cast<std::uint32_t>(m))
        throw std::invalid_argument("s_value: factorization must have Ord_{r1}(2) = m");
    return (lambda0(m, fact.r1) + 1) * fact.r2 - 1;
}

std::uint32_t junta_mu(std::uint32_t r, std::span<const std::uint32_t> xs) {
    const std::size_t h = xs.size();
    if (h == 0 || h > r) throw std::invalid_argument("junta_mu: need 1 <= |xs| <= r");
    for (std::size_t i = 0; i < h; ++i) {
        if (xs[i] >= r) throw std::invalid_argument("junta_mu: entries must lie in [0, r)");
        if (i > 0 && xs[i] <= xs[i - 1])
            throw std::invalid_argument("junta_mu: entries must be sorted and distinct");
    }
    const std::uint32_t bound = (r + static_cast<std::uint32_t>(h) - 1) / static_cast<std::uint32_t>(h) - 1;
    for (std::uint32_t mu = 0; mu < r; ++mu) {
        bool all_high = true, hits_top = false;
        for (auto x : xs) {
            std::uint32_t shifted = x + mu;
            if (shifted >= r) shifted -= r;
            if (shifted < bound) {
                all_high = false;
                break;
            }
            if (shifted == r - 1) hits_top = true;
        }
        if (all_high && hits_top) return mu;
    }
    throw std::logic_error("junta_mu: no qualifying shift exists for this input");
}

PdLikeSet make_pd_like_set(std::shared_ptr<const Gf2m> gf, const Factorization& fact) {
    if (fact.a != static_cast<std::uint32_t>(gf->m()))
        throw std::invalid_argument("make_pd_like_set: factorization must be full order (a = m)");
    PdLikeSet pd{std::move(gf), fact, CrtMap(fact.r1, fact.r2), 0, 0, {}, {}};
    pd.lambda0_value = lambda0(pd.gf->m(), fact.r1);
    pd.s = s_value(fact, pd.gf->m());
    pd.info = build_info_set(*pd.gf, fact);
    pd.exp_in_iprime.assign(pd.gf->n(), 0);
    for (auto e : pd.info.exponents) pd.exp_in_iprime[e] = 1;
    return pd;
}

PdLikeSet make_pd_like_set(std::shared_ptr<const Gf2m> gf, std::optional<std::uint32_t> r1_override) {
    const Factorization fact = select_full_order_factorization(gf->m(), r1_override);
    return make_pd_like_set(std::move(gf), fact);
}

bool exponent_shift_clears(const PdLikeSet& pd, std::span<const std::uint32_t> b_exponents,
                           std::uint32_t e) {
    const std::uint32_t n = pd.gf->n();
    for (auto b : b_exponents) {
        std::uint32_t shifted = b + e;
        if (shifted >= n) shifted -= n;
        if (pd.exp_in_iprime[shifted]) return false;
    }
    return true;
}

std::optional<std::uint32_t> scan_witness(const PdLikeSet& pd,
                                          std::span<const std::uint32_t> b_exponents) {
    for (std::uint32_t e = 0; e < pd.gf->n(); ++e)
        if (exponent_shift_clears(pd, b_exponents, e)) return e;
    return std::nullopt;
}

WitnessResult find_witness(const PdLikeSet& pd, std::span<const std::uint32_t> b_exponents) {
    for (auto b : b_exponents)
        if (b >= pd.gf->n()) throw std::invalid_argument("find_witness: exponent out of range");
    const auto e = scan_witness(pd, b_exponents);
    if (!e)
        throw std::runtime_error(
            "find_witness: no witness; |B| exceeds the guaranteed bound s (caller bug)");
    return WitnessResult{*e, std::nullopt};
}

WitnessResult find_witness_constructive(const PdLikeSet& pd,
                                        std::span<const std::uint32_t> b_exponents) {
    const std::uint32_t r1 = pd.fact.r1, r2 = pd.fact.r2;

    // Fibres of B' over the r2 coordinate.
    std::vector<std::vector<std::uint32_t>> fibre(r2);
    for (auto b : b_exponents) {
        if (b >= pd.gf->n()) throw std::invalid_argument("find_witness: exponent out of range");
        fibre[b % r2].push_back(b % r1);
    }

    std::uint32_t mu = 0, delta = 0;
    std::uint32_t j_missing = r2;
    for (std::uint32_t j = 0; j < r2; ++j)
        if (fibre[j].empty()) {
            j_missing = j;
            break;
        }

    if (j_missing < r2) {
        // Some r2 value is unused: shift it onto 0 and Gamma is avoided outright.
        delta = (r2 - j_missing) % r2;
    } else {
        // Every fibre is nonempty; a fibre of size <= lambda0 exists whenever
        // |B| <= s. Land it on r2-coordinate 0 and push its r1 coordinates
        // into {m, ..., r1-1}.
        std::uint32_t j0 = r2;
        for (std::uint32_t j = 0; j < r2; ++j)
            if (fibre[j].size() <= pd.lambda0_value) {
                j0 = j;
                break;
            }
        if (j0 == r2)
            throw std::runtime_error(
                "find_witness_constructive: every fibre exceeds lambda0; |B| > s (caller bug)");
        delta = (r2 - j0) % r2;
        auto xs = fibre[j0];
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
        mu = junta_mu(r1, xs);
    }

    const std::uint32_t e = pd.crt.inverse(mu, delta);
    if (!exponent_shift_clears(pd, b_exponents, e))
        throw std::logic_error("find_witness_constructive: produced exponent fails the recheck");
    return WitnessResult{e, std::make_pair(mu, delta)};
}

std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > cap) return cap + 1;
    }
    return static_cast<std::uint64_t>(acc);
}

bool next_combination(std::vector<std::uint32_t>& c, std::uint32_t n) {
    const std::size_t k = c.size();
    for (std::size_t i = k; i-- > 0;) {
        if (c[i] < n - (k - i)) {
            ++c[i];
            for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

namespace {

constexpr std::uint64_t kExhaustiveBudget = 10'000'000;

void check_one_subset(const PdLikeSet& pd, const std::vector<std::uint32_t>& b, bool cross_check,
                      VerifyReport& report) {
    const auto e = scan_witness(pd, b);
    ++report.checked;
    if (!e) {
        ++report.failures;
        if (!report.example_failure) report.example_failure = b;
        return;
    }
    if (cross_check && b.size() <= pd.s) {
        // The constructive route must also succeed; it rechecks its own output.
        (void)find_witness_constructive(pd, b);
        ++report.cross_checked;
    }
}

}  // namespace

VerifyReport verify_pd_like(const PdLikeSet& pd, VerifyMode mode, std::uint64_t trials,
                            std::uint64_t seed, std::optional<std::uint32_t> subset_size,
                            bool cross_check) {
    const std::uint32_t n = pd.gf->n();
    const std::uint32_t size = subset_size.value_or(pd.s);
    if (size == 0 || size > n)
        throw std::invalid_argument("verify_pd_like: subset size out of range");

    VerifyReport report;
    report.subset_size = size;
    report.mode = mode;
    report.seed = seed;

    if (mode == VerifyMode::exhaustive) {
        if (binomial_capped(n, size, kExhaustiveBudget) > kExhaustiveBudget)
            throw std::runtime_error(
                "verify_pd_like: subset space exceeds the exhaustive budget, use sampled mode");
        std::vector<std::uint32_t> b(size);
        for (std::uint32_t i = 0; i < size; ++i) b[i] = i;
        do {
            check_one_subset(pd, b, cross_check, report);
        } while (next_combination(b, n));
    } else {
        if (trials == 0) throw std::invalid_argument("verify_pd_like: sampled mode needs trials");
        report.trials = trials;
        for (std::uint64_t t = 0; t < trials; ++t) {
            SplitMix64 g = substream(seed, t);
            const auto b = sample_subset(g, n, size);
            check_one_subset(pd, b, cross_check, report);
        }
    }
    return report;
}

BaselineRow baselines(int m) {
    if (m <= 2) throw std::invalid_argument("baselines: m must exceed 2");
    static const std::map<int, std::uint64_t> printed_a = {
        {4, 3},    {6, 5},    {8, 28},   {9, 51},   {10, 93},
        {11, 170}, {12, 315}, {14, 1092}, {15, 2047}, {16, 3855}};
    static const std::map<int, std::uint64_t> printed_b1 = {
        {4, 1},    {6, 3},    {8, 16},   {9, 32},   {10, 64},
        {11, 128}, {12, 256}, {14, 1024}, {15, 2048}, {16, 2048}};

    BaselineRow row;
    row.m = m;
    const std::uint64_t len = std::uint64_t{1} << m;
    row.col_a = std::min((len - 1) / (1 + static_cast<std::uint64_t>(m)), (len >> 2) - 1);
    row.col_b2 = len / (static_cast<std::uint64_t>(m) + 1) - 1;
    row.gs_min_pd_size = row.col_a + 1;
    if (auto it = printed_b1.find(m); it != printed_b1.end()) row.col_b1 = it->second;

    if (auto it = printed_a.find(m); it != printed_a.end() && it->second != row.col_a)
        row.flags.push_back("column A: formula value " + std::to_string(row.col_a) +
                            " differs from the tabulated " + std::to_string(it->second));

    try {
        const Factorization fact = select_full_order_factorization(m);
        row.s_alg2 = s_value(fact, m);
    } catch (const std::runtime_error&) {
        // no coprime splitting of 2^m - 1
    }
    return row;
}

}  // namespace pdrm
