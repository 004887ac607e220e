#include "pdrm/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"
#include "pdrm/rng.hpp"

namespace pdrm {

using nlohmann::ordered_json;

RmPipeline make_pipeline(int m, std::optional<std::uint32_t> poly,
                         std::optional<std::uint32_t> r1, bool best_effort) {
    auto gf = std::make_shared<const Gf2m>(Gf2m::make(m, poly));
    CodeSpec code = make_rm_code(gf);
    PdLikeSet pd = make_pd_like_set(gf, select_full_order_factorization(m, r1));
    StandardParityCheck sf = standardize(build_parity_check(code), pd.info.positions);
    DecoderConfig cfg = DecoderConfig::defaults(pd, best_effort);
    return RmPipeline{gf, std::move(code), std::move(pd), std::move(sf), SigmaSequence(*gf), cfg};
}

namespace {

constexpr std::uint64_t kExhaustiveBudget = 10'000'000;

BitVec random_codeword(const StandardParityCheck& sf, SplitMix64& g) {
    const std::size_t k = sf.info_pos.size();
    const std::uint64_t word = g.next();
    BitVec info(k);
    for (std::size_t j = 0; j < k; ++j)
        if ((word >> j) & 1u) info.set(j, true);
    return encode(sf, info);
}

void record_trial(const RmPipeline& pipe, const BitVec& sent, const BitVec& received,
                  WeightRecord& rec) {
    const DecodeResult res = decode_alg2(received, pipe.pd, pipe.sigmas, pipe.sf, pipe.cfg);
    ++rec.trials;
    std::uint64_t phases_used;
    if (res.status == DecodeStatus::decoded) {
        phases_used = res.phase_index + 1;
        if (res.codeword == sent)
            ++rec.successes;
        else
            ++rec.miscorrections;
    } else {
        phases_used = std::min<std::uint64_t>(pipe.cfg.max_phases, pipe.gf->n() + 1);
        ++rec.failures_detected;
    }
    rec.phases_sum += phases_used;
    rec.scans_sum += res.syndrome_checks;
    rec.max_phases_used = std::max(rec.max_phases_used, phases_used);
}

}  // namespace

SimReport run_sim(const SimConfig& cfg) {
    const RmPipeline pipe = make_pipeline(cfg.m, cfg.poly, cfg.r1, cfg.best_effort);
    return run_sim(pipe, cfg);
}

SimReport run_sim(const RmPipeline& pipe, const SimConfig& cfg) {
    const std::uint32_t len = pipe.gf->field_size();
    if (cfg.exhaustive) {
        std::uint64_t total = 0;
        for (auto w : cfg.weights) total += binomial_capped(len, w, kExhaustiveBudget);
        if (total > kExhaustiveBudget)
            throw std::runtime_error("run_sim: pattern count exceeds the exhaustive budget");
    } else if (cfg.trials_per_weight == 0) {
        throw std::invalid_argument("run_sim: sampled mode needs trials_per_weight");
    }

    SimReport report;
    report.config = cfg;
    report.poly_used = pipe.gf->poly();
    report.fact = pipe.pd.fact;
    report.s = pipe.pd.s;
    report.t_check = pipe.cfg.t_check;
    report.guarantee_limit = pipe.cfg.guarantee_limit;

    for (auto w : cfg.weights) {
        if (w > pipe.gf->field_size())
            throw std::invalid_argument("run_sim: weight exceeds the code length");
        WeightRecord rec;
        rec.weight = w;
        const auto start = std::chrono::steady_clock::now();

        if (cfg.exhaustive) {
            std::uint64_t counter = 0;
            if (w == 0) {
                SplitMix64 g = substream(cfg.seed, (std::uint64_t{w} << 32));
                const BitVec sent = random_codeword(pipe.sf, g);
                record_trial(pipe, sent, sent, rec);
            } else {
                std::vector<std::uint32_t> support(w);
                for (std::uint32_t i = 0; i < w; ++i) support[i] = i;
                do {
                    SplitMix64 g = substream(cfg.seed, (std::uint64_t{w} << 32) | counter++);
                    const BitVec sent = random_codeword(pipe.sf, g);
                    BitVec received = sent;
                    for (auto p : support) received.flip(p);
                    record_trial(pipe, sent, received, rec);
                } while (next_combination(support, len));
            }
        } else {
            for (std::uint64_t t = 0; t < cfg.trials_per_weight; ++t) {
                SplitMix64 g = substream(cfg.seed, (std::uint64_t{w} << 32) | t);
                const BitVec sent = random_codeword(pipe.sf, g);
                const auto support = sample_subset(g, len, w);
                BitVec received = sent;
                for (auto p : support) received.flip(p);
                record_trial(pipe, sent, received, rec);
            }
        }

        rec.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        report.per_weight.push_back(rec);
    }
    return report;
}

namespace {

std::string hex_mask(std::uint32_t mask) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", mask);
    return buf;
}

}  // namespace

std::string sim_report_json(const SimReport& report, bool include_wall_time) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "sim_report";
    j["m"] = report.config.m;
    j["poly"] = hex_mask(report.poly_used);
    j["r1"] = report.fact.r1;
    j["r2"] = report.fact.r2;
    j["s"] = report.s;
    j["t_check"] = report.t_check;
    j["guarantee_limit"] = report.guarantee_limit;
    j["mode"] = report.config.exhaustive ? "exhaustive" : "sampled";
    j["best_effort"] = report.config.best_effort;
    j["seed"] = report.config.seed;
    j["trials_per_weight"] = report.config.trials_per_weight;
    j["per_weight"] = ordered_json::array();
    for (const auto& rec : report.per_weight) {
        ordered_json r;
        r["weight"] = rec.weight;
        r["trials"] = rec.trials;
        r["successes"] = rec.successes;
        r["failures_detected"] = rec.failures_detected;
        r["miscorrections"] = rec.miscorrections;
        r["mean_phases"] = rec.mean_phases();
        r["mean_pd_exponent_scans"] = rec.mean_pd_exponent_scans();
        r["max_phases_used"] = rec.max_phases_used;
        if (include_wall_time) r["wall_time_s"] = rec.wall_time_s;
        j["per_weight"].push_back(std::move(r));
    }
    return j.dump(2);
}

std::string verify_report_json(const VerifyReport& report) {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "pdlike_report";
    j["mode"] = report.mode == VerifyMode::exhaustive ? "exhaustive" : "sampled";
    j["subset_size"] = report.subset_size;
    if (report.mode == VerifyMode::sampled) {
        j["trials"] = report.trials;
        j["seed"] = report.seed;
    }
    j["checked"] = report.checked;
    j["failures"] = report.failures;
    j["cross_checked"] = report.cross_checked;
    if (report.example_failure) j["example_failure"] = *report.example_failure;
    return j.dump(2);
}

std::vector<Table1Row> table1() {
    std::vector<Table1Row> rows;
    for (int m = 3; m <= 11; ++m) {
        const std::uint32_t n = (1u << m) - 1;
        for (const auto& f : valid_factorizations(m))
            if (f.r1 < f.r2) rows.push_back({m, n, f.r1, f.r2, f.a});
    }
    return rows;
}

std::vector<Table2Row> table2() {
    std::vector<Table2Row> rows;
    for (int m = 4; m <= 16; ++m) {
        std::vector<Factorization> full_order;
        for (const auto& f : valid_factorizations(m))
            if (f.a == static_cast<std::uint32_t>(m)) full_order.push_back(f);
        if (full_order.empty()) continue;

        const Factorization best = select_full_order_factorization(m);
        const BaselineRow base = baselines(m);
        Table2Row row;
        row.m = m;
        row.r1 = best.r1;
        row.r2 = best.r2;
        row.length = std::uint64_t{1} << m;
        row.t_printed = std::uint64_t{1} << (m - 1);
        row.packing_radius = (std::uint64_t{1} << (m - 2)) - 1;
        row.col_a = base.col_a;
        row.col_b1 = base.col_b1;
        row.col_b2 = base.col_b2;
        row.s = s_value(best, m);
        row.gs_min_pd_size = base.gs_min_pd_size;
        row.multiple_decompositions = full_order.size() > 1;
        row.flags = base.flags;
        row.flags.push_back(
            "t column is tabulated as the minimum distance 2^{m-1}; the syndrome test uses the "
            "packing radius 2^{m-2}-1");
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string table1_json() {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "table1";
    j["rows"] = ordered_json::array();
    for (const auto& r : table1()) {
        ordered_json row;
        row["m"] = r.m;
        row["n"] = r.n;
        row["r1"] = r.r1;
        row["r2"] = r.r2;
        row["a"] = r.a;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2);
}

std::string table2_json() {
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "table2";
    j["rows"] = ordered_json::array();
    for (const auto& r : table2()) {
        ordered_json row;
        row["m"] = r.m;
        row["r1"] = r.r1;
        row["r2"] = r.r2;
        row["l"] = r.length;
        row["t_printed"] = r.t_printed;
        row["packing_radius"] = r.packing_radius;
        row["A"] = r.col_a;
        if (r.col_b1)
            row["B1"] = *r.col_b1;
        else
            row["B1"] = nullptr;
        row["B2"] = r.col_b2;
        row["s"] = r.s;
        row["gs_min_pd_size"] = r.gs_min_pd_size;
        row["multiple_decompositions"] = r.multiple_decompositions;
        row["flags"] = r.flags;
        j["rows"].push_back(std::move(row));
    }
    return j.dump(2);
}

std::string table1_text() {
    std::string out = "  m      n     r1     r2      a\n";
    char buf[128];
    for (const auto& r : table1()) {
        std::snprintf(buf, sizeof buf, "%3d %6u %6u %6u %6u\n", r.m, r.n, r.r1, r.r2, r.a);
        out += buf;
    }
    return out;
}

std::string table2_text() {
    std::string out = "  m     r1     r2      l      t      A     B1     B2  alg-II\n";
    char buf[160];
    for (const auto& r : table2()) {
        std::snprintf(buf, sizeof buf, "%2d%s %6u %6u %6llu %6llu %6llu %6s %6llu %7llu\n", r.m,
                      r.multiple_decompositions ? "*" : " ", r.r1, r.r2,
                      static_cast<unsigned long long>(r.length),
                      static_cast<unsigned long long>(r.t_printed),
                      static_cast<unsigned long long>(r.col_a),
                      r.col_b1 ? std::to_string(*r.col_b1).c_str() : "-",
                      static_cast<unsigned long long>(r.col_b2),
                      static_cast<unsigned long long>(r.s));
        out += buf;
    }
    for (const auto& r : table2())
        for (const auto& f : r.flags)
            if (f.find("column A") != std::string::npos)
                out += "note m=" + std::to_string(r.m) + ": " + f + "\n";
    out += "note: a minimal s-PD-set has size s+1 (one more than column A)\n";
    return out;
}

}  // namespace pdrm
