#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pdrm/decode.hpp"
#include "pdrm/pd_like.hpp"
#include "pdrm/perm.hpp"
#include "pdrm/rm_code.hpp"

namespace pdrm {

// Everything needed to encode and decode R(1,m) with the T_alpha PD-like set.
struct RmPipeline {
    std::shared_ptr<const Gf2m> gf;
    CodeSpec code;
    PdLikeSet pd;
    StandardParityCheck sf;
    SigmaSequence sigmas;
    DecoderConfig cfg;
};

RmPipeline make_pipeline(int m, std::optional<std::uint32_t> poly = std::nullopt,
                         std::optional<std::uint32_t> r1 = std::nullopt,
                         bool best_effort = false);

struct SimConfig {
    int m = 0;
    std::optional<std::uint32_t> poly;
    std::optional<std::uint32_t> r1;
    std::vector<std::uint32_t> weights;
    std::uint64_t trials_per_weight = 0;  // ignored in exhaustive mode
    std::uint64_t seed = 0;
    bool exhaustive = false;  // enumerate all supports; budget-capped
    bool best_effort = false;
};

struct WeightRecord {
    std::uint32_t weight = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t failures_detected = 0;
    std::uint64_t miscorrections = 0;
    std::uint64_t phases_sum = 0;  // Sigma elements consumed, identity included
    std::uint64_t scans_sum = 0;   // syndrome checks across all phases
    std::uint64_t max_phases_used = 0;
    double wall_time_s = 0.0;

    double mean_phases() const { return trials ? double(phases_sum) / double(trials) : 0.0; }
    double mean_pd_exponent_scans() const {
        return trials ? double(scans_sum) / double(trials) : 0.0;
    }
};

struct SimReport {
    SimConfig config;
    std::uint32_t poly_used = 0;
    Factorization fact;
    std::uint32_t s = 0;
    std::size_t t_check = 0;
    std::size_t guarantee_limit = 0;
    std::vector<WeightRecord> per_weight;
};

SimReport run_sim(const SimConfig& cfg);
SimReport run_sim(const RmPipeline& pipe, const SimConfig& cfg);

// schema: 1. Byte-identical for identical configs when wall times are omitted.
std::string sim_report_json(const SimReport& report, bool include_wall_time = true);

std::string verify_report_json(const VerifyReport& report);

struct Table1Row {
    int m;
    std::uint32_t n, r1, r2, a;
    bool operator==(const Table1Row&) const = default;
};

struct Table2Row {
    int m = 0;
    std::uint32_t r1 = 0, r2 = 0;
    std::uint64_t length = 0;
    std::uint64_t t_printed = 0;       // tabulated as 2^{m-1}
    std::uint64_t packing_radius = 0;  // 2^{m-2} - 1, the usable threshold
    std::uint64_t col_a = 0;
    std::optional<std::uint64_t> col_b1;
    std::uint64_t col_b2 = 0;
    std::uint64_t s = 0;
    std::uint64_t gs_min_pd_size = 0;
    bool multiple_decompositions = false;
    std::vector<std::string> flags;
};

// Splittings of 2^m - 1 for m <= 11, smaller factor first.
std::vector<Table1Row> table1();
// The ten m with a full-order splitting up to m = 16, best s per row.
std::vector<Table2Row> table2();

std::string table1_json();
std::string table2_json();
std::string table1_text();
std::string table2_text();

}  // namespace pdrm
