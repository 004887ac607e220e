// pdrm: build first-order Reed-Muller codes as affine-invariant codes, derive
// CRT information sets and the T_alpha PD-like set, and decode received words
// with the translation-phase permutation decoder.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pdrm/decode.hpp"
#include "pdrm/sim.hpp"

using nlohmann::ordered_json;

namespace {

struct CommonOpts {
    int m = 0;
    std::string poly_hex;
    std::string config_path;
    std::uint32_t r1 = 0;  // 0 means unset
    std::string format = "json";
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_r1 = true) {
    cmd->add_option("--m", o.m, "extension degree m (length 2^m)")->required();
    cmd->add_option("--poly", o.poly_hex, "primitive polynomial bitmask, hex");
    cmd->add_option("--config", o.config_path, "JSON config with primitive_poly.<m> keys");
    if (with_r1) cmd->add_option("--r1", o.r1, "factor of 2^m - 1 to use as r1");
    cmd->add_option("--format", o.format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));
}

std::uint32_t parse_mask(const std::string& s) {
    const bool prefixed = s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0;
    const std::string body = prefixed ? s.substr(2) : s;
    std::size_t pos = 0;
    const unsigned long v = std::stoul(body, &pos, 16);
    if (body.empty() || pos != body.size())
        throw std::invalid_argument("invalid hex bitmask: " + s);
    return static_cast<std::uint32_t>(v);
}

std::optional<std::uint32_t> resolve_poly(const CommonOpts& o) {
    if (!o.poly_hex.empty()) return parse_mask(o.poly_hex);
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw std::runtime_error("cannot open config file: " + o.config_path);
        const ordered_json cfg = ordered_json::parse(in);
        const std::string key = "primitive_poly." + std::to_string(o.m);
        if (cfg.contains(key)) return parse_mask(cfg.at(key).get<std::string>());
    }
    return std::nullopt;
}

std::optional<std::uint32_t> opt_r1(const CommonOpts& o) {
    return o.r1 ? std::optional<std::uint32_t>(o.r1) : std::nullopt;
}

std::string hex_mask(std::uint32_t mask) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "0x%x", mask);
    return buf;
}

std::vector<std::uint32_t> parse_weights(const std::string& spec) {
    std::vector<std::uint32_t> out;
    std::size_t start = 0;
    while (start <= spec.size()) {
        const std::size_t comma = spec.find(',', start);
        const std::string item =
            spec.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
        if (item.empty()) throw std::invalid_argument("bad weight spec: " + spec);
        const std::size_t dots = item.find("..");
        if (dots == std::string::npos) {
            out.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        } else {
            const auto lo = std::stoul(item.substr(0, dots));
            const auto hi = std::stoul(item.substr(dots + 2));
            if (hi < lo) throw std::invalid_argument("bad weight range: " + item);
            for (auto w = lo; w <= hi; ++w) out.push_back(static_cast<std::uint32_t>(w));
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

int cmd_info(const CommonOpts& o) {
    const pdrm::Gf2m gf = pdrm::Gf2m::make(o.m, resolve_poly(o));
    const auto all = pdrm::valid_factorizations(o.m);
    if (all.empty()) {
        std::cerr << "no valid decomposition: 2^" << o.m << " - 1 has no coprime splitting\n";
        return 2;
    }
    pdrm::Factorization fact{};
    if (o.r1) {
        for (const auto& f : all)
            if (f.r1 == o.r1) fact = f;
        if (fact.r1 == 0) throw std::invalid_argument("--r1 is not a coprime factor of 2^m - 1");
    } else {
        fact = pdrm::select_full_order_factorization(o.m);
    }
    const pdrm::InformationSet info = pdrm::build_info_set(gf, fact);
    const pdrm::GammaSet gamma = pdrm::gamma_set(fact.a, o.m);

    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "info";
    j["m"] = o.m;
    j["n"] = gf.n();
    j["poly"] = hex_mask(gf.poly());
    j["r1"] = fact.r1;
    j["r2"] = fact.r2;
    j["a"] = fact.a;
    j["gamma"] = ordered_json::array();
    for (auto [i1, i2] : gamma.pairs) j["gamma"].push_back({i1, i2});
    j["exponents"] = info.exponents;
    j["positions"] = info.positions;
    j["dimension"] = o.m + 1;
    if (fact.a == static_cast<std::uint32_t>(o.m)) {
        j["lambda0"] = pdrm::lambda0(o.m, fact.r1);
        j["s"] = pdrm::s_value(fact, o.m);
    }
    j["available_factorizations"] = ordered_json::array();
    for (const auto& f : all) j["available_factorizations"].push_back({f.r1, f.r2, f.a});

    if (o.format == "text") {
        std::cout << "m=" << o.m << " n=" << gf.n() << " poly=" << hex_mask(gf.poly()) << "\n"
                  << "r1=" << fact.r1 << " r2=" << fact.r2 << " a=" << fact.a << "\n";
        std::cout << "exponents:";
        for (auto e : info.exponents) std::cout << ' ' << e;
        std::cout << "\npositions:";
        for (auto p : info.positions) std::cout << ' ' << p;
        std::cout << "\n";
        if (j.contains("s"))
            std::cout << "lambda0=" << j["lambda0"] << " s=" << j["s"] << "\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_tables(int which, const std::string& format) {
    if (which == 1)
        std::cout << (format == "text" ? pdrm::table1_text() : pdrm::table1_json() + "\n");
    else
        std::cout << (format == "text" ? pdrm::table2_text() : pdrm::table2_json() + "\n");
    return 0;
}

int cmd_encode(const CommonOpts& o, const std::string& info_bits) {
    const pdrm::RmPipeline pipe = pdrm::make_pipeline(o.m, resolve_poly(o), opt_r1(o));
    const std::size_t k = pipe.sf.info_pos.size();
    if (info_bits.size() != k)
        throw std::invalid_argument("--info must have exactly " + std::to_string(k) + " bits");
    pdrm::BitVec info(k);
    for (std::size_t i = 0; i < k; ++i) {
        if (info_bits[i] != '0' && info_bits[i] != '1')
            throw std::invalid_argument("--info must be a 0/1 string");
        info.set(i, info_bits[i] == '1');
    }
    const std::string hex = pdrm::to_hex(pdrm::encode(pipe.sf, info));
    if (o.format == "text") {
        std::cout << hex << "\n";
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["kind"] = "codeword";
        j["m"] = o.m;
        j["info"] = info_bits;
        j["codeword"] = hex;
        std::cout << j.dump(2) << "\n";
    }
    return 0;
}

int cmd_decode(const CommonOpts& o, const std::string& received_hex, bool best_effort) {
    const pdrm::RmPipeline pipe = pdrm::make_pipeline(o.m, resolve_poly(o), opt_r1(o), best_effort);
    const pdrm::BitVec r = pdrm::bitvec_from_hex(received_hex, pipe.gf->field_size());
    const pdrm::DecodeResult res = pdrm::decode_alg2(r, pipe.pd, pipe.sigmas, pipe.sf, pipe.cfg);

    const bool ok = res.status == pdrm::DecodeStatus::decoded;
    ordered_json j;
    j["schema"] = 1;
    j["kind"] = "decode_result";
    j["m"] = o.m;
    j["status"] = ok ? "decoded" : "failure";
    if (ok) {
        j["codeword"] = pdrm::to_hex(res.codeword);
        std::string bits;
        const pdrm::BitVec info = pdrm::project_positions(res.codeword, pipe.sf.info_pos);
        for (std::size_t i = 0; i < info.size(); ++i) bits += info.get(i) ? '1' : '0';
        j["info_bits"] = bits;
        j["total_perm"] = res.total_perm.label;
        j["phase_index"] = res.phase_index;
        j["pd_exponent"] = res.pd_exponent;
        j["err_weight_observed"] = res.err_weight_observed;
    }
    j["syndrome_checks"] = res.syndrome_checks;
    if (o.format == "text") {
        if (ok)
            std::cout << j["codeword"].get<std::string>() << "\n";
        else
            std::cout << "failure\n";
    } else {
        std::cout << j.dump(2) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_simulate(const CommonOpts& o, const std::string& weights, std::uint64_t trials,
                 std::uint64_t seed, const std::string& mode, bool best_effort,
                 bool no_wall_time) {
    pdrm::SimConfig cfg;
    cfg.m = o.m;
    cfg.poly = resolve_poly(o);
    cfg.r1 = opt_r1(o);
    cfg.weights = parse_weights(weights);
    cfg.trials_per_weight = trials;
    cfg.seed = seed;
    cfg.exhaustive = mode == "exhaustive";
    cfg.best_effort = best_effort;
    const pdrm::SimReport report = pdrm::run_sim(cfg);
    std::cout << pdrm::sim_report_json(report, !no_wall_time) << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& o, const std::string& mode, std::uint64_t trials,
               std::uint64_t seed, std::uint32_t subset_size, bool no_cross_check) {
    auto gf = std::make_shared<const pdrm::Gf2m>(pdrm::Gf2m::make(o.m, resolve_poly(o)));
    const pdrm::PdLikeSet pd = pdrm::make_pd_like_set(gf, opt_r1(o));
    const pdrm::VerifyReport report = pdrm::verify_pd_like(
        pd, mode == "exhaustive" ? pdrm::VerifyMode::exhaustive : pdrm::VerifyMode::sampled,
        trials, seed,
        subset_size ? std::optional<std::uint32_t>(subset_size) : std::nullopt, !no_cross_check);
    std::cout << pdrm::verify_report_json(report) << "\n";
    return 0;
}

int cmd_matrix(const CommonOpts& o, const std::string& which) {
    auto gf = std::make_shared<const pdrm::Gf2m>(pdrm::Gf2m::make(o.m, resolve_poly(o)));
    pdrm::BinMatrix mat;
    if (which == "generator") {
        mat = pdrm::classical_rm1_generator(*gf);
    } else if (which == "parity") {
        mat = pdrm::build_parity_check(pdrm::make_rm_code(gf));
    } else {
        const pdrm::RmPipeline pipe = pdrm::make_pipeline(o.m, resolve_poly(o), opt_r1(o));
        mat = pipe.sf.h_std;
    }
    for (std::size_t r = 0; r < mat.rows(); ++r) {
        std::string line(mat.cols(), '0');
        for (std::size_t c = 0; c < mat.cols(); ++c)
            if (mat.get(r, c)) line[c] = '1';
        std::cout << line << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"permutation decoding toolkit for first-order Reed-Muller codes"};
    app.require_subcommand(1);

    CommonOpts info_o;
    auto* info = app.add_subcommand("info", "factorization, Gamma and information set");
    add_common(info, info_o);

    int tables_which = 2;
    std::string tables_format = "json";
    auto* tables = app.add_subcommand("tables", "reproduce the parameter tables");
    tables->add_option("--which", tables_which, "table number")->check(CLI::IsMember({1, 2}));
    tables->add_option("--format", tables_format, "output format: json or text")
        ->check(CLI::IsMember({"json", "text"}));

    CommonOpts enc_o;
    std::string enc_info;
    auto* enc = app.add_subcommand("encode", "encode information bits to a codeword");
    add_common(enc, enc_o);
    enc->add_option("--info", enc_info, "m+1 information bits as a 0/1 string")->required();

    CommonOpts dec_o;
    std::string dec_received;
    bool dec_best_effort = false;
    auto* dec = app.add_subcommand("decode", "decode a received word");
    add_common(dec, dec_o);
    dec->add_option("--received", dec_received, "received word as hex")->required();
    dec->add_flag("--best-effort", dec_best_effort, "try every translation phase");

    CommonOpts sim_o;
    std::string sim_weights, sim_mode = "sampled";
    std::uint64_t sim_trials = 1000, sim_seed = 0;
    bool sim_best_effort = false, sim_no_wall = false;
    auto* sim = app.add_subcommand("simulate", "decoding experiments over random errors");
    add_common(sim, sim_o);
    sim->add_option("--weights", sim_weights, "error weights, e.g. 1..13 or 1,2,5")->required();
    sim->add_option("--trials", sim_trials, "trials per weight (sampled mode)");
    sim->add_option("--seed", sim_seed, "64-bit seed");
    sim->add_option("--mode", sim_mode, "sampled or exhaustive")
        ->check(CLI::IsMember({"sampled", "exhaustive"}));
    sim->add_flag("--best-effort", sim_best_effort, "try every translation phase");
    sim->add_flag("--no-wall-time", sim_no_wall, "omit wall times for byte-stable output");

    CommonOpts ver_o;
    std::string ver_mode = "exhaustive";
    std::uint64_t ver_trials = 100000, ver_seed = 0;
    std::uint32_t ver_subset = 0;
    bool ver_no_cross = false;
    auto* ver = app.add_subcommand("verify-pdlike", "witness existence over position subsets");
    add_common(ver, ver_o);
    ver->add_option("--mode", ver_mode, "exhaustive or sampled")
        ->check(CLI::IsMember({"exhaustive", "sampled"}));
    ver->add_option("--trials", ver_trials, "subsets to sample");
    ver->add_option("--seed", ver_seed, "64-bit seed");
    ver->add_option("--subset-size", ver_subset, "override the subset size (default s)");
    ver->add_flag("--no-cross-check", ver_no_cross, "skip the constructive strategy");

    CommonOpts mat_o;
    std::string mat_which = "generator";
    auto* mat = app.add_subcommand("matrix", "print a matrix as rows of 0/1");
    add_common(mat, mat_o);
    mat->add_option("--which", mat_which, "generator, parity or parity-std")
        ->check(CLI::IsMember({"generator", "parity", "parity-std"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(info_o);
        if (*tables) return cmd_tables(tables_which, tables_format);
        if (*enc) return cmd_encode(enc_o, enc_info);
        if (*dec) return cmd_decode(dec_o, dec_received, dec_best_effort);
        if (*sim)
            return cmd_simulate(sim_o, sim_weights, sim_trials, sim_seed, sim_mode,
                                sim_best_effort, sim_no_wall);
        if (*ver) return cmd_verify(ver_o, ver_mode, ver_trials, ver_seed, ver_subset, ver_no_cross);
        if (*mat) return cmd_matrix(mat_o, mat_which);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
