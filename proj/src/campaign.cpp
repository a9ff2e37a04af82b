#include "ftgf/campaign.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "ftgf/errors.hpp"

namespace ftgf {

namespace {

constexpr const char* kRngName = "mt19937_64 per trial, seeds splitmix64(seed, stream, trial)";

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t trial) {
    return splitmix64(splitmix64(master ^ (stream << 32)) ^ trial);
}

std::string model_name(FaultModel m) {
    switch (m) {
        case FaultModel::StuckAt0: return "sa0";
        case FaultModel::StuckAt1: return "sa1";
        case FaultModel::FlipOutput: return "flip";
    }
    return "?";
}

FaultModel model_from_name(const std::string& s) {
    if (s == "sa0") return FaultModel::StuckAt0;
    if (s == "sa1") return FaultModel::StuckAt1;
    if (s == "flip") return FaultModel::FlipOutput;
    throw ConfigInvalid("unknown fault model '" + s + "'");
}

// Message with the product coordinates in the low m bit positions.
BitVec embed_product(const BchCode& code, int m, std::uint32_t coords) {
    BitVec msg(std::size_t(code.k_eff()));
    for (int j = 0; j < m; ++j)
        if (coords >> j & 1) msg.set(std::size_t(j), true);
    return msg;
}

std::uint32_t extract_product(const BitVec& message, int m) {
    std::uint32_t coords = 0;
    for (int j = 0; j < m; ++j) coords |= std::uint32_t(message.get(std::size_t(j))) << j;
    return coords;
}

BitVec message_part(const BchCode& code, const BitVec& word) {
    const int parity_len = code.n() - code.k();
    BitVec msg(std::size_t(code.k_eff()));
    for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, word.get(std::size_t(parity_len) + i));
    return msg;
}

}  // namespace

Tally& Tally::operator+=(const Tally& o) {
    no_error += o.no_error;
    corrected_exact += o.corrected_exact;
    miscorrected += o.miscorrected;
    uncorrectable += o.uncorrectable;
    return *this;
}

nlohmann::json CampaignConfig::to_json() const {
    nlohmann::json j{{"m", m},
                     {"t", t},
                     {"source", source == FaultSource::CodewordFlips ? "flips" : "gate"},
                     {"trials", trials},
                     {"seed", seed},
                     {"strict_nand", strict_nand}};
    if (poly_hex) j["poly"] = *poly_hex;
    if (message_len) j["message_len"] = *message_len;
    if (!output.empty()) j["output"] = output;
    if (!output_csv.empty()) j["output_csv"] = output_csv;
    if (source == FaultSource::CodewordFlips) {
        j["weights"] = weights;
    } else {
        nlohmann::json models = nlohmann::json::array();
        for (auto mdl : gate_models) models.push_back(model_name(mdl));
        j["gate"] = {{"count", gate_fault_count},
                     {"models", models},
                     {"persist", gate_persist == FaultPersist::Permanent ? "perm" : "once"}};
    }
    return j;
}

CampaignConfig CampaignConfig::from_json(const nlohmann::json& j) {
    CampaignConfig cfg;
    if (!j.contains("m") || !j.contains("t")) throw ConfigInvalid("campaign config needs at least m and t");
    cfg.m = j["m"].get<int>();
    cfg.t = j["t"].get<int>();
    if (j.contains("poly")) cfg.poly_hex = j["poly"].get<std::string>();
    if (j.contains("message_len")) cfg.message_len = j["message_len"].get<int>();
    std::string source = j.value("source", std::string("flips"));
    if (source == "flips")
        cfg.source = FaultSource::CodewordFlips;
    else if (source == "gate")
        cfg.source = FaultSource::GateFaults;
    else
        throw ConfigInvalid("campaign source must be 'flips' or 'gate'");
    if (j.contains("weights")) cfg.weights = j["weights"].get<std::vector<int>>();
    if (j.contains("gate")) {
        const auto& g = j["gate"];
        cfg.gate_fault_count = g.value("count", 1);
        if (g.contains("models")) {
            cfg.gate_models.clear();
            for (const auto& s : g["models"]) cfg.gate_models.push_back(model_from_name(s.get<std::string>()));
        }
        std::string p = g.value("persist", std::string("once"));
        if (p == "perm")
            cfg.gate_persist = FaultPersist::Permanent;
        else if (p == "once")
            cfg.gate_persist = FaultPersist::SingleEvaluation;
        else
            throw ConfigInvalid("gate persist must be 'perm' or 'once'");
    }
    cfg.strict_nand = j.value("strict_nand", false);
    cfg.trials = j.value("trials", std::uint64_t(1000));
    cfg.seed = j.value("seed", std::uint64_t(1));
    cfg.workers = j.value("workers", 1);
    cfg.output = j.value("output", std::string{});
    cfg.output_csv = j.value("output_csv", std::string{});
    return cfg;
}

nlohmann::json CampaignReport::to_json() const {
    nlohmann::json pw = nlohmann::json::object();
    for (const auto& [w, tally] : per_weight)
        pw[std::to_string(w)] = {{"no_error", tally.no_error},
                                 {"corrected_exact", tally.corrected_exact},
                                 {"miscorrected", tally.miscorrected},
                                 {"uncorrectable", tally.uncorrectable}};
    nlohmann::json census = nlohmann::json::object();
    for (const auto& [kind, count] : multiplier_census) census[to_string(kind)] = count;
    return {{"report_version", 1},
            {"config", config.to_json()},
            {"rng", rng},
            {"trials", trials_total},
            {"tally",
             {{"no_error", total.no_error},
              {"corrected_exact", total.corrected_exact},
              {"miscorrected", total.miscorrected},
              {"uncorrectable", total.uncorrectable}}},
            {"per_weight", pw},
            {"code", code_descriptor},
            {"multiplier", {{"census", census}, {"depth", multiplier_depth}}}};
}

std::string CampaignReport::to_csv() const {
    std::ostringstream os;
    os << "weight,trials,no_error,corrected_exact,miscorrected,uncorrectable\n";
    for (const auto& [w, tally] : per_weight)
        os << w << ',' << tally.sum() << ',' << tally.no_error << ',' << tally.corrected_exact << ','
           << tally.miscorrected << ',' << tally.uncorrectable << '\n';
    os << "total," << total.sum() << ',' << total.no_error << ',' << total.corrected_exact << ','
       << total.miscorrected << ',' << total.uncorrectable << '\n';
    return os.str();
}

std::pair<FieldElement, DecodeOutcome> run_protected_multiply(const FieldContext& ctx, const BchCode& code,
                                                              const Netlist& net, FieldElement a, FieldElement b,
                                                              std::span<const Fault> faults) {
    if (code.k_eff() < ctx.m()) throw ConfigInvalid("code message length is smaller than the multiplier width");
    FieldElement golden = mul_reference(ctx, a, b);
    FieldElement faulty = eval_multiplier_netlist(net, ctx, a, b, faults);

    // Parity comes from the fault-free product (the encoder is modeled
    // fault-free); the message field carries whatever the multiplier emitted.
    BitVec cw = encode(code, embed_product(code, ctx.m(), golden.coords));
    const int parity_len = code.n() - code.k();
    BitVec received = cw;
    BitVec faulty_msg = embed_product(code, ctx.m(), faulty.coords);
    for (std::size_t i = 0; i < faulty_msg.size(); ++i)
        received.set(std::size_t(parity_len) + i, faulty_msg.get(i));

    DecodeOutcome outcome = decode(code, received);
    FieldElement result = ctx.element(extract_product(message_part(code, outcome.corrected), ctx.m()));
    return {result, outcome};
}

std::pair<FieldElement, DecodeOutcome> run_protected_multiply_flips(const FieldContext& ctx, const BchCode& code,
                                                                    FieldElement a, FieldElement b,
                                                                    std::span<const int> flip_positions) {
    if (code.k_eff() < ctx.m()) throw ConfigInvalid("code message length is smaller than the multiplier width");
    FieldElement golden = mul_reference(ctx, a, b);
    BitVec received = encode(code, embed_product(code, ctx.m(), golden.coords));
    for (int p : flip_positions) received.flip(std::size_t(p));
    DecodeOutcome outcome = decode(code, received);
    FieldElement result = ctx.element(extract_product(message_part(code, outcome.corrected), ctx.m()));
    return {result, outcome};
}

namespace {

struct TrialResult {
    int weight = 0;
    DecodeStatus status = DecodeStatus::NoError;
    bool exact = false;
};

// Outcome classification is functional: a trial counts as no_error or
// corrected_exact only when the recovered message matches the fault-free one.
void classify(const TrialResult& r, Tally& tally) {
    if (!r.exact)
        r.status == DecodeStatus::Uncorrectable ? ++tally.uncorrectable : ++tally.miscorrected;
    else if (r.status == DecodeStatus::NoError)
        ++tally.no_error;
    else if (r.status == DecodeStatus::Corrected)
        ++tally.corrected_exact;
    else
        ++tally.uncorrectable;
}

struct CampaignContext {
    const CampaignConfig& cfg;
    FieldContext field;
    BchCode code;
    Netlist net;
    std::vector<Fault> permanent_faults;
    std::vector<int> faultable;  // logic gate ids eligible for injection
};

std::vector<int> sample_distinct(std::mt19937_64& rng, int population, int count) {
    std::vector<int> picked;
    picked.reserve(std::size_t(count));
    while (int(picked.size()) < count) {
        int v = int(rng() % std::uint64_t(population));
        if (std::find(picked.begin(), picked.end(), v) == picked.end()) picked.push_back(v);
    }
    return picked;
}

TrialResult run_flip_trial(const CampaignContext& cc, int weight, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t mask = (std::uint32_t(1) << cc.field.m()) - 1;
    FieldElement a = cc.field.element(std::uint32_t(rng()) & mask);
    FieldElement b = cc.field.element(std::uint32_t(rng()) & mask);
    std::vector<int> flips = sample_distinct(rng, cc.code.n_eff(), weight);
    auto [result, outcome] = run_protected_multiply_flips(cc.field, cc.code, a, b, flips);
    FieldElement golden = mul_reference(cc.field, a, b);
    bool exact = result == golden && message_part(cc.code, outcome.corrected) ==
                                         embed_product(cc.code, cc.field.m(), golden.coords);
    return {weight, outcome.status, exact};
}

TrialResult run_gate_trial(const CampaignContext& cc, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const std::uint32_t mask = (std::uint32_t(1) << cc.field.m()) - 1;
    FieldElement a = cc.field.element(std::uint32_t(rng()) & mask);
    FieldElement b = cc.field.element(std::uint32_t(rng()) & mask);

    std::vector<Fault> faults = cc.permanent_faults;
    if (cc.cfg.gate_persist == FaultPersist::SingleEvaluation) {
        for (int idx : sample_distinct(rng, int(cc.faultable.size()), cc.cfg.gate_fault_count)) {
            FaultModel model = cc.cfg.gate_models[rng() % cc.cfg.gate_models.size()];
            faults.push_back({cc.faultable[std::size_t(idx)], model, FaultPersist::SingleEvaluation});
        }
    }

    auto [result, outcome] = run_protected_multiply(cc.field, cc.code, cc.net, a, b, faults);
    FieldElement golden = mul_reference(cc.field, a, b);
    FieldElement faulty = eval_multiplier_netlist(cc.net, cc.field, a, b, faults);
    int weight = int(std::popcount(golden.coords ^ faulty.coords));
    bool exact = result == golden;
    return {weight, outcome.status, exact};
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg, const TrialObserver& observer) {
    if (cfg.trials < 1) throw ConfigInvalid("trial count must be >= 1");
    if (cfg.m < 2 || cfg.m > 16) throw ConfigInvalid("multiplier width m must be in [2, 16]");
    if (cfg.source == FaultSource::CodewordFlips && cfg.weights.empty())
        throw ConfigInvalid("flips campaign needs at least one weight");
    if (cfg.source == FaultSource::GateFaults && (cfg.gate_fault_count < 1 || cfg.gate_models.empty()))
        throw ConfigInvalid("gate campaign needs a fault count >= 1 and at least one model");

    auto t0 = std::chrono::steady_clock::now();
    BinPoly poly = cfg.poly_hex ? BinPoly::from_hex(*cfg.poly_hex) : FieldContext::default_poly(cfg.m);
    FieldContext field(cfg.m, poly);
    int message_len = cfg.message_len.value_or(cfg.m);
    if (message_len < cfg.m) throw ConfigInvalid("message_len must be >= m");
    BchCode code = build_code(3, cfg.t, message_len);
    Netlist net =
        build_nand_multiplier_netlist(field, cfg.strict_nand ? SelectionStyle::NandPairs : SelectionStyle::AndGates);

    CampaignContext cc{cfg, std::move(field), std::move(code), std::move(net), {}, {}};
    for (int id = 0; id < cc.net.num_nodes(); ++id) {
        GateKind k = cc.net.node(id).kind;
        if (k == GateKind::Nand || k == GateKind::And || k == GateKind::Not || k == GateKind::Xor)
            cc.faultable.push_back(id);
    }
    if (cfg.source == FaultSource::CodewordFlips)
        for (int w : cfg.weights)
            if (w < 0 || w > cc.code.n_eff()) throw ConfigInvalid("flip weight exceeds the codeword length");
    if (cfg.source == FaultSource::GateFaults && cfg.gate_fault_count > int(cc.faultable.size()))
        throw ConfigInvalid("gate fault count exceeds the number of logic gates");

    if (cfg.source == FaultSource::GateFaults && cfg.gate_persist == FaultPersist::Permanent) {
        std::mt19937_64 rng(trial_seed(cfg.seed, 0xFA01, 0));
        for (int idx : sample_distinct(rng, int(cc.faultable.size()), cfg.gate_fault_count)) {
            FaultModel model = cc.cfg.gate_models[rng() % cc.cfg.gate_models.size()];
            cc.permanent_faults.push_back({cc.faultable[std::size_t(idx)], model, FaultPersist::Permanent});
        }
    }

    // (stream, trial) -> result, merged into per-weight tallies afterwards so
    // worker partitioning cannot affect the report.
    struct Batch {
        std::uint64_t stream;
        int weight;  // -1: gate mode, weight comes from the trial
    };
    std::vector<Batch> batches;
    if (cfg.source == FaultSource::CodewordFlips) {
        for (std::size_t wi = 0; wi < cfg.weights.size(); ++wi) batches.push_back({wi + 1, cfg.weights[wi]});
    } else {
        batches.push_back({0, -1});
    }

    std::map<int, Tally> per_weight;
    Tally total;
    std::uint64_t trials_total = 0;

    int workers = observer ? 1 : std::max(1, cfg.workers);
    for (const Batch& batch : batches) {
        std::vector<TrialResult> results(cfg.trials);
        auto worker = [&](std::uint64_t begin, std::uint64_t end) {
            for (std::uint64_t i = begin; i < end; ++i) {
                std::uint64_t seed = trial_seed(cfg.seed, batch.stream, i);
                results[i] = batch.weight >= 0 ? run_flip_trial(cc, batch.weight, seed) : run_gate_trial(cc, seed);
            }
        };
        if (workers == 1) {
            worker(0, cfg.trials);
        } else {
            std::vector<std::thread> pool;
            std::uint64_t chunk = (cfg.trials + std::uint64_t(workers) - 1) / std::uint64_t(workers);
            for (int w = 0; w < workers; ++w) {
                std::uint64_t begin = std::uint64_t(w) * chunk;
                if (begin >= cfg.trials) break;
                pool.emplace_back(worker, begin, std::min(cfg.trials, begin + chunk));
            }
            for (auto& th : pool) th.join();
        }
        for (std::uint64_t i = 0; i < cfg.trials; ++i) {
            const TrialResult& r = results[i];
            classify(r, per_weight[r.weight]);
            classify(r, total);
            ++trials_total;
            if (observer) observer({i, r.weight, r.status, r.exact});
        }
    }

    CampaignReport report;
    report.config = cfg;
    report.trials_total = trials_total;
    report.total = total;
    report.per_weight.assign(per_weight.begin(), per_weight.end());
    report.code_descriptor = cc.code.descriptor();
    report.multiplier_census = cc.net.gate_census();
    report.multiplier_depth = cc.net.critical_depth();
    report.rng = kRngName;
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

}  // namespace ftgf
