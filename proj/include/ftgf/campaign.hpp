#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftgf/bch.hpp"
#include "ftgf/multiplier.hpp"
#include "ftgf/netlist.hpp"

namespace ftgf {

enum class FaultSource { CodewordFlips, GateFaults };

/// One protected-multiply experiment configuration. The multiplier field is
/// GF(2^m); the protecting code is the smallest BCH code with the requested
/// t whose message length is message_len (default m).
struct CampaignConfig {
    int m = 4;
    std::optional<std::string> poly_hex;  // default primitive polynomial when absent
    int t = 1;
    std::optional<int> message_len;

    FaultSource source = FaultSource::CodewordFlips;
    std::vector<int> weights = {1};  // flips mode: one batch of trials per weight

    int gate_fault_count = 1;  // gate mode
    std::vector<FaultModel> gate_models = {FaultModel::StuckAt0, FaultModel::StuckAt1, FaultModel::FlipOutput};
    FaultPersist gate_persist = FaultPersist::SingleEvaluation;
    bool strict_nand = false;

    std::uint64_t trials = 1000;
    std::uint64_t seed = 1;
    int workers = 1;
    std::string output;      // optional JSON report path, honored by the CLI
    std::string output_csv;  // optional CSV path

    nlohmann::json to_json() const;  // canonical echo; excludes execution details
    static CampaignConfig from_json(const nlohmann::json& j);
};

struct Tally {
    std::uint64_t no_error = 0;
    std::uint64_t corrected_exact = 0;
    std::uint64_t miscorrected = 0;
    std::uint64_t uncorrectable = 0;

    std::uint64_t sum() const { return no_error + corrected_exact + miscorrected + uncorrectable; }
    Tally& operator+=(const Tally& o);
};

struct CampaignReport {
    CampaignConfig config;
    std::uint64_t trials_total = 0;
    Tally total;
    std::vector<std::pair<int, Tally>> per_weight;  // injected weight (flips) or observed product-error weight (gate)
    nlohmann::json code_descriptor;
    std::map<GateKind, std::size_t> multiplier_census;
    int multiplier_depth = 0;
    std::string rng;
    double wall_ms = 0.0;  // informational only; never serialized

    /// Canonical serialization: byte-identical for identical (config, seed),
    /// independent of worker count and wall clock.
    nlohmann::json to_json() const;
    std::string to_csv() const;
};

struct TrialObservation {
    std::uint64_t index = 0;
    int weight = 0;  // injected or observed error weight
    DecodeStatus status = DecodeStatus::NoError;
    bool exact = false;
};
using TrialObserver = std::function<void(const TrialObservation&)>;

/// Multiplies a and b through the gate netlist under the given faults,
/// protects the result with the code (parity computed over the fault-free
/// product), decodes, and returns the recovered product plus the outcome.
std::pair<FieldElement, DecodeOutcome> run_protected_multiply(const FieldContext& ctx, const BchCode& code,
                                                              const Netlist& net, FieldElement a, FieldElement b,
                                                              std::span<const Fault> faults);

/// Same pipeline with the fault-free product and w codeword flips applied
/// after encoding.
std::pair<FieldElement, DecodeOutcome> run_protected_multiply_flips(const FieldContext& ctx, const BchCode& code,
                                                                    FieldElement a, FieldElement b,
                                                                    std::span<const int> flip_positions);

/// Runs the configured trials. Identical (config, seed) produce identical
/// reports. When an observer is supplied the run is single-threaded.
CampaignReport run_campaign(const CampaignConfig& cfg, const TrialObserver& observer = {});

}  // namespace ftgf
