#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "ftgf/bitvec.hpp"

namespace ftgf {

enum class GateKind { Input, Const0, Const1, Wire, Not, And, Nand, Xor };

std::string to_string(GateKind k);
GateKind gate_kind_from_string(const std::string& s);

enum class FaultModel { StuckAt0, StuckAt1, FlipOutput };
enum class FaultPersist { Permanent, SingleEvaluation };

/// A fault pinned to one gate. Both persistences behave identically within a
/// single evaluation; campaigns use the persistence to decide whether the
/// fault stays across trials.
struct Fault {
    int gate = 0;
    FaultModel model = FaultModel::StuckAt0;
    FaultPersist persist = FaultPersist::Permanent;
};

std::vector<Fault> faults_from_json(const nlohmann::json& j);
nlohmann::json faults_to_json(std::span<const Fault> faults);

/// Combinational gate graph in topological order: every gate input refers to
/// an earlier node. Primary inputs are the first nodes; ids are stable across
/// serialization so fault specs can reference gates between runs.
class Netlist {
public:
    struct Node {
        GateKind kind = GateKind::Wire;
        std::vector<int> inputs;
        std::string label;
    };

    int add_input(std::string label);
    int add_const(bool value, std::string label);
    int add_gate(GateKind kind, std::vector<int> inputs, std::string label);
    void set_outputs(std::vector<int> outputs);

    int num_nodes() const { return int(nodes_.size()); }
    int num_inputs() const { return num_inputs_; }
    int num_gates() const { return int(nodes_.size()) - num_inputs_; }
    const Node& node(int id) const;
    const std::vector<int>& outputs() const { return outputs_; }

    /// Topological evaluation with the given fault overrides applied.
    BitVec evaluate(const BitVec& inputs, std::span<const Fault> faults = {}) const;
    /// Same, but returns every node value (used for differential reports).
    std::vector<std::uint8_t> evaluate_nodes(const BitVec& inputs, std::span<const Fault> faults = {}) const;

    /// Exact gate counts by kind; primary inputs are not gates.
    std::map<GateKind, std::size_t> gate_census() const;
    /// Longest input-to-output path; WIRE and CONST nodes cost 0 levels,
    /// every other gate costs 1.
    int critical_depth() const;

    /// NAND count of each module's three level arrays, keyed by module name
    /// (labels of the form "<slice>.<module>.l<level>.b<bit>"). Boundary and
    /// selection arrays carry other labels and are not counted here.
    std::map<std::string, std::size_t> module_nand_census() const;

    nlohmann::json to_json() const;
    static Netlist from_json(const nlohmann::json& j);

private:
    void check_gate_id(int id) const;

    std::vector<Node> nodes_;
    std::vector<int> outputs_;
    int num_inputs_ = 0;
};

}  // namespace ftgf
