#include "ftgf/netlist.hpp"

#include <algorithm>

#include "ftgf/errors.hpp"

namespace ftgf {

std::string to_string(GateKind k) {
    switch (k) {
        case GateKind::Input: return "input";
        case GateKind::Const0: return "const0";
        case GateKind::Const1: return "const1";
        case GateKind::Wire: return "wire";
        case GateKind::Not: return "not";
        case GateKind::And: return "and";
        case GateKind::Nand: return "nand";
        case GateKind::Xor: return "xor";
    }
    return "?";
}

GateKind gate_kind_from_string(const std::string& s) {
    if (s == "const0") return GateKind::Const0;
    if (s == "const1") return GateKind::Const1;
    if (s == "wire") return GateKind::Wire;
    if (s == "not") return GateKind::Not;
    if (s == "and") return GateKind::And;
    if (s == "nand") return GateKind::Nand;
    if (s == "xor") return GateKind::Xor;
    throw ConfigInvalid("unknown gate kind '" + s + "'");
}

namespace {

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

}  // namespace

std::vector<Fault> faults_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw ConfigInvalid("fault spec must be a JSON array");
    std::vector<Fault> out;
    for (const auto& e : j) {
        Fault f;
        if (!e.contains("gate") || !e["gate"].is_number_integer())
            throw ConfigInvalid("fault entry needs an integer 'gate'");
        f.gate = e["gate"].get<int>();
        f.model = model_from_name(e.value("model", std::string("sa0")));
        std::string p = e.value("persist", std::string("perm"));
        if (p == "perm")
            f.persist = FaultPersist::Permanent;
        else if (p == "once")
            f.persist = FaultPersist::SingleEvaluation;
        else
            throw ConfigInvalid("unknown fault persistence '" + p + "'");
        out.push_back(f);
    }
    return out;
}

nlohmann::json faults_to_json(std::span<const Fault> faults) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& f : faults) {
        arr.push_back({{"gate", f.gate},
                       {"model", model_name(f.model)},
                       {"persist", f.persist == FaultPersist::Permanent ? "perm" : "once"}});
    }
    return arr;
}

int Netlist::add_input(std::string label) {
    if (num_inputs_ != int(nodes_.size()))
        throw ConfigInvalid("primary inputs must be added before any gate");
    nodes_.push_back({GateKind::Input, {}, std::move(label)});
    return num_inputs_++;
}

int Netlist::add_const(bool value, std::string label) {
    nodes_.push_back({value ? GateKind::Const1 : GateKind::Const0, {}, std::move(label)});
    return int(nodes_.size()) - 1;
}

int Netlist::add_gate(GateKind kind, std::vector<int> inputs, std::string label) {
    const int id = int(nodes_.size());
    switch (kind) {
        case GateKind::Input:
        case GateKind::Const0:
        case GateKind::Const1:
            throw ConfigInvalid("use add_input/add_const for source nodes");
        case GateKind::Wire:
        case GateKind::Not:
            if (inputs.size() != 1) throw ConfigInvalid(to_string(kind) + " takes exactly one input");
            break;
        case GateKind::And:
        case GateKind::Nand:
        case GateKind::Xor:
            if (inputs.size() < 2) throw ConfigInvalid(to_string(kind) + " takes at least two inputs");
            break;
    }
    for (int in : inputs)
        if (in < 0 || in >= id) throw UnknownGate("gate input " + std::to_string(in) + " is not an earlier node");
    nodes_.push_back({kind, std::move(inputs), std::move(label)});
    return id;
}

void Netlist::set_outputs(std::vector<int> outputs) {
    for (int o : outputs) check_gate_id(o);
    outputs_ = std::move(outputs);
}

const Netlist::Node& Netlist::node(int id) const {
    check_gate_id(id);
    return nodes_[std::size_t(id)];
}

void Netlist::check_gate_id(int id) const {
    if (id < 0 || id >= int(nodes_.size())) throw UnknownGate("gate id " + std::to_string(id) + " does not exist");
}

std::vector<std::uint8_t> Netlist::evaluate_nodes(const BitVec& inputs, std::span<const Fault> faults) const {
    if (inputs.size() != std::size_t(num_inputs_))
        throw WidthMismatch("expected " + std::to_string(num_inputs_) + " input bits, got " +
                            std::to_string(inputs.size()));
    for (const auto& f : faults) check_gate_id(f.gate);

    std::vector<std::uint8_t> val(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& nd = nodes_[i];
        std::uint8_t v = 0;
        switch (nd.kind) {
            case GateKind::Input: v = inputs.get(i); break;
            case GateKind::Const0: v = 0; break;
            case GateKind::Const1: v = 1; break;
            case GateKind::Wire: v = val[std::size_t(nd.inputs[0])]; break;
            case GateKind::Not: v = !val[std::size_t(nd.inputs[0])]; break;
            case GateKind::And:
            case GateKind::Nand: {
                v = 1;
                for (int in : nd.inputs) v &= val[std::size_t(in)];
                if (nd.kind == GateKind::Nand) v ^= 1;
                break;
            }
            case GateKind::Xor: {
                v = 0;
                for (int in : nd.inputs) v ^= val[std::size_t(in)];
                break;
            }
        }
        // Later fault entries win when several target the same gate.
        for (const auto& f : faults) {
            if (f.gate != int(i)) continue;
            switch (f.model) {
                case FaultModel::StuckAt0: v = 0; break;
                case FaultModel::StuckAt1: v = 1; break;
                case FaultModel::FlipOutput: v ^= 1; break;
            }
        }
        val[i] = v;
    }
    return val;
}

BitVec Netlist::evaluate(const BitVec& inputs, std::span<const Fault> faults) const {
    std::vector<std::uint8_t> val = evaluate_nodes(inputs, faults);
    BitVec out(outputs_.size());
    for (std::size_t i = 0; i < outputs_.size(); ++i) out.set(i, val[std::size_t(outputs_[i])]);
    return out;
}

std::map<GateKind, std::size_t> Netlist::gate_census() const {
    std::map<GateKind, std::size_t> census;
    for (const auto& nd : nodes_)
        if (nd.kind != GateKind::Input) ++census[nd.kind];
    return census;
}

int Netlist::critical_depth() const {
    std::vector<int> depth(nodes_.size(), 0);
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& nd = nodes_[i];
        int d = 0;
        for (int in : nd.inputs) d = std::max(d, depth[std::size_t(in)]);
        bool costs_level = nd.kind == GateKind::Not || nd.kind == GateKind::And || nd.kind == GateKind::Nand ||
                           nd.kind == GateKind::Xor;
        depth[i] = d + (costs_level ? 1 : 0);
    }
    int best = 0;
    for (int o : outputs_) best = std::max(best, depth[std::size_t(o)]);
    return best;
}

std::map<std::string, std::size_t> Netlist::module_nand_census() const {
    std::map<std::string, std::size_t> census;
    for (const auto& nd : nodes_) {
        if (nd.kind != GateKind::Nand) continue;
        // labels look like "k3.G.l1.b2"
        auto p1 = nd.label.find('.');
        if (p1 == std::string::npos) continue;
        auto p2 = nd.label.find('.', p1 + 1);
        if (p2 == std::string::npos) continue;
        std::string mod = nd.label.substr(p1 + 1, p2 - p1 - 1);
        if (mod != "G" && mod != "H") continue;
        if (nd.label.compare(p2 + 1, 1, "l") != 0) continue;
        ++census[nd.label.substr(0, p2)];
    }
    return census;
}

nlohmann::json Netlist::to_json() const {
    nlohmann::json ins = nlohmann::json::array();
    nlohmann::json gates = nlohmann::json::array();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
        const Node& nd = nodes_[i];
        if (nd.kind == GateKind::Input) {
            ins.push_back({{"id", i}, {"label", nd.label}});
        } else {
            gates.push_back({{"id", i}, {"kind", to_string(nd.kind)}, {"inputs", nd.inputs}, {"label", nd.label}});
        }
    }
    return {{"inputs", ins}, {"gates", gates}, {"outputs", outputs_}, {"levels", critical_depth()}};
}

Netlist Netlist::from_json(const nlohmann::json& j) {
    Netlist net;
    if (!j.contains("inputs") || !j.contains("gates") || !j.contains("outputs"))
        throw ConfigInvalid("netlist JSON needs inputs, gates and outputs");
    int expect = 0;
    for (const auto& e : j["inputs"]) {
        if (e.value("id", -1) != expect++) throw ConfigInvalid("netlist input ids must be 0..n-1 in order");
        net.add_input(e.value("label", std::string{}));
    }
    for (const auto& e : j["gates"]) {
        if (e.value("id", -1) != expect++) throw ConfigInvalid("netlist gate ids must be consecutive");
        GateKind kind = gate_kind_from_string(e.value("kind", std::string{}));
        std::string label = e.value("label", std::string{});
        if (kind == GateKind::Const0 || kind == GateKind::Const1) {
            net.add_const(kind == GateKind::Const1, std::move(label));
        } else {
            net.add_gate(kind, e.value("inputs", std::vector<int>{}), std::move(label));
        }
    }
    net.set_outputs(j["outputs"].get<std::vector<int>>());
    return net;
}

}  // namespace ftgf
