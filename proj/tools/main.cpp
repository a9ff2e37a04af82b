// Command-line front end: field multiplication, code construction,
// encode/decode, locator root finding, netlist export, fault injection,
// campaigns, and structural metrics. Output is JSON on stdout (use --pretty
// for indentation). Exit codes: 0 success, 1 computation failure (for
// example an uncorrectable word under --strict), 2 usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "ftgf/affine.hpp"
#include "ftgf/bch.hpp"
#include "ftgf/campaign.hpp"
#include "ftgf/errors.hpp"
#include "ftgf/multiplier.hpp"

using nlohmann::json;
using namespace ftgf;

namespace {

bool g_pretty = false;

void emit(const json& j) { std::cout << (g_pretty ? j.dump(2) : j.dump()) << "\n"; }

json slurp_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigInvalid("cannot open '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ConfigInvalid("bad JSON in '" + path + "': " + e.what());
    }
    return j;
}

void write_file(const std::string& path, const std::string& body) {
    std::ofstream out(path);
    if (!out) throw ConfigInvalid("cannot write '" + path + "'");
    out << body;
}

FieldContext field_from_flags(int m, const std::string& poly_hex) {
    BinPoly f = poly_hex.empty() ? FieldContext::default_poly(m) : BinPoly::from_hex(poly_hex);
    return build_field(m, f);
}

std::uint32_t parse_element(const FieldContext& fx, const std::string& hex) {
    BinPoly p = BinPoly::from_hex(hex);
    if (p.degree() >= fx.m()) throw ConfigInvalid("element '" + hex + "' does not fit in m=" + std::to_string(fx.m()));
    return std::uint32_t(p.to_u64());
}

std::string element_hex(std::uint32_t coords) { return BinPoly::from_u64(coords).to_hex(); }

Netlist netlist_from_flags(const std::string& file, int m, const std::string& poly_hex, bool strict) {
    if (!file.empty()) return Netlist::from_json(slurp_json(file));
    if (m == 0) throw ConfigInvalid("pass either --netlist FILE or --m (with optional --poly)");
    FieldContext fx = field_from_flags(m, poly_hex);
    return build_nand_multiplier_netlist(fx, strict ? SelectionStyle::NandPairs : SelectionStyle::AndGates);
}

int run(int argc, char** argv) {
    CLI::App app{"fault-tolerant GF(2^m) multiplier toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // allow global flags after the subcommand
    app.add_flag("--pretty", g_pretty, "indent JSON output");

    // --- mul ---------------------------------------------------------------
    auto* mul = app.add_subcommand("mul", "multiply two field elements");
    int mul_m = 0;
    std::string mul_poly, mul_a, mul_b, mul_engine = "all";
    bool mul_strict = false;
    mul->add_option("--m", mul_m, "extension degree")->required();
    mul->add_option("--poly", mul_poly, "field polynomial, hex (default: built-in primitive)");
    mul->add_option("--a", mul_a, "first operand, hex")->required();
    mul->add_option("--b", mul_b, "second operand, hex")->required();
    mul->add_option("--engine", mul_engine, "ref | interleaved | netlist | all")
        ->check(CLI::IsMember({"ref", "interleaved", "netlist", "all"}));
    mul->add_flag("--strict-nand", mul_strict, "netlist engine: NAND-pair selection layer");
    mul->callback([&] {
        FieldContext fx = field_from_flags(mul_m, mul_poly);
        FieldElement a = fx.element(parse_element(fx, mul_a)), b = fx.element(parse_element(fx, mul_b));
        json engines = json::object();
        auto want = [&](const char* name) { return mul_engine == "all" || mul_engine == name; };
        if (want("ref")) engines["ref"] = element_hex(mul_reference(fx, a, b).coords);
        if (want("interleaved")) engines["interleaved"] = element_hex(mul_interleaved(fx, a, b).first.coords);
        if (want("netlist")) {
            Netlist net =
                build_nand_multiplier_netlist(fx, mul_strict ? SelectionStyle::NandPairs : SelectionStyle::AndGates);
            engines["netlist"] = element_hex(eval_multiplier_netlist(net, fx, a, b).coords);
        }
        std::string product;
        for (const auto& [name, value] : engines.items()) {
            if (product.empty()) product = value.get<std::string>();
            if (product != value.get<std::string>()) throw Error("engines disagree");
        }
        emit({{"m", mul_m}, {"poly", fx.f().to_hex()}, {"product", product}, {"engines", engines}});
    });

    // --- code build ----------------------------------------------------------
    auto* code_cmd = app.add_subcommand("code", "BCH code operations");
    code_cmd->require_subcommand(1);
    auto* code_build = code_cmd->add_subcommand("build", "construct a code and print its descriptor");
    int cb_m = 0, cb_t = 0, cb_msg = 0;
    std::string cb_poly, cb_out;
    code_build->add_option("--m", cb_m, "field degree to start from")->required();
    code_build->add_option("--t", cb_t, "designed correction capability")->required();
    code_build->add_option("--msg-len", cb_msg, "exact usable message length (shortens / escalates m)");
    code_build->add_option("--poly", cb_poly, "field polynomial, hex");
    code_build->add_option("-o,--out", cb_out, "also write the descriptor to a file");
    code_build->callback([&] {
        std::optional<int> msg = cb_msg > 0 ? std::optional<int>(cb_msg) : std::nullopt;
        std::optional<BinPoly> f = cb_poly.empty() ? std::nullopt : std::optional<BinPoly>(BinPoly::from_hex(cb_poly));
        BchCode code = build_code(cb_m, cb_t, msg, f);
        json d = code.descriptor();
        if (!cb_out.empty()) write_file(cb_out, d.dump(2) + "\n");
        emit(d);
    });

    // --- encode / decode -----------------------------------------------------
    auto* enc = app.add_subcommand("encode", "systematically encode a message");
    std::string enc_code, enc_data;
    enc->add_option("--code", enc_code, "code descriptor JSON file")->required();
    enc->add_option("--data", enc_data, "message bits, hex")->required();
    enc->callback([&] {
        BchCode code = BchCode::from_descriptor(slurp_json(enc_code));
        BitVec msg = BitVec::from_hex(enc_data, std::size_t(code.k_eff()));
        emit({{"codeword", encode(code, msg).to_hex_padded()}, {"n_eff", code.n_eff()}});
    });

    auto* dec = app.add_subcommand("decode", "decode a received word");
    std::string dec_code, dec_data, dec_method = "brs";
    bool dec_strict = false;
    dec->add_option("--code", dec_code, "code descriptor JSON file")->required();
    dec->add_option("--data", dec_data, "received word, hex")->required();
    dec->add_option("--method", dec_method, "brs | chien")->check(CLI::IsMember({"brs", "chien"}));
    dec->add_flag("--strict", dec_strict, "exit 1 when the word is uncorrectable");
    dec->callback([&] {
        BchCode code = BchCode::from_descriptor(slurp_json(dec_code));
        BitVec r = BitVec::from_hex(dec_data, std::size_t(code.n_eff()));
        DecodeOutcome out = decode(code, r, dec_method == "brs" ? RootMethod::Brs : RootMethod::Chien);
        emit(outcome_to_json(out));
        if (dec_strict && out.status == DecodeStatus::Uncorrectable) throw Error("uncorrectable word");
    });

    // --- roots ----------------------------------------------------------------
    auto* roots = app.add_subcommand("roots", "find error positions from a locator polynomial");
    std::string roots_code, roots_sigma, roots_method = "brs";
    roots->add_option("--code", roots_code, "code descriptor JSON file")->required();
    roots->add_option("--sigma", roots_sigma, "locator coefficients, hex, comma separated, constant term first")
        ->required();
    roots->add_option("--method", roots_method, "chien | brs")->check(CLI::IsMember({"chien", "brs"}));
    roots->callback([&] {
        BchCode code = BchCode::from_descriptor(slurp_json(roots_code));
        const FieldContext& fx = code.field();
        std::vector<std::uint32_t> coeffs;
        std::stringstream ss(roots_sigma);
        for (std::string tok; std::getline(ss, tok, ',');) coeffs.push_back(parse_element(fx, tok));
        if (coeffs.empty() || coeffs[0] != 1) throw ConfigInvalid("sigma must have constant term 1");
        ErrorLocator loc{GfPoly::from_coords(fx, coeffs)};
        auto positions = roots_method == "brs" ? brs_find_roots(code, loc) : chien_search(code, loc);
        json root_hex = json::array();
        for (int p : positions) root_hex.push_back(element_hex(fx.exp_raw(code.n() - p)));
        emit({{"positions", positions}, {"roots", root_hex}, {"method", roots_method}, {"nu", loc.nu()}});
    });

    // --- netlist ---------------------------------------------------------------
    auto* nl = app.add_subcommand("netlist", "emit the multiplier netlist as JSON");
    int nl_m = 0;
    std::string nl_poly, nl_out;
    bool nl_strict = false;
    nl->add_option("--m", nl_m, "extension degree")->required();
    nl->add_option("--poly", nl_poly, "field polynomial, hex");
    nl->add_flag("--strict-nand", nl_strict, "NAND-pair selection layer");
    nl->add_option("-o,--out", nl_out, "write to a file instead of stdout");
    nl->callback([&] {
        Netlist net = netlist_from_flags("", nl_m, nl_poly, nl_strict);
        if (!nl_out.empty()) {
            write_file(nl_out, net.to_json().dump(2) + "\n");
            emit({{"written", nl_out}, {"gates", net.num_gates()}, {"levels", net.critical_depth()}});
        } else {
            emit(net.to_json());
        }
    });

    // --- inject ------------------------------------------------------------------
    auto* inj = app.add_subcommand("inject", "differential fault report on a multiplier netlist");
    std::string inj_net, inj_faults, inj_a, inj_b;
    inj->add_option("--netlist", inj_net, "netlist JSON file")->required();
    inj->add_option("--faults", inj_faults, "fault spec JSON file")->required();
    inj->add_option("--a", inj_a, "first operand, hex")->required();
    inj->add_option("--b", inj_b, "second operand, hex")->required();
    inj->callback([&] {
        Netlist net = Netlist::from_json(slurp_json(inj_net));
        std::vector<Fault> faults = faults_from_json(slurp_json(inj_faults));
        if (net.num_inputs() % 2 != 0) throw ConfigInvalid("netlist does not have an even input count");
        const int m = net.num_inputs() / 2;
        BinPoly pa = BinPoly::from_hex(inj_a), pb = BinPoly::from_hex(inj_b);
        if (pa.degree() >= m || pb.degree() >= m) throw ConfigInvalid("operand does not fit the netlist width");
        BitVec in(std::size_t(2 * m));
        for (int j = 0; j < m; ++j) {
            in.set(std::size_t(j), pa.coeff(j));
            in.set(std::size_t(m + j), pb.coeff(j));
        }
        BitVec clean = net.evaluate(in);
        BitVec faulted = net.evaluate(in, faults);
        json changed = json::array();
        int weight = 0;
        for (std::size_t i = 0; i < clean.size(); ++i)
            if (clean.get(i) != faulted.get(i)) {
                changed.push_back(i);
                ++weight;
            }
        emit({{"fault_free", clean.to_hex_padded()},
              {"faulted", faulted.to_hex_padded()},
              {"changed_bits", changed},
              {"error_weight", weight},
              {"faults", faults_to_json(faults)}});
    });

    // --- campaign -------------------------------------------------------------------
    auto* camp = app.add_subcommand("campaign", "run a fault-injection campaign");
    std::string camp_cfg, camp_out, camp_csv;
    camp->add_option("--config", camp_cfg, "campaign config JSON file")->required();
    camp->add_option("-o,--out", camp_out, "write the JSON report to a file");
    camp->add_option("--csv", camp_csv, "write the per-weight tallies as CSV");
    camp->callback([&] {
        CampaignConfig cfg = CampaignConfig::from_json(slurp_json(camp_cfg));
        CampaignReport rep = run_campaign(cfg);
        std::cerr << "campaign: " << rep.trials_total << " trials in " << rep.wall_ms << " ms\n";
        std::string out_path = camp_out.empty() ? cfg.output : camp_out;
        std::string csv_path = camp_csv.empty() ? cfg.output_csv : camp_csv;
        if (!out_path.empty()) write_file(out_path, rep.to_json().dump(2) + "\n");
        if (!csv_path.empty()) write_file(csv_path, rep.to_csv());
        emit(rep.to_json());
    });

    // --- metrics ---------------------------------------------------------------------
    auto* met = app.add_subcommand("metrics", "gate census and critical depth of a netlist");
    std::string met_net, met_poly;
    int met_m = 0;
    bool met_strict = false;
    met->add_option("--netlist", met_net, "netlist JSON file");
    met->add_option("--m", met_m, "build the multiplier netlist for this m instead");
    met->add_option("--poly", met_poly, "field polynomial, hex");
    met->add_flag("--strict-nand", met_strict, "NAND-pair selection layer");
    met->callback([&] {
        Netlist net = netlist_from_flags(met_net, met_m, met_poly, met_strict);
        json census = json::object();
        for (const auto& [kind, count] : net.gate_census()) census[to_string(kind)] = count;
        json modules = json::object();
        for (const auto& [name, count] : net.module_nand_census()) modules[name] = count;
        emit({{"census", census},
              {"critical_depth", net.critical_depth()},
              {"gates", net.num_gates()},
              {"inputs", net.num_inputs()},
              {"outputs", net.outputs().size()},
              {"module_nand", modules}});
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
