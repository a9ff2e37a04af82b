#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "json.hpp"

#include "ftgf/affine.hpp"
#include "ftgf/bch.hpp"
#include "ftgf/campaign.hpp"
#include "ftgf/errors.hpp"
#include "ftgf/multiplier.hpp"

namespace py = pybind11;
using namespace ftgf;

namespace {

FieldContext make_field(int m, const std::string& poly_hex) {
    BinPoly f = poly_hex.empty() ? FieldContext::default_poly(m) : BinPoly::from_hex(poly_hex);
    return build_field(m, f);
}

std::vector<FieldElement> images_from_ints(const FieldContext& fx, const std::vector<std::uint32_t>& raw) {
    std::vector<FieldElement> images;
    images.reserve(raw.size());
    for (auto v : raw) images.push_back(fx.element(v));
    return images;
}

std::vector<Fault> faults_from_tuples(const std::vector<std::tuple<int, std::string, std::string>>& spec) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [gate, model, persist] : spec)
        arr.push_back({{"gate", gate}, {"model", model}, {"persist", persist}});
    return faults_from_json(arr);
}

BitVec word_arg(const std::string& hex, int bits) { return BitVec::from_hex(hex, std::size_t(bits)); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "GF(2^m) arithmetic, NAND-only multiplier netlists, BCH codec, and fault campaigns";
    m.attr("__version__") = "0.1.0";

    py::register_exception<Error>(m, "FtgfError");

    py::class_<FieldContext>(m, "FieldContext", "A constructed GF(2^m); elements are coordinate integers")
        .def(py::init(&make_field), py::arg("m"), py::arg("poly") = "")
        .def_property_readonly("m", &FieldContext::m)
        .def_property_readonly("order", &FieldContext::order)
        .def_property_readonly("poly", [](const FieldContext& fx) { return fx.f().to_hex(); })
        .def_property_readonly("x_is_primitive", &FieldContext::x_is_primitive)
        .def_property_readonly("generator", &FieldContext::generator)
        .def("add", [](const FieldContext& fx, std::uint32_t a, std::uint32_t b) {
            return fx.add(fx.element(a), fx.element(b)).coords;
        })
        .def("mul", [](const FieldContext& fx, std::uint32_t a, std::uint32_t b) {
            return fx.mul(fx.element(a), fx.element(b)).coords;
        })
        .def("square", [](const FieldContext& fx, std::uint32_t a) { return fx.square(fx.element(a)).coords; })
        .def("sqrt", [](const FieldContext& fx, std::uint32_t a) { return fx.sqrt(fx.element(a)).coords; })
        .def("inv", [](const FieldContext& fx, std::uint32_t a) { return fx.inv(fx.element(a)).coords; })
        .def("pow", [](const FieldContext& fx, std::uint32_t a, std::int64_t e) {
            return fx.pow(fx.element(a), e).coords;
        })
        .def("alpha_pow", [](const FieldContext& fx, std::int64_t i) { return fx.alpha_pow(i).coords; })
        .def("log", [](const FieldContext& fx, std::uint32_t a) { return fx.log_of(fx.element(a)); })
        .def("minimal_polynomial",
             [](const FieldContext& fx, int i) { return fx.minimal_polynomial(i).to_hex(); })
        .def("cyclotomic_coset", &FieldContext::cyclotomic_coset);

    m.def("mul_reference", [](const FieldContext& fx, std::uint32_t a, std::uint32_t b) {
        return mul_reference(fx, fx.element(a), fx.element(b)).coords;
    });
    m.def("mul_interleaved", [](const FieldContext& fx, std::uint32_t a, std::uint32_t b) {
        auto [prod, trace] = mul_interleaved(fx, fx.element(a), fx.element(b));
        std::vector<std::uint32_t> raw;
        for (auto e : trace) raw.push_back(e.coords);
        return py::make_tuple(prod.coords, raw);
    });

    py::class_<Netlist>(m, "Netlist", "Combinational gate graph with fault injection")
        .def_property_readonly("num_inputs", &Netlist::num_inputs)
        .def_property_readonly("num_gates", &Netlist::num_gates)
        .def_property_readonly("depth", &Netlist::critical_depth)
        .def("census",
             [](const Netlist& net) {
                 std::map<std::string, std::size_t> out;
                 for (const auto& [kind, count] : net.gate_census()) out[to_string(kind)] = count;
                 return out;
             })
        .def("module_nand_census", &Netlist::module_nand_census)
        .def("to_json", [](const Netlist& net) { return net.to_json().dump(); })
        .def_static("from_json", [](const std::string& s) { return Netlist::from_json(nlohmann::json::parse(s)); });

    m.def(
        "build_nand_multiplier_netlist",
        [](const FieldContext& fx, bool strict_nand) {
            return build_nand_multiplier_netlist(fx,
                                                 strict_nand ? SelectionStyle::NandPairs : SelectionStyle::AndGates);
        },
        py::arg("ctx"), py::arg("strict_nand") = false);
    m.def(
        "eval_multiplier_netlist",
        [](const Netlist& net, const FieldContext& fx, std::uint32_t a, std::uint32_t b,
           const std::vector<std::tuple<int, std::string, std::string>>& faults) {
            return eval_multiplier_netlist(net, fx, fx.element(a), fx.element(b), faults_from_tuples(faults)).coords;
        },
        py::arg("net"), py::arg("ctx"), py::arg("a"), py::arg("b"),
        py::arg("faults") = std::vector<std::tuple<int, std::string, std::string>>{});

    py::class_<BchCode>(m, "BchCode", "Binary BCH code; words are hex strings, LSB = coefficient of x^0")
        .def_property_readonly("m", &BchCode::m)
        .def_property_readonly("n", &BchCode::n)
        .def_property_readonly("k", &BchCode::k)
        .def_property_readonly("t", &BchCode::t)
        .def_property_readonly("n_eff", &BchCode::n_eff)
        .def_property_readonly("k_eff", &BchCode::k_eff)
        .def_property_readonly("shortened_by", &BchCode::shortened_by)
        .def_property_readonly("generator", [](const BchCode& c) { return c.generator().to_hex(); })
        .def("descriptor", [](const BchCode& c) { return c.descriptor().dump(); })
        .def_static("from_descriptor",
                    [](const std::string& s) { return BchCode::from_descriptor(nlohmann::json::parse(s)); });

    m.def(
        "build_code",
        [](int m_, int t, std::optional<int> message_len, const std::string& poly) {
            std::optional<BinPoly> f =
                poly.empty() ? std::nullopt : std::optional<BinPoly>(BinPoly::from_hex(poly));
            return build_code(m_, t, message_len, f);
        },
        py::arg("m"), py::arg("t"), py::arg("message_len") = std::nullopt, py::arg("poly") = "");

    m.def("encode", [](const BchCode& code, const std::string& msg_hex) {
        return encode(code, word_arg(msg_hex, code.k_eff())).to_hex_padded();
    });
    m.def("syndromes", [](const BchCode& code, const std::string& r_hex) {
        return syndromes_direct(code, word_arg(r_hex, code.n_eff())).s;
    });
    m.def("syndromes_reencode", [](const BchCode& code, const std::string& r_hex) {
        return syndromes_reencode(code, word_arg(r_hex, code.n_eff())).s;
    });
    m.def("berlekamp_massey", [](const BchCode& code, const std::vector<std::uint32_t>& synd) {
        SyndromeSet s{synd};
        return berlekamp_massey(code, s).sigma.coords();
    });
    m.def("chien_search", [](const BchCode& code, const std::vector<std::uint32_t>& sigma) {
        return chien_search(code, ErrorLocator{GfPoly::from_coords(code.field(), sigma)});
    });
    m.def("brs_find_roots", [](const BchCode& code, const std::vector<std::uint32_t>& sigma) {
        return brs_find_roots(code, ErrorLocator{GfPoly::from_coords(code.field(), sigma)});
    });
    m.def(
        "decode",
        [](const BchCode& code, const std::string& r_hex, const std::string& method) {
            if (method != "brs" && method != "chien") throw ConfigInvalid("method must be 'brs' or 'chien'");
            DecodeOutcome out = decode(code, word_arg(r_hex, code.n_eff()),
                                       method == "brs" ? RootMethod::Brs : RootMethod::Chien);
            py::dict d;
            d["status"] = to_string(out.status);
            d["positions"] = out.positions;
            d["syndrome_nonzero"] = out.syndrome_nonzero;
            d["corrected"] = out.corrected.to_hex_padded();
            d["error"] = out.error.to_hex_padded();
            return d;
        },
        py::arg("code"), py::arg("received"), py::arg("method") = "brs");

    m.def("linearized_eval", [](const FieldContext& fx, const std::vector<std::uint32_t>& images, std::uint32_t y) {
        return linearized_eval(fx, images_from_ints(fx, images), fx.element(y)).coords;
    });
    m.def("affine_solve", [](const FieldContext& fx, const std::vector<std::uint32_t>& images, std::uint32_t beta) {
        std::vector<std::uint32_t> out;
        for (auto e : affine_solve(fx, images_from_ints(fx, images), fx.element(beta))) out.push_back(e.coords);
        return out;
    });

    m.def("run_campaign", [](const std::string& config_json) {
        CampaignConfig cfg = CampaignConfig::from_json(nlohmann::json::parse(config_json));
        return run_campaign(cfg).to_json().dump();
    });
}
