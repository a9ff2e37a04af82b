#include "ftgf/multiplier.hpp"

#include "ftgf/errors.hpp"

namespace ftgf {

FieldElement mul_reference(const FieldContext& ctx, FieldElement a, FieldElement b) {
    (void)ctx.add(a, b);  // context check
    BinPoly r = (BinPoly::from_u64(a.coords) * BinPoly::from_u64(b.coords)).mod(ctx.f());
    return ctx.element(std::uint32_t(r.to_u64()));
}

std::pair<FieldElement, MulTrace> mul_interleaved(const FieldContext& ctx, FieldElement a, FieldElement b) {
    (void)ctx.add(a, b);  // context check
    const int m = ctx.m();
    const std::uint32_t fbits = std::uint32_t(ctx.f().to_u64());
    MulTrace trace;
    trace.reserve(std::size_t(m) + 1);
    std::uint32_t p = 0;
    trace.push_back(ctx.zero());
    for (int k = 1; k <= m; ++k) {
        p <<= 1;
        if (p >> m & 1) p ^= fbits;  // fbits includes the x^m bit, clearing it
        if (b.coords >> (m - k) & 1) p ^= a.coords;
        trace.push_back(ctx.element(p));
    }
    return {ctx.element(p), trace};
}

int append_xor_nand4(Netlist& net, int a, int b, const std::string& label_prefix) {
    int n1 = net.add_gate(GateKind::Nand, {a, b}, label_prefix + ".xin");
    int n2 = net.add_gate(GateKind::Nand, {a, n1}, label_prefix + ".l1");
    int n3 = net.add_gate(GateKind::Nand, {n1, b}, label_prefix + ".l2");
    return net.add_gate(GateKind::Nand, {n2, n3}, label_prefix + ".l3");
}

namespace {

// Selection term s AND t, either as a plain AND gate or as a NAND pair.
int selection_gate(Netlist& net, SelectionStyle style, int s, int t, const std::string& prefix, int bit) {
    std::string b = ".b" + std::to_string(bit);
    if (style == SelectionStyle::AndGates) return net.add_gate(GateKind::And, {s, t}, prefix + b);
    int n1 = net.add_gate(GateKind::Nand, {s, t}, prefix + ".n1" + b);
    return net.add_gate(GateKind::Nand, {n1, n1}, prefix + ".n2" + b);
}

// One m-bit summation module: out_j = x_j XOR y_j realized with NAND gates
// only. The operand-coupling array (x NAND y) sits at the module boundary;
// the module proper is the three level arrays of m NAND gates each.
std::vector<int> summation_module(Netlist& net, const std::vector<int>& x, const std::vector<int>& y,
                                  const std::string& mod) {
    const int m = int(x.size());
    std::vector<int> xin(std::size_t(m), 0), l1(std::size_t(m), 0), l2(std::size_t(m), 0), out(std::size_t(m), 0);
    auto lbl = [&](const char* part, int j) { return mod + "." + part + ".b" + std::to_string(j); };
    for (int j = 0; j < m; ++j) xin[j] = net.add_gate(GateKind::Nand, {x[j], y[j]}, lbl("xin", j));
    for (int j = 0; j < m; ++j) l1[j] = net.add_gate(GateKind::Nand, {x[j], xin[j]}, lbl("l1", j));
    for (int j = 0; j < m; ++j) l2[j] = net.add_gate(GateKind::Nand, {xin[j], y[j]}, lbl("l2", j));
    for (int j = 0; j < m; ++j) out[j] = net.add_gate(GateKind::Nand, {l1[j], l2[j]}, lbl("l3", j));
    return out;
}

}  // namespace

Netlist build_nand_multiplier_netlist(const FieldContext& ctx, SelectionStyle style) {
    const int m = ctx.m();
    Netlist net;
    std::vector<int> a(std::size_t(m), 0), b(std::size_t(m), 0);
    for (int j = 0; j < m; ++j) a[std::size_t(j)] = net.add_input("a" + std::to_string(j));
    for (int j = 0; j < m; ++j) b[std::size_t(j)] = net.add_input("b" + std::to_string(j));
    int c0 = net.add_const(false, "zero");
    int c1 = net.add_const(true, "one");

    // Partial product starts at zero; slice k folds in bit b_(m-k).
    std::vector<int> p(std::size_t(m), c0);
    for (int k = 1; k <= m; ++k) {
        std::string kp = "k" + std::to_string(k);
        const int top = p[std::size_t(m - 1)];

        // Module G: shift-reduce. Shifted bit j is p_(j-1) (zero for j = 0);
        // the reduction term is top AND f_j, with f_j wired as a constant tap.
        std::vector<int> xg(std::size_t(m), 0), v(std::size_t(m), 0);
        for (int j = 0; j < m; ++j) {
            xg[std::size_t(j)] = j == 0 ? c0 : p[std::size_t(j - 1)];
            int ftap = ctx.f().coeff(j) ? c1 : c0;
            v[std::size_t(j)] = selection_gate(net, style, top, ftap, kp + ".red", j);
        }
        std::vector<int> reduced = summation_module(net, xg, v, kp + ".G");

        // Module H: accumulate the selected multiplicand b_(m-k) * a_j.
        std::vector<int> y(std::size_t(m), 0);
        for (int j = 0; j < m; ++j)
            y[std::size_t(j)] = selection_gate(net, style, b[std::size_t(m - k)], a[std::size_t(j)], kp + ".sel", j);
        p = summation_module(net, reduced, y, kp + ".H");
    }

    std::vector<int> outs(std::size_t(m), 0);
    for (int j = 0; j < m; ++j)
        outs[std::size_t(j)] = net.add_gate(GateKind::Wire, {p[std::size_t(j)]}, "c" + std::to_string(j));
    net.set_outputs(outs);
    return net;
}

FieldElement eval_multiplier_netlist(const Netlist& net, const FieldContext& ctx, FieldElement a, FieldElement b,
                                     std::span<const Fault> faults) {
    (void)ctx.add(a, b);  // context check
    const int m = ctx.m();
    if (net.num_inputs() != 2 * m || int(net.outputs().size()) != m)
        throw WidthMismatch("netlist shape does not match a GF(2^" + std::to_string(m) + ") multiplier");
    BitVec in{std::size_t(2 * m)};
    for (int j = 0; j < m; ++j) {
        in.set(std::size_t(j), a.coords >> j & 1);
        in.set(std::size_t(m + j), b.coords >> j & 1);
    }
    BitVec out = net.evaluate(in, faults);
    std::uint32_t coords = 0;
    for (int j = 0; j < m; ++j) coords |= std::uint32_t(out.get(std::size_t(j))) << j;
    return ctx.element(coords);
}

}  // namespace ftgf
