#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ftgf/field.hpp"
#include "ftgf/netlist.hpp"

namespace ftgf {

/// Partial products of the interleaved multiplier, entries k = 0..m.
/// Entry 0 is zero and entry m is the product.
using MulTrace = std::vector<FieldElement>;

/// Schoolbook product followed by long-division reduction. This is the
/// golden oracle the other engines are checked against.
FieldElement mul_reference(const FieldContext& ctx, FieldElement a, FieldElement b);

/// MSB-first interleaved recurrence: starting from P = 0, each of the m
/// steps computes P <- (P*x mod f) + b_(m-k)*A. Returns the product and the
/// full trace of partial products.
std::pair<FieldElement, MulTrace> mul_interleaved(const FieldContext& ctx, FieldElement a, FieldElement b);

/// How the b_(m-k)*a_j / f-tap selection terms are realized.
enum class SelectionStyle {
    AndGates,   // one AND gate per term
    NandPairs,  // NAND followed by a one-input-style NAND inverter
};

/// Emits the unrolled combinational multiplier: m cascaded slices, each with
/// a reduction module G and an accumulation module H. All summation is done
/// with NAND gates only (no XOR gates anywhere); each module owns three
/// level arrays of exactly m NAND gates, fed by an m-NAND operand-coupling
/// array at the module boundary.
///
/// Inputs are a0..a(m-1) then b0..b(m-1); outputs are c0..c(m-1).
Netlist build_nand_multiplier_netlist(const FieldContext& ctx, SelectionStyle style = SelectionStyle::AndGates);

/// Packs (a, b) into netlist inputs, evaluates, and unpacks the product.
FieldElement eval_multiplier_netlist(const Netlist& net, const FieldContext& ctx, FieldElement a, FieldElement b,
                                     std::span<const Fault> faults = {});

/// Appends the 4-NAND XOR replacement subcircuit for (a XOR b):
/// n1 = a NAND b, then (a NAND n1) NAND (n1 NAND b). Returns the output id.
int append_xor_nand4(Netlist& net, int a, int b, const std::string& label_prefix);

}  // namespace ftgf
