#pragma once

#include <cstdint>
#include <vector>

#include "ftgf/field.hpp"

namespace ftgf {

/// Polynomial with GF(2^m) coefficients, ascending powers, trimmed so the
/// leading coefficient is nonzero. Holds a pointer to its field context;
/// the context must outlive the polynomial.
class GfPoly {
public:
    GfPoly() = default;

    static GfPoly zero(const FieldContext& ctx) { return GfPoly(&ctx, {}); }
    static GfPoly one(const FieldContext& ctx) { return GfPoly(&ctx, {1}); }
    static GfPoly from_coords(const FieldContext& ctx, std::vector<std::uint32_t> coeffs);

    const FieldContext& ctx() const;
    int degree() const { return int(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }

    std::uint32_t coeff_raw(int i) const;
    FieldElement coeff(int i) const;
    const std::vector<std::uint32_t>& coords() const { return c_; }

    GfPoly plus(const GfPoly& o) const;
    GfPoly times(const GfPoly& o) const;
    GfPoly times(FieldElement s) const;
    GfPoly shifted(int k) const;

    FieldElement eval(FieldElement at) const;

    friend bool operator==(const GfPoly& a, const GfPoly& b) { return a.c_ == b.c_; }

private:
    GfPoly(const FieldContext* ctx, std::vector<std::uint32_t> c) : ctx_(ctx), c_(std::move(c)) { trim(); }
    void trim();
    void check_same(const GfPoly& o) const;

    const FieldContext* ctx_ = nullptr;
    std::vector<std::uint32_t> c_;
};

}  // namespace ftgf
