#pragma once

#include <cstdint>
#include <vector>

#include "ftgf/binpoly.hpp"

namespace ftgf {

/// Element of a GF(2^m) context, represented by its coordinates over the
/// polynomial basis {1, x, ..., x^(m-1)}: bit j is the coefficient of x^j.
struct FieldElement {
    std::uint32_t coords = 0;
    std::uint64_t ctx = 0;

    friend bool operator==(const FieldElement&, const FieldElement&) = default;
};

/// A constructed GF(2^m): field polynomial, exp/log tables, and all element
/// arithmetic. Immutable after construction and safe to share across threads.
///
/// The exp/log tables are built over a primitive element. When x itself is
/// primitive (the usual case) that element is x; otherwise a primitive
/// element is found by search and alpha() differs from x_element().
class FieldContext {
public:
    FieldContext(int m, BinPoly f);

    /// Default primitive polynomial for each supported m (2..16).
    static BinPoly default_poly(int m);

    int m() const { return m_; }
    const BinPoly& f() const { return f_; }
    std::uint64_t id() const { return id_; }
    std::uint32_t order() const { return order_; }  // 2^m - 1
    bool x_is_primitive() const { return x_primitive_; }
    std::uint32_t generator() const { return gen_; }

    FieldElement element(std::uint32_t coords) const;
    FieldElement zero() const { return {0, id_}; }
    FieldElement one() const { return {1, id_}; }
    FieldElement x_element() const { return {2, id_}; }
    FieldElement alpha() const { return {exp_[1], id_}; }
    FieldElement alpha_pow(std::int64_t i) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    /// Carry-less product reduced mod f.
    FieldElement mul(FieldElement a, FieldElement b) const;
    /// Same product via the exp/log tables.
    FieldElement mul_table(FieldElement a, FieldElement b) const;
    FieldElement square(FieldElement a) const;
    FieldElement sqrt(FieldElement a) const;
    FieldElement inv(FieldElement a) const;
    FieldElement pow(FieldElement a, std::int64_t e) const;

    /// Discrete log base alpha; throws ZeroInverse for the zero element.
    int log_of(FieldElement a) const;

    /// Evaluates a GF(2)-coefficient polynomial at a field element.
    FieldElement eval_poly(const BinPoly& p, FieldElement at) const;

    std::vector<int> cyclotomic_coset(int i) const;
    /// Minimal polynomial of alpha^i over GF(2).
    BinPoly minimal_polynomial(int i) const;

    std::uint32_t mul_raw(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t inv_raw(std::uint32_t a) const;
    std::uint32_t exp_raw(std::int64_t i) const;

private:
    void check(FieldElement a) const;
    std::uint32_t order_of(std::uint32_t v) const;

    int m_ = 0;
    BinPoly f_;
    std::uint32_t fbits_ = 0;  // all coefficient bits of f, including x^m
    std::uint32_t mask_ = 0;
    std::uint32_t order_ = 0;
    bool x_primitive_ = false;
    std::uint32_t gen_ = 0;
    std::vector<std::uint32_t> exp_;
    std::vector<std::int32_t> log_;
    std::uint64_t id_ = 0;
};

/// Validates f (degree, irreducibility) and builds the context.
FieldContext build_field(int m, const BinPoly& f);

}  // namespace ftgf
