#pragma once

// Independent oracles used by the unit and acceptance suites. Everything here
// recomputes results from first principles and stays off the library's
// optimized code paths.

#include <cstdint>
#include <vector>

#include "ftgf/bch.hpp"
#include "ftgf/bitvec.hpp"
#include "ftgf/field.hpp"

namespace ftgf::testing {

/// Every syndrome index evaluated by plain Horner evaluation of the received
/// word, with alpha powers taken straight from repeated multiplication.
inline std::vector<std::uint32_t> syndromes_by_horner(const BchCode& code, const BitVec& received) {
    const FieldContext& fx = code.field();
    std::vector<std::uint32_t> out;
    for (int i = 1; i <= 2 * code.t(); ++i) {
        std::uint32_t alpha_i = fx.exp_raw(i);
        std::uint32_t acc = 0;
        for (std::size_t j = received.size(); j-- > 0;) acc = fx.mul_raw(acc, alpha_i) ^ (received.get(j) ? 1u : 0u);
        out.push_back(acc);
    }
    return out;
}

/// Root positions of a locator by brute-force evaluation at every nonzero
/// field element.
inline std::vector<int> roots_by_scan(const BchCode& code, const ErrorLocator& locator) {
    const FieldContext& fx = code.field();
    std::vector<int> positions;
    for (std::uint32_t e = 1; e <= fx.order(); ++e) {
        std::uint32_t acc = 0;
        for (int j = locator.sigma.degree(); j >= 0; --j) acc = fx.mul_raw(acc, e) ^ locator.sigma.coeff_raw(j);
        if (acc == 0) positions.push_back((code.n() - fx.log_of(fx.element(e))) % code.n());
    }
    std::sort(positions.begin(), positions.end());
    return positions;
}

/// All y with L(y) == beta by scanning the whole field; L is evaluated as an
/// explicit XOR of basis images selected by the coordinate bits.
inline std::vector<std::uint32_t> affine_solutions_by_scan(const FieldContext& fx,
                                                           const std::vector<std::uint32_t>& images,
                                                           std::uint32_t beta) {
    std::vector<std::uint32_t> sols;
    for (std::uint32_t y = 0; y <= fx.order(); ++y) {
        std::uint32_t acc = 0;
        for (int k = 0; k < fx.m(); ++k)
            if (y >> k & 1) acc ^= images[std::size_t(k)];
        if (acc == beta) sols.push_back(y);
    }
    return sols;
}

/// Product over GF(2^m) coefficients by plain convolution (locator oracle).
inline std::vector<std::uint32_t> poly_product(const FieldContext& fx, const std::vector<std::uint32_t>& a,
                                               const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] ^= fx.mul_raw(a[i], b[j]);
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    return r;
}

/// Enumerates all error patterns of exactly the given weight over len bits
/// and feeds them to fn as position vectors.
template <typename Fn>
void for_each_pattern(int len, int weight, Fn&& fn) {
    std::vector<int> idx(std::size_t(weight), 0);
    for (int i = 0; i < weight; ++i) idx[std::size_t(i)] = i;
    if (weight == 0) {
        fn(idx);
        return;
    }
    while (true) {
        fn(idx);
        int i = weight - 1;
        while (i >= 0 && idx[std::size_t(i)] == len - weight + i) --i;
        if (i < 0) break;
        ++idx[std::size_t(i)];
        for (int j = i + 1; j < weight; ++j) idx[std::size_t(j)] = idx[std::size_t(j - 1)] + 1;
    }
}

}  // namespace ftgf::testing
