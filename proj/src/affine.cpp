#include "ftgf/affine.hpp"

#include <algorithm>

#include "ftgf/errors.hpp"

namespace ftgf {

FieldElement linearized_eval(const FieldContext& ctx, std::span<const FieldElement> images, FieldElement y) {
    if (images.size() != std::size_t(ctx.m()))
        throw ConfigInvalid("expected one basis image per coordinate, got " + std::to_string(images.size()));
    (void)ctx.add(y, ctx.zero());
    std::uint32_t acc = 0;
    for (int k = 0; k < ctx.m(); ++k) {
        (void)ctx.add(images[std::size_t(k)], ctx.zero());
        if (y.coords >> k & 1) acc ^= images[std::size_t(k)].coords;
    }
    return ctx.element(acc);
}

std::vector<FieldElement> affine_solve(const FieldContext& ctx, std::span<const FieldElement> images,
                                       FieldElement beta) {
    const int m = ctx.m();
    if (images.size() != std::size_t(m)) throw ConfigInvalid("expected one basis image per coordinate");
    (void)ctx.add(beta, ctx.zero());

    // Row r is the equation over unknowns y_0..y_(m-1) coming from output
    // coordinate r; column k is bit r of images[k].
    std::vector<std::uint32_t> row(std::size_t(m), 0);
    std::vector<std::uint8_t> rhs(std::size_t(m), 0);
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k < m; ++k) row[std::size_t(r)] |= (images[std::size_t(k)].coords >> r & 1u) << k;
        rhs[std::size_t(r)] = beta.coords >> r & 1;
    }

    // Gauss-Jordan over GF(2).
    std::vector<int> pivot_row_of_col(std::size_t(m), -1);
    int rank = 0;
    for (int col = 0; col < m && rank < m; ++col) {
        int pr = -1;
        for (int r = rank; r < m; ++r)
            if (row[std::size_t(r)] >> col & 1) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(row[std::size_t(pr)], row[std::size_t(rank)]);
        std::swap(rhs[std::size_t(pr)], rhs[std::size_t(rank)]);
        for (int r = 0; r < m; ++r) {
            if (r != rank && (row[std::size_t(r)] >> col & 1)) {
                row[std::size_t(r)] ^= row[std::size_t(rank)];
                rhs[std::size_t(r)] ^= rhs[std::size_t(rank)];
            }
        }
        pivot_row_of_col[std::size_t(col)] = rank;
        ++rank;
    }
    for (int r = rank; r < m; ++r)
        if (rhs[std::size_t(r)]) return {};  // inconsistent

    std::uint32_t particular = 0;
    for (int col = 0; col < m; ++col)
        if (pivot_row_of_col[std::size_t(col)] >= 0 && rhs[std::size_t(pivot_row_of_col[std::size_t(col)])])
            particular |= 1u << col;

    std::vector<std::uint32_t> kernel;
    for (int fc = 0; fc < m; ++fc) {
        if (pivot_row_of_col[std::size_t(fc)] >= 0) continue;
        std::uint32_t v = 1u << fc;
        for (int pc = 0; pc < m; ++pc) {
            int pr = pivot_row_of_col[std::size_t(pc)];
            if (pr >= 0 && (row[std::size_t(pr)] >> fc & 1)) v |= 1u << pc;
        }
        kernel.push_back(v);
    }

    std::vector<FieldElement> sols;
    sols.reserve(std::size_t(1) << kernel.size());
    for (std::uint32_t sel = 0; sel < (std::uint32_t(1) << kernel.size()); ++sel) {
        std::uint32_t y = particular;
        for (std::size_t kidx = 0; kidx < kernel.size(); ++kidx)
            if (sel >> kidx & 1) y ^= kernel[kidx];
        FieldElement ye = ctx.element(y);
        if (!(linearized_eval(ctx, images, ye) == beta))
            throw Error("internal: affine solution failed substitution check");
        sols.push_back(ye);
    }
    std::sort(sols.begin(), sols.end(), [](FieldElement a, FieldElement b) { return a.coords < b.coords; });
    return sols;
}

std::vector<FieldElement> square_plus_identity_images(const FieldContext& ctx) {
    std::vector<FieldElement> images;
    images.reserve(std::size_t(ctx.m()));
    for (int k = 0; k < ctx.m(); ++k) {
        FieldElement e = ctx.element(1u << k);
        images.push_back(ctx.add(ctx.square(e), e));
    }
    return images;
}

}  // namespace ftgf
