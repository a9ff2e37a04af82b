#include "ftgf/gfpoly.hpp"

#include "ftgf/errors.hpp"

namespace ftgf {

const FieldContext& GfPoly::ctx() const {
    if (!ctx_) throw ConfigInvalid("polynomial has no field context");
    return *ctx_;
}

GfPoly GfPoly::from_coords(const FieldContext& ctx, std::vector<std::uint32_t> coeffs) {
    for (auto c : coeffs) (void)ctx.element(c);  // range validation
    return GfPoly(&ctx, std::move(coeffs));
}

void GfPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void GfPoly::check_same(const GfPoly& o) const {
    if (!ctx_ || !o.ctx_ || ctx_->id() != o.ctx_->id())
        throw ContextMismatch("polynomials belong to different field contexts");
}

std::uint32_t GfPoly::coeff_raw(int i) const {
    return (i < 0 || i >= int(c_.size())) ? 0 : c_[std::size_t(i)];
}

FieldElement GfPoly::coeff(int i) const { return ctx().element(coeff_raw(i)); }

GfPoly GfPoly::plus(const GfPoly& o) const {
    check_same(o);
    std::vector<std::uint32_t> r(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = coeff_raw(int(i)) ^ o.coeff_raw(int(i));
    return GfPoly(ctx_, std::move(r));
}

GfPoly GfPoly::times(const GfPoly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return GfPoly(ctx_, {});
    std::vector<std::uint32_t> r(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] ^= ctx_->mul_raw(c_[i], o.c_[j]);
    }
    return GfPoly(ctx_, std::move(r));
}

GfPoly GfPoly::times(FieldElement s) const {
    if (s.ctx != ctx().id()) throw ContextMismatch("scalar belongs to a different field context");
    std::vector<std::uint32_t> r(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = ctx().mul_raw(c_[i], s.coords);
    return GfPoly(ctx_, std::move(r));
}

GfPoly GfPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    std::vector<std::uint32_t> r(c_.size() + std::size_t(k), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + std::size_t(k)] = c_[i];
    return GfPoly(ctx_, std::move(r));
}

FieldElement GfPoly::eval(FieldElement at) const {
    std::uint32_t acc = 0;
    for (int i = degree(); i >= 0; --i) acc = ctx().mul_raw(acc, at.coords) ^ c_[std::size_t(i)];
    return ctx().element(acc);
}

}  // namespace ftgf
