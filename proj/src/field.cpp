#include "ftgf/field.hpp"

#include <atomic>

#include "ftgf/errors.hpp"
#include "ftgf/gfpoly.hpp"

namespace ftgf {

namespace {

std::atomic<std::uint64_t> g_next_ctx_id{1};

// Low-weight primitive polynomials, one per degree.
constexpr std::uint32_t kDefaultPoly[17] = {
    0,      0,      0x7,    0xB,    0x13,   0x25,   0x43,    0x89,  0x11D,
    0x211,  0x409,  0x805,  0x1053, 0x201B, 0x4143, 0x8003,  0x1100B,
};

}  // namespace

BinPoly FieldContext::default_poly(int m) {
    if (m < 2 || m > 16) throw ConfigInvalid("no default polynomial for m=" + std::to_string(m));
    return BinPoly::from_u64(kDefaultPoly[m]);
}

FieldContext::FieldContext(int m, BinPoly f) : m_(m), f_(std::move(f)) {
    if (m_ < 2 || m_ > 16) throw ConfigInvalid("extension degree m must be in [2, 16]");
    if (f_.degree() != m_)
        throw DegreeMismatch("field polynomial degree " + std::to_string(f_.degree()) +
                             " does not match m=" + std::to_string(m_));
    if (!f_.coeff(0)) throw ReduciblePolynomial("constant term of f is zero, so x divides f");
    if (!f_.is_irreducible()) throw ReduciblePolynomial("field polynomial factors over GF(2)");

    fbits_ = std::uint32_t(f_.to_u64());
    mask_ = (std::uint32_t(1) << m_) - 1;
    order_ = mask_;
    id_ = g_next_ctx_id.fetch_add(1);

    // Tables need a primitive element; fall back to a search when the order
    // of x is a proper divisor of 2^m - 1.
    x_primitive_ = order_of(2) == order_;
    gen_ = 2;
    if (!x_primitive_) {
        for (std::uint32_t cand = 3; cand <= mask_; ++cand) {
            if (order_of(cand) == order_) {
                gen_ = cand;
                break;
            }
        }
    }

    exp_.resize(order_);
    log_.assign(std::size_t(mask_) + 1, -1);
    std::uint32_t v = 1;
    for (std::uint32_t i = 0; i < order_; ++i) {
        exp_[i] = v;
        log_[v] = std::int32_t(i);
        v = mul_raw(v, gen_);
    }
    if (v != 1) throw Error("internal: generator does not have full order");
    for (std::uint32_t e = 1; e <= mask_; ++e)
        if (log_[e] < 0) throw Error("internal: exp table does not cover the field");
}

std::uint32_t FieldContext::order_of(std::uint32_t v) const {
    std::uint32_t y = v, s = 1;
    while (y != 1) {
        y = mul_raw(y, v);
        if (++s > order_) return 0;  // not invertible; cannot happen for irreducible f
    }
    return s;
}

std::uint32_t FieldContext::mul_raw(std::uint32_t a, std::uint32_t b) const {
    std::uint64_t acc = 0;
    for (int i = 0; i < m_; ++i)
        if (a >> i & 1) acc ^= std::uint64_t(b) << i;
    for (int bit = 2 * m_ - 2; bit >= m_; --bit)
        if (acc >> bit & 1) acc ^= std::uint64_t(fbits_) << (bit - m_);
    return std::uint32_t(acc);
}

std::uint32_t FieldContext::inv_raw(std::uint32_t a) const {
    if (a == 0) throw ZeroInverse("inverse of zero");
    return exp_[(order_ - std::uint32_t(log_[a])) % order_];
}

std::uint32_t FieldContext::exp_raw(std::int64_t i) const {
    std::int64_t r = i % std::int64_t(order_);
    if (r < 0) r += order_;
    return exp_[std::size_t(r)];
}

void FieldContext::check(FieldElement a) const {
    if (a.ctx != id_) throw ContextMismatch("field element belongs to a different context");
    if (a.coords > mask_) throw ContextMismatch("field element coordinates exceed field width");
}

FieldElement FieldContext::element(std::uint32_t coords) const {
    if (coords > mask_)
        throw ConfigInvalid("coordinates 0x" + std::to_string(coords) + " exceed " + std::to_string(m_) + " bits");
    return {coords, id_};
}

FieldElement FieldContext::alpha_pow(std::int64_t i) const { return {exp_raw(i), id_}; }

FieldElement FieldContext::add(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return {a.coords ^ b.coords, id_};
}

FieldElement FieldContext::mul(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    return {mul_raw(a.coords, b.coords), id_};
}

FieldElement FieldContext::mul_table(FieldElement a, FieldElement b) const {
    check(a);
    check(b);
    if (a.coords == 0 || b.coords == 0) return zero();
    return {exp_[(std::uint64_t(log_[a.coords]) + std::uint64_t(log_[b.coords])) % order_], id_};
}

FieldElement FieldContext::square(FieldElement a) const {
    check(a);
    return {mul_raw(a.coords, a.coords), id_};
}

FieldElement FieldContext::sqrt(FieldElement a) const {
    check(a);
    // Frobenius: squaring is a bijection, and a^(2^(m-1)) squares to a.
    FieldElement r = a;
    for (int i = 0; i < m_ - 1; ++i) r = square(r);
    return r;
}

FieldElement FieldContext::inv(FieldElement a) const {
    check(a);
    return {inv_raw(a.coords), id_};
}

FieldElement FieldContext::pow(FieldElement a, std::int64_t e) const {
    check(a);
    if (a.coords == 0) {
        if (e < 0) throw ZeroInverse("negative power of zero");
        return e == 0 ? one() : zero();
    }
    std::int64_t er = e % std::int64_t(order_);
    return {exp_raw(std::int64_t(log_[a.coords]) * er), id_};
}

int FieldContext::log_of(FieldElement a) const {
    check(a);
    if (a.coords == 0) throw ZeroInverse("log of zero");
    return int(log_[a.coords]);
}

FieldElement FieldContext::eval_poly(const BinPoly& p, FieldElement at) const {
    check(at);
    std::uint32_t acc = 0;
    for (int i = p.degree(); i >= 0; --i) acc = mul_raw(acc, at.coords) ^ (p.coeff(i) ? 1u : 0u);
    return {acc, id_};
}

std::vector<int> FieldContext::cyclotomic_coset(int i) const {
    if (i < 0 || std::uint32_t(i) >= order_) throw ConfigInvalid("coset representative out of range");
    std::vector<int> coset;
    int j = i;
    do {
        coset.push_back(j);
        j = int(std::uint64_t(j) * 2 % order_);
    } while (j != i);
    return coset;
}

BinPoly FieldContext::minimal_polynomial(int i) const {
    if (i < 0 || std::uint32_t(i) >= order_) throw ConfigInvalid("exponent out of range");
    GfPoly p = GfPoly::one(*this);
    for (int j : cyclotomic_coset(i)) p = p.times(GfPoly::from_coords(*this, {exp_[std::size_t(j)], 1}));
    std::uint64_t bits = 0;
    for (int k = 0; k <= p.degree(); ++k) {
        std::uint32_t c = p.coeff_raw(k);
        if (c > 1) throw Error("internal: minimal polynomial has a non-binary coefficient");
        bits |= std::uint64_t(c) << k;
    }
    return BinPoly::from_u64(bits);
}

FieldContext build_field(int m, const BinPoly& f) { return FieldContext(m, f); }

}  // namespace ftgf
