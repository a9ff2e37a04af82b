#include "ftgf/binpoly.hpp"

#include <bit>

#include "ftgf/bitvec.hpp"
#include "ftgf/errors.hpp"

namespace ftgf {

void BinPoly::set_bit(int i) {
    std::size_t word = std::size_t(i) / 64;
    if (word >= w_.size()) w_.resize(word + 1, 0);
    w_[word] |= std::uint64_t(1) << (i % 64);
    if (i > deg_) deg_ = i;
}

void BinPoly::recompute_degree() {
    while (!w_.empty() && w_.back() == 0) w_.pop_back();
    deg_ = w_.empty() ? -1 : int(w_.size()) * 64 - 1 - std::countl_zero(w_.back());
}

BinPoly BinPoly::monomial(int degree) {
    if (degree < 0) throw DegreeMismatch("monomial degree must be >= 0");
    BinPoly p;
    p.set_bit(degree);
    return p;
}

BinPoly BinPoly::from_u64(std::uint64_t coeff_bits) {
    BinPoly p;
    if (coeff_bits) {
        p.w_.push_back(coeff_bits);
        p.recompute_degree();
    }
    return p;
}

BinPoly BinPoly::from_hex(std::string_view hex) {
    // Width large enough for every digit; trimmed to the true degree after.
    BitVec bits = BitVec::from_hex(hex, hex.size() * 4);
    BinPoly p;
    for (std::size_t i = 0; i < bits.size(); ++i)
        if (bits.get(i)) p.set_bit(int(i));
    return p;
}

bool BinPoly::coeff(int i) const {
    if (i < 0 || i > deg_) return false;
    return w_[std::size_t(i) / 64] >> (i % 64) & 1;
}

int BinPoly::weight() const {
    int c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::uint64_t BinPoly::to_u64() const {
    if (deg_ >= 64) throw DegreeMismatch("polynomial does not fit in 64 bits");
    return w_.empty() ? 0 : w_[0];
}

std::string BinPoly::to_hex() const {
    BitVec bits(std::size_t(deg_ + 1));
    for (int i = 0; i <= deg_; ++i)
        if (coeff(i)) bits.set(std::size_t(i), true);
    return bits.to_hex();
}

BinPoly BinPoly::operator+(const BinPoly& o) const {
    BinPoly r = *this;
    if (o.w_.size() > r.w_.size()) r.w_.resize(o.w_.size(), 0);
    for (std::size_t i = 0; i < o.w_.size(); ++i) r.w_[i] ^= o.w_[i];
    r.recompute_degree();
    return r;
}

BinPoly BinPoly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    if (k < 0) throw DegreeMismatch("negative shift");
    BinPoly r;
    r.w_.assign(std::size_t(deg_ + k) / 64 + 1, 0);
    int wordshift = k / 64, bitshift = k % 64;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        r.w_[i + wordshift] |= w_[i] << bitshift;
        if (bitshift && i + wordshift + 1 < r.w_.size()) r.w_[i + wordshift + 1] |= w_[i] >> (64 - bitshift);
    }
    r.recompute_degree();
    return r;
}

BinPoly BinPoly::operator*(const BinPoly& o) const {
    if (is_zero() || o.is_zero()) return {};
    BinPoly acc;
    acc.w_.assign(std::size_t(deg_ + o.deg_) / 64 + 1, 0);
    for (int i = 0; i <= deg_; ++i) {
        if (!coeff(i)) continue;
        BinPoly term = o.shifted(i);
        if (term.w_.size() > acc.w_.size()) acc.w_.resize(term.w_.size(), 0);
        for (std::size_t j = 0; j < term.w_.size(); ++j) acc.w_[j] ^= term.w_[j];
    }
    acc.recompute_degree();
    return acc;
}

void BinPoly::divmod(const BinPoly& num, const BinPoly& den, BinPoly& quot, BinPoly& rem) {
    if (den.is_zero()) throw DegreeMismatch("division by the zero polynomial");
    quot = BinPoly{};
    rem = num;
    while (rem.deg_ >= den.deg_) {
        int shift = rem.deg_ - den.deg_;
        quot.set_bit(shift);
        BinPoly t = den.shifted(shift);
        for (std::size_t i = 0; i < t.w_.size(); ++i) rem.w_[i] ^= t.w_[i];
        rem.recompute_degree();
    }
}

BinPoly BinPoly::mod(const BinPoly& den) const {
    BinPoly q, r;
    divmod(*this, den, q, r);
    return r;
}

bool BinPoly::divides(const BinPoly& num) const {
    return num.mod(*this).is_zero();
}

bool BinPoly::is_irreducible() const {
    if (deg_ < 1) return false;
    if (deg_ == 1) return true;
    if (!coeff(0)) return false;  // x divides
    for (int d = 1; d <= deg_ / 2; ++d) {
        for (std::uint64_t bits = std::uint64_t(1) << d; bits < std::uint64_t(1) << (d + 1); ++bits) {
            if (from_u64(bits).divides(*this)) return false;
        }
    }
    return true;
}

}  // namespace ftgf
