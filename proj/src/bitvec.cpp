#include "ftgf/bitvec.hpp"

#include <bit>

#include "ftgf/errors.hpp"

namespace ftgf {

namespace {

int hex_digit(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

constexpr char kHexDigits[] = "0123456789ABCDEF";

}  // namespace

BitVec BitVec::from_hex(std::string_view hex, std::size_t n) {
    if (hex.empty()) throw ConfigInvalid("empty hex string");
    BitVec out(n);
    std::size_t bit = 0;
    for (auto it = hex.rbegin(); it != hex.rend(); ++it) {
        int d = hex_digit(*it);
        if (d < 0) throw ConfigInvalid(std::string("invalid hex digit '") + *it + "'");
        for (int j = 0; j < 4; ++j, ++bit) {
            if (!(d >> j & 1)) continue;
            if (bit >= n) throw ConfigInvalid("hex value does not fit in " + std::to_string(n) + " bits");
            out.set(bit, true);
        }
    }
    return out;
}

void BitVec::check_index(std::size_t i) const {
    if (i >= n_) throw LengthMismatch("bit index " + std::to_string(i) + " out of range");
}

bool BitVec::get(std::size_t i) const {
    check_index(i);
    return w_[i / 64] >> (i % 64) & 1;
}

void BitVec::set(std::size_t i, bool v) {
    check_index(i);
    if (v)
        w_[i / 64] |= std::uint64_t(1) << (i % 64);
    else
        w_[i / 64] &= ~(std::uint64_t(1) << (i % 64));
}

void BitVec::flip(std::size_t i) {
    check_index(i);
    w_[i / 64] ^= std::uint64_t(1) << (i % 64);
}

std::size_t BitVec::weight() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

bool BitVec::any() const {
    for (auto w : w_)
        if (w) return true;
    return false;
}

BitVec& BitVec::operator^=(const BitVec& o) {
    if (n_ != o.n_) throw LengthMismatch("bit vector sizes differ");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    return *this;
}

std::string BitVec::to_hex() const {
    std::string s;
    bool leading = true;
    for (std::size_t nib = (n_ + 3) / 4; nib-- > 0;) {
        int d = 0;
        for (int j = 0; j < 4; ++j) {
            std::size_t bit = nib * 4 + j;
            if (bit < n_ && (w_[bit / 64] >> (bit % 64) & 1)) d |= 1 << j;
        }
        if (d == 0 && leading) continue;
        leading = false;
        s += kHexDigits[d];
    }
    return s.empty() ? "0" : s;
}

std::string BitVec::to_hex_padded() const {
    std::string s = to_hex();
    std::size_t want = (n_ + 3) / 4;
    if (want == 0) want = 1;
    while (s.size() < want) s.insert(s.begin(), '0');
    return s;
}

}  // namespace ftgf
