#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ftgf {

/// Fixed-width bit vector. Bit 0 is the first (lowest) position; hex
/// serialization treats the vector as an integer with bit 0 as the LSB.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : w_((n + 63) / 64, 0), n_(n) {}

    /// Parses hex into a vector of exactly n bits. Throws ConfigInvalid on
    /// bad digits or when a set bit would fall outside the width.
    static BitVec from_hex(std::string_view hex, std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const;
    void set(std::size_t i, bool v);
    void flip(std::size_t i);
    std::size_t weight() const;
    bool any() const;
    BitVec& operator^=(const BitVec& o);

    /// Minimal uppercase hex ("0" for the zero vector).
    std::string to_hex() const;
    /// Hex padded to ceil(size/4) digits.
    std::string to_hex_padded() const;

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    void check_index(std::size_t i) const;

    std::vector<std::uint64_t> w_;
    std::size_t n_ = 0;
};

}  // namespace ftgf
