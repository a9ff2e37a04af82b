#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ftgf {

/// Polynomial over GF(2); coefficient bit j is the coefficient of x^j.
/// Addition is XOR. The zero polynomial has degree -1.
class BinPoly {
public:
    BinPoly() = default;

    static BinPoly zero() { return {}; }
    static BinPoly one() { return from_u64(1); }
    static BinPoly x() { return from_u64(2); }
    static BinPoly monomial(int degree);
    static BinPoly from_u64(std::uint64_t coeff_bits);
    static BinPoly from_hex(std::string_view hex);

    int degree() const { return deg_; }
    bool is_zero() const { return deg_ < 0; }
    bool coeff(int i) const;
    int weight() const;

    /// Coefficient bits as an integer; requires degree() < 64.
    std::uint64_t to_u64() const;
    std::string to_hex() const;

    BinPoly operator+(const BinPoly& o) const;
    BinPoly operator*(const BinPoly& o) const;
    BinPoly shifted(int k) const;  // multiply by x^k

    static void divmod(const BinPoly& num, const BinPoly& den, BinPoly& quot, BinPoly& rem);
    BinPoly mod(const BinPoly& den) const;
    bool divides(const BinPoly& num) const;

    /// Trial division by every polynomial of degree 1..degree()/2.
    bool is_irreducible() const;

    friend bool operator==(const BinPoly&, const BinPoly&) = default;

private:
    void set_bit(int i);
    void recompute_degree();

    std::vector<std::uint64_t> w_;
    int deg_ = -1;
};

}  // namespace ftgf
