#pragma once

#include <optional>
#include <vector>

#include "json.hpp"

#include "ftgf/bitvec.hpp"
#include "ftgf/field.hpp"
#include "ftgf/gfpoly.hpp"

namespace ftgf {

/// Syndromes S_1..S_2t of a received word, stored 0-based (s[i] = S_(i+1)).
struct SyndromeSet {
    std::vector<std::uint32_t> s;

    bool all_zero() const {
        for (auto v : s)
            if (v) return false;
        return true;
    }
};

/// Error locator sigma(x) with sigma(0) = 1; its degree is the number of
/// located errors. Valid while the code it came from is alive.
struct ErrorLocator {
    GfPoly sigma;

    int nu() const { return sigma.degree() < 0 ? 0 : sigma.degree(); }
};

enum class DecodeStatus { NoError, Corrected, Uncorrectable };

std::string to_string(DecodeStatus s);

struct DecodeOutcome {
    DecodeStatus status = DecodeStatus::NoError;
    BitVec corrected;            // received word when uncorrectable
    BitVec error;                // corrected XOR received
    std::vector<int> positions;  // flipped positions, sorted
    bool syndrome_nonzero = false;
};

nlohmann::json outcome_to_json(const DecodeOutcome& o);

enum class RootMethod { Brs, Chien };

/// Binary BCH code over GF(2^m), parent length n = 2^m - 1, optionally
/// shortened by s positions to an (n - s, k - s) code. Codeword bit j is the
/// coefficient of x^j; the message sits in the high positions and the
/// n - k parity bits in the low positions.
class BchCode {
public:
    const FieldContext& field() const { return field_; }
    int m() const { return field_.m(); }
    int n() const { return n_; }
    int k() const { return k_; }
    /// Correction capability exposed by the constructed generator (largest t
    /// with alpha^1..alpha^2t all roots of g).
    int t() const { return t_; }
    int t_designed() const { return t_designed_; }
    int shortened_by() const { return shortened_; }
    int n_eff() const { return n_ - shortened_; }
    int k_eff() const { return k_ - shortened_; }
    const BinPoly& generator() const { return g_; }
    const std::vector<std::vector<int>>& cosets() const { return cosets_; }

    nlohmann::json descriptor() const;
    static BchCode from_descriptor(const nlohmann::json& j);

    friend BchCode build_code(int m, int t, std::optional<int> message_len, std::optional<BinPoly> f);

private:
    BchCode(FieldContext field, int t_designed, int shortened);

    FieldContext field_;
    int n_ = 0;
    int k_ = 0;
    int t_designed_ = 0;
    int t_ = 0;
    int shortened_ = 0;
    BinPoly g_;
    std::vector<std::vector<int>> cosets_;
};

/// Builds the (2^m - 1, k) code with generator lcm of the minimal
/// polynomials of alpha^1..alpha^2t. When message_len is given, m escalates
/// until k >= message_len and the code is shortened so k_eff == message_len.
BchCode build_code(int m, int t, std::optional<int> message_len = std::nullopt,
                   std::optional<BinPoly> f = std::nullopt);

/// Systematic encoding: parity = (x^(n-k) * msg(x)) mod g in the low
/// positions, message in the high positions.
BitVec encode(const BchCode& code, const BitVec& message);

/// S_i = r(alpha^i): odd indices by Horner evaluation, even indices by
/// squaring (S_2j = S_j^2 for binary codes).
SyndromeSet syndromes_direct(const BchCode& code, const BitVec& received);

/// Re-encodes the message portion and evaluates the syndromes on the
/// difference, which is supported only on the parity positions. Equals
/// syndromes_direct on every input.
SyndromeSet syndromes_reencode(const BchCode& code, const BitVec& received);

/// Inversionless discrepancy iteration; returns the minimal-degree locator
/// normalized to sigma(0) = 1 (sigma = 1 when all syndromes are zero).
ErrorLocator berlekamp_massey(const BchCode& code, const SyndromeSet& synd);

/// Evaluates sigma at every alpha^i; a root alpha^i marks position
/// (n - i) mod n. Returns sorted parent-code positions; the caller treats
/// positions >= n_eff() as uncorrectable.
std::vector<int> chien_search(const BchCode& code, const ErrorLocator& locator);

/// Root finding dispatched by locator degree: direct division for one error,
/// an affine-polynomial solve for two (substituting y = b*z turns the monic
/// quadratic into z^2 + z = c/b^2), Chien search for three or more. Always
/// agrees with chien_search.
std::vector<int> brs_find_roots(const BchCode& code, const ErrorLocator& locator);

/// Full pipeline: re-encoded syndromes, locator, root finding, correction,
/// and a syndrome re-check of the corrected word.
DecodeOutcome decode(const BchCode& code, const BitVec& received, RootMethod method = RootMethod::Brs);

}  // namespace ftgf
