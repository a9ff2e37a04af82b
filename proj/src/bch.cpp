#include "ftgf/bch.hpp"

#include <algorithm>
#include <set>

#include "ftgf/affine.hpp"
#include "ftgf/errors.hpp"

namespace ftgf {

std::string to_string(DecodeStatus s) {
    switch (s) {
        case DecodeStatus::NoError: return "no_error";
        case DecodeStatus::Corrected: return "corrected";
        case DecodeStatus::Uncorrectable: return "uncorrectable";
    }
    return "?";
}

nlohmann::json outcome_to_json(const DecodeOutcome& o) {
    return {{"status", to_string(o.status)},
            {"positions", o.positions},
            {"syndrome_nonzero", o.syndrome_nonzero},
            {"corrected_hex", o.corrected.to_hex_padded()},
            {"error_hex", o.error.to_hex_padded()}};
}

namespace {

// Largest t such that alpha^1..alpha^2t are all roots of the generator,
// given the set of exponents covered by the chosen cosets.
int capability_from_roots(const std::set<int>& roots) {
    int run = 0;
    while (roots.count(run + 1)) ++run;
    return run / 2;
}

struct GeneratorInfo {
    BinPoly g;
    std::vector<std::vector<int>> cosets;
    int t_actual = 0;
};

GeneratorInfo make_generator(const FieldContext& fx, int t) {
    GeneratorInfo info;
    info.g = BinPoly::one();
    std::set<int> reps;
    std::set<int> roots;
    for (int i = 1; i <= 2 * t; ++i) {
        auto coset = fx.cyclotomic_coset(i);
        int rep = *std::min_element(coset.begin(), coset.end());
        if (!reps.insert(rep).second) continue;
        info.cosets.push_back(coset);
        info.g = info.g * fx.minimal_polynomial(i);
        roots.insert(coset.begin(), coset.end());
    }
    info.t_actual = capability_from_roots(roots);
    return info;
}

}  // namespace

BchCode::BchCode(FieldContext field, int t_designed, int shortened)
    : field_(std::move(field)), t_designed_(t_designed), shortened_(shortened) {
    n_ = int(field_.order());
    GeneratorInfo info = make_generator(field_, t_designed);
    g_ = info.g;
    cosets_ = std::move(info.cosets);
    t_ = info.t_actual;
    k_ = n_ - g_.degree();
    if (k_ - shortened_ <= 0) throw UnsatisfiableParams("no information bits left");
    if (!g_.divides(BinPoly::monomial(n_) + BinPoly::one()))
        throw Error("internal: generator does not divide x^n + 1");
}

BchCode build_code(int m, int t, std::optional<int> message_len, std::optional<BinPoly> f) {
    if (m < 3) throw UnsatisfiableParams("BCH construction needs m >= 3");
    if (t < 1) throw UnsatisfiableParams("t must be >= 1");
    if (t >= (1 << (m - 1))) throw UnsatisfiableParams("t must be < 2^(m-1)");

    for (int mm = m; mm <= 16; ++mm) {
        BinPoly poly = (mm == m && f) ? *f : FieldContext::default_poly(mm);
        FieldContext fx(mm, poly);
        GeneratorInfo info = make_generator(fx, t);
        int n = int(fx.order());
        int k = n - info.g.degree();
        if (k <= 0) {
            if (!message_len) throw UnsatisfiableParams("generator consumes the whole block");
            continue;
        }
        if (message_len) {
            if (*message_len < 1) throw UnsatisfiableParams("message length must be >= 1");
            if (k < *message_len) continue;  // escalate m
            return BchCode(std::move(fx), t, k - *message_len);
        }
        return BchCode(std::move(fx), t, 0);
    }
    throw UnsatisfiableParams("no field with m <= 16 fits the requested parameters");
}

nlohmann::json BchCode::descriptor() const {
    return {{"m", m()},          {"n", n_},
            {"k", k_},           {"t", t_},
            {"t_designed", t_designed_}, {"g_hex", g_.to_hex()},
            {"shortened_by", shortened_}, {"f_hex", field_.f().to_hex()},
            {"n_eff", n_eff()},  {"k_eff", k_eff()}};
}

BchCode BchCode::from_descriptor(const nlohmann::json& j) {
    for (const char* key : {"m", "t_designed", "g_hex", "shortened_by", "f_hex"})
        if (!j.contains(key)) throw ConfigInvalid(std::string("code descriptor missing '") + key + "'");
    int m = j["m"].get<int>();
    FieldContext fx(m, BinPoly::from_hex(j["f_hex"].get<std::string>()));
    BchCode code(std::move(fx), j["t_designed"].get<int>(), j["shortened_by"].get<int>());
    if (code.g_ != BinPoly::from_hex(j["g_hex"].get<std::string>()))
        throw ConfigInvalid("descriptor generator does not match the reconstructed code");
    if (j.contains("n") && j["n"].get<int>() != code.n_) throw ConfigInvalid("descriptor n mismatch");
    if (j.contains("k") && j["k"].get<int>() != code.k_) throw ConfigInvalid("descriptor k mismatch");
    if (j.contains("t") && j["t"].get<int>() != code.t_) throw ConfigInvalid("descriptor t mismatch");
    return code;
}

BitVec encode(const BchCode& code, const BitVec& message) {
    if (message.size() != std::size_t(code.k_eff()))
        throw LengthMismatch("expected " + std::to_string(code.k_eff()) + " message bits, got " +
                             std::to_string(message.size()));
    const int parity_len = code.n() - code.k();
    BinPoly msg = BinPoly::zero();
    for (std::size_t i = 0; i < message.size(); ++i)
        if (message.get(i)) msg = msg + BinPoly::monomial(int(i));
    BinPoly parity = msg.shifted(parity_len).mod(code.generator());

    BitVec cw(std::size_t(code.n_eff()));
    for (int i = 0; i < parity_len; ++i)
        if (parity.coeff(i)) cw.set(std::size_t(i), true);
    for (std::size_t i = 0; i < message.size(); ++i)
        if (message.get(i)) cw.set(std::size_t(parity_len) + i, true);
    return cw;
}

namespace {

void check_received(const BchCode& code, const BitVec& r) {
    if (r.size() != std::size_t(code.n_eff()))
        throw LengthMismatch("expected " + std::to_string(code.n_eff()) + " received bits, got " +
                             std::to_string(r.size()));
}

// S_1..S_2t over an arbitrary support: odd indices by Horner, even by
// squaring the half-index syndrome.
SyndromeSet syndromes_of(const BchCode& code, const BitVec& word) {
    const FieldContext& fx = code.field();
    const int two_t = 2 * code.t();
    SyndromeSet out;
    out.s.assign(std::size_t(two_t), 0);
    for (int i = 1; i <= two_t; i += 2) {
        std::uint32_t alpha_i = fx.exp_raw(i);
        std::uint32_t acc = 0;
        for (std::size_t j = word.size(); j-- > 0;) acc = fx.mul_raw(acc, alpha_i) ^ (word.get(j) ? 1u : 0u);
        out.s[std::size_t(i - 1)] = acc;
    }
    for (int i = 2; i <= two_t; i += 2)
        out.s[std::size_t(i - 1)] = fx.mul_raw(out.s[std::size_t(i / 2 - 1)], out.s[std::size_t(i / 2 - 1)]);
    return out;
}

}  // namespace

SyndromeSet syndromes_direct(const BchCode& code, const BitVec& received) {
    check_received(code, received);
    return syndromes_of(code, received);
}

SyndromeSet syndromes_reencode(const BchCode& code, const BitVec& received) {
    check_received(code, received);
    const int parity_len = code.n() - code.k();
    BitVec msg(std::size_t(code.k_eff()));
    for (std::size_t i = 0; i < msg.size(); ++i) msg.set(i, received.get(std::size_t(parity_len) + i));
    BitVec reencoded = encode(code, msg);
    // The difference is confined to the parity positions, so the syndrome
    // evaluation only has to scan those.
    BitVec diff{std::size_t(parity_len)};
    for (int i = 0; i < parity_len; ++i)
        diff.set(std::size_t(i), received.get(std::size_t(i)) != reencoded.get(std::size_t(i)));
    return syndromes_of(code, diff);
}

ErrorLocator berlekamp_massey(const BchCode& code, const SyndromeSet& synd) {
    const FieldContext& fx = code.field();
    const int two_t = 2 * code.t();
    if (int(synd.s.size()) != two_t)
        throw LengthMismatch("expected " + std::to_string(two_t) + " syndromes, got " +
                             std::to_string(synd.s.size()));

    // Inversionless variant: sigma <- gamma*sigma + delta*x*prev, deferring
    // all division to a single final normalization.
    std::vector<std::uint32_t> sigma{1}, prev{1};
    std::uint32_t gamma = 1;
    int len = 0;
    for (int r = 0; r < two_t; ++r) {
        std::uint32_t delta = 0;
        for (int i = 0; i < int(sigma.size()) && i <= r; ++i)
            delta ^= fx.mul_raw(sigma[std::size_t(i)], synd.s[std::size_t(r - i)]);

        std::vector<std::uint32_t> next(std::max(sigma.size(), prev.size() + 1), 0);
        for (std::size_t i = 0; i < sigma.size(); ++i) next[i] ^= fx.mul_raw(gamma, sigma[i]);
        if (delta)
            for (std::size_t i = 0; i < prev.size(); ++i) next[i + 1] ^= fx.mul_raw(delta, prev[i]);

        if (delta != 0 && 2 * len <= r) {
            prev = sigma;
            len = r + 1 - len;
            gamma = delta;
        } else {
            prev.insert(prev.begin(), 0);
        }
        while (next.size() > 1 && next.back() == 0) next.pop_back();
        sigma = std::move(next);
    }

    std::uint32_t scale = fx.inv_raw(sigma[0]);
    for (auto& c : sigma) c = fx.mul_raw(c, scale);
    return {GfPoly::from_coords(fx, std::move(sigma))};
}

namespace {

void check_locator(const BchCode& code, const ErrorLocator& locator) {
    if (locator.sigma.is_zero() || locator.sigma.coeff_raw(0) != 1)
        throw ConfigInvalid("error locator must satisfy sigma(0) = 1");
    if (locator.sigma.ctx().id() != code.field().id())
        throw ContextMismatch("locator belongs to a different field context");
}

int position_of_root(const BchCode& code, std::uint32_t root) {
    int i = code.field().log_of(code.field().element(root));
    return (code.n() - i) % code.n();
}

}  // namespace

std::vector<int> chien_search(const BchCode& code, const ErrorLocator& locator) {
    check_locator(code, locator);
    const FieldContext& fx = code.field();
    const int nu = locator.nu();
    if (nu == 0) return {};

    std::vector<std::uint32_t> q(std::size_t(nu) + 1), step(std::size_t(nu) + 1);
    for (int j = 0; j <= nu; ++j) {
        q[std::size_t(j)] = locator.sigma.coeff_raw(j);
        step[std::size_t(j)] = fx.exp_raw(j);
    }
    std::vector<int> positions;
    for (int i = 0; i < code.n(); ++i) {
        std::uint32_t v = 0;
        for (int j = 0; j <= nu; ++j) v ^= q[std::size_t(j)];
        if (v == 0) positions.push_back((code.n() - i) % code.n());
        for (int j = 1; j <= nu; ++j) q[std::size_t(j)] = fx.mul_raw(q[std::size_t(j)], step[std::size_t(j)]);
    }
    std::sort(positions.begin(), positions.end());
    return positions;
}

std::vector<int> brs_find_roots(const BchCode& code, const ErrorLocator& locator) {
    check_locator(code, locator);
    const FieldContext& fx = code.field();
    const int nu = locator.nu();
    if (nu == 0) return {};

    if (nu == 1) return {position_of_root(code, fx.inv_raw(locator.sigma.coeff_raw(1)))};

    if (nu == 2) {
        // Normalize sigma_2 x^2 + sigma_1 x + 1 to y^2 + b y + c.
        std::uint32_t s1 = locator.sigma.coeff_raw(1);
        std::uint32_t s2inv = fx.inv_raw(locator.sigma.coeff_raw(2));
        std::uint32_t b = fx.mul_raw(s1, s2inv);
        std::uint32_t c = s2inv;
        if (b == 0) {
            // Double root sqrt(c), reported once; the caller sees a root
            // count below the degree and flags the word uncorrectable.
            return {position_of_root(code, fx.sqrt(fx.element(c)).coords)};
        }
        // y = b*z turns the quadratic into z^2 + z = c / b^2.
        std::uint32_t beta = fx.mul_raw(c, fx.inv_raw(fx.mul_raw(b, b)));
        std::vector<FieldElement> images = square_plus_identity_images(fx);
        std::vector<int> positions;
        for (FieldElement z : affine_solve(fx, images, fx.element(beta)))
            positions.push_back(position_of_root(code, fx.mul_raw(b, z.coords)));
        std::sort(positions.begin(), positions.end());
        return positions;
    }

    return chien_search(code, locator);
}

DecodeOutcome decode(const BchCode& code, const BitVec& received, RootMethod method) {
    check_received(code, received);
    DecodeOutcome out;
    out.corrected = received;
    out.error = BitVec(received.size());

    SyndromeSet synd = syndromes_reencode(code, received);
    if (synd.all_zero()) {
        out.status = DecodeStatus::NoError;
        return out;
    }
    out.syndrome_nonzero = true;
    out.status = DecodeStatus::Uncorrectable;

    ErrorLocator locator = berlekamp_massey(code, synd);
    const int nu = locator.nu();
    if (nu == 0 || nu > code.t()) return out;  // bounded-distance decoding

    std::vector<int> positions =
        method == RootMethod::Brs ? brs_find_roots(code, locator) : chien_search(code, locator);
    if (int(positions.size()) != nu) return out;
    for (int p : positions)
        if (p >= code.n_eff()) return out;  // root in the shortened region

    BitVec candidate = received;
    for (int p : positions) candidate.flip(std::size_t(p));
    if (!syndromes_direct(code, candidate).all_zero()) return out;

    out.status = DecodeStatus::Corrected;
    out.corrected = std::move(candidate);
    for (int p : positions) out.error.set(std::size_t(p), true);
    out.positions = std::move(positions);
    return out;
}

}  // namespace ftgf
