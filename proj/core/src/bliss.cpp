#include "sentinel/bliss.hpp"

#include <cmath>

#include "sentinel/error.hpp"
#include "sentinel/sha256.hpp"

namespace sentinel {

namespace {

void check_params(const SignParams& p) {
    if (p.n == 0 || p.m == 0 || p.two_p < 4 || p.two_p % 2 != 0 || p.sigma <= 0.0 ||
        p.repetition < 1.0 || p.retry_limit == 0)
        raise(Errc::invalid_config, "bad signature parameters");
    if (p.challenge_scalar_max == 0 || p.challenge_scalar_max > p.two_p - 1)
        raise(Errc::invalid_config, "challenge scalar range must fit [1, two_p - 1]");
}

int32_t mod_two_p(int64_t v, uint32_t two_p) {
    int64_t r = v % int64_t(two_p);
    if (r < 0) r += two_p;
    return int32_t(r);
}

// representative in (-p, p]
int32_t symmetric(int64_t v, uint32_t two_p) {
    int32_t r = mod_two_p(v, two_p);
    if (r > int32_t(two_p / 2)) r -= int32_t(two_p);
    return r;
}

std::vector<int32_t> mat_vec(const PublicKey& pub, const std::vector<int32_t>& x) {
    const SignParams& p = pub.params;
    std::vector<int32_t> out(p.n);
    for (size_t i = 0; i < p.n; ++i) {
        int64_t acc = 0;
        const int32_t* row = pub.g.data() + i * p.m;
        for (size_t j = 0; j < p.m; ++j) acc += int64_t(row[j]) * x[j];
        out[i] = mod_two_p(acc, p.two_p);
    }
    return out;
}

double log_cosh(double x) {
    double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

}  // namespace

KeyPair bliss_keygen(const SignParams& params, uint64_t seed) {
    check_params(params);
    Rng rng(seed);
    KeyPair kp;
    kp.pub.params = params;
    kp.pub.g.resize(params.n * params.m);
    for (auto& v : kp.pub.g) v = int32_t(rng.below(params.two_p));

    kp.priv.s.resize(params.m);
    bool nonzero = false;
    do {
        nonzero = false;
        for (auto& v : kp.priv.s) {
            v = int8_t(int64_t(rng.below(3)) - 1);
            nonzero |= v != 0;
        }
    } while (!nonzero);

    std::vector<int32_t> s32(kp.priv.s.begin(), kp.priv.s.end());
    kp.pub.t = mat_vec(kp.pub, s32);
    return kp;
}

int32_t sample_gaussian_int(Rng& rng, double sigma) {
    return int32_t(std::llround(rng.gaussian(0.0, sigma)));
}

Digest challenge_digest(const PublicKey& pub, const std::vector<int32_t>& u, const Bytes& msg) {
    Bytes buf;
    buf.reserve(4 * u.size() + msg.size());
    for (int32_t v : u) append_u32le(buf, uint32_t(v));
    append_bytes(buf, msg);
    return sha256(buf);
}

uint32_t challenge_scalar(const SignParams& params, const Digest& digest) {
    uint64_t x = read_u64le(digest.data());
    return 1 + uint32_t(x % params.challenge_scalar_max);
}

Signature bliss_sign(const KeyPair& kp, const Bytes& msg, uint64_t seed, SignStats* stats) {
    const SignParams& p = kp.pub.params;
    check_params(p);
    Rng rng(seed);
    double sig2 = p.sigma * p.sigma;

    for (uint32_t attempt = 0; attempt < p.retry_limit; ++attempt) {
        if (stats) ++stats->attempts;

        std::vector<int32_t> d(p.m);
        for (auto& v : d) v = sample_gaussian_int(rng, p.sigma);

        std::vector<int32_t> u = mat_vec(kp.pub, d);
        Digest F = challenge_digest(kp.pub, u, msg);
        uint32_t f = challenge_scalar(p, F);

        std::vector<int32_t> kc(p.m);
        for (size_t j = 0; j < p.m; ++j)
            kc[j] = symmetric(int64_t(f) * kp.priv.s[j], p.two_p);

        uint8_t re = uint8_t(rng.below(2));
        int sign = re == 0 ? 1 : -1;

        Signature sig;
        sig.re = re;
        sig.challenge = F;
        sig.s.resize(p.m);
        bool bounded = true;
        double norm2 = 0.0, dot = 0.0;
        for (size_t j = 0; j < p.m; ++j) {
            sig.s[j] = d[j] + sign * kc[j];
            bounded &= std::abs(sig.s[j]) <= int32_t(p.norm_bound);
            norm2 += double(kc[j]) * double(kc[j]);
            dot += double(sig.s[j]) * double(kc[j]);
        }
        if (!bounded) continue;

        // bimodal rejection step, evaluated in log space to dodge overflow
        double log_denom = std::log(p.repetition) - norm2 / (2.0 * sig2) + log_cosh(dot / sig2);
        double accept_p = log_denom <= 0.0 ? 1.0 : std::exp(-log_denom);
        if (!rng.chance(accept_p)) continue;

        if (stats) ++stats->accepts;
        return sig;
    }
    raise(Errc::signing_failed, "rejection sampling exhausted the retry limit");
}

bool bliss_verify(const PublicKey& pub, const Bytes& msg, const Signature& sig) {
    const SignParams& p = pub.params;
    if (sig.s.size() != p.m) return false;
    if (sig.re > 1) return false;
    for (int32_t v : sig.s)
        if (std::abs(v) > int32_t(p.norm_bound)) return false;

    uint32_t f = challenge_scalar(p, sig.challenge);
    int sign = sig.re == 0 ? 1 : -1;

    std::vector<int32_t> u(p.n);
    for (size_t i = 0; i < p.n; ++i) {
        int64_t acc = 0;
        const int32_t* row = pub.g.data() + i * p.m;
        for (size_t j = 0; j < p.m; ++j) acc += int64_t(row[j]) * sig.s[j];
        acc -= int64_t(sign) * int64_t(f) * pub.t[i];
        u[i] = mod_two_p(acc, p.two_p);
    }
    return challenge_digest(pub, u, msg) == sig.challenge;
}

Bytes signature_bytes(const Signature& sig) {
    Bytes out;
    out.reserve(1 + 32 + 4 + 4 * sig.s.size());
    out.push_back(sig.re);
    append_bytes(out, sig.challenge);
    append_u32le(out, uint32_t(sig.s.size()));
    for (int32_t v : sig.s) append_i32le(out, v);
    return out;
}

Signature parse_signature(const Bytes& wire, const SignParams& params) {
    if (wire.size() < 1 + 32 + 4) raise(Errc::bad_format, "signature too short");
    Signature sig;
    sig.re = wire[0];
    if (sig.re > 1) raise(Errc::bad_format, "sign bit must be 0 or 1");
    std::copy(wire.begin() + 1, wire.begin() + 33, sig.challenge.begin());
    uint32_t count = read_u32le(wire.data() + 33);
    if (count != params.m) raise(Errc::bad_format, "signature length mismatch");
    if (wire.size() != 37 + size_t(count) * 4)
        raise(Errc::bad_format, "signature has wrong byte count");
    sig.s.resize(count);
    for (size_t j = 0; j < count; ++j)
        sig.s[j] = int32_t(read_u32le(wire.data() + 37 + 4 * j));
    return sig;
}

}  // namespace sentinel
