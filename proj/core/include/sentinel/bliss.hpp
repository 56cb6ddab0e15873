#pragma once

#include <cstdint>
#include <vector>

#include "sentinel/bytes.hpp"
#include "sentinel/rng.hpp"

namespace sentinel {

// simulation-grade bimodal lattice signature; parameters are desk scale and
// carry no security margin
struct SignParams {
    size_t n = 64;                     // rows of the public matrix
    size_t m = 64;                     // columns, signature length
    uint32_t two_p = 2048;             // ring modulus, even
    double sigma = 64.0;               // gaussian width
    double repetition = 3.0;           // M in the rejection step
    uint32_t challenge_scalar_max = 16;  // keeps the rejection rate workable
    uint32_t norm_bound = 512;         // 8 sigma
    uint32_t retry_limit = 64;
};

struct PublicKey {
    SignParams params;
    std::vector<int32_t> g;  // n x m row-major, entries in [0, two_p)
    std::vector<int32_t> t;  // g * s mod two_p
};

struct PrivateKey {
    std::vector<int8_t> s;  // ternary, not all zero
};

struct KeyPair {
    PublicKey pub;
    PrivateKey priv;
};

struct Signature {
    uint8_t re = 0;       // bimodal sign bit
    Digest challenge{};   // full challenge digest
    std::vector<int32_t> s;
};

struct SignStats {
    uint64_t attempts = 0;
    uint64_t accepts = 0;
};

KeyPair bliss_keygen(const SignParams& params, uint64_t seed);

// continuous gaussian rounded to the nearest integer
int32_t sample_gaussian_int(Rng& rng, double sigma);

// digest of the commitment and message, reduced to a scalar in
// [1, challenge_scalar_max]
Digest challenge_digest(const PublicKey& pub, const std::vector<int32_t>& u, const Bytes& msg);
uint32_t challenge_scalar(const SignParams& params, const Digest& digest);

// rejection-sampled; throws after retry_limit straight restarts
Signature bliss_sign(const KeyPair& kp, const Bytes& msg, uint64_t seed,
                     SignStats* stats = nullptr);

bool bliss_verify(const PublicKey& pub, const Bytes& msg, const Signature& sig);

// re (1 byte) | challenge (32) | length (4 LE) | entries (int32 LE)
Bytes signature_bytes(const Signature& sig);
Signature parse_signature(const Bytes& wire, const SignParams& params);

}  // namespace sentinel
