#include "sentinel/tweak_cipher.hpp"

#include "sentinel/error.hpp"

namespace sentinel {

namespace {

constexpr uint64_t KEY_PARITY = 0x1bd11bdaa9fc1a22ull;
constexpr int ROUNDS = 72;

// rotation schedule repeats every 8 rounds
constexpr int ROT[8][2] = {{14, 16}, {52, 57}, {23, 40}, {5, 37},
                           {25, 33}, {46, 12}, {58, 22}, {32, 32}};

inline uint64_t rotl(uint64_t x, int n) { return (x << n) | (x >> (64 - n)); }
inline uint64_t rotr(uint64_t x, int n) { return (x >> n) | (x << (64 - n)); }

struct Schedule {
    uint64_t k[5];
    uint64_t t[3];

    // subkey s folds key words and tweak words together; the tweak therefore
    // reaches every injected round key
    void subkey(int s, uint64_t out[4]) const {
        out[0] = k[s % 5];
        out[1] = k[(s + 1) % 5] + t[s % 3];
        out[2] = k[(s + 2) % 5] + t[(s + 1) % 3];
        out[3] = k[(s + 3) % 5] + uint64_t(s);
    }
};

Schedule make_schedule(const Bytes& key, const Bytes& tweak) {
    Schedule sc;
    sc.k[4] = KEY_PARITY;
    for (int i = 0; i < 4; ++i) {
        sc.k[i] = read_u64le(key.data() + 8 * i);
        sc.k[4] ^= sc.k[i];
    }
    sc.t[0] = read_u64le(tweak.data());
    sc.t[1] = read_u64le(tweak.data() + 8);
    sc.t[2] = sc.t[0] ^ sc.t[1];
    return sc;
}

void check_lengths(const CipherProfile& p, const Bytes& key, const Bytes& tweak,
                   const Bytes& block) {
    if (key.size() != p.key_len) raise(Errc::bad_length, "cipher key must be 32 bytes");
    if (tweak.size() != p.tweak_len) raise(Errc::bad_length, "cipher tweak must be 16 bytes");
    if (block.size() != p.block_len) raise(Errc::bad_length, "cipher block must be 32 bytes");
}

}  // namespace

Bytes WidePermCipher::encrypt_block(const Bytes& key, const Bytes& tweak,
                                    const Bytes& block) const {
    check_lengths(profile(), key, tweak, block);
    Schedule sc = make_schedule(key, tweak);

    uint64_t v[4];
    for (int i = 0; i < 4; ++i) v[i] = read_u64le(block.data() + 8 * i);

    uint64_t ks[4];
    for (int r = 0; r < ROUNDS; ++r) {
        if (r % 4 == 0) {
            sc.subkey(r / 4, ks);
            for (int i = 0; i < 4; ++i) v[i] += ks[i];
        }
        v[0] += v[1];
        v[1] = rotl(v[1], ROT[r % 8][0]) ^ v[0];
        v[2] += v[3];
        v[3] = rotl(v[3], ROT[r % 8][1]) ^ v[2];
        // word permutation (0,3,2,1)
        uint64_t tmp = v[1];
        v[1] = v[3];
        v[3] = tmp;
    }
    sc.subkey(ROUNDS / 4, ks);
    for (int i = 0; i < 4; ++i) v[i] += ks[i];

    Bytes out;
    out.reserve(32);
    for (int i = 0; i < 4; ++i) append_u64le(out, v[i]);
    return out;
}

Bytes WidePermCipher::decrypt_block(const Bytes& key, const Bytes& tweak,
                                    const Bytes& block) const {
    check_lengths(profile(), key, tweak, block);
    Schedule sc = make_schedule(key, tweak);

    uint64_t v[4];
    for (int i = 0; i < 4; ++i) v[i] = read_u64le(block.data() + 8 * i);

    uint64_t ks[4];
    sc.subkey(ROUNDS / 4, ks);
    for (int i = 0; i < 4; ++i) v[i] -= ks[i];

    for (int r = ROUNDS - 1; r >= 0; --r) {
        uint64_t tmp = v[1];
        v[1] = v[3];
        v[3] = tmp;
        v[3] = rotr(v[3] ^ v[2], ROT[r % 8][1]);
        v[2] -= v[3];
        v[1] = rotr(v[1] ^ v[0], ROT[r % 8][0]);
        v[0] -= v[1];
        if (r % 4 == 0) {
            sc.subkey(r / 4, ks);
            for (int i = 0; i < 4; ++i) v[i] -= ks[i];
        }
    }

    Bytes out;
    out.reserve(32);
    for (int i = 0; i < 4; ++i) append_u64le(out, v[i]);
    return out;
}

const TweakCipher& reference_cipher() {
    static WidePermCipher cipher;
    return cipher;
}

Bytes tweak_encrypt(const Bytes& key, const Bytes& tweak, const Bytes& block) {
    return reference_cipher().encrypt_block(key, tweak, block);
}

Bytes tweak_decrypt(const Bytes& key, const Bytes& tweak, const Bytes& block) {
    return reference_cipher().decrypt_block(key, tweak, block);
}

Bytes ctr_crypt(const Bytes& key, uint64_t tweak_prefix, const Bytes& data) {
    const auto& cipher = reference_cipher();
    const size_t bl = cipher.profile().block_len;
    Bytes zero(bl, 0);
    Bytes out = data;
    for (size_t off = 0, ctr = 0; off < out.size(); off += bl, ++ctr) {
        Bytes tweak;
        tweak.reserve(16);
        append_u64le(tweak, tweak_prefix);
        append_u64le(tweak, ctr);
        Bytes ks = cipher.encrypt_block(key, tweak, zero);
        size_t n = std::min(bl, out.size() - off);
        for (size_t i = 0; i < n; ++i) out[off + i] ^= ks[i];
    }
    return out;
}

}  // namespace sentinel
