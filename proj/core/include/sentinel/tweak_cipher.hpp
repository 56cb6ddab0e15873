#pragma once

#include <cstdint>

#include "sentinel/bytes.hpp"

namespace sentinel {

struct CipherProfile {
    size_t key_len = 32;
    size_t tweak_len = 16;
    size_t block_len = 32;
};

// tweakable block cipher contract; implementations must be bijective per
// (key, tweak) and distinct tweaks must yield independent permutations
class TweakCipher {
public:
    virtual ~TweakCipher() = default;
    virtual CipherProfile profile() const = 0;
    virtual Bytes encrypt_block(const Bytes& key, const Bytes& tweak, const Bytes& block) const = 0;
    virtual Bytes decrypt_block(const Bytes& key, const Bytes& tweak, const Bytes& block) const = 0;
};

// reference construction: 72-round ARX wide permutation over four 64-bit
// words, key and tweak words folded into every injected round key
class WidePermCipher : public TweakCipher {
public:
    CipherProfile profile() const override { return CipherProfile{}; }
    Bytes encrypt_block(const Bytes& key, const Bytes& tweak, const Bytes& block) const override;
    Bytes decrypt_block(const Bytes& key, const Bytes& tweak, const Bytes& block) const override;
};

const TweakCipher& reference_cipher();

Bytes tweak_encrypt(const Bytes& key, const Bytes& tweak, const Bytes& block);
Bytes tweak_decrypt(const Bytes& key, const Bytes& tweak, const Bytes& block);

// counter-mode helper for arbitrary-length payloads: keystream block i is the
// cipher applied to the zero block under tweak (prefix, i); self-inverse
Bytes ctr_crypt(const Bytes& key, uint64_t tweak_prefix, const Bytes& data);

}  // namespace sentinel
