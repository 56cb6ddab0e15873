#include "doctest.h"
#include "sentinel/error.hpp"
#include "sentinel/rng.hpp"
#include "sentinel/tweak_cipher.hpp"

using namespace sentinel;

namespace {

Bytes rand_bytes(Rng& rng, size_t n) {
    Bytes b(n);
    rng.fill(b.data(), n);
    return b;
}

}  // namespace

TEST_CASE("block encryption round trips under many keys and tweaks") {
    Rng rng(11);
    const auto prof = reference_cipher().profile();
    for (int i = 0; i < 200; ++i) {
        Bytes key = rand_bytes(rng, prof.key_len);
        Bytes tweak = rand_bytes(rng, prof.tweak_len);
        Bytes pt = rand_bytes(rng, prof.block_len);
        Bytes ct = tweak_encrypt(key, tweak, pt);
        CHECK(ct.size() == pt.size());
        CHECK(ct != pt);
        CHECK(tweak_decrypt(key, tweak, ct) == pt);
    }
}

TEST_CASE("the tweak matters as much as the key") {
    Rng rng(12);
    const auto prof = reference_cipher().profile();
    Bytes key = rand_bytes(rng, prof.key_len);
    Bytes tweak = rand_bytes(rng, prof.tweak_len);
    Bytes pt = rand_bytes(rng, prof.block_len);
    Bytes ct = tweak_encrypt(key, tweak, pt);

    Bytes tweak2 = tweak;
    tweak2[0] ^= 1;
    CHECK(tweak_encrypt(key, tweak2, pt) != ct);

    Bytes key2 = key;
    key2[0] ^= 1;
    CHECK(tweak_encrypt(key2, tweak, pt) != ct);

    // decrypting under the wrong tweak must not recover the plaintext
    CHECK(tweak_decrypt(key, tweak2, ct) != pt);
}

TEST_CASE("encryption is deterministic for fixed inputs") {
    const auto prof = reference_cipher().profile();
    Bytes key(prof.key_len, 0x41);
    Bytes tweak(prof.tweak_len, 0x42);
    Bytes pt(prof.block_len, 0x43);
    Bytes a = tweak_encrypt(key, tweak, pt);
    Bytes b = tweak_encrypt(key, tweak, pt);
    CHECK(a == b);
}

TEST_CASE("wrong buffer lengths are rejected") {
    const auto prof = reference_cipher().profile();
    Bytes key(prof.key_len, 1), tweak(prof.tweak_len, 2), pt(prof.block_len, 3);
    CHECK_THROWS_AS(tweak_encrypt(Bytes(prof.key_len - 1, 1), tweak, pt), Error);
    CHECK_THROWS_AS(tweak_encrypt(key, Bytes(prof.tweak_len + 1, 2), pt), Error);
    CHECK_THROWS_AS(tweak_encrypt(key, tweak, Bytes(prof.block_len - 1, 3)), Error);
}

TEST_CASE("counter mode is self inverse and tweak keyed") {
    Rng rng(13);
    Bytes key = rand_bytes(rng, reference_cipher().profile().key_len);
    Bytes data = rand_bytes(rng, 1000);  // deliberately not block aligned

    Bytes ct = ctr_crypt(key, 5, data);
    CHECK(ct.size() == data.size());
    CHECK(ct != data);
    CHECK(ctr_crypt(key, 5, ct) == data);
    CHECK(ctr_crypt(key, 6, data) != ct);
}

TEST_CASE("counter mode keystream does not repeat across blocks") {
    Bytes key(32, 0);
    Bytes zeros(96, 0);
    Bytes ks = ctr_crypt(key, 0, zeros);
    // identical plaintext blocks must not map to identical ciphertext blocks
    CHECK(Bytes(ks.begin(), ks.begin() + 32) != Bytes(ks.begin() + 32, ks.begin() + 64));
    CHECK(Bytes(ks.begin() + 32, ks.begin() + 64) != Bytes(ks.begin() + 64, ks.end()));
}
