#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/bliss.hpp"
#include "sentinel/bytes.hpp"
#include "sentinel/dataset.hpp"
#include "sentinel/fleet.hpp"
#include "sentinel/irf.hpp"

namespace sentinel {

struct SessionEvent {
    int64_t offset_us = 0;
    std::string action;
    Bytes payload;
};

struct AttackSession {
    std::string family;
    FeatureVector flow;  // traffic features the attacker exhibited
    std::vector<SessionEvent> events;
};

struct AttackPattern {
    std::string family;
    FeatureVector feature_summary;
    std::vector<SessionEvent> events;
    int64_t captured_at_us = 0;
};

struct VirtualHoneypot {
    uint32_t id = 0;
    Digest profile{};  // cloned from the vacated server
    int64_t deployed_at_us = 0;
    std::vector<AttackPattern> captured;
};

// the decoy must impersonate a profile that actually exists in the fleet
VirtualHoneypot deploy_honeypot(const Fleet& fleet, const Digest& profile, uint32_t id,
                                int64_t now_us);

// distills a session into a pattern; events come out ordered by offset
AttackPattern capture(VirtualHoneypot& hp, const AttackSession& session, int64_t now_us);

// canonical length-prefixed little-endian serialization
Bytes pattern_bytes(const AttackPattern& p);
AttackPattern parse_pattern(const Bytes& buf);

struct SealedEntry {
    uint64_t index = 0;  // 1-based, also the encryption tweak
    Bytes ciphertext;
    Bytes signature;
};

struct SealedLog {
    std::vector<SealedEntry> entries;
};

// sign-then-encrypt; the entry index keys the keystream so entries cannot be
// transplanted
uint64_t seal_pattern(SealedLog& log, const AttackPattern& p, const KeyPair& signer,
                      const Bytes& log_key, uint64_t sign_seed);

struct HarvestFailure {
    uint64_t index = 0;
    std::string reason;
};

struct HarvestResult {
    std::vector<SignaturePattern> patterns;  // verified provenance
    std::vector<HarvestFailure> failures;
};

HarvestResult harvest(const SealedLog& log, const PublicKey& pub, const Bytes& log_key);

void save_sealed_log(const std::string& path, const SealedLog& log);
SealedLog load_sealed_log(const std::string& path);

}  // namespace sentinel
