#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sentinel/bytes.hpp"
#include "sentinel/rng.hpp"

namespace sentinel {

struct Credentials {
    Bytes puf;             // hardware fingerprint
    std::string device_id;
    Bytes mac;
    std::string user_id;   // empty when the device has no bound user
};

struct SecretKey {
    Bytes key;  // doubles as the tweakable-cipher key
    int64_t issue_time_us = 0;
    int64_t lifetime_us = 0;
};

struct AuthTag {
    Bytes tag;        // one-time nonce
    Bytes encrypted;  // nonce under the device key, proves key possession
    Bytes tweak;
};

struct Transaction {
    Digest key_id{};
    AuthTag tag;
    int64_t lifetime_us = 0;
    int64_t timestamp_us = 0;
    Digest payload_digest{};
};

struct Block {
    uint64_t index = 0;
    Digest prev_hash{};
    Digest merkle_root{};
    std::vector<Transaction> txns;
    uint32_t validator_quorum = 0;
};

enum class SubmitStatus { accepted, expired, unregistered, bad_tag, consensus_failed, replay };

const char* to_string(SubmitStatus s);

struct LedgerConfig {
    uint32_t validators = 5;
    uint32_t quorum = 3;
    uint32_t faulty_validators = 0;  // trailing validators that always vote no
    int64_t key_lifetime_us = 60'000'000;
    Bytes seed_material = {0x6e, 0x67, 0x77, 0x6e};  // folded into key derivation
};

Digest transaction_digest(const Transaction& txn);
Digest block_hash(const Block& b);
Digest merkle_root(const std::vector<Digest>& leaves);

class Ledger {
public:
    Ledger(LedgerConfig cfg, uint64_t seed);

    // derives the device key from the credentials and the ledger seed,
    // records the registration in the pending pool
    Digest register_device(const Credentials& creds, int64_t now_us);

    bool is_registered(const Digest& key_id) const;
    const SecretKey& key_of(const Digest& key_id) const;

    // fresh nonce and tweak, never reused for the same key within a run
    AuthTag generate_tag(const Digest& key_id);

    Transaction make_transaction(const Digest& key_id, int64_t now_us,
                                 const Digest& payload_digest);

    SubmitStatus submit_transaction(const Transaction& txn, int64_t now_us);

    // each validator independently re-checks registry membership and the
    // tag; returns yes votes
    uint32_t run_consensus(const Transaction& txn, int64_t now_us) const;

    const Block& mine_block();

    bool verify_chain() const;

    const std::vector<Block>& chain() const { return chain_; }
    std::vector<Block>& chain_mutable() { return chain_; }
    size_t pending_count() const { return pending_.size(); }
    const LedgerConfig& config() const { return cfg_; }

    std::string export_chain() const;
    void export_chain(const std::string& path) const;

private:
    bool validator_check(const Transaction& txn, int64_t now_us) const;

    LedgerConfig cfg_;
    Rng rng_;
    std::map<Digest, SecretKey> registry_;
    std::set<Digest> seen_;  // (key_id, tag) replay guard
    std::vector<Transaction> pending_;
    std::vector<Block> chain_;
};

// chain summaries round-trip the export format byte-exactly
struct BlockSummary {
    uint64_t index = 0;
    Digest prev_hash{};
    Digest merkle_root{};
    std::vector<Digest> txn_digests;
};

struct ChainSummary {
    std::vector<BlockSummary> blocks;

    bool verify_links() const;
    std::string to_text() const;
};

ChainSummary load_chain_summary(const std::string& path);
ChainSummary parse_chain_summary(const std::string& text);

}  // namespace sentinel
