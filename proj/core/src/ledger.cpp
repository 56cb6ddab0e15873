#include "sentinel/ledger.hpp"

#include <fstream>
#include <sstream>

#include "sentinel/error.hpp"
#include "sentinel/sha256.hpp"
#include "sentinel/tweak_cipher.hpp"

namespace sentinel {

namespace {

Bytes credential_bytes(const Credentials& creds, const Bytes& seed_material) {
    Bytes buf;
    append_string(buf, std::string(creds.puf.begin(), creds.puf.end()));
    append_string(buf, creds.device_id);
    append_string(buf, std::string(creds.mac.begin(), creds.mac.end()));
    buf.push_back(creds.user_id.empty() ? 0 : 1);
    if (!creds.user_id.empty()) append_string(buf, creds.user_id);
    append_bytes(buf, seed_material);
    return buf;
}

Digest hash_block_parts(uint64_t index, const Digest& prev, const Digest& merkle,
                        const std::vector<Digest>& txn_digests) {
    Bytes buf;
    append_u64le(buf, index);
    append_bytes(buf, prev);
    append_bytes(buf, merkle);
    append_u32le(buf, uint32_t(txn_digests.size()));
    for (const auto& d : txn_digests) append_bytes(buf, d);
    return sha256(buf);
}

std::vector<Digest> digests_of(const std::vector<Transaction>& txns) {
    std::vector<Digest> out;
    out.reserve(txns.size());
    for (const auto& t : txns) out.push_back(transaction_digest(t));
    return out;
}

Digest replay_key(const Digest& key_id, const Bytes& tag) {
    Bytes buf;
    append_bytes(buf, key_id);
    append_bytes(buf, tag);
    return sha256(buf);
}

}  // namespace

const char* to_string(SubmitStatus s) {
    switch (s) {
        case SubmitStatus::accepted: return "Accepted";
        case SubmitStatus::expired: return "Expired";
        case SubmitStatus::unregistered: return "Unregistered";
        case SubmitStatus::bad_tag: return "BadTag";
        case SubmitStatus::consensus_failed: return "ConsensusFailed";
        case SubmitStatus::replay: return "Replay";
    }
    return "?";
}

Digest transaction_digest(const Transaction& txn) {
    Bytes buf;
    append_bytes(buf, txn.key_id);
    append_string(buf, std::string(txn.tag.tag.begin(), txn.tag.tag.end()));
    append_string(buf, std::string(txn.tag.encrypted.begin(), txn.tag.encrypted.end()));
    append_string(buf, std::string(txn.tag.tweak.begin(), txn.tag.tweak.end()));
    append_u64le(buf, uint64_t(txn.lifetime_us));
    append_u64le(buf, uint64_t(txn.timestamp_us));
    append_bytes(buf, txn.payload_digest);
    return sha256(buf);
}

Digest merkle_root(const std::vector<Digest>& leaves) {
    if (leaves.empty()) return Digest{};
    std::vector<Digest> level = leaves;
    while (level.size() > 1) {
        if (level.size() % 2 != 0) level.push_back(level.back());
        std::vector<Digest> next;
        next.reserve(level.size() / 2);
        for (size_t i = 0; i < level.size(); i += 2) {
            Bytes buf;
            append_bytes(buf, level[i]);
            append_bytes(buf, level[i + 1]);
            next.push_back(sha256(buf));
        }
        level = std::move(next);
    }
    return level[0];
}

Digest block_hash(const Block& b) {
    return hash_block_parts(b.index, b.prev_hash, b.merkle_root, digests_of(b.txns));
}

Ledger::Ledger(LedgerConfig cfg, uint64_t seed) : cfg_(cfg), rng_(seed) {
    if (cfg_.quorum == 0 || cfg_.quorum > cfg_.validators)
        raise(Errc::invalid_config, "quorum must be in [1, validators]");
    Block genesis;
    genesis.validator_quorum = cfg_.quorum;
    chain_.push_back(genesis);
}

Digest Ledger::register_device(const Credentials& creds, int64_t now_us) {
    Bytes material = credential_bytes(creds, cfg_.seed_material);
    Digest key_digest = sha256(material);
    SecretKey sk;
    sk.key.assign(key_digest.begin(), key_digest.end());
    sk.issue_time_us = now_us;
    sk.lifetime_us = cfg_.key_lifetime_us;

    Bytes id_material(key_digest.begin(), key_digest.end());
    append_string(id_material, "key-id");
    Digest key_id = sha256(id_material);

    if (registry_.count(key_id)) raise(Errc::already_registered, "credentials already enrolled");
    registry_[key_id] = std::move(sk);

    // enrollment enters the pool directly, consensus applies from then on
    Transaction txn = make_transaction(key_id, now_us, sha256("enroll:" + creds.device_id));
    seen_.insert(replay_key(key_id, txn.tag.tag));
    pending_.push_back(std::move(txn));
    return key_id;
}

bool Ledger::is_registered(const Digest& key_id) const { return registry_.count(key_id) > 0; }

const SecretKey& Ledger::key_of(const Digest& key_id) const {
    auto it = registry_.find(key_id);
    if (it == registry_.end()) raise(Errc::not_registered, "unknown key id");
    return it->second;
}

AuthTag Ledger::generate_tag(const Digest& key_id) {
    const SecretKey& sk = key_of(key_id);
    const auto prof = reference_cipher().profile();
    AuthTag tag;
    do {
        tag.tag.resize(prof.block_len);
        rng_.fill(tag.tag.data(), tag.tag.size());
    } while (seen_.count(replay_key(key_id, tag.tag)));
    tag.tweak.resize(prof.tweak_len);
    rng_.fill(tag.tweak.data(), tag.tweak.size());
    tag.encrypted = tweak_encrypt(sk.key, tag.tweak, tag.tag);
    return tag;
}

Transaction Ledger::make_transaction(const Digest& key_id, int64_t now_us,
                                     const Digest& payload_digest) {
    const SecretKey& sk = key_of(key_id);
    Transaction txn;
    txn.key_id = key_id;
    txn.tag = generate_tag(key_id);
    txn.lifetime_us = sk.lifetime_us;
    txn.timestamp_us = now_us;
    txn.payload_digest = payload_digest;
    return txn;
}

bool Ledger::validator_check(const Transaction& txn, int64_t now_us) const {
    auto it = registry_.find(txn.key_id);
    if (it == registry_.end()) return false;
    const SecretKey& sk = it->second;
    if (now_us < sk.issue_time_us || now_us > sk.issue_time_us + sk.lifetime_us) return false;
    const auto prof = reference_cipher().profile();
    if (txn.tag.tag.size() != prof.block_len || txn.tag.encrypted.size() != prof.block_len ||
        txn.tag.tweak.size() != prof.tweak_len)
        return false;
    return tweak_decrypt(sk.key, txn.tag.tweak, txn.tag.encrypted) == txn.tag.tag;
}

uint32_t Ledger::run_consensus(const Transaction& txn, int64_t now_us) const {
    uint32_t honest = cfg_.validators - std::min(cfg_.faulty_validators, cfg_.validators);
    uint32_t yes = 0;
    for (uint32_t v = 0; v < honest; ++v)
        if (validator_check(txn, now_us)) ++yes;
    return yes;
}

SubmitStatus Ledger::submit_transaction(const Transaction& txn, int64_t now_us) {
    auto it = registry_.find(txn.key_id);
    if (it != registry_.end()) {
        const SecretKey& sk = it->second;
        if (now_us < sk.issue_time_us || now_us > sk.issue_time_us + sk.lifetime_us)
            return SubmitStatus::expired;
    } else {
        return SubmitStatus::unregistered;
    }

    const auto prof = reference_cipher().profile();
    if (txn.tag.tag.size() != prof.block_len || txn.tag.encrypted.size() != prof.block_len ||
        txn.tag.tweak.size() != prof.tweak_len)
        return SubmitStatus::bad_tag;
    if (tweak_decrypt(it->second.key, txn.tag.tweak, txn.tag.encrypted) != txn.tag.tag)
        return SubmitStatus::bad_tag;

    if (run_consensus(txn, now_us) < cfg_.quorum) return SubmitStatus::consensus_failed;

    Digest rp = replay_key(txn.key_id, txn.tag.tag);
    if (seen_.count(rp)) return SubmitStatus::replay;
    seen_.insert(rp);
    pending_.push_back(txn);
    return SubmitStatus::accepted;
}

const Block& Ledger::mine_block() {
    if (pending_.empty()) raise(Errc::empty_pool, "no pending transactions to mine");
    Block b;
    b.index = chain_.size();
    b.prev_hash = block_hash(chain_.back());
    b.merkle_root = merkle_root(digests_of(pending_));
    b.txns = std::move(pending_);
    b.validator_quorum = cfg_.quorum;
    pending_.clear();
    chain_.push_back(std::move(b));
    return chain_.back();
}

bool Ledger::verify_chain() const {
    for (size_t i = 0; i < chain_.size(); ++i) {
        const Block& b = chain_[i];
        if (b.index != i) return false;
        if (merkle_root(digests_of(b.txns)) != b.merkle_root) return false;
        if (i == 0) {
            if (b.prev_hash != Digest{}) return false;
        } else if (b.prev_hash != block_hash(chain_[i - 1])) {
            return false;
        }
    }
    return true;
}

std::string Ledger::export_chain() const {
    std::ostringstream out;
    for (const Block& b : chain_) {
        out << b.index << " " << to_hex(b.prev_hash) << " " << to_hex(b.merkle_root);
        for (const auto& d : digests_of(b.txns)) out << " " << to_hex(d);
        out << "\n";
    }
    return out.str();
}

void Ledger::export_chain(const std::string& path) const {
    std::ofstream out(path);
    if (!out) raise(Errc::missing_file, "cannot write chain export: " + path);
    out << export_chain();
}

bool ChainSummary::verify_links() const {
    for (size_t i = 0; i < blocks.size(); ++i) {
        const BlockSummary& b = blocks[i];
        if (b.index != i) return false;
        if (!b.txn_digests.empty() && merkle_root(b.txn_digests) != b.merkle_root) return false;
        if (i == 0) {
            if (b.prev_hash != Digest{}) return false;
        } else {
            const BlockSummary& p = blocks[i - 1];
            if (b.prev_hash != hash_block_parts(p.index, p.prev_hash, p.merkle_root, p.txn_digests))
                return false;
        }
    }
    return true;
}

std::string ChainSummary::to_text() const {
    std::ostringstream out;
    for (const BlockSummary& b : blocks) {
        out << b.index << " " << to_hex(b.prev_hash) << " " << to_hex(b.merkle_root);
        for (const auto& d : b.txn_digests) out << " " << to_hex(d);
        out << "\n";
    }
    return out.str();
}

ChainSummary parse_chain_summary(const std::string& text) {
    ChainSummary cs;
    std::istringstream in(text);
    std::string line;
    auto to_digest = [](const std::string& hex) {
        Bytes raw = from_hex(hex);
        if (raw.size() != 32) raise(Errc::bad_format, "digest must be 32 bytes");
        Digest d;
        std::copy(raw.begin(), raw.end(), d.begin());
        return d;
    };
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        BlockSummary b;
        std::string prev, merkle;
        if (!(ls >> b.index >> prev >> merkle))
            raise(Errc::bad_format, "malformed chain export line");
        b.prev_hash = to_digest(prev);
        b.merkle_root = to_digest(merkle);
        std::string d;
        while (ls >> d) b.txn_digests.push_back(to_digest(d));
        cs.blocks.push_back(std::move(b));
    }
    if (cs.blocks.empty()) raise(Errc::bad_format, "chain export is empty");
    return cs;
}

ChainSummary load_chain_summary(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::missing_file, "cannot open chain export: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_chain_summary(buf.str());
}

}  // namespace sentinel
