#include "sentinel/honeynet.hpp"

#include <algorithm>
#include <cstring>
#include <fstream>

#include "sentinel/error.hpp"
#include "sentinel/tweak_cipher.hpp"

namespace sentinel {

VirtualHoneypot deploy_honeypot(const Fleet& fleet, const Digest& profile, uint32_t id,
                                int64_t now_us) {
    bool known = false;
    for (const auto& s : fleet.servers) known |= s.profile == profile;
    if (!known) raise(Errc::unknown_profile, "profile matches no fleet server");
    VirtualHoneypot hp;
    hp.id = id;
    hp.profile = profile;
    hp.deployed_at_us = now_us;
    return hp;
}

AttackPattern capture(VirtualHoneypot& hp, const AttackSession& session, int64_t now_us) {
    if (session.events.empty()) raise(Errc::empty_session, "session recorded no events");
    AttackPattern p;
    p.family = session.family;
    p.feature_summary = session.flow;
    p.events = session.events;
    std::stable_sort(p.events.begin(), p.events.end(),
                     [](const SessionEvent& a, const SessionEvent& b) {
                         return a.offset_us < b.offset_us;
                     });
    p.captured_at_us = now_us;
    hp.captured.push_back(p);
    return p;
}

Bytes pattern_bytes(const AttackPattern& p) {
    Bytes buf;
    append_string(buf, p.family);
    append_u32le(buf, uint32_t(p.feature_summary.size()));
    for (double v : p.feature_summary) append_f64le(buf, v);
    append_u32le(buf, uint32_t(p.events.size()));
    for (const auto& e : p.events) {
        append_u64le(buf, uint64_t(e.offset_us));
        append_string(buf, e.action);
        append_u32le(buf, uint32_t(e.payload.size()));
        append_bytes(buf, e.payload);
    }
    append_u64le(buf, uint64_t(p.captured_at_us));
    return buf;
}

AttackPattern parse_pattern(const Bytes& buf) {
    size_t pos = 0;
    auto need = [&](size_t n) {
        if (pos + n > buf.size()) raise(Errc::bad_format, "truncated pattern");
    };
    auto get_u32 = [&] {
        need(4);
        uint32_t v = read_u32le(buf.data() + pos);
        pos += 4;
        return v;
    };
    auto get_u64 = [&] {
        need(8);
        uint64_t v = read_u64le(buf.data() + pos);
        pos += 8;
        return v;
    };
    auto get_string = [&] {
        uint32_t len = get_u32();
        need(len);
        std::string s(reinterpret_cast<const char*>(buf.data() + pos), len);
        pos += len;
        return s;
    };

    AttackPattern p;
    p.family = get_string();
    p.feature_summary.resize(get_u32());
    for (double& v : p.feature_summary) {
        need(8);
        v = read_f64le(buf.data() + pos);
        pos += 8;
    }
    p.events.resize(get_u32());
    for (auto& e : p.events) {
        e.offset_us = int64_t(get_u64());
        e.action = get_string();
        uint32_t len = get_u32();
        need(len);
        e.payload.assign(buf.begin() + pos, buf.begin() + pos + len);
        pos += len;
    }
    p.captured_at_us = int64_t(get_u64());
    if (pos != buf.size()) raise(Errc::bad_format, "pattern has trailing bytes");
    return p;
}

uint64_t seal_pattern(SealedLog& log, const AttackPattern& p, const KeyPair& signer,
                      const Bytes& log_key, uint64_t sign_seed) {
    SealedEntry entry;
    entry.index = log.entries.size() + 1;
    Bytes plain = pattern_bytes(p);
    Signature sig = bliss_sign(signer, plain, sign_seed);
    entry.signature = signature_bytes(sig);
    entry.ciphertext = ctr_crypt(log_key, entry.index, plain);
    log.entries.push_back(std::move(entry));
    return log.entries.back().index;
}

HarvestResult harvest(const SealedLog& log, const PublicKey& pub, const Bytes& log_key) {
    HarvestResult res;
    for (const auto& entry : log.entries) {
        Bytes plain = ctr_crypt(log_key, entry.index, entry.ciphertext);
        Signature sig;
        try {
            sig = parse_signature(entry.signature, pub.params);
        } catch (const Error&) {
            res.failures.push_back({entry.index, "malformed signature"});
            continue;
        }
        if (!bliss_verify(pub, plain, sig)) {
            res.failures.push_back({entry.index, "signature check failed"});
            continue;
        }
        AttackPattern p;
        try {
            p = parse_pattern(plain);
        } catch (const Error&) {
            res.failures.push_back({entry.index, "malformed pattern"});
            continue;
        }
        SignaturePattern sp;
        sp.family = p.family;
        sp.features = p.feature_summary;
        sp.origin = "honeypot";
        sp.verified = true;
        res.patterns.push_back(std::move(sp));
    }
    return res;
}

namespace {

constexpr char MAGIC[4] = {'H', 'L', 'O', 'G'};

}  // namespace

void save_sealed_log(const std::string& path, const SealedLog& log) {
    Bytes buf;
    append_bytes(buf, reinterpret_cast<const uint8_t*>(MAGIC), 4);
    for (const auto& e : log.entries) {
        append_u64le(buf, e.index);
        append_u32le(buf, uint32_t(e.ciphertext.size()));
        append_bytes(buf, e.ciphertext);
        append_u32le(buf, uint32_t(e.signature.size()));
        append_bytes(buf, e.signature);
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::missing_file, "cannot write sealed log: " + path);
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
}

SealedLog load_sealed_log(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open sealed log: " + path);
    Bytes buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (buf.size() < 4 || std::memcmp(buf.data(), MAGIC, 4) != 0)
        raise(Errc::bad_format, "not a sealed log (bad magic)");

    SealedLog log;
    size_t pos = 4;
    auto need = [&](size_t n) {
        if (pos + n > buf.size()) raise(Errc::bad_format, "truncated sealed log");
    };
    while (pos < buf.size()) {
        SealedEntry e;
        need(8);
        e.index = read_u64le(buf.data() + pos);
        pos += 8;
        need(4);
        uint32_t clen = read_u32le(buf.data() + pos);
        pos += 4;
        need(clen);
        e.ciphertext.assign(buf.begin() + pos, buf.begin() + pos + clen);
        pos += clen;
        need(4);
        uint32_t slen = read_u32le(buf.data() + pos);
        pos += 4;
        need(slen);
        e.signature.assign(buf.begin() + pos, buf.begin() + pos + slen);
        pos += slen;
        log.entries.push_back(std::move(e));
    }
    return log;
}

}  // namespace sentinel
