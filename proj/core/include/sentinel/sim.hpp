#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sentinel/bytes.hpp"
#include "sentinel/honeynet.hpp"
#include "sentinel/metrics.hpp"
#include "sentinel/scenario.hpp"

namespace sentinel {

enum class PacketFate { dropped_auth, dropped_sids, dropped_aids, delivered, absorbed };

const char* to_string(PacketFate f);

struct PacketOutcome {
    uint64_t id = 0;
    int64_t t_us = 0;
    bool truth_attack = false;
    std::string family;  // empty for benign traffic
    PacketFate fate = PacketFate::delivered;
    double score = 0.0;       // suspicion in [0, 1]
    std::string auth_reason;  // submit status when authentication dropped it
};

struct FamilyStats {
    uint64_t packets = 0;
    uint64_t sids_detected = 0;  // first stage alone flagged it
    uint64_t contained = 0;      // any drop or honeypot absorption
};

struct SimResult {
    SimConfig cfg;
    Digest cfg_hash{};

    uint64_t packets = 0;
    uint64_t dropped_auth = 0;
    uint64_t dropped_sids = 0;
    uint64_t dropped_aids = 0;
    uint64_t delivered = 0;
    uint64_t absorbed = 0;
    std::map<std::string, uint64_t> auth_reasons;

    Confusion confusion;  // positive = attack, prediction = any containment
    MetricsReport metrics;
    RocCurve roc;  // empty when traffic is single-class
    std::map<std::string, FamilyStats> families;

    uint64_t events = 0;
    uint64_t migrations = 0;
    uint64_t honeypots = 0;
    uint64_t captures = 0;
    uint64_t harvest_failures = 0;
    uint64_t retrains = 0;
    uint64_t blocks = 0;
    bool chain_ok = false;

    std::string fleet_text;
    std::string ledger_text;
    SealedLog honeypot_log;
    std::vector<PacketOutcome> outcomes;

    // resource figures live outside the deterministic surface
    double wall_s = 0.0;
    uint64_t peak_rss_kb = 0;
};

SimResult run_sim(const SimConfig& cfg);

struct RunKeys {
    KeyPair signer;
    Bytes log_key;
};

// provenance keys are a pure function of the scenario, so sealed logs can be
// audited offline from the resolved config alone
RunKeys derive_run_keys(const SimConfig& cfg);

// one header line plus one data row, stable for a fixed (config, seed)
std::string metrics_csv(const SimResult& r);
std::string roc_csv(const RocCurve& roc);
std::string per_family_csv(const SimResult& r);
std::string summary_text(const SimResult& r);

// metrics.csv, roc.csv, per_family.csv, fleet.txt, ledger.txt,
// honeypots.hlog, scenario.conf, summary.txt, resources.txt
void write_run_outputs(const SimResult& r, const std::string& out_dir);

}  // namespace sentinel
