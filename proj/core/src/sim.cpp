#include "sentinel/sim.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <queue>
#include <set>
#include <sstream>

#include "sentinel/dcrnn.hpp"
#include "sentinel/error.hpp"
#include "sentinel/fleet.hpp"
#include "sentinel/irf.hpp"
#include "sentinel/ledger.hpp"
#include "sentinel/sha256.hpp"

namespace sentinel {

const char* to_string(PacketFate f) {
    switch (f) {
        case PacketFate::dropped_auth: return "dropped_auth";
        case PacketFate::dropped_sids: return "dropped_sids";
        case PacketFate::dropped_aids: return "dropped_aids";
        case PacketFate::delivered: return "delivered";
        case PacketFate::absorbed: return "absorbed";
    }
    return "?";
}

namespace {

enum class EvKind { benign, attacker, trust_eval, retrain };

struct Ev {
    int64_t t_us = 0;
    uint64_t seq = 0;
    EvKind kind = EvKind::benign;
    uint32_t actor = 0;
};

struct EvLater {
    bool operator()(const Ev& a, const Ev& b) const {
        if (a.t_us != b.t_us) return a.t_us > b.t_us;
        return a.seq > b.seq;
    }
};

struct BenignNode {
    Digest key_id{};
    uint32_t service = 0;
};

struct AttackNode {
    AttackerKind kind = AttackerKind::ddos;
    bool traffic = false;  // compromised insider holding valid credentials
    std::string family;
    Digest key_id{};
    uint32_t victim_server = 0;
    int64_t period_us = 0;
};

std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

uint64_t read_peak_rss_kb() {
    std::ifstream in("/proc/self/status");
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("VmHWM:", 0) == 0) {
            std::stringstream ss(line.substr(6));
            uint64_t kb = 0;
            ss >> kb;
            return kb;
        }
    }
    return 0;
}

Digest packet_digest(uint64_t id, uint32_t size) {
    Bytes b;
    append_u64le(b, id);
    append_u32le(b, size);
    return sha256(b);
}

}  // namespace

RunKeys derive_run_keys(const SimConfig& cfg) {
    Rng master(cfg.seed);
    RunKeys keys;
    keys.signer = bliss_keygen(SignParams{}, master.fork(7).next_u64());
    Rng lk = master.fork(10);
    keys.log_key.resize(32);
    lk.fill(keys.log_key.data(), keys.log_key.size());
    return keys;
}

SimResult run_sim(const SimConfig& cfg) {
    auto wall0 = std::chrono::steady_clock::now();

    SimResult r;
    r.cfg = cfg;
    r.cfg_hash = config_hash(cfg);

    Rng master(cfg.seed);
    Rng rng_feat = master.fork(1);
    Rng rng_auth = master.fork(2);
    uint64_t seed_train = master.fork(3).next_u64();
    uint64_t seed_forest = master.fork(4).next_u64();
    uint64_t seed_aids = master.fork(5).next_u64();
    uint64_t seed_ledger = master.fork(6).next_u64();
    uint64_t seed_seal = master.fork(8).next_u64();
    Rng rng_retrain = master.fork(9);

    // training corpus; a configured novel family is deliberately withheld
    SynthConfig syn;
    syn.benign_count = cfg.train_benign;
    for (const auto& fam : cfg.attack_families)
        syn.attack_counts.emplace_back(fam, cfg.train_attack_per_family);
    syn.shift = cfg.synth_shift;
    Dataset train = synth_traffic(syn, seed_train);

    ForestConfig fc;
    fc.trees = cfg.forest_trees;
    fc.max_depth = cfg.forest_depth;
    Forest forest;
    if (cfg.forest_refine_passes > 0) {
        RefineReport rep = refine_forest(train, fc, seed_forest, 12, cfg.forest_refine_passes);
        forest = std::move(rep.forest);
    } else {
        forest = train_forest(train, fc, seed_forest);
    }

    MinMaxScaler scaler = MinMaxScaler::fit(train);
    DcrnnConfig dc;
    Dcrnn aids = make_dcrnn(dc, seed_aids);
    {
        std::vector<ImageSample> samples;
        size_t nb = 0, na = 0;
        for (const auto& rec : train.records) {
            size_t& c = rec.label == ClassLabel::benign ? nb : na;
            if (c >= cfg.aids_train_per_class) continue;
            ++c;
            samples.push_back(
                {rescale_to_image(rec.features, scaler, dc.image_rows, dc.image_cols), rec.label});
        }
        DcrnnTrainConfig tc;
        tc.epochs = cfg.aids_epochs;
        dcrnn_train(aids, samples, tc, seed_aids);
    }

    // keys must outlive the run unless the scenario says otherwise
    LedgerConfig lc;
    double lifetime_s = cfg.key_lifetime_s > 0 ? cfg.key_lifetime_s : cfg.sim_time_s + 60.0;
    lc.key_lifetime_us = int64_t(lifetime_s * 1e6);
    Ledger ledger(lc, seed_ledger);

    auto enroll = [&](const std::string& kind, uint32_t i, const std::string& user) {
        Credentials c;
        c.puf.resize(16);
        rng_auth.fill(c.puf.data(), c.puf.size());
        c.device_id = kind + "-" + std::to_string(i);
        c.mac.resize(6);
        rng_auth.fill(c.mac.data(), c.mac.size());
        c.user_id = user;
        return ledger.register_device(c, 0);
    };

    Fleet fleet;
    uint32_t profile_classes = std::max(1u, cfg.profile_classes);
    for (uint32_t i = 0; i < cfg.edge_gateways; ++i) {
        EdgeServer s;
        s.id = i;
        s.profile = sha256("profile-class-" + std::to_string(i % profile_classes));
        s.cpu_slots = cfg.cpu_slots;
        for (uint32_t k = 0; k < cfg.services_per_server; ++k)
            s.services.push_back(i * cfg.services_per_server + k);
        s.tasks_running = cfg.services_per_server;
        fleet.servers.push_back(std::move(s));
    }
    uint32_t total_services = cfg.edge_gateways * cfg.services_per_server;

    auto server_of_service = [&](uint32_t svc) -> uint32_t {
        for (const auto& s : fleet.servers)
            if (std::find(s.services.begin(), s.services.end(), svc) != s.services.end())
                return s.id;
        return fleet.servers[svc % fleet.servers.size()].id;
    };

    std::vector<BenignNode> benign;
    for (uint32_t i = 0; i < cfg.iot_devices; ++i)
        benign.push_back({enroll("device", i, ""), i % total_services});
    for (uint32_t j = 0; j < cfg.iot_users; ++j)
        benign.push_back(
            {enroll("handset", j, "user-" + std::to_string(j)), (cfg.iot_devices + j) % total_services});

    int64_t attack_iv = std::max<int64_t>(1, int64_t(cfg.attack_interval_s * 1e6));
    std::vector<AttackNode> attackers;
    std::vector<std::string> rotation = cfg.attack_families;
    if (!cfg.novel_family.empty()) rotation.push_back(cfg.novel_family);
    for (uint32_t k = 0; k < cfg.malicious_nodes; ++k) {
        AttackNode a;
        a.traffic = true;
        a.family = rotation.empty() ? known_families()[0] : rotation[k % rotation.size()];
        a.key_id = enroll("mal", k, "");
        a.victim_server = k % cfg.edge_gateways;
        a.period_us = attack_iv;
        attackers.push_back(std::move(a));
    }
    auto rate_of = [&](AttackerKind k) {
        auto it = cfg.attacker_mix.find(k);
        return it == cfg.attacker_mix.end() ? 0.0 : it->second;
    };
    for (AttackerKind kind : {AttackerKind::fuzzing, AttackerKind::ddos,
                              AttackerKind::impersonation, AttackerKind::replay}) {
        double rate = rate_of(kind);
        if (rate <= 0.0) continue;
        AttackNode a;
        a.kind = kind;
        a.period_us = std::max<int64_t>(1, int64_t(1e6 / rate));
        switch (kind) {
            case AttackerKind::fuzzing:
                a.family = "Fuzzing";
                break;
            case AttackerKind::ddos:
                a.traffic = true;
                a.family = "DDoS";
                a.key_id = enroll("flood", 0, "");
                a.victim_server = 0;
                break;
            case AttackerKind::impersonation:
                a.family = "Impersonation";
                a.key_id = benign.empty() ? Digest{} : benign[0].key_id;
                break;
            case AttackerKind::replay:
                a.family = "Replay";
                break;
        }
        attackers.push_back(std::move(a));
    }

    // deception machinery
    RunKeys keys = derive_run_keys(cfg);
    const KeyPair& signer = keys.signer;
    const Bytes& log_key = keys.log_key;
    SealedLog log;
    std::vector<VirtualHoneypot> pots;
    std::map<uint32_t, size_t> absorb;  // vacated server id -> honeypot index
    SignatureDB sigdb;
    size_t harvested = 0;

    std::vector<uint32_t> sizes;
    for (uint32_t s = cfg.packet_min_bytes; s <= cfg.packet_max_bytes && sizes.size() < 32; s *= 2)
        sizes.push_back(s);

    std::priority_queue<Ev, std::vector<Ev>, EvLater> q;
    uint64_t seq = 0;
    int64_t sim_end = int64_t(cfg.sim_time_s * 1e6);
    int64_t benign_iv = std::max<int64_t>(1, int64_t(cfg.benign_interval_s * 1e6));
    for (uint32_t i = 0; i < benign.size(); ++i)
        q.push({int64_t(i + 1) * benign_iv / int64_t(benign.size() + 1), seq++, EvKind::benign, i});
    for (uint32_t k = 0; k < attackers.size(); ++k) {
        int64_t first = attackers[k].traffic
                            ? int64_t(k + 1) * attack_iv / int64_t(attackers.size() + 1)
                            : attackers[k].period_us;
        q.push({std::max<int64_t>(1, first), seq++, EvKind::attacker, k});
    }
    int64_t trust_iv = int64_t(cfg.trust_eval_period_s * 1e6);
    if (trust_iv > 0) q.push({trust_iv, seq++, EvKind::trust_eval, 0});
    int64_t retrain_iv = int64_t(cfg.retrain_period_s * 1e6);
    if (cfg.feedback && retrain_iv > 0) q.push({retrain_iv, seq++, EvKind::retrain, 0});

    uint64_t pkt_id = 0;
    std::optional<Transaction> sniffed;  // replay material off the air

    auto maybe_mine = [&] {
        if (ledger.pending_count() >= 64) ledger.mine_block();
    };
    maybe_mine();

    auto drop_auth = [&](PacketOutcome& out, SubmitStatus st) {
        out.fate = PacketFate::dropped_auth;
        out.score = 1.0;
        out.auth_reason = to_string(st);
        ++r.dropped_auth;
        ++r.auth_reasons[out.auth_reason];
    };

    // classification and routing for a flow that cleared authentication
    auto process_flow = [&](PacketOutcome& out, const FeatureVector& fv, uint32_t victim_server,
                            uint32_t service, int64_t now) {
        double vote = forest.attack_vote(fv);
        Triage tri = vote < cfg.theta_lo    ? Triage::normal
                     : vote >= cfg.theta_hi ? Triage::malicious
                                            : Triage::suspicious;
        out.score = vote;
        if (tri == Triage::malicious) {
            out.fate = PacketFate::dropped_sids;
            ++r.dropped_sids;
            if (out.truth_attack) {
                ++r.families[out.family].sids_detected;
                ++r.families[out.family].contained;
            }
            return;
        }
        if (tri == Triage::suspicious) {
            SuspiciousVerdict v = classify_suspicious(aids, scaler, fv);
            out.score = cfg.theta_lo + (cfg.theta_hi - cfg.theta_lo) * v.p_attack;
            if (v.label == ClassLabel::attack) {
                out.fate = PacketFate::dropped_aids;
                ++r.dropped_aids;
                if (out.truth_attack) ++r.families[out.family].contained;
                return;
            }
        }
        if (!out.truth_attack) {
            // benign flows follow the service directory
            EdgeServer& host = fleet.by_id(server_of_service(service));
            host.trust = update_trust(host.trust, TrustEvent::positive);
            out.fate = PacketFate::delivered;
            ++r.delivered;
            return;
        }
        // hostile flows chase the server address they scouted earlier
        auto it = absorb.find(victim_server);
        if (it != absorb.end()) {
            AttackSession sess;
            sess.family = out.family;
            sess.flow = fv;
            Bytes p0;
            append_u64le(p0, out.id);
            Digest pd = packet_digest(out.id, 0);
            sess.events.push_back({0, "connect", p0});
            sess.events.push_back({1000, "payload", Bytes(pd.begin(), pd.begin() + 8)});
            AttackPattern pat = capture(pots[it->second], sess, now);
            seal_pattern(log, pat, signer, log_key, seed_seal + r.captures);
            ++r.captures;
            out.fate = PacketFate::absorbed;
            ++r.absorbed;
            ++r.families[out.family].contained;
            return;
        }
        EdgeServer& victim = fleet.by_id(victim_server);
        victim.trust = update_trust(victim.trust, TrustEvent::negative);
        if (victim.tasks_waiting < victim.cpu_slots * 4) ++victim.tasks_waiting;
        out.fate = PacketFate::delivered;
        ++r.delivered;
    };

    while (!q.empty()) {
        Ev ev = q.top();
        q.pop();
        if (ev.t_us > sim_end) break;
        ++r.events;
        int64_t now = ev.t_us;

        switch (ev.kind) {
            case EvKind::benign: {
                const BenignNode& node = benign[ev.actor];
                PacketOutcome out;
                out.id = pkt_id++;
                out.t_us = now;
                uint32_t size = sizes[out.id % sizes.size()];
                Transaction txn = ledger.make_transaction(node.key_id, now, packet_digest(out.id, size));
                SubmitStatus st = ledger.submit_transaction(txn, now);
                if (st != SubmitStatus::accepted) {
                    drop_auth(out, st);
                } else {
                    sniffed = txn;
                    maybe_mine();
                    FlowRecord flow = synth_flow(syn, rng_feat, "");
                    process_flow(out, flow.features, 0, node.service, now);
                }
                ++r.packets;
                r.outcomes.push_back(std::move(out));
                q.push({now + benign_iv, seq++, EvKind::benign, ev.actor});
                break;
            }
            case EvKind::attacker: {
                AttackNode& a = attackers[ev.actor];
                PacketOutcome out;
                out.id = pkt_id++;
                out.t_us = now;
                out.truth_attack = true;
                out.family = a.family;
                ++r.families[a.family].packets;
                uint32_t size = sizes[out.id % sizes.size()];
                if (a.traffic) {
                    Transaction txn =
                        ledger.make_transaction(a.key_id, now, packet_digest(out.id, size));
                    SubmitStatus st = ledger.submit_transaction(txn, now);
                    if (st != SubmitStatus::accepted) {
                        drop_auth(out, st);
                        ++r.families[a.family].contained;
                    } else {
                        maybe_mine();
                        FlowRecord flow = synth_flow(syn, rng_feat, a.family);
                        process_flow(out, flow.features, a.victim_server, 0, now);
                    }
                } else if (a.kind == AttackerKind::fuzzing) {
                    Transaction txn;
                    rng_auth.fill(txn.key_id.data(), txn.key_id.size());
                    txn.tag.tag.resize(32);
                    txn.tag.encrypted.resize(32);
                    txn.tag.tweak.resize(16);
                    rng_auth.fill(txn.tag.tag.data(), 32);
                    rng_auth.fill(txn.tag.encrypted.data(), 32);
                    rng_auth.fill(txn.tag.tweak.data(), 16);
                    txn.lifetime_us = lc.key_lifetime_us;
                    txn.timestamp_us = now;
                    txn.payload_digest = packet_digest(out.id, size);
                    SubmitStatus st = ledger.submit_transaction(txn, now);
                    drop_auth(out, st);
                    ++r.families[a.family].contained;
                } else if (a.kind == AttackerKind::impersonation) {
                    Transaction txn;
                    txn.key_id = a.key_id;
                    txn.tag.tag.resize(32);
                    txn.tag.encrypted.resize(32);
                    txn.tag.tweak.resize(16);
                    rng_auth.fill(txn.tag.tag.data(), 32);
                    rng_auth.fill(txn.tag.encrypted.data(), 32);
                    rng_auth.fill(txn.tag.tweak.data(), 16);
                    txn.lifetime_us = lc.key_lifetime_us;
                    txn.timestamp_us = now;
                    txn.payload_digest = packet_digest(out.id, size);
                    SubmitStatus st = ledger.submit_transaction(txn, now);
                    drop_auth(out, st);
                    ++r.families[a.family].contained;
                } else {  // replay
                    if (!sniffed) {
                        --pkt_id;  // nothing on the air yet, no packet sent
                        r.families[a.family].packets--;
                        if (r.families[a.family].packets == 0) r.families.erase(a.family);
                        q.push({now + a.period_us, seq++, EvKind::attacker, ev.actor});
                        continue;
                    }
                    SubmitStatus st = ledger.submit_transaction(*sniffed, now);
                    drop_auth(out, st);
                    ++r.families[a.family].contained;
                }
                ++r.packets;
                r.outcomes.push_back(std::move(out));
                q.push({now + a.period_us, seq++, EvKind::attacker, ev.actor});
                break;
            }
            case EvKind::trust_eval: {
                double th = trust_threshold(fleet);
                TrustPartition part = classify_servers(fleet, th);
                std::set<uint32_t> trusted(part.high.begin(), part.high.end());
                for (uint32_t low_id : part.low) {
                    EdgeServer& src = fleet.by_id(low_id);
                    if (src.services.empty()) continue;
                    std::vector<double> fv = fitness_values(fleet);
                    FitnessHeap heap = build_heap(fleet, fv);
                    try {
                        MigrationPlan plan = select_target(heap, fleet, low_id, trusted);
                        migrate(plan, fleet, th);
                        ++r.migrations;
                        VirtualHoneypot hp = deploy_honeypot(
                            fleet, src.profile, 1000 + uint32_t(pots.size()), now);
                        pots.push_back(std::move(hp));
                        absorb[low_id] = pots.size() - 1;
                        ++r.honeypots;
                    } catch (const Error&) {
                        // no feasible target this round, retry next evaluation
                    }
                }
                for (auto& s : fleet.servers) s.tasks_waiting /= 2;  // backlog decay
                q.push({now + trust_iv, seq++, EvKind::trust_eval, 0});
                break;
            }
            case EvKind::retrain: {
                if (log.entries.size() > harvested) {
                    HarvestResult hr = harvest(log, signer.pub, log_key);
                    r.harvest_failures += hr.failures.size();
                    if (hr.patterns.size() > harvested) {
                        std::vector<SignaturePattern> fresh(hr.patterns.begin() + harvested,
                                                            hr.patterns.end());
                        ingest_signatures(sigdb, fresh);
                        harvested = hr.patterns.size();
                        ForestConfig rc = fc;
                        rc.trees = forest.trees.size();
                        forest = retrain_with_signatures(train, sigdb, rc, rng_retrain.next_u64(),
                                                         forest.active_features);
                        ++r.retrains;
                    }
                }
                q.push({now + retrain_iv, seq++, EvKind::retrain, 0});
                break;
            }
        }
    }

    if (ledger.pending_count() > 0) ledger.mine_block();
    r.blocks = ledger.chain().size();
    r.chain_ok = ledger.verify_chain();
    r.ledger_text = ledger.export_chain();
    r.fleet_text = fleet_to_text(fleet, fitness_values(fleet));
    r.honeypot_log = std::move(log);

    for (const auto& out : r.outcomes) {
        bool flagged = out.fate != PacketFate::delivered;
        if (out.truth_attack)
            flagged ? ++r.confusion.tp : ++r.confusion.fn;
        else
            flagged ? ++r.confusion.fp : ++r.confusion.tn;
    }
    r.metrics = compute_metrics(r.confusion);
    {
        std::vector<ScoredSample> samples;
        samples.reserve(r.outcomes.size());
        for (const auto& out : r.outcomes) samples.push_back({out.score, out.truth_attack});
        try {
            r.roc = roc_curve(samples);
        } catch (const Error&) {
            // single-class traffic leaves the curve empty
        }
    }

    r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - wall0).count();
    r.peak_rss_kb = read_peak_rss_kb();
    return r;
}

std::string metrics_csv(const SimResult& r) {
    std::ostringstream out;
    out << "config_hash,seed,packets,dropped_auth,dropped_sids,dropped_aids,delivered,"
           "absorbed,tp,fp,tn,fn,accuracy,precision,recall,f1,fpr,fnr,auc,migrations,"
           "honeypots,captures,retrains,blocks,chain_ok\n";
    out << to_hex(r.cfg_hash) << "," << r.cfg.seed << "," << r.packets << "," << r.dropped_auth
        << "," << r.dropped_sids << "," << r.dropped_aids << "," << r.delivered << ","
        << r.absorbed << "," << r.confusion.tp << "," << r.confusion.fp << "," << r.confusion.tn
        << "," << r.confusion.fn << "," << metric_text(r.metrics.accuracy) << ","
        << metric_text(r.metrics.precision) << "," << metric_text(r.metrics.recall) << ","
        << metric_text(r.metrics.f1) << "," << metric_text(r.metrics.fpr) << ","
        << metric_text(r.metrics.fnr) << ","
        << (r.roc.points.empty() ? "na" : fmt_g(r.roc.auc)) << "," << r.migrations << ","
        << r.honeypots << "," << r.captures << "," << r.retrains << "," << r.blocks << ","
        << (r.chain_ok ? 1 : 0) << "\n";
    return out.str();
}

std::string roc_csv(const RocCurve& roc) {
    std::ostringstream out;
    out << "fpr,tpr,threshold\n";
    for (const auto& p : roc.points)
        out << fmt_g(p.fpr) << "," << fmt_g(p.tpr) << "," << fmt_g(p.threshold) << "\n";
    return out.str();
}

std::string per_family_csv(const SimResult& r) {
    std::ostringstream out;
    out << "family,packets,sids_detected,sids_rate,contained,containment_rate\n";
    for (const auto& [fam, st] : r.families) {
        double sr = st.packets ? double(st.sids_detected) / double(st.packets) : 0.0;
        double cr = st.packets ? double(st.contained) / double(st.packets) : 0.0;
        out << fam << "," << st.packets << "," << st.sids_detected << "," << fmt_g(sr) << ","
            << st.contained << "," << fmt_g(cr) << "\n";
    }
    return out.str();
}

std::string summary_text(const SimResult& r) {
    std::ostringstream out;
    out << "config hash     " << to_hex(r.cfg_hash) << "\n";
    out << "seed            " << r.cfg.seed << "\n";
    out << "packets         " << r.packets << "\n";
    out << "  auth drops    " << r.dropped_auth << "\n";
    for (const auto& [reason, n] : r.auth_reasons) out << "    " << reason << " " << n << "\n";
    out << "  first stage   " << r.dropped_sids << "\n";
    out << "  second stage  " << r.dropped_aids << "\n";
    out << "  delivered     " << r.delivered << "\n";
    out << "  absorbed      " << r.absorbed << "\n";
    out << "accuracy        " << metric_text(r.metrics.accuracy) << "\n";
    out << "detection rate  " << metric_text(r.metrics.recall) << "\n";
    out << "false positives " << metric_text(r.metrics.fpr) << "\n";
    out << "auc             " << (r.roc.points.empty() ? "na" : fmt_g(r.roc.auc)) << "\n";
    out << "migrations      " << r.migrations << "\n";
    out << "honeypots       " << r.honeypots << "\n";
    out << "captures        " << r.captures << "\n";
    out << "retrains        " << r.retrains << "\n";
    out << "blocks          " << r.blocks << "\n";
    out << "chain verified  " << (r.chain_ok ? "yes" : "no") << "\n";
    return out.str();
}

namespace {

void write_text(const std::filesystem::path& p, const std::string& text) {
    std::ofstream out(p, std::ios::binary);
    if (!out) raise(Errc::missing_file, "cannot write " + p.string());
    out << text;
}

}  // namespace

void write_run_outputs(const SimResult& r, const std::string& out_dir) {
    namespace fs = std::filesystem;
    fs::path dir(out_dir);
    fs::create_directories(dir);
    write_text(dir / "metrics.csv", metrics_csv(r));
    write_text(dir / "roc.csv", roc_csv(r.roc));
    write_text(dir / "per_family.csv", per_family_csv(r));
    write_text(dir / "fleet.txt", r.fleet_text);
    write_text(dir / "ledger.txt", r.ledger_text);
    write_text(dir / "scenario.conf", scenario_text(r.cfg));
    write_text(dir / "summary.txt", summary_text(r));
    save_sealed_log((dir / "honeypots.hlog").string(), r.honeypot_log);
    std::ostringstream res;
    res << "wall_s " << fmt_g(r.wall_s) << "\n";
    res << "peak_rss_kb " << r.peak_rss_kb << "\n";
    write_text(dir / "resources.txt", res.str());
}

}  // namespace sentinel
