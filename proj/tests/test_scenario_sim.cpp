#include <filesystem>
#include <fstream>
#include <string>

#include "doctest.h"
#include "sentinel/error.hpp"
#include "sentinel/sim.hpp"
#include "temp_dir.hpp"

using namespace sentinel;

namespace {

std::string scenario_path(const std::string& name) {
    return std::string(SENTINEL_SCENARIO_DIR) + "/" + name;
}

SimConfig smoke_config() {
    SimConfig cfg = load_scenario(scenario_path("smoke.conf"));
    return cfg;
}

}  // namespace

TEST_CASE("empty scenario text resolves to the documented defaults") {
    SimConfig cfg = parse_scenario_text("");
    CHECK(cfg.iot_users == 50);
    CHECK(cfg.edge_gateways == 6);
    CHECK(cfg.packet_min_bytes == 64);
    CHECK(cfg.attack_families == std::vector<std::string>{"DoS", "DDoS"});
    CHECK(cfg.novel_family.empty());
    CHECK(cfg.attacker_mix.at(AttackerKind::ddos) == 2.0);
    CHECK(cfg.feedback);
    CHECK(cfg.theta_lo == 0.3);
    CHECK(cfg.theta_hi == 0.8);
    CHECK(cfg.sim_time_s == 200.0);
    CHECK(cfg.seed == 1);
}

TEST_CASE("scenario keys override section by section") {
    std::string text =
        "[network]\n"
        "iot_user_nodes = 12\n"
        "cpu_slots = 4\n"
        "; comment styles\n"
        "# both survive\n"
        "[network_traffic]\n"
        "attack_families = DoS, Web , Bot\n"
        "novel_family = Scan\n"
        "[security]\n"
        "feedback = off\n"
        "theta_lo = 0.25\n"
        "[simulation]\n"
        "seed = 99\n"
        "sim_time_s = 42.5\n";
    SimConfig cfg = parse_scenario_text(text);
    CHECK(cfg.iot_users == 12);
    CHECK(cfg.cpu_slots == 4);
    CHECK(cfg.attack_families == std::vector<std::string>{"DoS", "Web", "Bot"});
    CHECK(cfg.novel_family == "Scan");
    CHECK_FALSE(cfg.feedback);
    CHECK(cfg.theta_lo == 0.25);
    CHECK(cfg.seed == 99);
    CHECK(cfg.sim_time_s == 42.5);
    // untouched keys keep their defaults
    CHECK(cfg.iot_devices == 50);
    CHECK(cfg.theta_hi == 0.8);
}

TEST_CASE("malformed scenarios are rejected with the offending construct") {
    CHECK_THROWS_AS(parse_scenario_text("[network]\nbogus_key = 1\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[warp_drive]\nspeed = 9\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[network]\niot_user_nodes 12\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[network\niot_user_nodes = 12\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[network]\n= 5\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[network]\niot_user_nodes = soon\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[security]\nfeedback = maybe\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("iot_user_nodes = 12\n"), Error);
}

TEST_CASE("semantic validation rejects impossible configurations") {
    CHECK_THROWS_AS(parse_scenario_text("[network]\nedge_gateways = 0\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[network]\nservices_per_server = 0\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[packet_transmission]\npacket_min_bytes = 0\n"), Error);
    CHECK_THROWS_AS(
        parse_scenario_text("[packet_transmission]\npacket_min_bytes = 512\npacket_max_bytes = 64\n"),
        Error);
    CHECK_THROWS_AS(parse_scenario_text("[packet_transmission]\nbenign_interval_s = 0\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[simulation]\nsim_time_s = 0\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[security]\ntheta_lo = 0.9\n"), Error);
    CHECK_THROWS_AS(parse_scenario_text("[security]\ntheta_lo = 0.5\ntheta_hi = 0.5\n"), Error);
}

TEST_CASE("canonical text parses back to an identical configuration") {
    SimConfig cfg = parse_scenario_text("");
    cfg.novel_family = "Web";
    cfg.seed = 1234;
    cfg.attacker_mix[AttackerKind::ddos] = 3.5;
    std::string text = scenario_text(cfg);
    SimConfig back = parse_scenario_text(text);
    CHECK(config_hash(back) == config_hash(cfg));
    CHECK(scenario_text(back) == text);
    // the hash notices any change
    back.seed += 1;
    CHECK(config_hash(back) != config_hash(cfg));
}

TEST_CASE("bundled scenarios load") {
    SimConfig def = load_scenario(scenario_path("default.conf"));
    CHECK(def.sim_time_s == 200.0);
    CHECK(def.seed == 1);
    SimConfig fb = load_scenario(scenario_path("feedback_demo.conf"));
    CHECK(fb.novel_family == "Web");
    CHECK(fb.feedback);
    SimConfig smoke = load_scenario(scenario_path("smoke.conf"));
    CHECK(smoke.sim_time_s == 10.0);
    CHECK(smoke.seed == 3);
    CHECK_THROWS_AS(load_scenario(scenario_path("no_such.conf")), Error);
}

TEST_CASE("provenance keys depend only on the seed") {
    SimConfig a = smoke_config();
    SimConfig b = smoke_config();
    b.iot_users += 5;  // topology change, same seed
    RunKeys ka = derive_run_keys(a);
    RunKeys kb = derive_run_keys(b);
    CHECK(ka.log_key == kb.log_key);
    CHECK(ka.signer.pub.t == kb.signer.pub.t);
    CHECK(ka.signer.priv.s == kb.signer.priv.s);
    SimConfig c = smoke_config();
    c.seed += 1;
    RunKeys kc = derive_run_keys(c);
    CHECK(kc.log_key != ka.log_key);
    CHECK(kc.signer.pub.t != ka.signer.pub.t);
    CHECK(ka.log_key.size() == 32);
}

TEST_CASE("a smoke run conserves packets and is reproducible") {
    SimConfig cfg = smoke_config();
    SimResult r1 = run_sim(cfg);
    SimResult r2 = run_sim(cfg);

    CHECK(r1.packets > 0);
    CHECK(r1.packets ==
          r1.dropped_auth + r1.dropped_sids + r1.dropped_aids + r1.delivered + r1.absorbed);
    CHECK(r1.outcomes.size() == r1.packets);
    CHECK(r1.confusion.total() == r1.packets);
    CHECK(r1.chain_ok);
    CHECK(r1.blocks >= 1);
    CHECK(r1.events > 0);
    CHECK(r1.cfg_hash == config_hash(cfg));

    // attacks flow in the smoke scenario, so both classes show up
    CHECK(r1.dropped_auth > 0);
    CHECK(r1.delivered > 0);

    // everything on the deterministic surface is byte-identical across runs
    CHECK(metrics_csv(r1) == metrics_csv(r2));
    CHECK(roc_csv(r1.roc) == roc_csv(r2.roc));
    CHECK(per_family_csv(r1) == per_family_csv(r2));
    CHECK(summary_text(r1) == summary_text(r2));
    CHECK(r1.fleet_text == r2.fleet_text);
    CHECK(r1.ledger_text == r2.ledger_text);
    REQUIRE(r1.honeypot_log.entries.size() == r2.honeypot_log.entries.size());
    for (size_t i = 0; i < r1.honeypot_log.entries.size(); ++i) {
        CHECK(r1.honeypot_log.entries[i].ciphertext == r2.honeypot_log.entries[i].ciphertext);
        CHECK(r1.honeypot_log.entries[i].signature == r2.honeypot_log.entries[i].signature);
    }

    // a different seed shifts the traffic
    SimConfig other = cfg;
    other.seed += 1;
    SimResult r3 = run_sim(other);
    CHECK(metrics_csv(r3) != metrics_csv(r1));
}

TEST_CASE("per packet scores sit in the unit interval and match fates") {
    SimConfig cfg = smoke_config();
    SimResult r = run_sim(cfg);
    uint64_t auth_drops = 0;
    for (const auto& o : r.outcomes) {
        CHECK(o.score >= 0.0);
        CHECK(o.score <= 1.0);
        if (o.fate == PacketFate::dropped_auth) {
            ++auth_drops;
            CHECK(o.score == 1.0);
            CHECK_FALSE(o.auth_reason.empty());
        } else {
            CHECK(o.auth_reason.empty());
        }
        if (o.fate != PacketFate::delivered) CHECK_FALSE(std::string(to_string(o.fate)).empty());
    }
    CHECK(auth_drops == r.dropped_auth);

    // impersonation and replay actors get refused at the ledger
    uint64_t reason_total = 0;
    for (const auto& [reason, n] : r.auth_reasons) {
        CHECK_FALSE(reason.empty());
        reason_total += n;
    }
    CHECK(reason_total == r.dropped_auth);
}

TEST_CASE("sealed captures harvest cleanly with the derived keys") {
    SimConfig cfg = smoke_config();
    SimResult r = run_sim(cfg);
    CHECK(r.honeypots > 0);
    CHECK(r.captures > 0);
    CHECK(r.honeypot_log.entries.size() == r.captures);
    RunKeys keys = derive_run_keys(cfg);
    HarvestResult hr = harvest(r.honeypot_log, keys.signer.pub, keys.log_key);
    CHECK(hr.failures.empty());
    CHECK(hr.patterns.size() == r.captures);
    for (const auto& p : hr.patterns) {
        CHECK(p.verified);
        CHECK(p.origin == "honeypot");
    }
}

TEST_CASE("run outputs land on disk and reload") {
    TempDir tmp("sentinel-run");
    SimConfig cfg = smoke_config();
    SimResult r = run_sim(cfg);
    write_run_outputs(r, tmp.path.string());

    for (const char* name : {"metrics.csv", "roc.csv", "per_family.csv", "fleet.txt",
                             "ledger.txt", "scenario.conf", "summary.txt", "honeypots.hlog",
                             "resources.txt"}) {
        CAPTURE(name);
        CHECK(std::filesystem::exists(tmp.file(name)));
    }

    // the emitted scenario reparses to the same configuration hash
    SimConfig back = load_scenario(tmp.file("scenario.conf"));
    CHECK(config_hash(back) == r.cfg_hash);

    // the sealed log file holds exactly the run's captures
    SealedLog log = load_sealed_log(tmp.file("honeypots.hlog"));
    CHECK(log.entries.size() == r.captures);

    // metrics.csv is one header and one row
    std::ifstream in(tmp.file("metrics.csv"));
    std::string header, row, extra;
    CHECK(bool(std::getline(in, header)));
    CHECK(bool(std::getline(in, row)));
    CHECK_FALSE(bool(std::getline(in, extra)));
    CHECK(header.rfind("config_hash,", 0) == 0);
}

TEST_CASE("feedback can be disabled without touching anything else") {
    SimConfig cfg = smoke_config();
    cfg.feedback = false;
    SimResult r = run_sim(cfg);
    CHECK(r.retrains == 0);
    CHECK(r.packets ==
          r.dropped_auth + r.dropped_sids + r.dropped_aids + r.delivered + r.absorbed);
    CHECK(r.chain_ok);
}
