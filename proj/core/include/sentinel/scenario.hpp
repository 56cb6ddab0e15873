#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "sentinel/bytes.hpp"

namespace sentinel {

enum class AttackerKind { fuzzing, ddos, impersonation, replay };

const char* to_string(AttackerKind k);

struct SimConfig {
    // network
    uint32_t iot_users = 50;
    uint32_t iot_devices = 50;
    uint32_t edge_gateways = 6;
    uint32_t cloud_servers = 1;
    uint32_t profile_classes = 2;
    uint32_t services_per_server = 2;
    uint32_t cpu_slots = 8;

    // packet transmission
    uint32_t packet_min_bytes = 64;
    uint32_t packet_max_bytes = 1024;
    double benign_interval_s = 2.0;
    double attack_interval_s = 0.5;

    // traffic mix
    std::vector<std::string> attack_families = {"DoS", "DDoS"};
    std::string novel_family;  // injected at runtime, absent from training

    // security
    uint32_t malicious_nodes = 10;
    std::map<AttackerKind, double> attacker_mix = {
        {AttackerKind::fuzzing, 0.5},
        {AttackerKind::ddos, 2.0},
        {AttackerKind::impersonation, 0.5},
        {AttackerKind::replay, 0.5},
    };
    bool feedback = true;
    double retrain_period_s = 30.0;
    double trust_eval_period_s = 5.0;
    double key_lifetime_s = 0.0;  // 0 covers the whole run
    double theta_lo = 0.3;
    double theta_hi = 0.8;

    // simulation
    double sim_time_s = 200.0;
    uint64_t seed = 1;

    // model training
    uint32_t train_benign = 1200;
    uint32_t train_attack_per_family = 300;
    uint32_t forest_trees = 40;
    uint32_t forest_depth = 12;
    uint32_t forest_refine_passes = 2;
    uint32_t aids_epochs = 40;
    uint32_t aids_train_per_class = 300;
    double synth_shift = 2.0;
};

// flat key = value sections; unknown keys are rejected
SimConfig parse_scenario_text(const std::string& text);
SimConfig load_scenario(const std::string& path);

// canonical resolved form; feeds the config hash
std::string scenario_text(const SimConfig& cfg);

Digest config_hash(const SimConfig& cfg);

}  // namespace sentinel
