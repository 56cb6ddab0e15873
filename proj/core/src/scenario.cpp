#include "sentinel/scenario.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "sentinel/error.hpp"
#include "sentinel/sha256.hpp"

namespace sentinel {

const char* to_string(AttackerKind k) {
    switch (k) {
        case AttackerKind::fuzzing: return "fuzzing";
        case AttackerKind::ddos: return "ddos";
        case AttackerKind::impersonation: return "impersonation";
        case AttackerKind::replay: return "replay";
    }
    return "?";
}

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

uint64_t to_u64(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        uint64_t out = std::stoull(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        raise(Errc::invalid_config, "bad integer for " + key + ": " + v);
    }
}

uint32_t to_u32(const std::string& key, const std::string& v) {
    uint64_t out = to_u64(key, v);
    if (out > UINT32_MAX) raise(Errc::invalid_config, key + " out of range");
    return static_cast<uint32_t>(out);
}

double to_f64(const std::string& key, const std::string& v) {
    try {
        size_t pos = 0;
        double out = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument(v);
        return out;
    } catch (const std::exception&) {
        raise(Errc::invalid_config, "bad number for " + key + ": " + v);
    }
}

bool to_bool(const std::string& key, const std::string& v) {
    if (v == "on" || v == "true" || v == "1") return true;
    if (v == "off" || v == "false" || v == "0") return false;
    raise(Errc::invalid_config, "bad flag for " + key + ": " + v);
}

std::vector<std::string> split_list(const std::string& v) {
    std::vector<std::string> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item = trim(item);
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

}  // namespace

SimConfig parse_scenario_text(const std::string& text) {
    SimConfig cfg;
    std::stringstream ss(text);
    std::string line;
    std::string section;
    size_t lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        line = trim(line);
        if (line.empty() || line[0] == '#' || line[0] == ';') continue;
        if (line.front() == '[') {
            if (line.back() != ']') raise(Errc::invalid_config, "unterminated section at line " + std::to_string(lineno));
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        size_t eq = line.find('=');
        if (eq == std::string::npos) raise(Errc::invalid_config, "expected key = value at line " + std::to_string(lineno));
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty()) raise(Errc::invalid_config, "empty key at line " + std::to_string(lineno));

        bool known = true;
        if (section == "network") {
            if (key == "iot_user_nodes") cfg.iot_users = to_u32(key, val);
            else if (key == "iot_device_nodes") cfg.iot_devices = to_u32(key, val);
            else if (key == "edge_gateways") cfg.edge_gateways = to_u32(key, val);
            else if (key == "cloud_servers") cfg.cloud_servers = to_u32(key, val);
            else if (key == "profile_classes") cfg.profile_classes = to_u32(key, val);
            else if (key == "services_per_server") cfg.services_per_server = to_u32(key, val);
            else if (key == "cpu_slots") cfg.cpu_slots = to_u32(key, val);
            else known = false;
        } else if (section == "packet_transmission") {
            if (key == "packet_min_bytes") cfg.packet_min_bytes = to_u32(key, val);
            else if (key == "packet_max_bytes") cfg.packet_max_bytes = to_u32(key, val);
            else if (key == "benign_interval_s") cfg.benign_interval_s = to_f64(key, val);
            else if (key == "attack_interval_s") cfg.attack_interval_s = to_f64(key, val);
            else known = false;
        } else if (section == "network_traffic") {
            if (key == "attack_families") cfg.attack_families = split_list(val);
            else if (key == "novel_family") cfg.novel_family = val;
            else known = false;
        } else if (section == "security") {
            if (key == "malicious_nodes") cfg.malicious_nodes = to_u32(key, val);
            else if (key == "fuzzing_rate") cfg.attacker_mix[AttackerKind::fuzzing] = to_f64(key, val);
            else if (key == "ddos_rate") cfg.attacker_mix[AttackerKind::ddos] = to_f64(key, val);
            else if (key == "impersonation_rate") cfg.attacker_mix[AttackerKind::impersonation] = to_f64(key, val);
            else if (key == "replay_rate") cfg.attacker_mix[AttackerKind::replay] = to_f64(key, val);
            else if (key == "feedback") cfg.feedback = to_bool(key, val);
            else if (key == "retrain_period_s") cfg.retrain_period_s = to_f64(key, val);
            else if (key == "trust_eval_period_s") cfg.trust_eval_period_s = to_f64(key, val);
            else if (key == "key_lifetime_s") cfg.key_lifetime_s = to_f64(key, val);
            else if (key == "theta_lo") cfg.theta_lo = to_f64(key, val);
            else if (key == "theta_hi") cfg.theta_hi = to_f64(key, val);
            else known = false;
        } else if (section == "simulation") {
            if (key == "sim_time_s") cfg.sim_time_s = to_f64(key, val);
            else if (key == "seed") cfg.seed = to_u64(key, val);
            else if (key == "train_benign") cfg.train_benign = to_u32(key, val);
            else if (key == "train_attack_per_family") cfg.train_attack_per_family = to_u32(key, val);
            else if (key == "forest_trees") cfg.forest_trees = to_u32(key, val);
            else if (key == "forest_depth") cfg.forest_depth = to_u32(key, val);
            else if (key == "forest_refine_passes") cfg.forest_refine_passes = to_u32(key, val);
            else if (key == "aids_epochs") cfg.aids_epochs = to_u32(key, val);
            else if (key == "aids_train_per_class") cfg.aids_train_per_class = to_u32(key, val);
            else if (key == "synth_shift") cfg.synth_shift = to_f64(key, val);
            else known = false;
        } else {
            raise(Errc::invalid_config, "unknown section [" + section + "] at line " + std::to_string(lineno));
        }
        if (!known) raise(Errc::invalid_config, "unknown key " + key + " in [" + section + "]");
    }
    if (cfg.edge_gateways == 0) raise(Errc::invalid_config, "edge_gateways must be positive");
    if (cfg.services_per_server == 0) raise(Errc::invalid_config, "services_per_server must be positive");
    if (cfg.packet_min_bytes == 0 || cfg.packet_max_bytes < cfg.packet_min_bytes)
        raise(Errc::invalid_config, "packet byte range is empty");
    if (cfg.benign_interval_s <= 0 || cfg.attack_interval_s <= 0)
        raise(Errc::invalid_config, "packet intervals must be positive");
    if (cfg.sim_time_s <= 0) raise(Errc::invalid_config, "sim_time_s must be positive");
    if (cfg.theta_lo < 0 || cfg.theta_hi > 1 || cfg.theta_lo >= cfg.theta_hi)
        raise(Errc::invalid_config, "triage thresholds must satisfy 0 <= lo < hi <= 1");
    return cfg;
}

SimConfig load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open scenario " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_scenario_text(buf.str());
}

std::string scenario_text(const SimConfig& cfg) {
    std::ostringstream out;
    out << "[network]\n";
    out << "iot_user_nodes = " << cfg.iot_users << "\n";
    out << "iot_device_nodes = " << cfg.iot_devices << "\n";
    out << "edge_gateways = " << cfg.edge_gateways << "\n";
    out << "cloud_servers = " << cfg.cloud_servers << "\n";
    out << "profile_classes = " << cfg.profile_classes << "\n";
    out << "services_per_server = " << cfg.services_per_server << "\n";
    out << "cpu_slots = " << cfg.cpu_slots << "\n";
    out << "\n[packet_transmission]\n";
    out << "packet_min_bytes = " << cfg.packet_min_bytes << "\n";
    out << "packet_max_bytes = " << cfg.packet_max_bytes << "\n";
    out << "benign_interval_s = " << fmt(cfg.benign_interval_s) << "\n";
    out << "attack_interval_s = " << fmt(cfg.attack_interval_s) << "\n";
    out << "\n[network_traffic]\n";
    out << "attack_families = ";
    for (size_t i = 0; i < cfg.attack_families.size(); ++i) {
        if (i) out << ", ";
        out << cfg.attack_families[i];
    }
    out << "\n";
    out << "novel_family = " << cfg.novel_family << "\n";
    out << "\n[security]\n";
    out << "malicious_nodes = " << cfg.malicious_nodes << "\n";
    auto rate = [&](AttackerKind k) {
        auto it = cfg.attacker_mix.find(k);
        return it == cfg.attacker_mix.end() ? 0.0 : it->second;
    };
    out << "fuzzing_rate = " << fmt(rate(AttackerKind::fuzzing)) << "\n";
    out << "ddos_rate = " << fmt(rate(AttackerKind::ddos)) << "\n";
    out << "impersonation_rate = " << fmt(rate(AttackerKind::impersonation)) << "\n";
    out << "replay_rate = " << fmt(rate(AttackerKind::replay)) << "\n";
    out << "feedback = " << (cfg.feedback ? "on" : "off") << "\n";
    out << "retrain_period_s = " << fmt(cfg.retrain_period_s) << "\n";
    out << "trust_eval_period_s = " << fmt(cfg.trust_eval_period_s) << "\n";
    out << "key_lifetime_s = " << fmt(cfg.key_lifetime_s) << "\n";
    out << "theta_lo = " << fmt(cfg.theta_lo) << "\n";
    out << "theta_hi = " << fmt(cfg.theta_hi) << "\n";
    out << "\n[simulation]\n";
    out << "sim_time_s = " << fmt(cfg.sim_time_s) << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "train_benign = " << cfg.train_benign << "\n";
    out << "train_attack_per_family = " << cfg.train_attack_per_family << "\n";
    out << "forest_trees = " << cfg.forest_trees << "\n";
    out << "forest_depth = " << cfg.forest_depth << "\n";
    out << "forest_refine_passes = " << cfg.forest_refine_passes << "\n";
    out << "aids_epochs = " << cfg.aids_epochs << "\n";
    out << "aids_train_per_class = " << cfg.aids_train_per_class << "\n";
    out << "synth_shift = " << fmt(cfg.synth_shift) << "\n";
    return out.str();
}

Digest config_hash(const SimConfig& cfg) {
    std::string text = scenario_text(cfg);
    return sha256(Bytes(text.begin(), text.end()));
}

}  // namespace sentinel
