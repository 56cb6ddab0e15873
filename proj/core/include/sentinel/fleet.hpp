#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "sentinel/bytes.hpp"

namespace sentinel {

struct EdgeServer {
    uint32_t id = 0;
    Digest profile{};  // configuration fingerprint, migration targets must match
    uint32_t cpu_slots = 0;
    uint32_t tasks_running = 0;
    uint32_t tasks_waiting = 0;
    double trust = 0.5;
    std::vector<uint32_t> services;
};

struct Fleet {
    std::vector<EdgeServer> servers;

    EdgeServer& by_id(uint32_t id);
    const EdgeServer& by_id(uint32_t id) const;
};

enum class TrustEvent { positive, negative };

// new trust moves toward the bound by a fraction of the remaining headroom
double update_trust(double prev, TrustEvent ev, double theta_pos = 0.05, double theta_neg = 0.3);

// fleet mean trust
double trust_threshold(const Fleet& fleet);

struct TrustPartition {
    std::vector<uint32_t> high;  // trust >= threshold
    std::vector<uint32_t> low;
};

TrustPartition classify_servers(const Fleet& fleet, double threshold);

// free slots, never negative
uint32_t cpu_availability(const EdgeServer& s);
uint64_t cpu_availability(const Fleet& fleet);

struct LoadRatio {
    double load = 0.0;      // availability per waiting task
    double pressure = 0.0;  // waiting tasks per free slot
};

LoadRatio load_ratio(const EdgeServer& s);

struct FitnessWeights {
    double availability = 1.0 / 3.0;
    double trust = 1.0 / 3.0;
    double pressure = 1.0 / 3.0;
};

// availability and pressure are min-max normalized across the fleet; a
// degenerate range normalizes to 1 for every server
std::vector<double> fitness_values(const Fleet& fleet, const FitnessWeights& w = {});

struct HeapNode {
    uint32_t server_id = 0;
    double fv = 0.0;
    uint32_t depth = 0;
};

struct FitnessHeap {
    size_t arity = 3;
    double avg_fv = 0.0;
    std::vector<HeapNode> nodes;

    const HeapNode& root() const;
    bool valid() const;  // parent never outranked by a child
};

FitnessHeap build_heap(const Fleet& fleet, const std::vector<double>& fv, size_t arity = 3);

struct MigrationPlan {
    uint32_t source_id = 0;
    uint32_t target_id = 0;
    std::vector<uint32_t> services;
};

// best heap node that is trusted, profile-compatible and not the source;
// fitness ties break by lower pressure, then lower id
MigrationPlan select_target(const FitnessHeap& heap, const Fleet& fleet, uint32_t source_id,
                            const std::set<uint32_t>& trusted);

struct MigrationResult {
    uint32_t source_id = 0;
    uint32_t target_id = 0;
    uint32_t moved = 0;
};

// atomic: re-checks target trust and capacity before touching either side
MigrationResult migrate(const MigrationPlan& plan, Fleet& fleet, double trust_th);

// one line per server: id, profile hash, slots, running, waiting, trust, fv
std::string fleet_to_text(const Fleet& fleet, const std::vector<double>& fv);

}  // namespace sentinel
