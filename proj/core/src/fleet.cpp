#include "sentinel/fleet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "sentinel/error.hpp"

namespace sentinel {

EdgeServer& Fleet::by_id(uint32_t id) {
    for (auto& s : servers)
        if (s.id == id) return s;
    raise(Errc::no_servers, "no server with id " + std::to_string(id));
}

const EdgeServer& Fleet::by_id(uint32_t id) const {
    return const_cast<Fleet*>(this)->by_id(id);
}

double update_trust(double prev, TrustEvent ev, double theta_pos, double theta_neg) {
    double theta = ev == TrustEvent::positive ? theta_pos : theta_neg;
    if (theta < 0.0 || theta > 1.0) raise(Errc::invalid_config, "trust rate must be in [0, 1]");
    double next = ev == TrustEvent::positive ? prev + (1.0 - prev) * theta
                                             : prev - (1.0 - prev) * theta;
    return std::clamp(next, 0.0, 1.0);
}

double trust_threshold(const Fleet& fleet) {
    if (fleet.servers.empty()) raise(Errc::no_servers, "fleet is empty");
    double sum = 0.0;
    for (const auto& s : fleet.servers) sum += s.trust;
    return sum / double(fleet.servers.size());
}

TrustPartition classify_servers(const Fleet& fleet, double threshold) {
    TrustPartition p;
    for (const auto& s : fleet.servers)
        (s.trust >= threshold ? p.high : p.low).push_back(s.id);
    return p;
}

uint32_t cpu_availability(const EdgeServer& s) {
    return s.tasks_running >= s.cpu_slots ? 0 : s.cpu_slots - s.tasks_running;
}

uint64_t cpu_availability(const Fleet& fleet) {
    uint64_t total = 0;
    for (const auto& s : fleet.servers) total += cpu_availability(s);
    return total;
}

LoadRatio load_ratio(const EdgeServer& s) {
    LoadRatio r;
    double ra = double(cpu_availability(s));
    r.load = ra / std::max<double>(s.tasks_waiting, 1.0);
    r.pressure = double(s.tasks_waiting) / std::max(ra, 1.0);
    return r;
}

std::vector<double> fitness_values(const Fleet& fleet, const FitnessWeights& w) {
    if (fleet.servers.empty()) raise(Errc::no_servers, "fleet is empty");
    size_t n = fleet.servers.size();
    std::vector<double> ra(n), press(n);
    for (size_t i = 0; i < n; ++i) {
        ra[i] = double(cpu_availability(fleet.servers[i]));
        press[i] = load_ratio(fleet.servers[i]).pressure;
    }
    auto norm = [](const std::vector<double>& v, size_t i) {
        auto [lo, hi] = std::minmax_element(v.begin(), v.end());
        double range = *hi - *lo;
        if (range <= 0.0) return 1.0;  // degenerate fleet, every server peers
        return (v[i] - *lo) / range;
    };
    std::vector<double> fv(n);
    for (size_t i = 0; i < n; ++i)
        fv[i] = w.availability * norm(ra, i) + w.trust * fleet.servers[i].trust -
                w.pressure * norm(press, i);
    return fv;
}

const HeapNode& FitnessHeap::root() const {
    if (nodes.empty()) raise(Errc::no_servers, "heap is empty");
    return nodes[0];
}

bool FitnessHeap::valid() const {
    auto outranks = [](const HeapNode& a, const HeapNode& b) {
        if (a.fv != b.fv) return a.fv > b.fv;
        return a.server_id < b.server_id;
    };
    for (size_t i = 1; i < nodes.size(); ++i) {
        size_t parent = (i - 1) / arity;
        if (outranks(nodes[i], nodes[parent])) return false;
        if (nodes[i].depth != nodes[parent].depth + 1) return false;
    }
    return nodes.empty() || nodes[0].depth == 0;
}

FitnessHeap build_heap(const Fleet& fleet, const std::vector<double>& fv, size_t arity) {
    if (arity == 0) raise(Errc::invalid_config, "heap arity must be positive");
    if (fleet.servers.empty()) raise(Errc::no_servers, "fleet is empty");
    if (fv.size() != fleet.servers.size())
        raise(Errc::dim_mismatch, "fitness vector does not match the fleet");

    FitnessHeap heap;
    heap.arity = arity;
    heap.nodes.reserve(fleet.servers.size());
    for (size_t i = 0; i < fleet.servers.size(); ++i)
        heap.nodes.push_back({fleet.servers[i].id, fv[i], 0});

    // canonical layout: rank order already satisfies the heap property at
    // every arity and makes the structure reproducible
    std::sort(heap.nodes.begin(), heap.nodes.end(), [](const HeapNode& a, const HeapNode& b) {
        if (a.fv != b.fv) return a.fv > b.fv;
        return a.server_id < b.server_id;
    });
    for (size_t i = 1; i < heap.nodes.size(); ++i)
        heap.nodes[i].depth = heap.nodes[(i - 1) / arity].depth + 1;

    double sum = 0.0;
    for (const auto& n : heap.nodes) sum += n.fv;
    heap.avg_fv = sum / double(heap.nodes.size());
    return heap;
}

MigrationPlan select_target(const FitnessHeap& heap, const Fleet& fleet, uint32_t source_id,
                            const std::set<uint32_t>& trusted) {
    const EdgeServer& source = fleet.by_id(source_id);
    const HeapNode* best = nullptr;
    double best_pressure = 0.0;
    for (const auto& node : heap.nodes) {
        if (node.server_id == source_id) continue;
        if (!trusted.count(node.server_id)) continue;
        const EdgeServer& cand = fleet.by_id(node.server_id);
        if (cand.profile != source.profile) continue;
        double pressure = load_ratio(cand).pressure;
        if (!best || node.fv > best->fv ||
            (node.fv == best->fv && (pressure < best_pressure ||
                                     (pressure == best_pressure &&
                                      node.server_id < best->server_id)))) {
            best = &node;
            best_pressure = pressure;
        }
    }
    if (!best) raise(Errc::no_feasible_target, "no trusted profile-compatible target");
    MigrationPlan plan;
    plan.source_id = source_id;
    plan.target_id = best->server_id;
    plan.services = source.services;
    return plan;
}

MigrationResult migrate(const MigrationPlan& plan, Fleet& fleet, double trust_th) {
    EdgeServer& source = fleet.by_id(plan.source_id);
    EdgeServer& target = fleet.by_id(plan.target_id);
    if (target.trust < trust_th)
        raise(Errc::target_degraded, "target trust fell below the threshold");
    uint32_t moved = uint32_t(plan.services.size());
    if (target.tasks_running + moved > target.cpu_slots)
        raise(Errc::capacity_exceeded, "target lacks free slots for the migrated services");

    for (uint32_t svc : plan.services) {
        auto it = std::find(source.services.begin(), source.services.end(), svc);
        if (it == source.services.end())
            raise(Errc::invalid_config, "plan names a service the source does not host");
    }

    for (uint32_t svc : plan.services) {
        source.services.erase(std::find(source.services.begin(), source.services.end(), svc));
        target.services.push_back(svc);
    }
    source.tasks_running -= std::min(source.tasks_running, moved);
    target.tasks_running += moved;

    return MigrationResult{plan.source_id, plan.target_id, moved};
}

std::string fleet_to_text(const Fleet& fleet, const std::vector<double>& fv) {
    if (fv.size() != fleet.servers.size())
        raise(Errc::dim_mismatch, "fitness vector does not match the fleet");
    std::ostringstream out;
    out.setf(std::ios::fixed);
    out.precision(6);
    for (size_t i = 0; i < fleet.servers.size(); ++i) {
        const auto& s = fleet.servers[i];
        out << s.id << " " << to_hex(s.profile) << " " << s.cpu_slots << " " << s.tasks_running
            << " " << s.tasks_waiting << " " << s.trust << " " << fv[i] << "\n";
    }
    return out.str();
}

}  // namespace sentinel
