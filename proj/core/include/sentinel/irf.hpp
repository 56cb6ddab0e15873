#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/forest.hpp"

namespace sentinel {

// per-tree importances blended with out-of-bag accuracy, normalized so the
// best feature scores exactly 1
std::vector<double> feature_weights(const Forest& f);

struct FeaturePools {
    std::vector<size_t> important;    // sorted
    std::vector<size_t> unimportant;  // sorted
};

// top h0 active features by weight, ties broken toward the lower index
FeaturePools partition_features(const std::vector<double>& weights,
                                const std::vector<size_t>& active, size_t h0);

struct PruneStats {
    double alpha = 0.0;      // mean weight over the unimportant pool
    double beta = 0.0;       // population std dev
    double threshold = 0.0;  // alpha - 2 beta
    std::vector<size_t> removed;
};

// drops unimportant features whose weight falls strictly below alpha - 2 beta
PruneStats prune_unimportant(FeaturePools& pools, const std::vector<double>& weights);

// moves unimportant features whose weight reaches the important pool minimum
std::vector<size_t> promote_features(FeaturePools& pools, const std::vector<double>& weights);

// expected split opportunity for a forest of Z trees averaging M_av nodes
double tree_level(size_t z, double m_av, double p);

// signed tree-count adjustment, magnitude floored toward zero
int tree_delta(double level, double p_u, int dh, double p_g, int dg, size_t g);

struct PassLog {
    size_t pass = 0;
    double alpha = 0.0;
    double beta = 0.0;
    double threshold = 0.0;
    std::vector<size_t> pruned;
    std::vector<size_t> promoted;
    int dh = 0;
    int dg = 0;
    double level = 0.0;
    int delta_z = 0;
    size_t trees = 0;
    size_t active = 0;
};

struct RefineReport {
    Forest forest;
    FeaturePools pools;
    std::vector<PassLog> passes;
};

// iterative prune/promote loop with adaptive forest size; stops when the
// unimportant pool shrinks under min_pool or the pass budget runs out
RefineReport refine_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed,
                           size_t h0, size_t max_passes, size_t min_pool = 2);

enum class Triage { normal, malicious, suspicious };

const char* to_string(Triage t);

// three-way split on the forest attack vote
Triage classify_triage(const Forest& f, const FeatureVector& fv, double theta_lo = 0.3,
                       double theta_hi = 0.8);

struct SignaturePattern {
    std::string family;
    FeatureVector features;
    std::string origin;    // dataset | honeypot
    bool verified = false; // provenance signature checked
};

struct SignatureDB {
    std::vector<SignaturePattern> patterns;
    uint64_t version = 0;
};

// refuses any pattern whose provenance has not been verified
void ingest_signatures(SignatureDB& db, const std::vector<SignaturePattern>& batch);

// training rows contributed by the signature database
std::vector<FlowRecord> signature_records(const SignatureDB& db, size_t feature_count);

// empty active_features keeps the full schema in play
Forest retrain_with_signatures(const Dataset& base, const SignatureDB& db,
                               const ForestConfig& cfg, uint64_t seed,
                               const std::vector<size_t>& active_features = {});

}  // namespace sentinel
