#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/dataset.hpp"

namespace sentinel {

struct TreeNode {
    int32_t feature = -1;  // -1 marks a leaf
    double threshold = 0.0;
    int32_t left = -1;
    int32_t right = -1;
    double attack_frac = 0.0;
};

struct DecisionTree {
    std::vector<TreeNode> nodes;
    std::vector<double> split_gain;  // impurity decrease per schema feature
    double oob_accuracy = 1.0;

    double attack_frac(const FeatureVector& fv) const;
    bool votes_attack(const FeatureVector& fv) const { return attack_frac(fv) > 0.5; }
};

struct ForestConfig {
    size_t trees = 50;              // Z
    size_t max_depth = 16;
    size_t min_leaf = 2;
    size_t features_per_split = 0;  // 0 means sqrt of active feature count
    double p_good_important = 0.5;    // p_u in the sizing bound
    double p_good_unimportant = 0.5;  // p_g
    double level_prob = 0.5;          // P
};

struct Forest {
    ForestConfig cfg;
    uint64_t seed = 0;
    size_t n_features = 0;
    std::vector<size_t> active_features;  // sorted, the working feature set
    std::vector<DecisionTree> trees;

    // fraction of trees voting attack
    double attack_vote(const FeatureVector& fv) const;
    ClassLabel classify(const FeatureVector& fv) const;
    double avg_nodes() const;  // M_av
};

// deterministic for fixed (data, config, seed); bootstrap per tree with the
// complement scoring out-of-bag accuracy
Forest train_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed);
Forest train_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed,
                    const std::vector<size_t>& active_features);

double forest_accuracy(const Forest& f, const Dataset& ds);

void save_forest(const std::string& path, const Forest& f);
Forest load_forest(const std::string& path);

}  // namespace sentinel
