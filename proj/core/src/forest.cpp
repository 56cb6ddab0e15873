#include "sentinel/forest.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "sentinel/bytes.hpp"
#include "sentinel/error.hpp"
#include "sentinel/rng.hpp"

namespace sentinel {

namespace {

struct Builder {
    const Dataset& data;
    const ForestConfig& cfg;
    const std::vector<size_t>& active;
    DecisionTree& tree;
    Rng& rng;
    size_t mtry;

    double gini(size_t attack, size_t total) const {
        if (total == 0) return 0.0;
        double p = double(attack) / double(total);
        return 2.0 * p * (1.0 - p);
    }

    size_t count_attacks(const std::vector<uint32_t>& idx) const {
        size_t a = 0;
        for (uint32_t i : idx) a += data.records[i].label == ClassLabel::attack;
        return a;
    }

    int build(std::vector<uint32_t>& idx, size_t depth) {
        size_t attacks = count_attacks(idx);
        int id = int(tree.nodes.size());
        tree.nodes.push_back({});
        tree.nodes[id].attack_frac = idx.empty() ? 0.0 : double(attacks) / double(idx.size());

        bool pure = attacks == 0 || attacks == idx.size();
        if (pure || depth >= cfg.max_depth || idx.size() < 2 * cfg.min_leaf) return id;

        // candidate features without replacement
        std::vector<size_t> cand(active);
        for (size_t i = 0; i < mtry && i < cand.size(); ++i)
            std::swap(cand[i], cand[i + rng.below(cand.size() - i)]);
        cand.resize(std::min(mtry, cand.size()));

        double parent = gini(attacks, idx.size());
        double best_gain = 0.0;
        size_t best_feat = 0;
        double best_thr = 0.0;

        std::vector<std::pair<double, uint8_t>> vals(idx.size());
        for (size_t feat : cand) {
            for (size_t i = 0; i < idx.size(); ++i)
                vals[i] = {data.records[idx[i]].features[feat],
                           data.records[idx[i]].label == ClassLabel::attack};
            std::sort(vals.begin(), vals.end());
            size_t left_n = 0, left_a = 0;
            for (size_t i = 0; i + 1 < vals.size(); ++i) {
                ++left_n;
                left_a += vals[i].second;
                if (vals[i].first == vals[i + 1].first) continue;
                size_t right_n = vals.size() - left_n;
                if (left_n < cfg.min_leaf || right_n < cfg.min_leaf) continue;
                size_t right_a = attacks - left_a;
                double g = parent - (double(left_n) * gini(left_a, left_n) +
                                     double(right_n) * gini(right_a, right_n)) /
                                        double(vals.size());
                if (g > best_gain) {
                    best_gain = g;
                    best_feat = feat;
                    best_thr = 0.5 * (vals[i].first + vals[i + 1].first);
                }
            }
        }
        if (best_gain <= 0.0) return id;

        std::vector<uint32_t> lo, hi;
        for (uint32_t i : idx)
            (data.records[i].features[best_feat] <= best_thr ? lo : hi).push_back(i);
        if (lo.empty() || hi.empty()) return id;

        // gain weighted by the node's share of the bootstrap sample
        tree.split_gain[best_feat] += best_gain * double(idx.size());

        tree.nodes[id].feature = int32_t(best_feat);
        tree.nodes[id].threshold = best_thr;
        idx.clear();
        idx.shrink_to_fit();
        int l = build(lo, depth + 1);
        int r = build(hi, depth + 1);
        tree.nodes[id].left = l;
        tree.nodes[id].right = r;
        return id;
    }
};

DecisionTree train_tree(const Dataset& data, const ForestConfig& cfg,
                        const std::vector<size_t>& active, Rng rng, size_t n_features) {
    DecisionTree tree;
    tree.split_gain.assign(n_features, 0.0);

    size_t n = data.records.size();
    std::vector<uint32_t> sample(n);
    std::vector<uint8_t> in_bag(n, 0);
    for (size_t i = 0; i < n; ++i) {
        uint32_t j = uint32_t(rng.below(n));
        sample[i] = j;
        in_bag[j] = 1;
    }

    size_t mtry = cfg.features_per_split;
    if (mtry == 0) mtry = std::max<size_t>(1, size_t(std::sqrt(double(active.size())) + 0.5));
    Builder b{data, cfg, active, tree, rng, mtry};
    b.build(sample, 0);

    // normalize gains so each tree distributes one unit of importance
    double total = 0.0;
    for (double g : tree.split_gain) total += g;
    if (total > 0.0)
        for (double& g : tree.split_gain) g /= total;

    size_t oob_n = 0, oob_ok = 0;
    for (size_t i = 0; i < n; ++i) {
        if (in_bag[i]) continue;
        ++oob_n;
        bool attack = tree.votes_attack(data.records[i].features);
        oob_ok += attack == (data.records[i].label == ClassLabel::attack);
    }
    tree.oob_accuracy = oob_n == 0 ? 1.0 : double(oob_ok) / double(oob_n);
    return tree;
}

}  // namespace

double DecisionTree::attack_frac(const FeatureVector& fv) const {
    int id = 0;
    while (nodes[id].feature >= 0)
        id = fv[size_t(nodes[id].feature)] <= nodes[id].threshold ? nodes[id].left
                                                                  : nodes[id].right;
    return nodes[id].attack_frac;
}

double Forest::attack_vote(const FeatureVector& fv) const {
    if (trees.empty()) return 0.0;
    size_t yes = 0;
    for (const auto& t : trees) yes += t.votes_attack(fv);
    return double(yes) / double(trees.size());
}

ClassLabel Forest::classify(const FeatureVector& fv) const {
    return attack_vote(fv) > 0.5 ? ClassLabel::attack : ClassLabel::benign;
}

double Forest::avg_nodes() const {
    if (trees.empty()) return 0.0;
    size_t total = 0;
    for (const auto& t : trees) total += t.nodes.size();
    return double(total) / double(trees.size());
}

Forest train_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed) {
    std::vector<size_t> all(train.schema.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = i;
    return train_forest(train, cfg, seed, all);
}

Forest train_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed,
                    const std::vector<size_t>& active_features) {
    if (train.records.empty()) raise(Errc::empty_dataset, "cannot train on empty dataset");
    if (cfg.trees == 0) raise(Errc::invalid_config, "forest needs at least one tree");
    if (active_features.empty()) raise(Errc::invalid_config, "active feature set is empty");
    for (size_t f : active_features)
        if (f >= train.schema.size()) raise(Errc::invalid_config, "active feature out of range");

    Forest forest;
    forest.cfg = cfg;
    forest.seed = seed;
    forest.n_features = train.schema.size();
    forest.active_features = active_features;
    std::sort(forest.active_features.begin(), forest.active_features.end());

    Rng root(seed);
    forest.trees.reserve(cfg.trees);
    for (size_t t = 0; t < cfg.trees; ++t)
        forest.trees.push_back(
            train_tree(train, cfg, forest.active_features, root.fork(t), forest.n_features));
    return forest;
}

double forest_accuracy(const Forest& f, const Dataset& ds) {
    if (ds.records.empty()) raise(Errc::empty_dataset, "cannot score empty dataset");
    size_t ok = 0;
    for (const auto& rec : ds.records) ok += f.classify(rec.features) == rec.label;
    return double(ok) / double(ds.records.size());
}

namespace {

constexpr char MAGIC[4] = {'I', 'R', 'F', '1'};

}  // namespace

void save_forest(const std::string& path, const Forest& f) {
    Bytes buf;
    append_bytes(buf, reinterpret_cast<const uint8_t*>(MAGIC), 4);
    append_u32le(buf, 1);  // version
    append_u64le(buf, f.seed);
    append_u32le(buf, uint32_t(f.n_features));
    append_u32le(buf, uint32_t(f.active_features.size()));
    for (size_t a : f.active_features) append_u32le(buf, uint32_t(a));
    append_u32le(buf, uint32_t(f.cfg.trees));
    append_u32le(buf, uint32_t(f.cfg.max_depth));
    append_u32le(buf, uint32_t(f.cfg.min_leaf));
    append_u32le(buf, uint32_t(f.cfg.features_per_split));
    append_f64le(buf, f.cfg.p_good_important);
    append_f64le(buf, f.cfg.p_good_unimportant);
    append_f64le(buf, f.cfg.level_prob);
    append_u32le(buf, uint32_t(f.trees.size()));
    for (const auto& t : f.trees) {
        append_f64le(buf, t.oob_accuracy);
        append_u32le(buf, uint32_t(t.split_gain.size()));
        for (double g : t.split_gain) append_f64le(buf, g);
        append_u32le(buf, uint32_t(t.nodes.size()));
        for (const auto& n : t.nodes) {
            append_i32le(buf, n.feature);
            append_f64le(buf, n.threshold);
            append_i32le(buf, n.left);
            append_i32le(buf, n.right);
            append_f64le(buf, n.attack_frac);
        }
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::missing_file, "cannot write forest file: " + path);
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
}

Forest load_forest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open forest file: " + path);
    Bytes buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    size_t pos = 0;
    auto need = [&](size_t n) {
        if (pos + n > buf.size()) raise(Errc::bad_format, "truncated forest file");
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
    auto get_f64 = [&] {
        need(8);
        double v = read_f64le(buf.data() + pos);
        pos += 8;
        return v;
    };

    need(4);
    if (std::memcmp(buf.data(), MAGIC, 4) != 0)
        raise(Errc::bad_format, "not a forest file (bad magic)");
    pos = 4;
    if (get_u32() != 1) raise(Errc::bad_format, "unsupported forest version");

    Forest f;
    f.seed = get_u64();
    f.n_features = get_u32();
    f.active_features.resize(get_u32());
    for (auto& a : f.active_features) a = get_u32();
    f.cfg.trees = get_u32();
    f.cfg.max_depth = get_u32();
    f.cfg.min_leaf = get_u32();
    f.cfg.features_per_split = get_u32();
    f.cfg.p_good_important = get_f64();
    f.cfg.p_good_unimportant = get_f64();
    f.cfg.level_prob = get_f64();
    f.trees.resize(get_u32());
    for (auto& t : f.trees) {
        t.oob_accuracy = get_f64();
        t.split_gain.resize(get_u32());
        for (auto& g : t.split_gain) g = get_f64();
        t.nodes.resize(get_u32());
        for (auto& n : t.nodes) {
            n.feature = int32_t(get_u32());
            n.threshold = get_f64();
            n.left = int32_t(get_u32());
            n.right = int32_t(get_u32());
            n.attack_frac = get_f64();
        }
    }
    return f;
}

}  // namespace sentinel
