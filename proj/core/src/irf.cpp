#include "sentinel/irf.hpp"

#include <algorithm>
#include <cmath>

#include "sentinel/error.hpp"

namespace sentinel {

std::vector<double> feature_weights(const Forest& f) {
    if (f.trees.empty()) raise(Errc::invalid_config, "forest has no trees");
    std::vector<double> raw(f.n_features, 0.0);
    for (const auto& t : f.trees)
        for (size_t k = 0; k < raw.size(); ++k) raw[k] += t.split_gain[k] * t.oob_accuracy;
    double top = *std::max_element(raw.begin(), raw.end());
    if (top <= 0.0) raise(Errc::all_zero_weights, "every feature weight is zero");
    for (double& w : raw) w /= top;
    return raw;
}

FeaturePools partition_features(const std::vector<double>& weights,
                                const std::vector<size_t>& active, size_t h0) {
    if (h0 == 0) raise(Errc::invalid_config, "h0 must be positive");
    if (active.empty()) raise(Errc::invalid_config, "active feature set is empty");
    std::vector<size_t> order(active);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        if (weights[a] != weights[b]) return weights[a] > weights[b];
        return a < b;
    });
    FeaturePools pools;
    for (size_t i = 0; i < order.size(); ++i)
        (i < h0 ? pools.important : pools.unimportant).push_back(order[i]);
    std::sort(pools.important.begin(), pools.important.end());
    std::sort(pools.unimportant.begin(), pools.unimportant.end());
    return pools;
}

PruneStats prune_unimportant(FeaturePools& pools, const std::vector<double>& weights) {
    PruneStats st;
    const auto& pool = pools.unimportant;
    if (pool.empty()) return st;  // alpha = beta = 0, nothing removable

    for (size_t k : pool) st.alpha += weights[k];
    st.alpha /= double(pool.size());
    for (size_t k : pool) {
        double d = weights[k] - st.alpha;
        st.beta += d * d;
    }
    st.beta = std::sqrt(st.beta / double(pool.size()));
    st.threshold = st.alpha - 2.0 * st.beta;

    std::vector<size_t> keep;
    for (size_t k : pool) {
        if (weights[k] < st.threshold)
            st.removed.push_back(k);
        else
            keep.push_back(k);
    }
    pools.unimportant = std::move(keep);
    return st;
}

std::vector<size_t> promote_features(FeaturePools& pools, const std::vector<double>& weights) {
    if (pools.important.empty() || pools.unimportant.empty()) return {};
    double floor_w = weights[pools.important[0]];
    for (size_t k : pools.important) floor_w = std::min(floor_w, weights[k]);

    std::vector<size_t> promoted, keep;
    for (size_t k : pools.unimportant)
        (weights[k] >= floor_w ? promoted : keep).push_back(k);
    if (!promoted.empty()) {
        pools.unimportant = std::move(keep);
        pools.important.insert(pools.important.end(), promoted.begin(), promoted.end());
        std::sort(pools.important.begin(), pools.important.end());
    }
    return promoted;
}

double tree_level(size_t z, double m_av, double p) {
    if (z == 0 || m_av <= 0.0) raise(Errc::non_positive, "tree level needs z >= 1, m_av > 0");
    if (p <= 0.0 || p >= 1.0) raise(Errc::invalid_config, "level probability must be in (0, 1)");
    return double(z) * m_av * std::pow(p, m_av - 1.0) *
           std::pow(1.0 - std::pow(p, m_av), double(z) - 1.0);
}

int tree_delta(double level, double p_u, int dh, double p_g, int dg, size_t g) {
    if (g == 0) raise(Errc::non_positive, "unimportant pool size must be positive");
    double raw = level * (p_u * double(dh) + p_g * double(dg)) / double(g);
    int mag = int(std::floor(std::fabs(raw)));
    if (mag == 0) return 0;
    return raw < 0.0 ? -mag : mag;
}

RefineReport refine_forest(const Dataset& train, const ForestConfig& cfg, uint64_t seed,
                           size_t h0, size_t max_passes, size_t min_pool) {
    RefineReport rep;
    rep.forest = train_forest(train, cfg, seed);
    std::vector<double> weights = feature_weights(rep.forest);
    rep.pools = partition_features(weights, rep.forest.active_features, h0);

    size_t z = rep.forest.cfg.trees;
    for (size_t pass = 0; pass < max_passes; ++pass) {
        size_t g = rep.pools.unimportant.size();
        if (g < min_pool) break;

        PassLog log;
        log.pass = pass;

        PruneStats st = prune_unimportant(rep.pools, weights);
        log.alpha = st.alpha;
        log.beta = st.beta;
        log.threshold = st.threshold;
        log.pruned = st.removed;
        log.promoted = promote_features(rep.pools, weights);

        log.dh = int(log.promoted.size());
        log.dg = -int(log.pruned.size() + log.promoted.size());
        log.level = tree_level(z, rep.forest.avg_nodes(), cfg.level_prob);
        log.delta_z = tree_delta(log.level, cfg.p_good_important, log.dh, cfg.p_good_unimportant,
                                 log.dg, g);

        z = size_t(std::max<int64_t>(1, int64_t(z) + log.delta_z));

        std::vector<size_t> active(rep.pools.important);
        active.insert(active.end(), rep.pools.unimportant.begin(), rep.pools.unimportant.end());
        std::sort(active.begin(), active.end());

        ForestConfig next = cfg;
        next.trees = z;
        rep.forest = train_forest(train, next, Rng(seed).fork(pass + 1).seed(), active);
        weights = feature_weights(rep.forest);

        log.trees = z;
        log.active = active.size();
        rep.passes.push_back(std::move(log));
    }
    return rep;
}

const char* to_string(Triage t) {
    switch (t) {
        case Triage::normal: return "Normal";
        case Triage::malicious: return "Malicious";
        case Triage::suspicious: return "Suspicious";
    }
    return "?";
}

Triage classify_triage(const Forest& f, const FeatureVector& fv, double theta_lo,
                       double theta_hi) {
    if (!(theta_lo >= 0.0 && theta_lo <= theta_hi && theta_hi <= 1.0))
        raise(Errc::invalid_config, "triage thresholds must satisfy 0 <= lo <= hi <= 1");
    double vote = f.attack_vote(fv);
    if (vote < theta_lo) return Triage::normal;
    if (vote >= theta_hi) return Triage::malicious;
    return Triage::suspicious;
}

void ingest_signatures(SignatureDB& db, const std::vector<SignaturePattern>& batch) {
    for (const auto& p : batch)
        if (!p.verified)
            raise(Errc::unverified_pattern, "pattern lacks verified provenance: " + p.family);
    db.patterns.insert(db.patterns.end(), batch.begin(), batch.end());
    ++db.version;
}

std::vector<FlowRecord> signature_records(const SignatureDB& db, size_t feature_count) {
    std::vector<FlowRecord> out;
    out.reserve(db.patterns.size());
    for (const auto& p : db.patterns) {
        if (p.features.size() != feature_count)
            raise(Errc::dim_mismatch, "pattern width does not match the schema");
        FlowRecord rec;
        rec.features = p.features;
        rec.label = ClassLabel::attack;
        rec.family = p.family;
        out.push_back(std::move(rec));
    }
    return out;
}

Forest retrain_with_signatures(const Dataset& base, const SignatureDB& db,
                               const ForestConfig& cfg, uint64_t seed,
                               const std::vector<size_t>& active_features) {
    Dataset merged = base;
    auto extra = signature_records(db, base.schema.size());
    merged.records.insert(merged.records.end(), extra.begin(), extra.end());
    if (active_features.empty()) return train_forest(merged, cfg, seed);
    return train_forest(merged, cfg, seed, active_features);
}

}  // namespace sentinel
