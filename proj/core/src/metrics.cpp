#include "sentinel/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "sentinel/error.hpp"

namespace sentinel {

namespace {

std::optional<double> ratio(uint64_t num, uint64_t den) {
    if (den == 0) return std::nullopt;
    return double(num) / double(den);
}

}  // namespace

MetricsReport compute_metrics(const Confusion& c) {
    MetricsReport r;
    r.counts = c;
    r.accuracy = ratio(c.tp + c.tn, c.total());
    r.precision = ratio(c.tp, c.tp + c.fp);
    r.recall = ratio(c.tp, c.tp + c.fn);
    r.fpr = ratio(c.fp, c.fp + c.tn);
    r.fnr = ratio(c.fn, c.fn + c.tp);
    if (r.precision && r.recall && *r.precision + *r.recall > 0.0)
        r.f1 = 2.0 * *r.precision * *r.recall / (*r.precision + *r.recall);
    return r;
}

std::string metric_text(const std::optional<double>& v) {
    if (!v) return "na";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.9g", *v);
    return buf;
}

RocCurve roc_curve(const std::vector<ScoredSample>& samples) {
    uint64_t pos = 0, neg = 0;
    for (const auto& s : samples) (s.positive ? pos : neg) += 1;
    if (pos == 0 || neg == 0)
        raise(Errc::one_class, "roc needs both a positive and a negative sample");

    std::vector<ScoredSample> sorted(samples);
    std::sort(sorted.begin(), sorted.end(), [](const ScoredSample& a, const ScoredSample& b) {
        return a.score > b.score;
    });

    RocCurve curve;
    curve.points.push_back({0.0, 0.0, std::numeric_limits<double>::infinity()});
    uint64_t tp = 0, fp = 0;
    for (size_t i = 0; i < sorted.size(); ++i) {
        (sorted[i].positive ? tp : fp) += 1;
        // emit one point per distinct score once the whole tie group is in
        if (i + 1 < sorted.size() && sorted[i + 1].score == sorted[i].score) continue;
        curve.points.push_back({double(fp) / double(neg), double(tp) / double(pos),
                                sorted[i].score});
    }

    for (size_t i = 1; i < curve.points.size(); ++i) {
        const auto& a = curve.points[i - 1];
        const auto& b = curve.points[i];
        curve.auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) / 2.0;
    }
    return curve;
}

}  // namespace sentinel
