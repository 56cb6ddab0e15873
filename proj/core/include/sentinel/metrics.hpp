#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace sentinel {

struct Confusion {
    uint64_t tp = 0;
    uint64_t fp = 0;
    uint64_t tn = 0;
    uint64_t fn = 0;

    uint64_t total() const { return tp + fp + tn + fn; }
};

// undefined ratios stay empty instead of dividing by zero
struct MetricsReport {
    Confusion counts;
    std::optional<double> accuracy;
    std::optional<double> precision;
    std::optional<double> recall;  // detection rate
    std::optional<double> f1;
    std::optional<double> fpr;
    std::optional<double> fnr;
};

MetricsReport compute_metrics(const Confusion& c);

// "na" for undefined entries
std::string metric_text(const std::optional<double>& v);

struct RocPoint {
    double fpr = 0.0;
    double tpr = 0.0;
    double threshold = 0.0;
};

struct ScoredSample {
    double score = 0.0;
    bool positive = false;
};

struct RocCurve {
    std::vector<RocPoint> points;  // (0,0) first, (1,1) last
    double auc = 0.0;
};

// descending threshold sweep over the distinct scores; needs both classes
RocCurve roc_curve(const std::vector<ScoredSample>& samples);

}  // namespace sentinel
