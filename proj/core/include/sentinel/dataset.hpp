#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/rng.hpp"

namespace sentinel {

using FeatureVector = std::vector<double>;

enum class ClassLabel { benign, attack };

struct FlowRecord {
    FeatureVector features;
    ClassLabel label = ClassLabel::benign;
    std::string family;  // empty for benign traffic
};

struct FeatureSchema {
    std::vector<std::string> names;
    size_t size() const { return names.size(); }
};

struct Dataset {
    FeatureSchema schema;
    std::vector<FlowRecord> records;
    size_t dropped_rows = 0;

    size_t size() const { return records.size(); }
};

struct ByteImage {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<uint8_t> px;  // row-major

    uint8_t at(size_t r, size_t c) const { return px[r * cols + c]; }
};

// bidirectional flow statistics, 24 forward + 22 backward names
FeatureSchema default_schema();

// attack families the synthetic generator knows; index order is stable
const std::vector<std::string>& known_families();

FeatureSchema load_schema(const std::string& path);
void save_schema(const std::string& path, const FeatureSchema& schema);

// header must carry every schema name plus a Label column, matched
// case-insensitively with whitespace trimmed; malformed rows are dropped
// and counted, an empty result is an error
Dataset load_flow_csv(const std::string& path, const FeatureSchema& schema);

// schema inferred from the header (all columns except Label)
Dataset load_flow_csv(const std::string& path);

void save_flow_csv(const std::string& path, const Dataset& ds);

struct SynthConfig {
    size_t benign_count = 0;
    std::vector<std::pair<std::string, size_t>> attack_counts;  // family -> rows
    double shift = 2.0;        // family mean offset in units of feature spread
    double noise_sigma = 1.0;  // multiplier on baseline spread
    size_t informative = 10;   // leading features eligible to carry a shift
    FeatureSchema schema;      // default_schema() when empty
};

// deterministic for a fixed (config, seed); each family displaces its own
// three-feature slice of the informative block
Dataset synth_traffic(const SynthConfig& cfg, uint64_t seed);

// one flow from the same generator; empty family gives benign
FlowRecord synth_flow(const SynthConfig& cfg, Rng& rng, const std::string& family);

// feature indices family shifts under the given config
std::vector<size_t> family_shift_mask(const std::string& family, size_t informative);

FeatureVector vectorize(const FlowRecord& rec);

struct MinMaxScaler {
    std::vector<double> lo;
    std::vector<double> hi;

    static MinMaxScaler fit(const Dataset& ds);
};

// min-max per feature onto [0,255], rounding half-up; constant features map
// to 0; unused trailing pixels stay 0
ByteImage rescale_to_image(const FeatureVector& fv, const MinMaxScaler& scaler, size_t rows,
                           size_t cols);

}  // namespace sentinel
