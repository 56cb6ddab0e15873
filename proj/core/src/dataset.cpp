#include "sentinel/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "sentinel/error.hpp"

namespace sentinel {

namespace {

std::string trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(uint8_t(s[a]))) ++a;
    while (b > a && std::isspace(uint8_t(s[b - 1]))) --b;
    return std::string(s.substr(a, b - a));
}

std::string lower(std::string s) {
    for (char& c : s) c = char(std::tolower(uint8_t(c)));
    return s;
}

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.push_back("");
    return out;
}

bool parse_double(const std::string& raw, double& out) {
    std::string s = trim(raw);
    if (s.empty()) return false;
    const char* b = s.data();
    const char* e = b + s.size();
    auto r = std::from_chars(b, e, out);
    if (r.ec != std::errc() || r.ptr != e) return false;
    return std::isfinite(out);
}

std::string label_text(const FlowRecord& rec) {
    if (rec.label == ClassLabel::benign) return "BENIGN";
    return rec.family.empty() ? "Attack" : rec.family;
}

}  // namespace

FeatureSchema default_schema() {
    static const FeatureSchema schema{{
        "Total Fwd Packets",
        "Total Length of Fwd Packets",
        "Fwd Packet Length Max",
        "Fwd Packet Length Min",
        "Fwd Packet Length Mean",
        "Fwd Packet Length Std",
        "Fwd IAT Total",
        "Fwd IAT Mean",
        "Fwd IAT Std",
        "Fwd IAT Max",
        "Fwd IAT Min",
        "Fwd PSH Flags",
        "Fwd URG Flags",
        "Fwd Header Length",
        "Fwd Packets/s",
        "Avg Fwd Segment Size",
        "Fwd Avg Bytes/Bulk",
        "Fwd Avg Packets/Bulk",
        "Fwd Avg Bulk Rate",
        "Subflow Fwd Packets",
        "Subflow Fwd Bytes",
        "Init Win Bytes Fwd",
        "Act Data Pkts Fwd",
        "Min Seg Size Fwd",
        "Total Bwd Packets",
        "Total Length of Bwd Packets",
        "Bwd Packet Length Max",
        "Bwd Packet Length Min",
        "Bwd Packet Length Mean",
        "Bwd Packet Length Std",
        "Bwd IAT Total",
        "Bwd IAT Mean",
        "Bwd IAT Std",
        "Bwd IAT Max",
        "Bwd IAT Min",
        "Bwd PSH Flags",
        "Bwd URG Flags",
        "Bwd Header Length",
        "Bwd Packets/s",
        "Avg Bwd Segment Size",
        "Bwd Avg Bytes/Bulk",
        "Bwd Avg Packets/Bulk",
        "Bwd Avg Bulk Rate",
        "Subflow Bwd Packets",
        "Subflow Bwd Bytes",
        "Init Win Bytes Bwd",
    }};
    return schema;
}

const std::vector<std::string>& known_families() {
    static const std::vector<std::string> fams = {"DoS",          "DDoS", "Web", "Heartbleed",
                                                  "Infiltration", "Scan", "Bot"};
    return fams;
}

FeatureSchema load_schema(const std::string& path) {
    std::ifstream in(path);
    if (!in) raise(Errc::missing_file, "cannot open schema file: " + path);
    FeatureSchema schema;
    std::string line;
    while (std::getline(in, line)) {
        std::string name = trim(line);
        if (!name.empty()) schema.names.push_back(name);
    }
    if (schema.names.empty()) raise(Errc::schema_mismatch, "schema file has no feature names");
    return schema;
}

void save_schema(const std::string& path, const FeatureSchema& schema) {
    std::ofstream out(path);
    if (!out) raise(Errc::missing_file, "cannot write schema file: " + path);
    for (const auto& n : schema.names) out << n << "\n";
}

namespace {

Dataset load_csv_impl(const std::string& path, const FeatureSchema* want) {
    std::ifstream in(path);
    if (!in) raise(Errc::missing_file, "cannot open dataset: " + path);

    std::string line;
    if (!std::getline(in, line)) raise(Errc::empty_dataset, "dataset has no header: " + path);
    if (!line.empty() && line.back() == '\r') line.pop_back();

    auto header = split_csv(line);
    int label_col = -1;
    std::vector<std::string> header_names;
    for (size_t i = 0; i < header.size(); ++i) {
        std::string name = trim(header[i]);
        if (lower(name) == "label") {
            label_col = int(i);
        } else {
            header_names.push_back(name);
        }
    }
    if (label_col < 0) raise(Errc::schema_mismatch, "dataset header lacks a Label column");

    Dataset ds;
    std::vector<size_t> cols;  // csv column index per schema position
    if (want) {
        ds.schema = *want;
        for (const auto& name : want->names) {
            std::string key = lower(trim(name));
            int found = -1;
            for (size_t i = 0; i < header.size(); ++i) {
                if (int(i) != label_col && lower(trim(header[i])) == key) {
                    found = int(i);
                    break;
                }
            }
            if (found < 0)
                raise(Errc::schema_mismatch, "dataset header missing feature: " + name);
            cols.push_back(size_t(found));
        }
    } else {
        ds.schema.names = header_names;
        if (ds.schema.names.empty())
            raise(Errc::schema_mismatch, "dataset header has no feature columns");
        for (size_t i = 0; i < header.size(); ++i)
            if (int(i) != label_col) cols.push_back(i);
    }

    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (trim(line).empty()) continue;
        auto cells = split_csv(line);
        if (cells.size() != header.size()) {
            ++ds.dropped_rows;
            continue;
        }
        FlowRecord rec;
        rec.features.resize(cols.size());
        bool ok = true;
        for (size_t i = 0; i < cols.size(); ++i) {
            if (!parse_double(cells[cols[i]], rec.features[i])) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            ++ds.dropped_rows;
            continue;
        }
        std::string lab = trim(cells[size_t(label_col)]);
        if (lab.empty()) {
            ++ds.dropped_rows;
            continue;
        }
        if (lower(lab) == "benign") {
            rec.label = ClassLabel::benign;
        } else {
            rec.label = ClassLabel::attack;
            rec.family = lab;
        }
        ds.records.push_back(std::move(rec));
    }
    if (ds.records.empty()) raise(Errc::empty_dataset, "dataset has no usable rows: " + path);
    return ds;
}

}  // namespace

Dataset load_flow_csv(const std::string& path, const FeatureSchema& schema) {
    return load_csv_impl(path, &schema);
}

Dataset load_flow_csv(const std::string& path) { return load_csv_impl(path, nullptr); }

void save_flow_csv(const std::string& path, const Dataset& ds) {
    std::ofstream out(path);
    if (!out) raise(Errc::missing_file, "cannot write dataset: " + path);
    for (size_t i = 0; i < ds.schema.names.size(); ++i) out << ds.schema.names[i] << ",";
    out << "Label\n";
    out.precision(17);
    for (const auto& rec : ds.records) {
        for (double v : rec.features) out << v << ",";
        out << label_text(rec) << "\n";
    }
}

std::vector<size_t> family_shift_mask(const std::string& family, size_t informative) {
    if (informative == 0) return {};
    const auto& fams = known_families();
    size_t idx = fams.size();
    for (size_t i = 0; i < fams.size(); ++i)
        if (fams[i] == family) idx = i;
    if (idx == fams.size()) {
        // unknown family still gets a stable slice
        size_t h = 1469598103934665603ull;
        for (char c : family) h = (h ^ uint8_t(c)) * 1099511628211ull;
        idx = fams.size() + h % 7;
    }
    std::vector<size_t> mask;
    for (size_t j = 0; j < 3 && j < informative; ++j) mask.push_back((3 * idx + j) % informative);
    std::sort(mask.begin(), mask.end());
    mask.erase(std::unique(mask.begin(), mask.end()), mask.end());
    return mask;
}

namespace {

// formulaic per-feature baseline keeps the generator free of tables
double base_mean(size_t j) { return 10.0 + double(j % 11); }
double base_spread(size_t j) { return 1.0 + 0.25 * double(j % 5); }

FlowRecord synth_record(const SynthConfig& cfg, Rng& rng, const std::string& family) {
    FlowRecord rec;
    size_t n = cfg.schema.names.empty() ? default_schema().size() : cfg.schema.size();
    rec.features.resize(n);
    for (size_t j = 0; j < n; ++j)
        rec.features[j] = rng.gaussian(base_mean(j), base_spread(j) * cfg.noise_sigma);
    if (!family.empty()) {
        rec.label = ClassLabel::attack;
        rec.family = family;
        for (size_t j : family_shift_mask(family, std::min(cfg.informative, n)))
            rec.features[j] += cfg.shift * base_spread(j) * cfg.noise_sigma;
    }
    return rec;
}

}  // namespace

Dataset synth_traffic(const SynthConfig& cfg, uint64_t seed) {
    if (cfg.benign_count == 0 && cfg.attack_counts.empty())
        raise(Errc::invalid_config, "synth_traffic needs at least one row");
    Dataset ds;
    ds.schema = cfg.schema.names.empty() ? default_schema() : cfg.schema;
    Rng rng(seed);
    for (size_t i = 0; i < cfg.benign_count; ++i)
        ds.records.push_back(synth_record(cfg, rng, ""));
    for (const auto& [family, count] : cfg.attack_counts) {
        if (family.empty()) raise(Errc::invalid_config, "attack family name must be nonempty");
        for (size_t i = 0; i < count; ++i) ds.records.push_back(synth_record(cfg, rng, family));
    }
    return ds;
}

FlowRecord synth_flow(const SynthConfig& cfg, Rng& rng, const std::string& family) {
    return synth_record(cfg, rng, family);
}

FeatureVector vectorize(const FlowRecord& rec) { return rec.features; }

MinMaxScaler MinMaxScaler::fit(const Dataset& ds) {
    if (ds.records.empty()) raise(Errc::empty_dataset, "cannot fit scaler on empty dataset");
    size_t n = ds.schema.size();
    MinMaxScaler sc;
    sc.lo.assign(n, 0.0);
    sc.hi.assign(n, 0.0);
    for (size_t j = 0; j < n; ++j) {
        double lo = ds.records[0].features[j], hi = lo;
        for (const auto& rec : ds.records) {
            lo = std::min(lo, rec.features[j]);
            hi = std::max(hi, rec.features[j]);
        }
        sc.lo[j] = lo;
        sc.hi[j] = hi;
    }
    return sc;
}

ByteImage rescale_to_image(const FeatureVector& fv, const MinMaxScaler& scaler, size_t rows,
                           size_t cols) {
    if (rows * cols < fv.size())
        raise(Errc::too_small, "image has fewer pixels than features");
    if (scaler.lo.size() < fv.size())
        raise(Errc::dim_mismatch, "scaler does not cover the feature vector");
    ByteImage img;
    img.rows = rows;
    img.cols = cols;
    img.px.assign(rows * cols, 0);
    for (size_t j = 0; j < fv.size(); ++j) {
        double range = scaler.hi[j] - scaler.lo[j];
        if (range <= 0.0) continue;  // constant feature stays 0
        double v = (fv[j] - scaler.lo[j]) / range * 255.0;
        double r = std::floor(v + 0.5);  // half-up
        img.px[j] = uint8_t(std::clamp(r, 0.0, 255.0));
    }
    return img;
}

}  // namespace sentinel
