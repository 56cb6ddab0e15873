#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sentinel/dataset.hpp"

namespace sentinel {

// (input - kernel + 2 pad) / stride + 1, exact division required
size_t conv_output_len(size_t input, size_t kernel, size_t pad, size_t stride);

double sigmoid_act(double t);
double tanh_act(double t);

struct ConvSpec {
    size_t filters = 8;
    size_t kernel = 3;
    size_t pad = 1;
    size_t stride = 1;
};

struct DcrnnConfig {
    size_t image_rows = 8;
    size_t image_cols = 8;
    std::vector<ConvSpec> convs = {ConvSpec{}};
    size_t pool = 2;    // square max pool after the conv stack
    size_t hidden = 16; // recurrent width
    size_t classes = 2;
};

struct ConvLayer {
    size_t in_ch = 1;
    ConvSpec spec;
    std::vector<double> w;  // [filter][in_ch][kr][kc]
    std::vector<double> b;  // per filter
};

// gated recurrent cell; the update gate takes an extra projected copy of the
// step input on top of the usual joint term
struct GruCell {
    size_t hidden = 0;
    size_t input = 0;
    std::vector<double> wc;    // update gate, [hidden][hidden + input]
    std::vector<double> wb;    // reset gate, [hidden][hidden + input]
    std::vector<double> wh;    // candidate, [hidden][hidden + input]
    std::vector<double> proj;  // update-gate input projection, [hidden][input]
};

struct Dcrnn {
    DcrnnConfig cfg;
    std::vector<ConvLayer> convs;
    GruCell gru;
    std::vector<double> dense;  // [classes][hidden]

    size_t seq_steps = 0;  // pooled rows
    size_t seq_input = 0;  // channels x pooled cols
};

// Glorot-uniform weights, zero biases, deterministic for a fixed seed
Dcrnn make_dcrnn(const DcrnnConfig& cfg, uint64_t seed);

// class probabilities for one image
std::vector<double> dcrnn_forward(const Dcrnn& model, const ByteImage& img);

// argmax class; an exact probability tie resolves to benign
ClassLabel dcrnn_classify(const Dcrnn& model, const ByteImage& img);

struct DcrnnTrainConfig {
    size_t epochs = 30;
    size_t batch = 16;
    double lr = 0.1;
};

struct DcrnnTrainReport {
    std::vector<double> epoch_loss;
    double train_accuracy = 0.0;
};

struct ImageSample {
    ByteImage image;
    ClassLabel label = ClassLabel::benign;
};

DcrnnTrainReport dcrnn_train(Dcrnn& model, const std::vector<ImageSample>& samples,
                             const DcrnnTrainConfig& tc, uint64_t seed);

// max relative error between analytic and central-difference gradients over
// every parameter of the model
double dcrnn_grad_check(const Dcrnn& model, const ByteImage& img, ClassLabel target,
                        double eps = 1e-5);

struct SuspiciousVerdict {
    ClassLabel label = ClassLabel::benign;
    double p_attack = 0.0;
};

// second-stage ruling on a flow the forest marked suspicious
SuspiciousVerdict classify_suspicious(const Dcrnn& model, const MinMaxScaler& scaler,
                                      const FeatureVector& fv);

void save_dcrnn(const std::string& path, const Dcrnn& model);
Dcrnn load_dcrnn(const std::string& path);

}  // namespace sentinel
