#include "sentinel/dcrnn.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>

#include "sentinel/bytes.hpp"
#include "sentinel/error.hpp"
#include "sentinel/rng.hpp"

namespace sentinel {

size_t conv_output_len(size_t input, size_t kernel, size_t pad, size_t stride) {
    if (input == 0 || kernel == 0 || stride == 0)
        raise(Errc::non_positive, "conv dims must be positive");
    size_t span = input + 2 * pad;
    if (kernel > span) raise(Errc::non_positive, "kernel exceeds padded input");
    size_t num = span - kernel;
    if (num % stride != 0) raise(Errc::non_integral, "conv output length is not integral");
    return num / stride + 1;
}

double sigmoid_act(double t) { return 1.0 / (1.0 + std::exp(-t)); }

double tanh_act(double t) { return std::tanh(t); }

namespace {

struct Tensor {
    size_t ch = 0, rows = 0, cols = 0;
    std::vector<double> v;

    void reset(size_t c, size_t r, size_t cc) {
        ch = c;
        rows = r;
        cols = cc;
        v.assign(c * r * cc, 0.0);
    }
    double& at(size_t c, size_t r, size_t cc) { return v[(c * rows + r) * cols + cc]; }
    double at(size_t c, size_t r, size_t cc) const { return v[(c * rows + r) * cols + cc]; }
};

size_t conv_w_index(const ConvLayer& l, size_t f, size_t ch, size_t kr, size_t kc) {
    return ((f * l.in_ch + ch) * l.spec.kernel + kr) * l.spec.kernel + kc;
}

void conv_forward(const ConvLayer& l, const Tensor& in, Tensor& out) {
    size_t orows = conv_output_len(in.rows, l.spec.kernel, l.spec.pad, l.spec.stride);
    size_t ocols = conv_output_len(in.cols, l.spec.kernel, l.spec.pad, l.spec.stride);
    out.reset(l.spec.filters, orows, ocols);
    for (size_t f = 0; f < l.spec.filters; ++f)
        for (size_t orr = 0; orr < orows; ++orr)
            for (size_t occ = 0; occ < ocols; ++occ) {
                double acc = l.b[f];
                for (size_t ch = 0; ch < l.in_ch; ++ch)
                    for (size_t kr = 0; kr < l.spec.kernel; ++kr)
                        for (size_t kc = 0; kc < l.spec.kernel; ++kc) {
                            int64_t ir = int64_t(orr * l.spec.stride + kr) - int64_t(l.spec.pad);
                            int64_t ic = int64_t(occ * l.spec.stride + kc) - int64_t(l.spec.pad);
                            if (ir < 0 || ic < 0 || ir >= int64_t(in.rows) ||
                                ic >= int64_t(in.cols))
                                continue;
                            acc += in.at(ch, size_t(ir), size_t(ic)) *
                                   l.w[conv_w_index(l, f, ch, kr, kc)];
                        }
                out.at(f, orr, occ) = acc;
            }
}

void conv_backward(const ConvLayer& l, const Tensor& in, const Tensor& dout, Tensor& din,
                   std::vector<double>& dw, std::vector<double>& db) {
    din.reset(in.ch, in.rows, in.cols);
    for (size_t f = 0; f < l.spec.filters; ++f)
        for (size_t orr = 0; orr < dout.rows; ++orr)
            for (size_t occ = 0; occ < dout.cols; ++occ) {
                double g = dout.at(f, orr, occ);
                if (g == 0.0) continue;
                db[f] += g;
                for (size_t ch = 0; ch < l.in_ch; ++ch)
                    for (size_t kr = 0; kr < l.spec.kernel; ++kr)
                        for (size_t kc = 0; kc < l.spec.kernel; ++kc) {
                            int64_t ir = int64_t(orr * l.spec.stride + kr) - int64_t(l.spec.pad);
                            int64_t ic = int64_t(occ * l.spec.stride + kc) - int64_t(l.spec.pad);
                            if (ir < 0 || ic < 0 || ir >= int64_t(in.rows) ||
                                ic >= int64_t(in.cols))
                                continue;
                            dw[conv_w_index(l, f, ch, kr, kc)] +=
                                g * in.at(ch, size_t(ir), size_t(ic));
                            din.at(ch, size_t(ir), size_t(ic)) +=
                                g * l.w[conv_w_index(l, f, ch, kr, kc)];
                        }
            }
}

void pool_forward(const Tensor& in, size_t pool, Tensor& out, std::vector<size_t>& arg) {
    if (in.rows % pool != 0 || in.cols % pool != 0)
        raise(Errc::non_integral, "pool window does not tile the feature map");
    out.reset(in.ch, in.rows / pool, in.cols / pool);
    arg.assign(out.v.size(), 0);
    for (size_t ch = 0; ch < in.ch; ++ch)
        for (size_t pr = 0; pr < out.rows; ++pr)
            for (size_t pc = 0; pc < out.cols; ++pc) {
                double best = -1e300;
                size_t best_idx = 0;
                for (size_t dr = 0; dr < pool; ++dr)
                    for (size_t dc = 0; dc < pool; ++dc) {
                        size_t r = pr * pool + dr, c = pc * pool + dc;
                        double v = in.at(ch, r, c);
                        if (v > best) {  // first maximum wins ties
                            best = v;
                            best_idx = (ch * in.rows + r) * in.cols + c;
                        }
                    }
                out.at(ch, pr, pc) = best;
                arg[(ch * out.rows + pr) * out.cols + pc] = best_idx;
            }
}

struct StepTrace {
    std::vector<double> y, h_prev, c, b, bh, htilde;
};

struct Trace {
    std::vector<Tensor> conv_in;  // conv_in[i] feeds convs[i]
    Tensor prepool;
    Tensor pooled;
    std::vector<size_t> pool_arg;
    std::vector<StepTrace> steps;
    std::vector<double> h_last;
    std::vector<double> probs;
};

void joint_matvec(const std::vector<double>& w, size_t hidden, size_t input,
                  const std::vector<double>& h, const std::vector<double>& y,
                  std::vector<double>& out) {
    size_t width = hidden + input;
    for (size_t i = 0; i < hidden; ++i) {
        const double* row = w.data() + i * width;
        double acc = 0.0;
        for (size_t j = 0; j < hidden; ++j) acc += row[j] * h[j];
        for (size_t d = 0; d < input; ++d) acc += row[hidden + d] * y[d];
        out[i] = acc;
    }
}

Tensor image_tensor(const Dcrnn& model, const ByteImage& img) {
    if (img.rows != model.cfg.image_rows || img.cols != model.cfg.image_cols)
        raise(Errc::dim_mismatch, "image does not match the model input shape");
    Tensor t;
    t.reset(1, img.rows, img.cols);
    for (size_t i = 0; i < img.px.size(); ++i) t.v[i] = double(img.px[i]) / 255.0;
    return t;
}

std::vector<double> forward_trace(const Dcrnn& model, const ByteImage& img, Trace* trace) {
    Tensor cur = image_tensor(model, img);

    std::vector<Tensor> conv_in;
    for (const auto& layer : model.convs) {
        if (trace) conv_in.push_back(cur);
        Tensor nxt;
        conv_forward(layer, cur, nxt);
        cur = std::move(nxt);
    }

    Tensor pooled;
    std::vector<size_t> arg;
    pool_forward(cur, model.cfg.pool, pooled, arg);

    size_t steps = pooled.rows;
    size_t width = pooled.ch * pooled.cols;
    const GruCell& g = model.gru;
    std::vector<double> h(g.hidden, 0.0);
    std::vector<double> ac(g.hidden), ab(g.hidden), ah(g.hidden);

    std::vector<StepTrace> step_traces;
    for (size_t t = 0; t < steps; ++t) {
        std::vector<double> y(width);
        for (size_t ch = 0; ch < pooled.ch; ++ch)
            for (size_t c = 0; c < pooled.cols; ++c) y[ch * pooled.cols + c] = pooled.at(ch, t, c);

        StepTrace st;
        st.y = y;
        st.h_prev = h;

        joint_matvec(g.wc, g.hidden, g.input, h, y, ac);
        for (size_t i = 0; i < g.hidden; ++i) {
            double p = 0.0;
            for (size_t d = 0; d < g.input; ++d) p += g.proj[i * g.input + d] * y[d];
            ac[i] += p;
        }
        joint_matvec(g.wb, g.hidden, g.input, h, y, ab);

        std::vector<double> c(g.hidden), b(g.hidden), bh(g.hidden), htilde(g.hidden);
        for (size_t i = 0; i < g.hidden; ++i) {
            c[i] = sigmoid_act(ac[i]);
            b[i] = sigmoid_act(ab[i]);
            bh[i] = b[i] * h[i];
        }
        joint_matvec(g.wh, g.hidden, g.input, bh, y, ah);
        for (size_t i = 0; i < g.hidden; ++i) {
            htilde[i] = tanh_act(ah[i]);
            h[i] = (1.0 - c[i]) * st.h_prev[i] + c[i] * htilde[i];
        }
        st.c = std::move(c);
        st.b = std::move(b);
        st.bh = std::move(bh);
        st.htilde = std::move(htilde);
        if (trace) step_traces.push_back(std::move(st));
    }

    std::vector<double> logits(model.cfg.classes, 0.0);
    for (size_t k = 0; k < model.cfg.classes; ++k)
        for (size_t i = 0; i < g.hidden; ++i) logits[k] += model.dense[k * g.hidden + i] * h[i];

    double top = *std::max_element(logits.begin(), logits.end());
    double z = 0.0;
    std::vector<double> probs(logits.size());
    for (size_t k = 0; k < logits.size(); ++k) {
        probs[k] = std::exp(logits[k] - top);
        z += probs[k];
    }
    for (double& p : probs) p /= z;

    if (trace) {
        trace->conv_in = std::move(conv_in);
        trace->prepool = std::move(cur);
        trace->pooled = std::move(pooled);
        trace->pool_arg = std::move(arg);
        trace->steps = std::move(step_traces);
        trace->h_last = h;
        trace->probs = probs;
    }
    return probs;
}

struct Grads {
    std::vector<std::vector<double>> conv_w, conv_b;
    std::vector<double> wc, wb, wh, proj, dense;

    explicit Grads(const Dcrnn& m) {
        for (const auto& l : m.convs) {
            conv_w.emplace_back(l.w.size(), 0.0);
            conv_b.emplace_back(l.b.size(), 0.0);
        }
        wc.assign(m.gru.wc.size(), 0.0);
        wb.assign(m.gru.wb.size(), 0.0);
        wh.assign(m.gru.wh.size(), 0.0);
        proj.assign(m.gru.proj.size(), 0.0);
        dense.assign(m.dense.size(), 0.0);
    }
};

// cross-entropy backprop through dense, the recurrence and the conv stack
void backward(const Dcrnn& model, const Trace& tr, ClassLabel target, Grads& g) {
    const GruCell& cell = model.gru;
    size_t H = cell.hidden, D = cell.input, W = H + D;

    std::vector<double> dlogits(tr.probs);
    dlogits[target == ClassLabel::attack ? 1 : 0] -= 1.0;

    std::vector<double> dh(H, 0.0);
    for (size_t k = 0; k < model.cfg.classes; ++k)
        for (size_t i = 0; i < H; ++i) {
            g.dense[k * H + i] += dlogits[k] * tr.h_last[i];
            dh[i] += model.dense[k * H + i] * dlogits[k];
        }

    Tensor dpooled;
    dpooled.reset(tr.pooled.ch, tr.pooled.rows, tr.pooled.cols);

    for (size_t t = tr.steps.size(); t-- > 0;) {
        const StepTrace& st = tr.steps[t];
        std::vector<double> dh_prev(H, 0.0), dy(D, 0.0);
        std::vector<double> da_c(H), da_b(H), da_h(H), dbh(H, 0.0);

        for (size_t i = 0; i < H; ++i) {
            double dc = dh[i] * (st.htilde[i] - st.h_prev[i]);
            double dht = dh[i] * st.c[i];
            dh_prev[i] += dh[i] * (1.0 - st.c[i]);
            da_h[i] = dht * (1.0 - st.htilde[i] * st.htilde[i]);
            da_c[i] = dc * st.c[i] * (1.0 - st.c[i]);
        }

        for (size_t i = 0; i < H; ++i) {
            const double* row = cell.wh.data() + i * W;
            for (size_t j = 0; j < H; ++j) {
                g.wh[i * W + j] += da_h[i] * st.bh[j];
                dbh[j] += row[j] * da_h[i];
            }
            for (size_t d = 0; d < D; ++d) {
                g.wh[i * W + H + d] += da_h[i] * st.y[d];
                dy[d] += row[H + d] * da_h[i];
            }
        }

        for (size_t i = 0; i < H; ++i) {
            double db = dbh[i] * st.h_prev[i];
            dh_prev[i] += dbh[i] * st.b[i];
            da_b[i] = db * st.b[i] * (1.0 - st.b[i]);
        }

        for (size_t i = 0; i < H; ++i) {
            const double* brow = cell.wb.data() + i * W;
            const double* crow = cell.wc.data() + i * W;
            for (size_t j = 0; j < H; ++j) {
                g.wb[i * W + j] += da_b[i] * st.h_prev[j];
                dh_prev[j] += brow[j] * da_b[i];
                g.wc[i * W + j] += da_c[i] * st.h_prev[j];
                dh_prev[j] += crow[j] * da_c[i];
            }
            for (size_t d = 0; d < D; ++d) {
                g.wb[i * W + H + d] += da_b[i] * st.y[d];
                dy[d] += brow[H + d] * da_b[i];
                g.wc[i * W + H + d] += da_c[i] * st.y[d];
                dy[d] += crow[H + d] * da_c[i];
                g.proj[i * D + d] += da_c[i] * st.y[d];
                dy[d] += cell.proj[i * D + d] * da_c[i];
            }
        }

        for (size_t ch = 0; ch < dpooled.ch; ++ch)
            for (size_t c = 0; c < dpooled.cols; ++c)
                dpooled.at(ch, t, c) += dy[ch * dpooled.cols + c];
        dh = std::move(dh_prev);
    }

    Tensor dcur;
    dcur.reset(tr.prepool.ch, tr.prepool.rows, tr.prepool.cols);
    for (size_t i = 0; i < dpooled.v.size(); ++i) dcur.v[tr.pool_arg[i]] += dpooled.v[i];

    for (size_t li = model.convs.size(); li-- > 0;) {
        Tensor din;
        conv_backward(model.convs[li], tr.conv_in[li], dcur, din, g.conv_w[li], g.conv_b[li]);
        dcur = std::move(din);
    }
}

double sample_loss(const Dcrnn& model, const ByteImage& img, ClassLabel target) {
    auto probs = forward_trace(model, img, nullptr);
    double p = probs[target == ClassLabel::attack ? 1 : 0];
    return -std::log(std::max(p, 1e-300));
}

std::vector<std::vector<double>*> param_arrays(Dcrnn& m) {
    std::vector<std::vector<double>*> out;
    for (auto& l : m.convs) {
        out.push_back(&l.w);
        out.push_back(&l.b);
    }
    out.push_back(&m.gru.wc);
    out.push_back(&m.gru.wb);
    out.push_back(&m.gru.wh);
    out.push_back(&m.gru.proj);
    out.push_back(&m.dense);
    return out;
}

std::vector<std::vector<double>*> grad_arrays(Grads& g) {
    std::vector<std::vector<double>*> out;
    for (size_t i = 0; i < g.conv_w.size(); ++i) {
        out.push_back(&g.conv_w[i]);
        out.push_back(&g.conv_b[i]);
    }
    out.push_back(&g.wc);
    out.push_back(&g.wb);
    out.push_back(&g.wh);
    out.push_back(&g.proj);
    out.push_back(&g.dense);
    return out;
}

void glorot_fill(std::vector<double>& w, size_t fan_in, size_t fan_out, Rng& rng) {
    double limit = std::sqrt(6.0 / double(fan_in + fan_out));
    for (double& x : w) x = rng.uniform(-limit, limit);
}

}  // namespace

Dcrnn make_dcrnn(const DcrnnConfig& cfg, uint64_t seed) {
    if (cfg.convs.empty()) raise(Errc::invalid_config, "model needs at least one conv layer");
    if (cfg.hidden == 0 || cfg.classes < 2) raise(Errc::invalid_config, "bad model dims");
    if (cfg.pool == 0) raise(Errc::non_positive, "pool must be positive");

    Dcrnn m;
    m.cfg = cfg;
    Rng rng(seed);

    size_t rows = cfg.image_rows, cols = cfg.image_cols, ch = 1;
    for (const auto& spec : cfg.convs) {
        ConvLayer layer;
        layer.in_ch = ch;
        layer.spec = spec;
        rows = conv_output_len(rows, spec.kernel, spec.pad, spec.stride);
        cols = conv_output_len(cols, spec.kernel, spec.pad, spec.stride);
        layer.w.assign(spec.filters * ch * spec.kernel * spec.kernel, 0.0);
        layer.b.assign(spec.filters, 0.0);
        glorot_fill(layer.w, ch * spec.kernel * spec.kernel,
                    spec.filters * spec.kernel * spec.kernel, rng);
        m.convs.push_back(std::move(layer));
        ch = spec.filters;
    }
    if (rows % cfg.pool != 0 || cols % cfg.pool != 0)
        raise(Errc::non_integral, "pool window does not tile the conv output");
    rows /= cfg.pool;
    cols /= cfg.pool;

    m.seq_steps = rows;
    m.seq_input = ch * cols;
    if (m.seq_steps == 0 || m.seq_input == 0) raise(Errc::non_positive, "empty sequence shape");

    m.gru.hidden = cfg.hidden;
    m.gru.input = m.seq_input;
    size_t joint = cfg.hidden + m.seq_input;
    m.gru.wc.assign(cfg.hidden * joint, 0.0);
    m.gru.wb.assign(cfg.hidden * joint, 0.0);
    m.gru.wh.assign(cfg.hidden * joint, 0.0);
    m.gru.proj.assign(cfg.hidden * m.seq_input, 0.0);
    glorot_fill(m.gru.wc, joint, cfg.hidden, rng);
    glorot_fill(m.gru.wb, joint, cfg.hidden, rng);
    glorot_fill(m.gru.wh, joint, cfg.hidden, rng);
    glorot_fill(m.gru.proj, m.seq_input, cfg.hidden, rng);

    m.dense.assign(cfg.classes * cfg.hidden, 0.0);
    glorot_fill(m.dense, cfg.hidden, cfg.classes, rng);
    return m;
}

std::vector<double> dcrnn_forward(const Dcrnn& model, const ByteImage& img) {
    return forward_trace(model, img, nullptr);
}

ClassLabel dcrnn_classify(const Dcrnn& model, const ByteImage& img) {
    auto probs = dcrnn_forward(model, img);
    return probs[1] > probs[0] ? ClassLabel::attack : ClassLabel::benign;
}

DcrnnTrainReport dcrnn_train(Dcrnn& model, const std::vector<ImageSample>& samples,
                             const DcrnnTrainConfig& tc, uint64_t seed) {
    if (samples.empty()) raise(Errc::empty_dataset, "no training images");
    if (tc.batch == 0 || tc.epochs == 0) raise(Errc::invalid_config, "bad training config");

    DcrnnTrainReport rep;
    Rng rng(seed);
    std::vector<size_t> order(samples.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;

    for (size_t e = 0; e < tc.epochs; ++e) {
        rng.shuffle(order);
        double loss_sum = 0.0;
        for (size_t base = 0; base < order.size(); base += tc.batch) {
            size_t take = std::min(tc.batch, order.size() - base);
            Grads g(model);
            for (size_t i = 0; i < take; ++i) {
                const ImageSample& s = samples[order[base + i]];
                Trace tr;
                forward_trace(model, s.image, &tr);
                loss_sum += -std::log(
                    std::max(tr.probs[s.label == ClassLabel::attack ? 1 : 0], 1e-300));
                backward(model, tr, s.label, g);
            }
            double step = tc.lr / double(take);
            auto params = param_arrays(model);
            auto grads = grad_arrays(g);
            for (size_t a = 0; a < params.size(); ++a)
                for (size_t i = 0; i < params[a]->size(); ++i)
                    (*params[a])[i] -= step * (*grads[a])[i];
        }
        rep.epoch_loss.push_back(loss_sum / double(samples.size()));
    }

    size_t ok = 0;
    for (const auto& s : samples) ok += dcrnn_classify(model, s.image) == s.label;
    rep.train_accuracy = double(ok) / double(samples.size());
    return rep;
}

double dcrnn_grad_check(const Dcrnn& model, const ByteImage& img, ClassLabel target, double eps) {
    Dcrnn work = model;
    Trace tr;
    forward_trace(work, img, &tr);
    Grads g(work);
    backward(work, tr, target, g);

    auto params = param_arrays(work);
    auto grads = grad_arrays(g);
    double worst = 0.0;
    for (size_t a = 0; a < params.size(); ++a) {
        auto& p = *params[a];
        auto& an = *grads[a];
        for (size_t i = 0; i < p.size(); ++i) {
            double keep = p[i];
            p[i] = keep + eps;
            double up = sample_loss(work, img, target);
            p[i] = keep - eps;
            double dn = sample_loss(work, img, target);
            p[i] = keep;
            double numeric = (up - dn) / (2.0 * eps);
            double denom = std::max(std::fabs(an[i]) + std::fabs(numeric), 1e-6);
            worst = std::max(worst, std::fabs(an[i] - numeric) / denom);
        }
    }
    return worst;
}

SuspiciousVerdict classify_suspicious(const Dcrnn& model, const MinMaxScaler& scaler,
                                      const FeatureVector& fv) {
    ByteImage img = rescale_to_image(fv, scaler, model.cfg.image_rows, model.cfg.image_cols);
    auto probs = dcrnn_forward(model, img);
    SuspiciousVerdict v;
    v.p_attack = probs[1];
    v.label = probs[1] > probs[0] ? ClassLabel::attack : ClassLabel::benign;
    return v;
}

namespace {

constexpr char MAGIC[4] = {'D', 'C', 'R', '1'};

}  // namespace

void save_dcrnn(const std::string& path, const Dcrnn& model) {
    Bytes buf;
    append_bytes(buf, reinterpret_cast<const uint8_t*>(MAGIC), 4);
    append_u32le(buf, 1);  // version
    append_u32le(buf, uint32_t(model.cfg.image_rows));
    append_u32le(buf, uint32_t(model.cfg.image_cols));
    append_u32le(buf, uint32_t(model.cfg.pool));
    append_u32le(buf, uint32_t(model.cfg.hidden));
    append_u32le(buf, uint32_t(model.cfg.classes));
    append_u32le(buf, uint32_t(model.convs.size()));
    for (const auto& l : model.convs) {
        append_u32le(buf, uint32_t(l.spec.filters));
        append_u32le(buf, uint32_t(l.spec.kernel));
        append_u32le(buf, uint32_t(l.spec.pad));
        append_u32le(buf, uint32_t(l.spec.stride));
        for (double v : l.w) append_f64le(buf, v);
        for (double v : l.b) append_f64le(buf, v);
    }
    for (double v : model.gru.wc) append_f64le(buf, v);
    for (double v : model.gru.wb) append_f64le(buf, v);
    for (double v : model.gru.wh) append_f64le(buf, v);
    for (double v : model.gru.proj) append_f64le(buf, v);
    for (double v : model.dense) append_f64le(buf, v);

    std::ofstream out(path, std::ios::binary);
    if (!out) raise(Errc::missing_file, "cannot write model file: " + path);
    out.write(reinterpret_cast<const char*>(buf.data()), std::streamsize(buf.size()));
}

Dcrnn load_dcrnn(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open model file: " + path);
    Bytes buf((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    size_t pos = 0;
    auto need = [&](size_t n) {
        if (pos + n > buf.size()) raise(Errc::bad_format, "truncated model file");
    };
    auto get_u32 = [&] {
        need(4);
        uint32_t v = read_u32le(buf.data() + pos);
        pos += 4;
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
        raise(Errc::bad_format, "not a model file (bad magic)");
    pos = 4;
    if (get_u32() != 1) raise(Errc::bad_format, "unsupported model version");

    DcrnnConfig cfg;
    cfg.image_rows = get_u32();
    cfg.image_cols = get_u32();
    cfg.pool = get_u32();
    cfg.hidden = get_u32();
    cfg.classes = get_u32();
    cfg.convs.resize(get_u32());
    for (auto& spec : cfg.convs) {
        spec.filters = get_u32();
        spec.kernel = get_u32();
        spec.pad = get_u32();
        spec.stride = get_u32();
    }

    // rebuild shapes, then overwrite the parameters
    Dcrnn m = make_dcrnn(cfg, 0);
    for (auto& l : m.convs) {
        for (double& v : l.w) v = get_f64();
        for (double& v : l.b) v = get_f64();
    }
    for (double& v : m.gru.wc) v = get_f64();
    for (double& v : m.gru.wb) v = get_f64();
    for (double& v : m.gru.wh) v = get_f64();
    for (double& v : m.gru.proj) v = get_f64();
    for (double& v : m.dense) v = get_f64();
    if (pos != buf.size()) raise(Errc::bad_format, "model file has trailing bytes");
    return m;
}

}  // namespace sentinel
