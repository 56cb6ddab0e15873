#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "sentinel/bliss.hpp"
#include "sentinel/dataset.hpp"
#include "sentinel/dcrnn.hpp"
#include "sentinel/fleet.hpp"
#include "sentinel/forest.hpp"
#include "sentinel/rng.hpp"
#include "sentinel/sha256.hpp"
#include "sentinel/tweak_cipher.hpp"

using namespace sentinel;

namespace {

Dataset bench_dataset(uint64_t seed) {
    SynthConfig syn;
    syn.benign_count = 400;
    syn.attack_counts = {{"DoS", 200}, {"DDoS", 200}};
    return synth_traffic(syn, seed);
}

Fleet bench_fleet(size_t n) {
    Rng rng(404);
    Fleet fleet;
    for (size_t i = 0; i < n; ++i) {
        EdgeServer s;
        s.id = static_cast<uint32_t>(i);
        s.profile = sha256(std::string("profile-") + std::to_string(i % 3));
        s.cpu_slots = 8;
        s.tasks_running = static_cast<uint32_t>(rng.range(0, 7));
        s.tasks_waiting = static_cast<uint32_t>(rng.range(0, 4));
        s.trust = rng.next_double();
        fleet.servers.push_back(s);
    }
    return fleet;
}

void bm_sha256(benchmark::State& state) {
    Bytes data(static_cast<size_t>(state.range(0)), 0xab);
    for (auto _ : state) benchmark::DoNotOptimize(sha256(data));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}

void bm_ctr_crypt(benchmark::State& state) {
    Bytes key(32, 0x42);
    Bytes data(static_cast<size_t>(state.range(0)), 0x17);
    for (auto _ : state) benchmark::DoNotOptimize(ctr_crypt(key, 9, data));
    state.SetBytesProcessed(state.iterations() * state.range(0));
}

void bm_forest_vote(benchmark::State& state) {
    Dataset ds = bench_dataset(11);
    ForestConfig fc;
    fc.trees = 40;
    fc.max_depth = 12;
    Forest forest = train_forest(ds, fc, 21);
    size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(forest.attack_vote(ds.records[i].features));
        i = (i + 1) % ds.records.size();
    }
}

void bm_dcrnn_forward(benchmark::State& state) {
    Dataset ds = bench_dataset(12);
    MinMaxScaler scaler = MinMaxScaler::fit(ds);
    DcrnnConfig dc;
    Dcrnn model = make_dcrnn(dc, 33);
    ByteImage img = rescale_to_image(ds.records[0].features, scaler, dc.image_rows, dc.image_cols);
    for (auto _ : state) benchmark::DoNotOptimize(dcrnn_forward(model, img));
}

void bm_bliss_sign(benchmark::State& state) {
    KeyPair kp = bliss_keygen(SignParams{}, 2024);
    Bytes msg(64, 0x5c);
    uint64_t seed = 1;
    for (auto _ : state) benchmark::DoNotOptimize(bliss_sign(kp, msg, seed++));
}

void bm_bliss_verify(benchmark::State& state) {
    KeyPair kp = bliss_keygen(SignParams{}, 2024);
    Bytes msg(64, 0x5c);
    Signature sig = bliss_sign(kp, msg, 7);
    for (auto _ : state) benchmark::DoNotOptimize(bliss_verify(kp.pub, msg, sig));
}

void bm_heap_build(benchmark::State& state) {
    Fleet fleet = bench_fleet(static_cast<size_t>(state.range(0)));
    std::vector<double> fv = fitness_values(fleet);
    for (auto _ : state) benchmark::DoNotOptimize(build_heap(fleet, fv));
}

}  // namespace

BENCHMARK(bm_sha256)->Arg(64)->Arg(4096);
BENCHMARK(bm_ctr_crypt)->Arg(64)->Arg(4096);
BENCHMARK(bm_forest_vote);
BENCHMARK(bm_dcrnn_forward);
BENCHMARK(bm_bliss_sign);
BENCHMARK(bm_bliss_verify);
BENCHMARK(bm_heap_build)->Arg(16)->Arg(256);

BENCHMARK_MAIN();
