#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "sentinel/dcrnn.hpp"
#include "sentinel/error.hpp"
#include "sentinel/fleet.hpp"
#include "sentinel/forest.hpp"
#include "sentinel/irf.hpp"
#include "sentinel/ledger.hpp"
#include "sentinel/sha256.hpp"
#include "sentinel/sim.hpp"

namespace fs = std::filesystem;
using namespace sentinel;

namespace {

struct Cli {
    std::string config;
    std::string out;
    std::string dataset;
    std::string schema;
    std::string feedback;
    uint64_t seed = 1;
    bool seed_given = false;
    unsigned sweep = 1;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise(Errc::missing_file, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Dataset load_or_synth(const Cli& cli, const SimConfig& base, uint64_t seed) {
    if (!cli.dataset.empty()) {
        if (!cli.schema.empty()) return load_flow_csv(cli.dataset, load_schema(cli.schema));
        return load_flow_csv(cli.dataset);
    }
    SynthConfig syn;
    syn.benign_count = base.train_benign;
    syn.shift = base.synth_shift;
    for (const auto& fam : base.attack_families)
        syn.attack_counts.emplace_back(fam, base.train_attack_per_family);
    return synth_traffic(syn, seed);
}

int cmd_ingest(const Cli& cli) {
    Dataset ds = cli.schema.empty() ? load_flow_csv(cli.dataset)
                                    : load_flow_csv(cli.dataset, load_schema(cli.schema));
    size_t attack = 0;
    std::map<std::string, size_t> families;
    for (const auto& rec : ds.records) {
        if (rec.label == ClassLabel::attack) {
            ++attack;
            ++families[rec.family];
        }
    }
    std::cout << "rows " << ds.size() << "\n";
    std::cout << "dropped " << ds.dropped_rows << "\n";
    std::cout << "features " << ds.schema.size() << "\n";
    std::cout << "benign " << ds.size() - attack << "\n";
    std::cout << "attack " << attack << "\n";
    for (const auto& [fam, n] : families) std::cout << "  " << fam << " " << n << "\n";
    if (!cli.out.empty()) {
        save_flow_csv(cli.out, ds);
        std::cout << "normalized copy written to " << cli.out << "\n";
    }
    return 0;
}

int cmd_train_sids(const Cli& cli) {
    SimConfig base = cli.config.empty() ? SimConfig{} : load_scenario(cli.config);
    uint64_t seed = cli.seed_given ? cli.seed : base.seed;
    Dataset ds = load_or_synth(cli, base, Rng(seed).fork(3).next_u64());

    ForestConfig fc;
    fc.trees = base.forest_trees;
    fc.max_depth = base.forest_depth;
    RefineReport rep = refine_forest(ds, fc, Rng(seed).fork(4).next_u64(), 12,
                                     std::max(1u, base.forest_refine_passes));
    std::cout << "trained " << rep.forest.trees.size() << " trees over "
              << rep.forest.active_features.size() << " active features\n";
    for (const auto& pass : rep.passes) {
        std::cout << "pass " << pass.pass << ": pruned " << pass.pruned.size() << ", promoted "
                  << pass.promoted.size() << ", trees " << pass.trees << "\n";
    }
    std::cout << "training accuracy " << forest_accuracy(rep.forest, ds) << "\n";
    std::string out = cli.out.empty() ? "sids_forest.bin" : cli.out;
    save_forest(out, rep.forest);
    std::cout << "model written to " << out << "\n";
    return 0;
}

int cmd_train_aids(const Cli& cli) {
    SimConfig base = cli.config.empty() ? SimConfig{} : load_scenario(cli.config);
    uint64_t seed = cli.seed_given ? cli.seed : base.seed;
    Dataset ds = load_or_synth(cli, base, Rng(seed).fork(3).next_u64());

    MinMaxScaler scaler = MinMaxScaler::fit(ds);
    DcrnnConfig dc;
    Dcrnn model = make_dcrnn(dc, Rng(seed).fork(5).next_u64());
    std::vector<ImageSample> samples;
    size_t nb = 0, na = 0;
    for (const auto& rec : ds.records) {
        size_t& c = rec.label == ClassLabel::benign ? nb : na;
        if (c >= base.aids_train_per_class) continue;
        ++c;
        samples.push_back(
            {rescale_to_image(rec.features, scaler, dc.image_rows, dc.image_cols), rec.label});
    }
    DcrnnTrainConfig tc;
    tc.epochs = base.aids_epochs;
    DcrnnTrainReport rep = dcrnn_train(model, samples, tc, Rng(seed).fork(5).next_u64());
    std::cout << "trained on " << samples.size() << " images for " << tc.epochs << " epochs\n";
    std::cout << "training accuracy " << rep.train_accuracy << "\n";
    std::string out = cli.out.empty() ? "aids_model.bin" : cli.out;
    save_dcrnn(out, model);
    std::cout << "model written to " << out << "\n";
    return 0;
}

int cmd_simulate(const Cli& cli) {
    SimConfig cfg = cli.config.empty() ? SimConfig{} : load_scenario(cli.config);
    if (cli.seed_given) cfg.seed = cli.seed;
    if (cli.feedback == "on") cfg.feedback = true;
    if (cli.feedback == "off") cfg.feedback = false;
    std::string out = cli.out.empty() ? "run-out" : cli.out;

    std::string sweep_rows;
    for (unsigned i = 0; i < cli.sweep; ++i) {
        SimConfig c = cfg;
        c.seed = cfg.seed + i;
        SimResult res = run_sim(c);
        std::string dir =
            cli.sweep == 1 ? out : out + "/run-" + std::to_string(c.seed);
        write_run_outputs(res, dir);
        std::string csv = metrics_csv(res);
        if (sweep_rows.empty()) {
            sweep_rows = csv;
        } else {
            sweep_rows += csv.substr(csv.find('\n') + 1);
        }
        std::cout << "seed " << c.seed << ": packets " << res.packets << ", accuracy "
                  << metric_text(res.metrics.accuracy) << ", detection "
                  << metric_text(res.metrics.recall) << ", fpr " << metric_text(res.metrics.fpr)
                  << ", migrations " << res.migrations << ", captures " << res.captures
                  << ", outputs " << dir << "\n";
    }
    if (cli.sweep > 1) {
        fs::create_directories(out);
        std::ofstream sw(out + "/sweep.csv", std::ios::binary);
        sw << sweep_rows;
        std::cout << "sweep table " << out << "/sweep.csv\n";
    }
    return 0;
}

int cmd_report(const Cli& cli) {
    std::string dir = cli.out.empty() ? "run-out" : cli.out;
    std::cout << read_file(dir + "/summary.txt");
    std::cout << "\nper family\n" << read_file(dir + "/per_family.csv");
    return 0;
}

int cmd_verify_log(const Cli& cli) {
    std::string dir = cli.out.empty() ? "run-out" : cli.out;
    SimConfig cfg =
        cli.config.empty() ? load_scenario(dir + "/scenario.conf") : load_scenario(cli.config);
    if (cli.seed_given) cfg.seed = cli.seed;
    RunKeys keys = derive_run_keys(cfg);

    SealedLog log = load_sealed_log(dir + "/honeypots.hlog");
    HarvestResult hr = harvest(log, keys.signer.pub, keys.log_key);
    std::cout << "sealed entries " << log.entries.size() << "\n";
    std::cout << "verified " << hr.patterns.size() << "\n";
    std::cout << "failed " << hr.failures.size() << "\n";
    for (const auto& f : hr.failures)
        std::cout << "  entry " << f.index << ": " << f.reason << "\n";

    ChainSummary cs = load_chain_summary(dir + "/ledger.txt");
    bool links = cs.verify_links();
    std::cout << "ledger blocks " << cs.blocks.size() << "\n";
    std::cout << "chain links " << (links ? "ok" : "broken") << "\n";
    return (hr.failures.empty() && links) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"trust-aware intrusion detection and deception pipeline for edge networks"};
    app.require_subcommand(1);

    Cli cli;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", cli.config, "scenario file");
        sub->add_option("--seed", cli.seed, "deterministic seed")->trigger_on_parse();
        sub->add_option("--out", cli.out, "output path");
        sub->add_option("--dataset", cli.dataset, "flow csv");
        sub->add_option("--schema", cli.schema, "feature schema, one name per line");
        sub->add_option("--feedback", cli.feedback, "honeypot feedback loop")
            ->check(CLI::IsMember({"on", "off"}));
        sub->add_option("--sweep", cli.sweep, "number of consecutive seeds")
            ->check(CLI::PositiveNumber);
    };

    CLI::App* ingest = app.add_subcommand("ingest", "load and validate a flow dataset");
    CLI::App* train_sids = app.add_subcommand("train-sids", "train the first-stage forest");
    CLI::App* train_aids = app.add_subcommand("train-aids", "train the second-stage classifier");
    CLI::App* simulate = app.add_subcommand("simulate", "run the full pipeline scenario");
    CLI::App* report = app.add_subcommand("report", "print the summary of a finished run");
    CLI::App* verify_log =
        app.add_subcommand("verify-log", "audit a sealed honeypot log and ledger export");
    for (CLI::App* sub : {ingest, train_sids, train_aids, simulate, report, verify_log})
        add_common(sub);
    ingest->get_option("--dataset")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    for (CLI::App* sub : {ingest, train_sids, train_aids, simulate, report, verify_log}) {
        if (sub->parsed() && sub->get_option("--seed")->count()) cli.seed_given = true;
    }
    if (const char* env_out = std::getenv("NGWN_SENTINEL_OUT"); env_out && *env_out)
        cli.out = env_out;

    try {
        if (*ingest) return cmd_ingest(cli);
        if (*train_sids) return cmd_train_sids(cli);
        if (*train_aids) return cmd_train_aids(cli);
        if (*simulate) return cmd_simulate(cli);
        if (*report) return cmd_report(cli);
        if (*verify_log) return cmd_verify_log(cli);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
