// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
// mulnet CLI: synthetic-data generation, single-pair training, model
// evaluation, the 122-pair activation sweep, and report generation.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "mulnet/kernels.hpp"
#include "mulnet/metrics.hpp"
#include "mulnet/sweep.hpp"

namespace {

using namespace mulnet;

struct GlobalOptions {
  std::uint64_t seed_data = 1;
  std::uint64_t seed_init = 16;
  std::uint64_t seed_shuffle = 3;
  std::size_t epochs = 100;
  std::size_t batch = 32;
  double lr = 0.001;
  std::size_t h1 = 6;
  std::size_t h2 = 3;
  std::size_t samples = 10000;
};

void add_global_options(CLI::App& app, GlobalOptions& g) {
  app.add_option("--seed-data", g.seed_data, "Dataset seed");
  app.add_option("--seed-init", g.seed_init, "Weight-init seed");
  app.add_option("--seed-shuffle", g.seed_shuffle, "Epoch-shuffle seed");
  app.add_option("--epochs", g.epochs, "Training epochs");
  app.add_option("--batch", g.batch, "Mini-batch size");
  app.add_option("--lr", g.lr, "Adam learning rate");
  app.add_option("--h1", g.h1, "First hidden width");
  app.add_option("--h2", g.h2, "Second hidden width");
  app.add_option("--samples", g.samples, "Samples per train/test split");
}

// Overrides plan fields with any global flag the user actually passed.
void apply_globals(const CLI::App& app, const GlobalOptions& g, SweepPlan& plan) {
  if (app.count("--seed-data") > 0) plan.seed_data = g.seed_data;
  if (app.count("--seed-init") > 0) plan.seed_init = g.seed_init;
  if (app.count("--seed-shuffle") > 0) plan.seed_shuffle = g.seed_shuffle;
  if (app.count("--epochs") > 0) plan.train.epochs = g.epochs;
  if (app.count("--batch") > 0) plan.train.batch_size = g.batch;
  if (app.count("--lr") > 0) plan.train.learning_rate = g.lr;
  if (app.count("--h1") > 0) plan.hidden1 = g.h1;
  if (app.count("--h2") > 0) plan.hidden2 = g.h2;
  if (app.count("--samples") > 0) {
    plan.train_samples = g.samples;
    plan.test_samples = g.samples;
  }
}

void write_trajectory_csv(const TrialResult& r,
                          const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "pair,target,epoch,loss\n";
  char buf[40];
  for (std::size_t e = 0; e < r.losses.size(); ++e) {
    std::snprintf(buf, sizeof(buf), "%.17g", r.losses[e]);
    // the target spec carries a comma, so it is CSV-quoted
    out << r.pair_name() << ",\"" << r.target.to_string() << "\"," << e << ','
        << buf << '\n';
  }
}

int cmd_gen_data(const TargetFunction& target, double low, double high,
                 const GlobalOptions& g, const std::string& out_path,
                 std::size_t hist_bins) {
  const Dataset data = generate(target, low, high, g.samples, g.seed_data);
  write_dataset_csv(data, out_path);
  std::cout << "wrote " << out_path << " (" << data.meta.sample_count
            << " samples, target " << target.to_string() << ")\n";
  if (hist_bins > 0) {
    const std::string hist_path = out_path + ".hist.csv";
    write_histogram_csv(histogram(data, hist_bins), hist_path);
    std::cout << "wrote " << hist_path << "\n";
  }
  return 0;
}

// Runs one (pair, target) trial with sweep-identical seed derivation, so
// `mulnet train` reproduces the matching sweep trial exactly.
int cmd_train(const CLI::App& app, const GlobalOptions& g,
              const std::string& a1, const std::string& a2,
              const TargetFunction& target, const std::string& save_path,
              const std::string& curves_path) {
  SweepPlan plan;
  plan.pairs = {{a1, a2}};
  plan.targets = {target};
  apply_globals(app, g, plan);

  const TrialSeeds seeds = derive_trial_seeds(plan, a1, a2, target);
  const Dataset train_data = generate(target, plan.train_low, plan.train_high,
                                      plan.train_samples, seeds.data_train);
  const Dataset test_data = generate(target, plan.test_low, plan.test_high,
                                     plan.test_samples, seeds.data_test);

  NetworkSpec spec;
  spec.input_width = target.n_inputs;
  spec.hidden1_width = plan.hidden1;
  spec.hidden2_width = plan.hidden2;
  spec.a1 = a1;
  spec.a2 = a2;
  spec.init_seed = seeds.init;

  TrainConfig cfg = plan.train;
  cfg.shuffle_seed = seeds.shuffle;

  Network net = init_network(spec);
  const TrainResult tr = train(net, train_data, cfg);

  TrialResult r;
  r.a1 = a1;
  r.a2 = a2;
  r.target = target;
  r.losses = tr.epoch_losses;
  r.diverged = tr.diverged;
  if (!tr.diverged) {
    const EvalReport eval = evaluate(net, test_data);
    r.diverged = eval.diverged;
    r.test_mae = eval.test_mae;
    r.test_pct_err = eval.test_pct_err;
  }

  std::cout << "pair=" << r.pair_name() << " target=" << target.to_string()
            << " epochs=" << r.losses.size();
  if (r.diverged) {
    std::cout << " diverged=1\n";
  } else {
    std::printf(" final_train_loss=%.6g test_mae=%.6g test_pct_err=%.6g diverged=0\n",
                r.losses.empty() ? 0.0 : r.losses.back(), r.test_mae,
                r.test_pct_err);
  }

  if (!curves_path.empty()) {
    write_trajectory_csv(r, curves_path);
    std::cout << "wrote " << curves_path << "\n";
  }
  if (!save_path.empty()) {
    save_network(net, save_path);
    std::cout << "wrote " << save_path << "\n";
  }
  return 0;
}

int cmd_eval(const std::string& model_path, const std::string& data_path) {
  const Network net = load_network(model_path);
  const Dataset data = load_dataset_csv(data_path);
  const EvalReport report = evaluate(net, data);
  std::printf("pair=%s_%s test_mae=%.6g test_pct_err=%.6g diverged=%d\n",
              report.a1.c_str(), report.a2.c_str(), report.test_mae,
              report.test_pct_err, report.diverged ? 1 : 0);
  return 0;
}

int cmd_sweep(const CLI::App& app, const GlobalOptions& g, bool smoke,
              const std::string& plan_path, std::size_t jobs,
              const std::string& out_dir) {
  SweepPlan plan = smoke ? SweepPlan::smoke() : SweepPlan::full();
  if (!plan_path.empty()) {
    plan = SweepPlan::load(plan_path);
  }
  apply_globals(app, g, plan);
  plan.parallelism = jobs;

  std::cout << "sweep: " << plan.pairs.size() << " pairs x "
            << plan.targets.size() << " targets = "
            << plan.pairs.size() * plan.targets.size() << " trials, "
            << plan.train.epochs << " epochs, " << plan.train_samples
            << " samples, jobs=" << plan.parallelism << ", kernels="
            << kernels::active().name << "\n";

  const std::vector<TrialResult> results = run_sweep(plan);
  report(results, out_dir);

  for (const TargetFunction& target : plan.targets) {
    const auto ranked = rank_results(results, target, RankKey::kTestPctErr);
    const TrialResult* best = ranked.front();
    std::printf("%-24s best=%s test_pct_err=%.4g\n",
                target.to_string().c_str(), best->pair_name().c_str(),
                best->test_pct_err);
  }
  std::cout << "wrote " << (std::filesystem::path(out_dir) / "results.csv").string()
            << "\n";
  return 0;
}

int cmd_report(const std::string& in_dir) {
  const std::filesystem::path dir(in_dir);
  std::vector<TrialResult> results = load_results_csv(dir / "results.csv");
  if (std::filesystem::exists(dir / "loss_curves.csv")) {
    load_loss_curves_csv(results, dir / "loss_curves.csv");
  }
  if (results.empty()) {
    std::cout << "no results in " << in_dir << "\n";
    return 0;
  }
  write_table1_md(results, dir / "table1.md");
  write_top_curves_csv(results, dir / "top7_curves.csv");
  std::cout << "wrote " << (dir / "table1.md").string() << " and "
            << (dir / "top7_curves.csv").string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"mulnet: log-exp activation pair experiments"};
  app.require_subcommand(1);

  GlobalOptions g;
  add_global_options(app, g);

  std::string target_spec = "product:n=2,N=10";

  auto* gen = app.add_subcommand("gen-data", "Write a synthetic dataset CSV");
  gen->fallthrough();
  double low = 10.0, high = 100.0;
  std::string gen_out = "data.csv";
  std::size_t hist_bins = 0;
  gen->add_option("--target", target_spec, "Target, e.g. product:n=2,N=10");
  gen->add_option("--low", low, "Range low (inclusive)");
  gen->add_option("--high", high, "Range high (exclusive)");
  gen->add_option("--out", gen_out, "Output CSV path");
  gen->add_option("--hist", hist_bins, "Also write a histogram CSV with K bins");

  auto* tr = app.add_subcommand("train", "Train one activation pair");
  tr->fallthrough();
  std::string a1 = "symlog", a2 = "symexp", save_path, curves_path;
  tr->add_option("--a1", a1, "First hidden layer activation");
  tr->add_option("--a2", a2, "Second hidden layer activation");
  tr->add_option("--target", target_spec, "Target, e.g. product:n=2,N=10");
  tr->add_option("--save", save_path, "Write trained model JSON");
  tr->add_option("--curves", curves_path, "Write loss trajectory CSV");

  auto* ev = app.add_subcommand("eval", "Evaluate a saved model on a dataset");
  std::string model_path, data_path;
  ev->add_option("--model", model_path, "Model JSON path")->required();
  ev->add_option("--data", data_path, "Dataset CSV path")->required();

  auto* sw = app.add_subcommand("sweep", "Run the activation-pair sweep");
  sw->fallthrough();
  bool smoke = false;
  std::string plan_path, out_dir = "sweep_out";
  std::size_t jobs = std::max(1u, std::thread::hardware_concurrency());
  sw->add_flag("--smoke", smoke, "Small CI plan (5 pairs, 20 epochs)");
  sw->add_option("--plan", plan_path, "Load a SweepPlan JSON file");
  sw->add_option("--jobs", jobs, "Concurrent trials");
  sw->add_option("--out", out_dir, "Output directory");

  auto* rp = app.add_subcommand("report", "Regenerate table1.md and top-7 curves");
  std::string in_dir;
  rp->add_option("--in", in_dir, "Directory holding results.csv")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return cmd_gen_data(mulnet::TargetFunction::parse(target_spec), low,
                          high, g, gen_out, hist_bins);
    }
    if (tr->parsed()) {
      return cmd_train(app, g, a1, a2,
                       mulnet::TargetFunction::parse(target_spec), save_path,
                       curves_path);
    }
    if (ev->parsed()) {
      return cmd_eval(model_path, data_path);
    }
    if (sw->parsed()) {
      return cmd_sweep(app, g, smoke, plan_path, jobs, out_dir);
    }
    if (rp->parsed()) {
      return cmd_report(in_dir);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
