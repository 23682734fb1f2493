// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include "mulnet/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <thread>

#include <json.hpp>

#include "mulnet/metrics.hpp"
#include "mulnet/rng.hpp"

namespace mulnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string format_double(double v) {
  char buf[40];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw IoError("bad numeric field: '" + std::string(s) + "'");
  }
  return v;
}

std::vector<std::string_view> split_csv_line(std::string_view line,
                                             std::size_t expect) {
  std::vector<std::string_view> fields;
  fields.reserve(expect);
  while (true) {
    const std::size_t comma = line.find(',');
    fields.push_back(line.substr(0, comma));
    if (comma == std::string_view::npos) break;
    line = line.substr(comma + 1);
  }
  if (fields.size() != expect) {
    throw IoError("csv row has " + std::to_string(fields.size()) +
                  " fields, expected " + std::to_string(expect));
  }
  return fields;
}

// Canonical row order for every result file.
bool result_row_less(const TrialResult& a, const TrialResult& b) {
  return std::tie(a.target.kind, a.target.n_inputs, a.target.normalizer, a.a1,
                  a.a2) < std::tie(b.target.kind, b.target.n_inputs,
                                   b.target.normalizer, b.a1, b.a2);
}

std::vector<const TrialResult*> sorted_view(
    const std::vector<TrialResult>& results) {
  std::vector<const TrialResult*> view;
  view.reserve(results.size());
  for (const TrialResult& r : results) view.push_back(&r);
  std::sort(view.begin(), view.end(),
            [](const TrialResult* a, const TrialResult* b) {
              return result_row_less(*a, *b);
            });
  return view;
}

std::vector<TargetFunction> targets_in_order(
    const std::vector<TrialResult>& results) {
  std::vector<TargetFunction> targets;
  for (const TrialResult* r : sorted_view(results)) {
    if (std::find(targets.begin(), targets.end(), r->target) == targets.end()) {
      targets.push_back(r->target);
    }
  }
  return targets;
}

bool is_proposed(const TrialResult& r) {
  return r.a1 == kProposedA1 && r.a2 == kProposedA2;
}

}  // namespace

std::vector<TargetFunction> default_targets() {
  return {
      TargetFunction::product(2, 1.0),    TargetFunction::product(2, 10.0),
      TargetFunction::product(3, 1.0),    TargetFunction::product(3, 100.0),
      TargetFunction::product(4, 1.0),    TargetFunction::product(4, 1000.0),
      TargetFunction::complex(),
  };
}

SweepPlan SweepPlan::full() {
  SweepPlan plan;
  plan.pairs.emplace_back(kProposedA1, kProposedA2);
  for (std::string_view a1 : baseline_activation_names()) {
    for (std::string_view a2 : baseline_activation_names()) {
      plan.pairs.emplace_back(std::string(a1), std::string(a2));
    }
  }
  plan.targets = default_targets();
  return plan;
}

SweepPlan SweepPlan::smoke() {
  SweepPlan plan;
  plan.pairs = {{std::string(kProposedA1), std::string(kProposedA2)},
                {"relu", "linear"},
                {"elu", "elu"},
                {"linear", "linear"},
                {"relu", "selu"}};
  plan.targets = default_targets();
  plan.train.epochs = 20;
  plan.train_samples = 2000;
  plan.test_samples = 2000;
  return plan;
}

std::string SweepPlan::to_json() const {
  nlohmann::json j;
  auto& jp = j["pairs"] = nlohmann::json::array();
  for (const auto& [a1, a2] : pairs) jp.push_back({a1, a2});
  auto& jt = j["targets"] = nlohmann::json::array();
  for (const TargetFunction& t : targets) jt.push_back(t.to_string());
  j["train_range"] = {train_low, train_high};
  j["test_range"] = {test_low, test_high};
  j["train_samples"] = train_samples;
  j["test_samples"] = test_samples;
  j["hidden1"] = hidden1;
  j["hidden2"] = hidden2;
  j["train"] = {{"epochs", train.epochs},
                {"batch_size", train.batch_size},
                {"learning_rate", train.learning_rate},
                {"adam_beta1", train.adam_beta1},
                {"adam_beta2", train.adam_beta2},
                {"adam_epsilon", train.adam_epsilon}};
  j["seeds"] = {{"data", seed_data}, {"init", seed_init},
                {"shuffle", seed_shuffle}};
  j["parallelism"] = parallelism;
  return j.dump(2);
}

SweepPlan SweepPlan::from_json_text(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  SweepPlan plan = SweepPlan::full();
  if (j.contains("pairs")) {
    plan.pairs.clear();
    for (const auto& p : j.at("pairs")) {
      plan.pairs.emplace_back(p.at(0).get<std::string>(),
                              p.at(1).get<std::string>());
    }
  }
  if (j.contains("targets")) {
    plan.targets.clear();
    for (const auto& t : j.at("targets")) {
      plan.targets.push_back(TargetFunction::parse(t.get<std::string>()));
    }
  }
  if (j.contains("train_range")) {
    plan.train_low = j.at("train_range").at(0).get<double>();
    plan.train_high = j.at("train_range").at(1).get<double>();
  }
  if (j.contains("test_range")) {
    plan.test_low = j.at("test_range").at(0).get<double>();
    plan.test_high = j.at("test_range").at(1).get<double>();
  }
  plan.train_samples = j.value("train_samples", plan.train_samples);
  plan.test_samples = j.value("test_samples", plan.test_samples);
  plan.hidden1 = j.value("hidden1", plan.hidden1);
  plan.hidden2 = j.value("hidden2", plan.hidden2);
  if (j.contains("train")) {
    const auto& jt = j.at("train");
    plan.train.epochs = jt.value("epochs", plan.train.epochs);
    plan.train.batch_size = jt.value("batch_size", plan.train.batch_size);
    plan.train.learning_rate =
        jt.value("learning_rate", plan.train.learning_rate);
    plan.train.adam_beta1 = jt.value("adam_beta1", plan.train.adam_beta1);
    plan.train.adam_beta2 = jt.value("adam_beta2", plan.train.adam_beta2);
    plan.train.adam_epsilon = jt.value("adam_epsilon", plan.train.adam_epsilon);
  }
  if (j.contains("seeds")) {
    const auto& js = j.at("seeds");
    plan.seed_data = js.value("data", plan.seed_data);
    plan.seed_init = js.value("init", plan.seed_init);
    plan.seed_shuffle = js.value("shuffle", plan.seed_shuffle);
  }
  plan.parallelism = j.value("parallelism", plan.parallelism);
  return plan;
}

SweepPlan SweepPlan::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::string text{std::istreambuf_iterator<char>(in),
                   std::istreambuf_iterator<char>()};
  return from_json_text(text);
}

TrialSeeds derive_trial_seeds(const SweepPlan& plan, const std::string& a1,
                              const std::string& a2,
                              const TargetFunction& target) {
  const std::string key = target.to_string();
  return {
      derive_seed(plan.seed_data, {key, "train"}),
      derive_seed(plan.seed_data, {key, "test"}),
      derive_seed(plan.seed_init, {a1, a2, key}),
      derive_seed(plan.seed_shuffle, {a1, a2, key}),
  };
}

std::vector<TrialResult> run_sweep(const SweepPlan& plan) {
  if (plan.pairs.empty() || plan.targets.empty()) {
    throw ConfigError("sweep plan needs at least one pair and one target");
  }
  {
    std::set<std::pair<std::string, std::string>> seen(plan.pairs.begin(),
                                                       plan.pairs.end());
    if (seen.size() != plan.pairs.size()) {
      throw ConfigError("sweep plan has duplicate activation pairs");
    }
  }
  validate(plan.train);

  // Datasets are shared across pairs within a target; generate them up front.
  std::vector<Dataset> train_sets;
  std::vector<Dataset> test_sets;
  train_sets.reserve(plan.targets.size());
  test_sets.reserve(plan.targets.size());
  for (const TargetFunction& target : plan.targets) {
    const TrialSeeds seeds =
        derive_trial_seeds(plan, plan.pairs[0].first, plan.pairs[0].second,
                           target);
    train_sets.push_back(generate(target, plan.train_low, plan.train_high,
                                  plan.train_samples, seeds.data_train));
    test_sets.push_back(generate(target, plan.test_low, plan.test_high,
                                 plan.test_samples, seeds.data_test));
  }

  const std::size_t n_trials = plan.pairs.size() * plan.targets.size();
  std::vector<TrialResult> results(n_trials);

  auto run_trial = [&](std::size_t trial_idx) {
    const std::size_t target_idx = trial_idx / plan.pairs.size();
    const std::size_t pair_idx = trial_idx % plan.pairs.size();
    const TargetFunction& target = plan.targets[target_idx];
    const auto& [a1, a2] = plan.pairs[pair_idx];

    TrialResult& r = results[trial_idx];
    r.a1 = a1;
    r.a2 = a2;
    r.target = target;

    const auto t0 = std::chrono::steady_clock::now();
    try {
      const TrialSeeds seeds = derive_trial_seeds(plan, a1, a2, target);
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
      const TrainResult tr = train(net, train_sets[target_idx], cfg);
      r.losses = tr.epoch_losses;
      r.diverged = tr.diverged;
      if (!tr.diverged) {
        const EvalReport eval = evaluate(net, test_sets[target_idx]);
        r.diverged = eval.diverged;
        r.test_mae = eval.test_mae;
        r.test_pct_err = eval.test_pct_err;
      }
    } catch (const std::exception&) {
      r.diverged = true;  // trial failure is a recorded outcome
    }
    if (r.diverged) {
      r.final_train_loss = kInf;
      r.test_mae = kInf;
      r.test_pct_err = kInf;
    } else {
      r.final_train_loss = r.losses.empty() ? kInf : r.losses.back();
    }
    r.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                             t0)
                   .count();
  };

  const std::size_t jobs = std::max<std::size_t>(1, plan.parallelism);
  if (jobs == 1) {
    for (std::size_t i = 0; i < n_trials; ++i) run_trial(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (std::size_t w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        while (true) {
          const std::size_t i = next.fetch_add(1);
          if (i >= n_trials) break;
          run_trial(i);
        }
      });
    }
    for (std::thread& t : workers) t.join();
  }
  return results;
}

std::vector<const TrialResult*> rank_results(
    const std::vector<TrialResult>& results, const TargetFunction& target,
    RankKey key) {
  std::vector<const TrialResult*> selected;
  for (const TrialResult& r : results) {
    if (r.target == target) selected.push_back(&r);
  }
  if (selected.empty()) {
    throw LookupError("no results for target " + target.to_string());
  }
  auto key_of = [key](const TrialResult& r) {
    return key == RankKey::kFinalTrainLoss ? r.final_train_loss
                                           : r.test_pct_err;
  };
  std::sort(selected.begin(), selected.end(),
            [&](const TrialResult* a, const TrialResult* b) {
              if (a->diverged != b->diverged) return b->diverged;
              const double ka = key_of(*a);
              const double kb = key_of(*b);
              if (ka != kb) return ka < kb;
              return a->pair_name() < b->pair_name();
            });
  return selected;
}

void write_results_csv(const std::vector<TrialResult>& results,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "a1,a2,target_kind,n_inputs,normalizer,final_train_loss,test_mae,"
         "test_pct_err,diverged,wall_s\n";
  char wall[32];
  for (const TrialResult* r : sorted_view(results)) {
    std::snprintf(wall, sizeof(wall), "%.3f", r->wall_s);
    out << r->a1 << ',' << r->a2 << ',' << r->target.kind_name() << ','
        << r->target.n_inputs << ',' << format_double(r->target.normalizer)
        << ',' << format_double(r->final_train_loss) << ','
        << format_double(r->test_mae) << ',' << format_double(r->test_pct_err)
        << ',' << (r->diverged ? 1 : 0) << ',' << wall << '\n';
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

void write_loss_curves_csv(const std::vector<TrialResult>& results,
                           const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  out << "a1,a2,target_kind,n_inputs,normalizer,epoch,loss\n";
  for (const TrialResult* r : sorted_view(results)) {
    for (std::size_t e = 0; e < r->losses.size(); ++e) {
      out << r->a1 << ',' << r->a2 << ',' << r->target.kind_name() << ','
          << r->target.n_inputs << ',' << format_double(r->target.normalizer)
          << ',' << e << ',' << format_double(r->losses[e]) << '\n';
    }
  }
  if (!out) {
    throw IoError("write failed: " + path.string());
  }
}

void write_table1_md(const std::vector<TrialResult>& results,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw IoError("cannot write " + path.string());
  }
  auto fmt6 = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return std::string(buf);
  };
  out << "| Expression | %_err (symlog_symexp) | MAE (symlog_symexp) | Next "
         "best pair | %_err (next best) |\n";
  out << "|---|---|---|---|---|\n";
  for (const TargetFunction& target : targets_in_order(results)) {
    const auto ranked = rank_results(results, target, RankKey::kTestPctErr);
    const TrialResult* proposed = nullptr;
    const TrialResult* next_best = nullptr;
    for (const TrialResult* r : ranked) {
      if (is_proposed(*r)) {
        if (proposed == nullptr) proposed = r;
      } else if (next_best == nullptr) {
        next_best = r;
      }
    }
    out << "| " << target.expression() << " | "
        << (proposed ? fmt6(proposed->test_pct_err) : "-") << " | "
        << (proposed ? fmt6(proposed->test_mae) : "-") << " | "
        << (next_best ? next_best->pair_name() : "-") << " | "
        << (next_best ? fmt6(next_best->test_pct_err) : "-") << " |\n";
  }
}

void write_top_curves_csv(const std::vector<TrialResult>& results,
                          const std::filesystem::path& path) {
  // Mirrors the training-loss plots: per target keep the proposed pair and
  // the 7 baselines with the lowest final training loss.
  std::vector<TrialResult> kept;
  for (const TargetFunction& target : targets_in_order(results)) {
    const auto ranked = rank_results(results, target, RankKey::kFinalTrainLoss);
    std::size_t baselines = 0;
    for (const TrialResult* r : ranked) {
      if (is_proposed(*r)) {
        kept.push_back(*r);
      } else if (baselines < 7) {
        kept.push_back(*r);
        ++baselines;
      }
    }
  }
  write_loss_curves_csv(kept, path);
}

void report(const std::vector<TrialResult>& results,
            const std::filesystem::path& out_dir) {
  std::filesystem::create_directories(out_dir);
  write_results_csv(results, out_dir / "results.csv");
  write_loss_curves_csv(results, out_dir / "loss_curves.csv");
  if (!results.empty()) {
    write_table1_md(results, out_dir / "table1.md");
    write_top_curves_csv(results, out_dir / "top7_curves.csv");
  }
}

std::vector<TrialResult> load_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::string line;
  if (!std::getline(in, line)) {
    throw IoError(path.string() + ": empty file");
  }
  std::vector<TrialResult> results;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line, 10);
    TrialResult r;
    r.a1 = std::string(f[0]);
    r.a2 = std::string(f[1]);
    if (f[2] == "complex") {
      r.target = TargetFunction::complex();
    } else {
      r.target = TargetFunction::product(
          static_cast<std::size_t>(parse_double(f[3])), parse_double(f[4]));
    }
    r.final_train_loss = parse_double(f[5]);
    r.test_mae = parse_double(f[6]);
    r.test_pct_err = parse_double(f[7]);
    r.diverged = f[8] == "1";
    r.wall_s = parse_double(f[9]);
    results.push_back(std::move(r));
  }
  return results;
}

void load_loss_curves_csv(std::vector<TrialResult>& results,
                          const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw IoError("cannot read " + path.string());
  }
  std::map<std::string, TrialResult*> by_key;
  for (TrialResult& r : results) {
    by_key[r.pair_name() + "|" + r.target.to_string()] = &r;
    r.losses.clear();
  }
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line, 7);
    TargetFunction target =
        f[2] == "complex"
            ? TargetFunction::complex()
            : TargetFunction::product(
                  static_cast<std::size_t>(parse_double(f[3])),
                  parse_double(f[4]));
    const std::string key = std::string(f[0]) + "_" + std::string(f[1]) + "|" +
                            target.to_string();
    const auto it = by_key.find(key);
    if (it == by_key.end()) continue;
    const auto epoch = static_cast<std::size_t>(parse_double(f[5]));
    auto& losses = it->second->losses;
    if (losses.size() != epoch) {
      throw IoError(path.string() + ": epochs out of order for " + key);
    }
    losses.push_back(parse_double(f[6]));
  }
}

}  // namespace mulnet
