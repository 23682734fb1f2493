// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <limits>

#include "mulnet/sweep.hpp"
#include "test_util.hpp"

using namespace mulnet;

namespace {

// A quick plan for exercising the sweep machinery itself.
SweepPlan tiny_plan() {
  SweepPlan plan;
  plan.pairs = {{"symlog", "symexp"}, {"relu", "linear"}};
  plan.targets = {TargetFunction::product(2, 10.0), TargetFunction::complex()};
  plan.train_samples = 200;
  plan.test_samples = 200;
  plan.train.epochs = 3;
  return plan;
}

TrialResult synthetic_result(const std::string& a1, const std::string& a2,
                             double pct, bool diverged = false) {
  TrialResult r;
  r.a1 = a1;
  r.a2 = a2;
  r.target = TargetFunction::product(2, 10.0);
  r.losses = {3.0, 2.0, 1.0};
  r.final_train_loss = diverged ? std::numeric_limits<double>::infinity() : 1.0;
  r.test_mae = pct;
  r.test_pct_err = pct;
  r.diverged = diverged;
  r.wall_s = 0.5;
  return r;
}

}  // namespace

TEST_CASE("default plans have the documented shape") {
  const SweepPlan full = SweepPlan::full();
  CHECK(full.pairs.size() == 122);
  CHECK(full.targets.size() == 7);
  CHECK(full.pairs.front().first == "symlog");
  CHECK(full.pairs.front().second == "symexp");
  CHECK(full.train_samples == 10000);
  CHECK(full.train.epochs == 100);

  const SweepPlan smoke = SweepPlan::smoke();
  CHECK(smoke.pairs.size() == 5);
  CHECK(smoke.train_samples == 2000);
  CHECK(smoke.train.epochs == 20);
}

TEST_CASE("plan JSON round-trips") {
  SweepPlan plan = tiny_plan();
  plan.seed_data = 11;
  plan.seed_init = 22;
  plan.seed_shuffle = 33;
  plan.parallelism = 4;
  plan.hidden1 = 6;
  plan.train.learning_rate = 0.01;
  const SweepPlan back = SweepPlan::from_json_text(plan.to_json());
  CHECK(back.pairs == plan.pairs);
  CHECK(back.targets == plan.targets);
  CHECK(back.seed_data == 11);
  CHECK(back.seed_init == 22);
  CHECK(back.seed_shuffle == 33);
  CHECK(back.parallelism == 4);
  CHECK(back.hidden1 == 6);
  CHECK(back.train.learning_rate == 0.01);
  CHECK(back.train.epochs == plan.train.epochs);
}

TEST_CASE("run_sweep rejects duplicate pairs and empty plans") {
  SweepPlan plan = tiny_plan();
  plan.pairs.push_back(plan.pairs.front());
  CHECK_THROWS_AS(run_sweep(plan), ConfigError);
  plan.pairs.clear();
  CHECK_THROWS_AS(run_sweep(plan), ConfigError);
}

TEST_CASE("one pair and one target yields exactly one result") {
  SweepPlan plan = tiny_plan();
  plan.pairs = {{"relu", "linear"}};
  plan.targets = {TargetFunction::product(2, 10.0)};
  const auto results = run_sweep(plan);
  REQUIRE(results.size() == 1);
  CHECK(results[0].a1 == "relu");
  CHECK(results[0].a2 == "linear");
  CHECK(results[0].losses.size() == plan.train.epochs);
}

TEST_CASE("every (pair, target) appears exactly once") {
  const SweepPlan plan = tiny_plan();
  const auto results = run_sweep(plan);
  REQUIRE(results.size() == plan.pairs.size() * plan.targets.size());
  for (const auto& [a1, a2] : plan.pairs) {
    for (const TargetFunction& target : plan.targets) {
      std::size_t count = 0;
      for (const TrialResult& r : results) {
        if (r.a1 == a1 && r.a2 == a2 && r.target == target) ++count;
      }
      CHECK(count == 1);
    }
  }
}

TEST_CASE("results are independent of the parallelism degree") {
  SweepPlan plan = tiny_plan();
  plan.parallelism = 1;
  const auto serial = run_sweep(plan);
  plan.parallelism = 4;
  const auto parallel = run_sweep(plan);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].a1 == parallel[i].a1);
    CHECK(serial[i].a2 == parallel[i].a2);
    CHECK(serial[i].final_train_loss == parallel[i].final_train_loss);
    CHECK(serial[i].test_mae == parallel[i].test_mae);
    CHECK(serial[i].test_pct_err == parallel[i].test_pct_err);
    REQUIRE(serial[i].losses.size() == parallel[i].losses.size());
    for (std::size_t e = 0; e < serial[i].losses.size(); ++e) {
      CHECK(serial[i].losses[e] == parallel[i].losses[e]);
    }
  }
}

TEST_CASE("rank_results orders by key with diverged trials last") {
  std::vector<TrialResult> results;
  results.push_back(synthetic_result("tanh", "tanh", 50.0));
  results.push_back(synthetic_result("relu", "linear", 10.0));
  results.push_back(synthetic_result("elu", "elu", 0.0, /*diverged=*/true));
  results.push_back(synthetic_result("symlog", "symexp", 10.0));

  const auto ranked = rank_results(results, TargetFunction::product(2, 10.0),
                                   RankKey::kTestPctErr);
  REQUIRE(ranked.size() == 4);
  // tie at 10.0 broken lexicographically: relu_linear < symlog_symexp
  CHECK(ranked[0]->pair_name() == "relu_linear");
  CHECK(ranked[1]->pair_name() == "symlog_symexp");
  CHECK(ranked[2]->pair_name() == "tanh_tanh");
  CHECK(ranked[3]->pair_name() == "elu_elu");  // diverged sorts last

  CHECK_THROWS_AS(
      rank_results(results, TargetFunction::product(4, 1.0), RankKey::kTestPctErr),
      LookupError);

  std::vector<TrialResult> single{synthetic_result("relu", "relu", 5.0)};
  const auto one = rank_results(single, TargetFunction::product(2, 10.0),
                                RankKey::kFinalTrainLoss);
  REQUIRE(one.size() == 1);
  CHECK(one[0]->pair_name() == "relu_relu");
}

TEST_CASE("result CSVs round-trip and empty results give header-only files") {
  const auto dir = std::filesystem::temp_directory_path() / "mulnet_sweep_test";
  std::filesystem::create_directories(dir);

  const std::vector<TrialResult> empty;
  write_results_csv(empty, dir / "results.csv");
  write_loss_curves_csv(empty, dir / "loss_curves.csv");
  {
    std::ifstream in(dir / "results.csv");
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line ==
          "a1,a2,target_kind,n_inputs,normalizer,final_train_loss,test_mae,"
          "test_pct_err,diverged,wall_s");
    CHECK(!std::getline(in, line));
  }

  std::vector<TrialResult> results;
  results.push_back(synthetic_result("relu", "linear", 12.5));
  results.push_back(synthetic_result("symlog", "symexp", 1.25));
  results.push_back(synthetic_result("elu", "elu", 0.0, /*diverged=*/true));
  results[1].target = TargetFunction::complex();
  write_results_csv(results, dir / "results.csv");
  write_loss_curves_csv(results, dir / "loss_curves.csv");

  auto back = load_results_csv(dir / "results.csv");
  REQUIRE(back.size() == results.size());
  load_loss_curves_csv(back, dir / "loss_curves.csv");
  for (const TrialResult& r : back) {
    const TrialResult* orig = nullptr;
    for (const TrialResult& o : results) {
      if (o.pair_name() == r.pair_name() && o.target == r.target) orig = &o;
    }
    REQUIRE(orig != nullptr);
    CHECK(r.final_train_loss == orig->final_train_loss);
    CHECK(r.test_mae == orig->test_mae);
    CHECK(r.test_pct_err == orig->test_pct_err);
    CHECK(r.diverged == orig->diverged);
    CHECK(r.losses == orig->losses);
  }

  std::filesystem::remove_all(dir);
}

TEST_CASE("report writes the full artifact set") {
  const auto dir = std::filesystem::temp_directory_path() / "mulnet_report_test";
  std::filesystem::remove_all(dir);

  SweepPlan plan = tiny_plan();
  const auto results = run_sweep(plan);
  report(results, dir);
  CHECK(std::filesystem::exists(dir / "results.csv"));
  CHECK(std::filesystem::exists(dir / "loss_curves.csv"));
  CHECK(std::filesystem::exists(dir / "table1.md"));
  CHECK(std::filesystem::exists(dir / "top7_curves.csv"));

  // table1.md: header + separator + one row per target
  std::ifstream in(dir / "table1.md");
  std::string line;
  std::size_t rows = 0;
  while (std::getline(in, line)) ++rows;
  CHECK(rows == 2 + plan.targets.size());

  std::filesystem::remove_all(dir);
}

TEST_CASE("table1 covers all seven default targets") {
  std::vector<TrialResult> results;
  for (const TargetFunction& target : default_targets()) {
    TrialResult p = synthetic_result("symlog", "symexp", 5.0);
    p.target = target;
    TrialResult b = synthetic_result("relu", "linear", 50.0);
    b.target = target;
    results.push_back(p);
    results.push_back(b);
  }
  const auto path = std::filesystem::temp_directory_path() / "mulnet_table1.md";
  write_table1_md(results, path);
  std::ifstream in(path);
  std::string line;
  std::size_t rows = 0;
  bool next_best_named = false;
  while (std::getline(in, line)) {
    ++rows;
    if (line.find("relu_linear") != std::string::npos) next_best_named = true;
  }
  CHECK(rows == 2 + 7);
  CHECK(next_best_named);
  std::filesystem::remove(path);
}

TEST_CASE("trial seeds depend on pair, target, and the plan seeds") {
  const SweepPlan plan = tiny_plan();
  const TargetFunction t0 = plan.targets[0];
  const TargetFunction t1 = plan.targets[1];
  const TrialSeeds a = derive_trial_seeds(plan, "symlog", "symexp", t0);
  const TrialSeeds b = derive_trial_seeds(plan, "relu", "linear", t0);
  const TrialSeeds c = derive_trial_seeds(plan, "symlog", "symexp", t1);
  // data seeds are shared within a target so every pair sees the same data
  CHECK(a.data_train == b.data_train);
  CHECK(a.data_test == b.data_test);
  CHECK(a.data_train != c.data_train);
  // init/shuffle streams are per-trial
  CHECK(a.init != b.init);
  CHECK(a.shuffle != b.shuffle);
  CHECK(a.init != c.init);
}
