// Copyright (C) 2026 the mulnet authors
// SPDX-License-Identifier: Apache-2.0
//
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "mulnet/datagen.hpp"
#include "mulnet/training.hpp"

namespace mulnet {

inline constexpr std::string_view kProposedA1 = "symlog";
inline constexpr std::string_view kProposedA2 = "symexp";

/// The full experiment: which activation pairs to train on which targets,
/// with every seed pinned so the result set is a pure function of the plan.
struct SweepPlan {
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<TargetFunction> targets;

  double train_low = 10.0;
  double train_high = 100.0;
  double test_low = 100.0;
  double test_high = 1000.0;
  std::size_t train_samples = 10000;
  std::size_t test_samples = 10000;

  std::size_t hidden1 = 6;
  std::size_t hidden2 = 3;
  TrainConfig train;

  std::uint64_t seed_data = 1;
  std::uint64_t seed_init = 16;
  std::uint64_t seed_shuffle = 3;

  std::size_t parallelism = 1;

  /// Proposed (symlog, symexp) pair plus all 121 baseline pairs, over the six
  /// product targets (n = 2..4, unnormalized and normalized) and the complex
  /// target: 122 x 7 = 854 trials.
  static SweepPlan full();

  /// CI-sized plan: proposed + {relu_linear, elu_elu, linear_linear,
  /// relu_selu}, 20 epochs, 2000 samples per split.
  static SweepPlan smoke();

  std::string to_json() const;
  static SweepPlan from_json_text(const std::string& text);
  static SweepPlan load(const std::filesystem::path& path);
};

/// The seven canonical targets in presentation order.
std::vector<TargetFunction> default_targets();

struct TrialResult {
  std::string a1;
  std::string a2;
  TargetFunction target;
  std::vector<double> losses;  // per-epoch training MAE, truncated on divergence
  double final_train_loss = 0.0;  // +inf when diverged
  double test_mae = 0.0;
  double test_pct_err = 0.0;
  bool diverged = false;
  double wall_s = 0.0;

  std::string pair_name() const { return a1 + "_" + a2; }
};

/// Seeds for one (pair, target) trial, derived by hashing into the plan
/// seeds; independent of trial execution order.
struct TrialSeeds {
  std::uint64_t data_train;
  std::uint64_t data_test;
  std::uint64_t init;
  std::uint64_t shuffle;
};
TrialSeeds derive_trial_seeds(const SweepPlan& plan, const std::string& a1,
                              const std::string& a2,
                              const TargetFunction& target);

/// Runs every (pair, target) trial on a bounded worker pool. Individual trial
/// failures are recorded as diverged; the sweep always completes. The result
/// vector is in plan order (targets outer, pairs inner) regardless of
/// parallelism.
std::vector<TrialResult> run_sweep(const SweepPlan& plan);

enum class RankKey { kFinalTrainLoss, kTestPctErr };

/// Results for one target in ascending key order; diverged trials last; ties
/// broken lexicographically by pair name. Throws LookupError if the target
/// has no results.
std::vector<const TrialResult*> rank_results(
    const std::vector<TrialResult>& results, const TargetFunction& target,
    RankKey key);

// -- Result files -----------------------------------------------------------
// results.csv: a1,a2,target_kind,n_inputs,normalizer,final_train_loss,
//              test_mae,test_pct_err,diverged,wall_s
// loss_curves.csv: a1,a2,target_kind,n_inputs,normalizer,epoch,loss
// Rows are sorted by (target string, a1, a2); all numeric fields are written
// in shortest round-trip form, so a plan determines the bytes of every column
// except the wall_s timing.

void write_results_csv(const std::vector<TrialResult>& results,
                       const std::filesystem::path& path);
void write_loss_curves_csv(const std::vector<TrialResult>& results,
                           const std::filesystem::path& path);
void write_table1_md(const std::vector<TrialResult>& results,
                     const std::filesystem::path& path);
/// Per target: the proposed pair plus the 7 baselines with the lowest final
/// training loss, in loss_curves.csv format.
void write_top_curves_csv(const std::vector<TrialResult>& results,
                          const std::filesystem::path& path);

/// Writes results.csv, loss_curves.csv, table1.md and top7_curves.csv.
void report(const std::vector<TrialResult>& results,
            const std::filesystem::path& out_dir);

std::vector<TrialResult> load_results_csv(const std::filesystem::path& path);
/// Restores per-epoch losses into `results` from loss_curves.csv.
void load_loss_curves_csv(std::vector<TrialResult>& results,
                          const std::filesystem::path& path);

}  // namespace mulnet
