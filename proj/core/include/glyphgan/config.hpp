// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "glyphgan/loss.hpp"
#include "glyphgan/net/spec.hpp"

namespace glyphgan {

/// Loss weights, schedules, optimizer settings, and per-term ablation
/// switches. Defaults follow the reference hyperparameters: lambda1=300,
/// lambda2 300->3 at epoch 200, lambda3=10, lambda4=300, letter weights 10/1.
struct TrainConfig {
  // End-to-end loss weights.
  double lambda1 = 300.0;
  LambdaSchedule lambda2;  // 300 -> 3 at epoch 200
  double lambda3 = 10.0;
  double lambda4 = 300.0;
  double w_observed = 10.0;
  double w_unobserved = 1.0;

  // Pretraining.
  double glyph_l1_weight = 100.0;  // lambda of the pretraining objective
  int batch_size = 16;
  int pretrain_steps = 10000;
  int checkpoint_every = 1000;
  int observed_min = 1;
  int observed_max = 8;

  // Fine-tuning.
  int finetune_epochs = 400;

  // Optimizer.
  double lr = 2e-4;
  double beta1 = 0.5;
  double beta2 = 0.999;

  // Mask binarization sharpness on [-1,1] values.
  double mask_sharpness = 20.0;

  // Ablation switches.
  bool use_lsgan_local = true;
  bool use_lsgan_global = true;
  bool use_l1 = true;         // lambda1 term
  bool use_mask_mse = true;   // lambda2 term
  bool use_frozen_l1 = true;  // lambda3 term
  bool use_glyph_mask = true; // lambda4 term
  bool mask_vs_input = false; // prose variant of the lambda2 mask target
  std::string ornanet_init;   // optional checkpoint to warm-start OrnaNet

  // Architecture scale (defaults reproduce the full-size networks).
  int g_width = 64;
  int d_width = 64;
  int encoder_blocks = 3;
  int decoder_blocks = 3;
  int first_kernel = 7;
  int last_kernel = 7;

  GeneratorOptions g1_options() const;
  GeneratorOptions g2_options() const;
  DiscriminatorOptions d1_options() const;
  DiscriminatorOptions d2_options() const;
};

/// Full run configuration: training knobs plus paths and process settings.
struct RunConfig {
  TrainConfig train;
  std::string data_root;       // falls back to $GLYPHGAN_DATA_ROOT
  std::string checkpoint_dir = "checkpoints";
  std::string out_dir = "out";
  uint64_t seed = 1;
  std::string device = "cpu";
  int verbosity = 1;
};

/// Flat `key = value` file with '#' comments and `include <path>` of default
/// files (included values are overridden by later keys). Unknown keys are
/// rejected; every validation problem is reported in one ConfigError.
std::map<std::string, std::string> parse_key_value_file(const std::string& path);

/// Builds a RunConfig from parsed keys plus command-line overrides (applied
/// after the file, highest precedence).
RunConfig make_run_config(const std::map<std::string, std::string>& file_values,
                          const std::map<std::string, std::string>& overrides);

/// All recognized configuration keys.
const std::vector<std::string>& known_config_keys();

}  // namespace glyphgan
