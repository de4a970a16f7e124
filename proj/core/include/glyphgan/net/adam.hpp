// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <map>
#include <string>

#include "glyphgan/net/params.hpp"

namespace glyphgan {

/// Adam with bias correction. One instance per ParamSet; moment buffers are
/// created lazily and keyed by parameter name so they serialize with
/// checkpoints.
class Adam {
 public:
  Adam() = default;
  Adam(double lr, double beta1 = 0.5, double beta2 = 0.999, double eps = 1e-8)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps) {}

  void step(ParamSet& ps);

  double learning_rate() const { return lr_; }
  void set_learning_rate(double lr) { lr_ = lr; }
  uint64_t iterations() const { return t_; }

  // Checkpoint plumbing.
  std::map<std::string, Tensor>& moment1() { return m_; }
  std::map<std::string, Tensor>& moment2() { return v_; }
  void set_iterations(uint64_t t) { t_ = t; }

 private:
  double lr_ = 2e-4;
  double beta1_ = 0.5;
  double beta2_ = 0.999;
  double eps_ = 1e-8;
  uint64_t t_ = 0;
  std::map<std::string, Tensor> m_;
  std::map<std::string, Tensor> v_;
};

}  // namespace glyphgan
