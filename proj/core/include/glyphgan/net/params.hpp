// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "glyphgan/tensor.hpp"

namespace glyphgan {

/// Named parameter arrays for one network, keyed "L<i>.<name>". `values`
/// holds both trainable parameters and batchnorm running statistics;
/// only keys present in `grads` are trainable. The training flag controls
/// dropout and which batchnorm statistics forward passes use.
struct ParamSet {
  std::map<std::string, Tensor> values;
  std::map<std::string, Tensor> grads;
  bool training = true;
  uint64_t spec_hash = 0;

  Tensor& value(const std::string& key);
  Tensor& grad(const std::string& key);
  bool is_trainable(const std::string& key) const { return grads.count(key) != 0; }

  /// Total trainable element count.
  int64_t param_count() const;

  void zero_grad();
};

}  // namespace glyphgan
