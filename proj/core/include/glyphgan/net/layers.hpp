// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "glyphgan/net/params.hpp"
#include "glyphgan/net/spec.hpp"
#include "glyphgan/rng.hpp"
#include "glyphgan/tensor.hpp"

namespace glyphgan {

/// Everything a forward pass needs beyond the input. A null rng is only
/// valid when no dropout draw happens (eval mode or rate 0).
struct PassContext {
  bool training = false;
  Rng* rng = nullptr;
};

/// Cached activations for one layer's backward pass. Composite layers nest.
struct LayerCache {
  Tensor input;
  Tensor a;  // layer-specific: bn xhat / dropout mask / tanh output ...
  Tensor b;
  bool training = false;  // mode the forward ran in (batchnorm backward differs)
  std::vector<LayerCache> children;
};

/// Runtime layer bound to entries of a ParamSet. Layers are stateless across
/// passes: all per-pass state lives in the LayerCache, so one set of weights
/// can run several concurrent forward/backward chains (the discriminator's
/// local trunk is shared between its direct and global paths).
class Layer {
 public:
  explicit Layer(const LayerSpec& spec) : spec_(spec) {}
  virtual ~Layer() = default;

  virtual void init_params(const std::string& prefix, ParamSet& ps, Rng& rng);
  virtual void bind(const std::string& prefix, ParamSet& ps);

  virtual Tensor forward(const Tensor& x, const PassContext& ctx, LayerCache* cache) = 0;
  /// Accumulates parameter gradients and returns dLoss/dInput.
  virtual Tensor backward(const Tensor& dy, const LayerCache& cache) = 0;

  const LayerSpec& spec() const { return spec_; }

 protected:
  LayerSpec spec_;
};

std::unique_ptr<Layer> make_layer(const LayerSpec& spec);

// --- Direct convolution helpers (exposed for oracle tests) ---------------

/// Plain nested-loop convolution used as the independent reference for the
/// GEMM path in tests. Odd kernels, pad (k-1)/2.
Tensor conv2d_reference(const Tensor& x, const Tensor& w, const Tensor& bias, int stride,
                        int groups);

}  // namespace glyphgan
