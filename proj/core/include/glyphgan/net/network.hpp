// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <vector>

#include "glyphgan/net/layers.hpp"
#include "glyphgan/net/spec.hpp"

namespace glyphgan {

/// Recorded activations of one forward pass; backward consumes it. Keeping
/// the tape outside the network lets one weight set serve several live
/// passes (real/fake discriminator batches, shared local trunk).
struct Tape {
  std::vector<LayerCache> caches;
};

/// A sequential network realized from a NetworkSpec, owning its ParamSet.
class Network {
 public:
  Network(NetworkSpec spec, uint64_t init_seed);

  /// Runs the net. `tape` may be null when no backward pass will follow
  /// (dropout still consumes rng draws so sequences stay reproducible).
  Tensor forward(const Tensor& x, bool training, Rng* rng, Tape* tape);

  /// Returns dLoss/dInput and accumulates parameter gradients.
  Tensor backward(const Tensor& dy, const Tape& tape);

  void zero_grad() { params_.zero_grad(); }

  ParamSet& params() { return params_; }
  const ParamSet& params() const { return params_; }
  const NetworkSpec& spec() const { return spec_; }

  /// Rebinds layers after params_.values was replaced wholesale (checkpoint
  /// load); shapes must match the spec.
  void rebind();

 private:
  NetworkSpec spec_;
  std::vector<std::unique_ptr<Layer>> layers_;
  ParamSet params_;
};

/// PatchGAN pair: a local patch discriminator and a global path that runs
/// two stride-2 blocks then reuses the local layers (shared weights).
/// Inputs are the conditioning stack concatenated with the judged image.
class Discriminator {
 public:
  Discriminator(DiscriminatorSpec spec, uint64_t init_seed);

  struct Maps {
    Tensor local;   // (N,1,h,w) patch decisions
    Tensor global;  // (N,1,h',w') decisions with receptive field > image
  };
  struct Tapes {
    Tape prefix;
    Tape local_direct;
    Tape local_via_global;
  };

  Maps forward(const Tensor& x, bool training, Rng* rng, Tapes* tapes);

  /// Backward from both decision maps; returns dLoss/dInput.
  Tensor backward(const Tensor& dlocal, const Tensor& dglobal, const Tapes& tapes);

  void zero_grad();

  Network& local() { return local_; }
  Network& global_prefix() { return prefix_; }
  const DiscriminatorSpec& spec() const { return spec_; }
  int64_t param_count() const;

 private:
  DiscriminatorSpec spec_;
  Network local_;
  Network prefix_;
};

/// Concatenates along the channel axis (dim 1).
Tensor concat_channels(const Tensor& a, const Tensor& b);
/// Splits off the trailing `channels` along dim 1 (gradient of the concat).
Tensor slice_channels(const Tensor& t, int from, int count);

}  // namespace glyphgan
