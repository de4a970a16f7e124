// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/net/network.hpp"

#include "glyphgan/error.hpp"

namespace glyphgan {

namespace {
std::string layer_prefix(size_t i) { return "L" + std::to_string(i); }
}  // namespace

Network::Network(NetworkSpec spec, uint64_t init_seed) : spec_(std::move(spec)) {
  spec_.validate();
  params_.spec_hash = spec_hash(spec_);
  Rng rng(init_seed);
  for (size_t i = 0; i < spec_.layers.size(); ++i) {
    layers_.push_back(make_layer(spec_.layers[i]));
    layers_.back()->init_params(layer_prefix(i), params_, rng);
  }
  rebind();
}

void Network::rebind() {
  for (size_t i = 0; i < layers_.size(); ++i) layers_[i]->bind(layer_prefix(i), params_);
}

Tensor Network::forward(const Tensor& x, bool training, Rng* rng, Tape* tape) {
  PassContext ctx{training, rng};
  params_.training = training;
  if (tape) tape->caches.assign(layers_.size(), LayerCache{});
  Tensor h = x;
  for (size_t i = 0; i < layers_.size(); ++i)
    h = layers_[i]->forward(h, ctx, tape ? &tape->caches[i] : nullptr);
  return h;
}

Tensor Network::backward(const Tensor& dy, const Tape& tape) {
  if (tape.caches.size() != layers_.size())
    throw Error("backward: tape does not match network " + spec_.name);
  Tensor d = dy;
  for (size_t i = layers_.size(); i-- > 0;) d = layers_[i]->backward(d, tape.caches[i]);
  return d;
}

Discriminator::Discriminator(DiscriminatorSpec spec, uint64_t init_seed)
    : spec_(spec),
      local_(spec.local, init_seed),
      prefix_(spec.global_prefix, init_seed ^ 0x517cc1b727220a95ULL) {}

Discriminator::Maps Discriminator::forward(const Tensor& x, bool training, Rng* rng,
                                           Tapes* tapes) {
  Maps maps;
  maps.local = local_.forward(x, training, rng, tapes ? &tapes->local_direct : nullptr);
  Tensor mid = prefix_.forward(x, training, rng, tapes ? &tapes->prefix : nullptr);
  maps.global = local_.forward(mid, training, rng, tapes ? &tapes->local_via_global : nullptr);
  return maps;
}

Tensor Discriminator::backward(const Tensor& dlocal, const Tensor& dglobal, const Tapes& tapes) {
  Tensor dx = local_.backward(dlocal, tapes.local_direct);
  Tensor dmid = local_.backward(dglobal, tapes.local_via_global);
  Tensor dx_global = prefix_.backward(dmid, tapes.prefix);
  dx += dx_global;
  return dx;
}

void Discriminator::zero_grad() {
  local_.zero_grad();
  prefix_.zero_grad();
}

int64_t Discriminator::param_count() const {
  return local_.params().param_count() + prefix_.params().param_count();
}

Tensor concat_channels(const Tensor& a, const Tensor& b) {
  if (a.rank() != 4 || b.rank() != 4) throw ShapeError("concat_channels expects rank-4 tensors");
  if (a.dim(0) != b.dim(0) || a.dim(2) != b.dim(2) || a.dim(3) != b.dim(3))
    throw ShapeError("concat_channels: " + a.shape_str() + " vs " + b.shape_str());
  int N = a.dim(0), Ca = a.dim(1), Cb = b.dim(1), H = a.dim(2), W = a.dim(3);
  Tensor out({N, Ca + Cb, H, W});
  int64_t plane = static_cast<int64_t>(H) * W;
  for (int n = 0; n < N; ++n) {
    std::copy(a.data() + static_cast<int64_t>(n) * Ca * plane,
              a.data() + static_cast<int64_t>(n + 1) * Ca * plane,
              out.data() + static_cast<int64_t>(n) * (Ca + Cb) * plane);
    std::copy(b.data() + static_cast<int64_t>(n) * Cb * plane,
              b.data() + static_cast<int64_t>(n + 1) * Cb * plane,
              out.data() + (static_cast<int64_t>(n) * (Ca + Cb) + Ca) * plane);
  }
  return out;
}

Tensor slice_channels(const Tensor& t, int from, int count) {
  if (t.rank() != 4) throw ShapeError("slice_channels expects a rank-4 tensor");
  int N = t.dim(0), C = t.dim(1), H = t.dim(2), W = t.dim(3);
  if (from < 0 || from + count > C) throw ShapeError("slice_channels out of range");
  Tensor out({N, count, H, W});
  int64_t plane = static_cast<int64_t>(H) * W;
  for (int n = 0; n < N; ++n)
    std::copy(t.data() + (static_cast<int64_t>(n) * C + from) * plane,
              t.data() + (static_cast<int64_t>(n) * C + from + count) * plane,
              out.data() + static_cast<int64_t>(n) * count * plane);
  return out;
}

}  // namespace glyphgan
