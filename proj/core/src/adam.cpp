// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/net/adam.hpp"

#include <cmath>

#include "glyphgan/error.hpp"

namespace glyphgan {

void Adam::step(ParamSet& ps) {
  ++t_;
  double bc1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
  double bc2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
  for (auto& [key, g] : ps.grads) {
    Tensor& p = ps.values.at(key);
    Tensor& m = m_.try_emplace(key, Tensor(p.shape())).first->second;
    Tensor& v = v_.try_emplace(key, Tensor(p.shape())).first->second;
    if (!m.same_shape(p)) throw ShapeError("adam moment shape mismatch for " + key);
    for (int64_t i = 0; i < p.size(); ++i) {
      m[i] = beta1_ * m[i] + (1.0 - beta1_) * g[i];
      v[i] = beta2_ * v[i] + (1.0 - beta2_) * g[i] * g[i];
      double mhat = m[i] / bc1;
      double vhat = v[i] / bc2;
      p[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
  }
}

}  // namespace glyphgan
