// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <set>

#include "glyphgan/net/network.hpp"
#include "glyphgan/tensor.hpp"

namespace glyphgan {

/// Piecewise-constant loss weight, switching value at a fixed epoch.
struct LambdaSchedule {
  double before = 300.0;
  double after = 3.0;
  int switch_epoch = 200;
  double at(int epoch) const { return epoch < switch_epoch ? before : after; }
};

// --- Elementary terms -----------------------------------------------------

/// Mean absolute error; optional gradient wrt `pred`.
double l1_mean(const Tensor& pred, const Tensor& target, Tensor* dpred = nullptr);

/// LSGAN generator objective on one decision map: mean((d-1)^2).
double lsgan_generator_term(const Tensor& d_fake, Tensor* dmap = nullptr);

/// LSGAN discriminator objective: mean((real-1)^2) + mean(fake^2).
double lsgan_discriminator_term(const Tensor& d_real, const Tensor& d_fake,
                                Tensor* dreal = nullptr, Tensor* dfake = nullptr);

/// Differentiable binarization sigma(sharpness * v) of a [-1,1] image.
Tensor binary_mask(const Tensor& img, double sharpness);

/// mean((sigma(k a) - sigma(k b))^2). Gradients flow to the pre-sigmoid
/// values of either side when requested.
double mask_mse(const Tensor& a, const Tensor& b, double sharpness, Tensor* da = nullptr,
                Tensor* db = nullptr);

// --- Letter-restricted variants -------------------------------------------
// OrnaNet batches are (26,3,H,W) with the letter on dim 0; terms that only
// see observed letters are normalized over the restricted element count.

double l1_over_letters(const Tensor& pred, const Tensor& target, const std::set<int>& letters,
                       Tensor* dpred = nullptr);
double mask_mse_over_letters(const Tensor& target, const Tensor& pred,
                             const std::set<int>& letters, double sharpness,
                             Tensor* dpred = nullptr);

/// Weighted per-letter L1 on a (1,26,H,W) glyph stack: per-channel weight
/// w[i], normalized by the full element count.
double weighted_letter_l1(const Tensor& pred, const Tensor& reference,
                          const std::array<double, 26>& w, Tensor* dpred = nullptr);

// --- Per-network loss bundles ----------------------------------------------

/// Glyph generator pretraining objective: lambda * L1 plus LSGAN terms on the
/// local and global decision maps, with the matching discriminator objective.
struct GlyphNetLossTerms {
  double l1 = 0.0;
  double lsgan_local = 0.0;   // generator side, (D(fake)-1)^2
  double lsgan_global = 0.0;
  double lambda = 0.0;
  double disc_local = 0.0;    // (D(real)-1)^2 + D(fake)^2
  double disc_global = 0.0;

  double generator_total() const { return lambda * l1 + lsgan_local + lsgan_global; }
  double discriminator_total() const { return disc_local + disc_global; }
};

GlyphNetLossTerms glyphnet_loss(const Tensor& g_out, const Tensor& target,
                                const Discriminator::Maps& d_real,
                                const Discriminator::Maps& d_fake, double lambda);

/// Ornamentation objective: LSGAN plus lambda1 * L1 on observed letters and
/// lambda2 * mask MSE. `mask_vs_input` switches the mask target from the
/// observed ground truth to the generator input (both readings appear in the
/// prose; the equation form is the default).
struct OrnaNetLossTerms {
  double lsgan_local = 0.0;
  double lsgan_global = 0.0;
  double l1 = 0.0;
  double mask_mse = 0.0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double disc_local = 0.0;
  double disc_global = 0.0;

  double generator_total() const {
    return lsgan_local + lsgan_global + lambda1 * l1 + lambda2 * mask_mse;
  }
  double discriminator_total() const { return disc_local + disc_global; }
};

OrnaNetLossTerms ornanet_loss(const Tensor& g2_out, const Tensor& x2, const Tensor& y2,
                              const std::set<int>& observed, const Discriminator::Maps& d_real,
                              const Discriminator::Maps& d_fake, double lambda1, double lambda2,
                              double mask_sharpness, bool mask_vs_input = false);

/// End-to-end glyph-side regularizers: lambda3 * weighted L1 against the
/// frozen pretrained predictions and lambda4 * mask MSE between observed
/// ground-truth masks and the reshaped generated glyphs.
struct GlyphEndLossTerms {
  double weighted_l1 = 0.0;
  double mask_mse = 0.0;
  double lambda3 = 0.0;
  double lambda4 = 0.0;

  double total() const { return lambda3 * weighted_l1 + lambda4 * mask_mse; }
};

GlyphEndLossTerms glyphnet_end_loss(const Tensor& g1_out, const Tensor& g1_frozen_out,
                                    const Tensor& y2, const Tensor& t_of_g1,
                                    const std::set<int>& observed,
                                    const std::array<double, 26>& letter_weights, double lambda3,
                                    double lambda4, double mask_sharpness);

/// Per-letter weights: w_observed for letters in the set, w_unobserved otherwise.
std::array<double, 26> letter_weights(const std::set<int>& observed, double w_observed,
                                      double w_unobserved);

}  // namespace glyphgan
