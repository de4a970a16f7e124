// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/loss.hpp"

#include <cmath>

#include "glyphgan/error.hpp"

namespace glyphgan {

namespace {

void require_finite(const Tensor& t, const char* what) {
  if (!t.all_finite()) throw NumericError(std::string(what) + " contains non-finite values");
}

double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

}  // namespace

double l1_mean(const Tensor& pred, const Tensor& target, Tensor* dpred) {
  if (!pred.same_shape(target))
    throw ShapeError("l1_mean: " + pred.shape_str() + " vs " + target.shape_str());
  require_finite(pred, "l1_mean pred");
  require_finite(target, "l1_mean target");
  double inv_n = 1.0 / static_cast<double>(pred.size());
  if (dpred && !dpred->same_shape(pred)) *dpred = Tensor(pred.shape());
  double acc = 0.0;
  for (int64_t i = 0; i < pred.size(); ++i) {
    double d = pred[i] - target[i];
    acc += std::abs(d);
    if (dpred) (*dpred)[i] += sgn(d) * inv_n;
  }
  return acc * inv_n;
}

double lsgan_generator_term(const Tensor& d_fake, Tensor* dmap) {
  require_finite(d_fake, "lsgan generator map");
  double inv_n = 1.0 / static_cast<double>(d_fake.size());
  if (dmap && !dmap->same_shape(d_fake)) *dmap = Tensor(d_fake.shape());
  double acc = 0.0;
  for (int64_t i = 0; i < d_fake.size(); ++i) {
    double d = d_fake[i] - 1.0;
    acc += d * d;
    if (dmap) (*dmap)[i] += 2.0 * d * inv_n;
  }
  return acc * inv_n;
}

double lsgan_discriminator_term(const Tensor& d_real, const Tensor& d_fake, Tensor* dreal,
                                Tensor* dfake) {
  require_finite(d_real, "lsgan real map");
  require_finite(d_fake, "lsgan fake map");
  double inv_r = 1.0 / static_cast<double>(d_real.size());
  double inv_f = 1.0 / static_cast<double>(d_fake.size());
  if (dreal && !dreal->same_shape(d_real)) *dreal = Tensor(d_real.shape());
  if (dfake && !dfake->same_shape(d_fake)) *dfake = Tensor(d_fake.shape());
  double acc = 0.0;
  for (int64_t i = 0; i < d_real.size(); ++i) {
    double d = d_real[i] - 1.0;
    acc += d * d * inv_r;
    if (dreal) (*dreal)[i] += 2.0 * d * inv_r;
  }
  for (int64_t i = 0; i < d_fake.size(); ++i) {
    acc += d_fake[i] * d_fake[i] * inv_f;
    if (dfake) (*dfake)[i] += 2.0 * d_fake[i] * inv_f;
  }
  return acc;
}

Tensor binary_mask(const Tensor& img, double sharpness) {
  Tensor out = img;
  for (int64_t i = 0; i < out.size(); ++i) out[i] = sigmoid(sharpness * out[i]);
  return out;
}

double mask_mse(const Tensor& a, const Tensor& b, double sharpness, Tensor* da, Tensor* db) {
  if (!a.same_shape(b)) throw ShapeError("mask_mse: " + a.shape_str() + " vs " + b.shape_str());
  require_finite(a, "mask_mse a");
  require_finite(b, "mask_mse b");
  double inv_n = 1.0 / static_cast<double>(a.size());
  if (da && !da->same_shape(a)) *da = Tensor(a.shape());
  if (db && !db->same_shape(b)) *db = Tensor(b.shape());
  double acc = 0.0;
  for (int64_t i = 0; i < a.size(); ++i) {
    double sa = sigmoid(sharpness * a[i]);
    double sb = sigmoid(sharpness * b[i]);
    double d = sa - sb;
    acc += d * d;
    if (da) (*da)[i] += 2.0 * d * sharpness * sa * (1.0 - sa) * inv_n;
    if (db) (*db)[i] -= 2.0 * d * sharpness * sb * (1.0 - sb) * inv_n;
  }
  return acc * inv_n;
}

namespace {

int64_t letter_plane(const Tensor& t) {
  // (26, C, H, W): elements per letter.
  return t.size() / t.dim(0);
}

}  // namespace

double l1_over_letters(const Tensor& pred, const Tensor& target, const std::set<int>& letters,
                       Tensor* dpred) {
  if (!pred.same_shape(target))
    throw ShapeError("l1_over_letters: " + pred.shape_str() + " vs " + target.shape_str());
  if (letters.empty()) throw EmptyObservationSetError();
  require_finite(pred, "l1_over_letters pred");
  require_finite(target, "l1_over_letters target");
  int64_t plane = letter_plane(pred);
  double inv_n = 1.0 / static_cast<double>(plane * static_cast<int64_t>(letters.size()));
  if (dpred && !dpred->same_shape(pred)) *dpred = Tensor(pred.shape());
  double acc = 0.0;
  for (int letter : letters) {
    int64_t base = letter * plane;
    for (int64_t i = 0; i < plane; ++i) {
      double d = pred[base + i] - target[base + i];
      acc += std::abs(d);
      if (dpred) (*dpred)[base + i] += sgn(d) * inv_n;
    }
  }
  return acc * inv_n;
}

double mask_mse_over_letters(const Tensor& target, const Tensor& pred,
                             const std::set<int>& letters, double sharpness, Tensor* dpred) {
  if (!pred.same_shape(target))
    throw ShapeError("mask_mse_over_letters: " + pred.shape_str() + " vs " + target.shape_str());
  if (letters.empty()) throw EmptyObservationSetError();
  require_finite(pred, "mask_mse_over_letters pred");
  require_finite(target, "mask_mse_over_letters target");
  int64_t plane = letter_plane(pred);
  double inv_n = 1.0 / static_cast<double>(plane * static_cast<int64_t>(letters.size()));
  if (dpred && !dpred->same_shape(pred)) *dpred = Tensor(pred.shape());
  double acc = 0.0;
  for (int letter : letters) {
    int64_t base = letter * plane;
    for (int64_t i = 0; i < plane; ++i) {
      double st = sigmoid(sharpness * target[base + i]);
      double sp = sigmoid(sharpness * pred[base + i]);
      double d = st - sp;
      acc += d * d;
      if (dpred) (*dpred)[base + i] -= 2.0 * d * sharpness * sp * (1.0 - sp) * inv_n;
    }
  }
  return acc * inv_n;
}

double weighted_letter_l1(const Tensor& pred, const Tensor& reference,
                          const std::array<double, 26>& w, Tensor* dpred) {
  if (!pred.same_shape(reference))
    throw ShapeError("weighted_letter_l1: " + pred.shape_str() + " vs " + reference.shape_str());
  if (pred.rank() != 4 || pred.dim(1) != 26)
    throw ShapeError("weighted_letter_l1 expects (B,26,H,W), got " + pred.shape_str());
  require_finite(pred, "weighted_letter_l1 pred");
  require_finite(reference, "weighted_letter_l1 reference");
  int B = pred.dim(0);
  int64_t plane = static_cast<int64_t>(pred.dim(2)) * pred.dim(3);
  double inv_n = 1.0 / static_cast<double>(pred.size());
  if (dpred && !dpred->same_shape(pred)) *dpred = Tensor(pred.shape());
  double acc = 0.0;
  for (int b = 0; b < B; ++b)
    for (int letter = 0; letter < 26; ++letter) {
      int64_t base = (static_cast<int64_t>(b) * 26 + letter) * plane;
      double wl = w[static_cast<size_t>(letter)];
      for (int64_t i = 0; i < plane; ++i) {
        double d = pred[base + i] - reference[base + i];
        acc += wl * std::abs(d);
        if (dpred) (*dpred)[base + i] += wl * sgn(d) * inv_n;
      }
    }
  return acc * inv_n;
}

GlyphNetLossTerms glyphnet_loss(const Tensor& g_out, const Tensor& target,
                                const Discriminator::Maps& d_real,
                                const Discriminator::Maps& d_fake, double lambda) {
  GlyphNetLossTerms terms;
  terms.lambda = lambda;
  terms.l1 = l1_mean(g_out, target);
  terms.lsgan_local = lsgan_generator_term(d_fake.local);
  terms.lsgan_global = lsgan_generator_term(d_fake.global);
  terms.disc_local = lsgan_discriminator_term(d_real.local, d_fake.local);
  terms.disc_global = lsgan_discriminator_term(d_real.global, d_fake.global);
  return terms;
}

OrnaNetLossTerms ornanet_loss(const Tensor& g2_out, const Tensor& x2, const Tensor& y2,
                              const std::set<int>& observed, const Discriminator::Maps& d_real,
                              const Discriminator::Maps& d_fake, double lambda1, double lambda2,
                              double mask_sharpness, bool mask_vs_input) {
  if (observed.empty()) throw EmptyObservationSetError();
  OrnaNetLossTerms terms;
  terms.lambda1 = lambda1;
  terms.lambda2 = lambda2;
  terms.l1 = l1_over_letters(g2_out, y2, observed);
  if (mask_vs_input) {
    // Prose variant: compare generator output masks with its input masks
    // over all letters.
    std::set<int> all;
    for (int i = 0; i < 26; ++i) all.insert(i);
    terms.mask_mse = mask_mse_over_letters(x2, g2_out, all, mask_sharpness);
  } else {
    terms.mask_mse = mask_mse_over_letters(y2, g2_out, observed, mask_sharpness);
  }
  terms.lsgan_local = lsgan_generator_term(d_fake.local);
  terms.lsgan_global = lsgan_generator_term(d_fake.global);
  terms.disc_local = lsgan_discriminator_term(d_real.local, d_fake.local);
  terms.disc_global = lsgan_discriminator_term(d_real.global, d_fake.global);
  return terms;
}

GlyphEndLossTerms glyphnet_end_loss(const Tensor& g1_out, const Tensor& g1_frozen_out,
                                    const Tensor& y2, const Tensor& t_of_g1,
                                    const std::set<int>& observed,
                                    const std::array<double, 26>& w, double lambda3,
                                    double lambda4, double mask_sharpness) {
  if (observed.empty()) throw EmptyObservationSetError();
  GlyphEndLossTerms terms;
  terms.lambda3 = lambda3;
  terms.lambda4 = lambda4;
  terms.weighted_l1 = weighted_letter_l1(g1_out, g1_frozen_out, w);
  terms.mask_mse = mask_mse_over_letters(y2, t_of_g1, observed, mask_sharpness);
  return terms;
}

std::array<double, 26> letter_weights(const std::set<int>& observed, double w_observed,
                                      double w_unobserved) {
  std::array<double, 26> w;
  for (int i = 0; i < 26; ++i)
    w[static_cast<size_t>(i)] = observed.count(i) ? w_observed : w_unobserved;
  return w;
}

}  // namespace glyphgan
