// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/plan.hpp"

#include <algorithm>

#include "glyphgan/error.hpp"

namespace glyphgan {

LeaveOneOutPlan build_leave_one_out_plan(const GlyphStack& observed_stack,
                                         const std::set<int>& observed) {
  if (observed.empty()) throw EmptyObservationSetError();
  if (static_cast<int>(observed.size()) > kNumLetters - 1)
    throw Error("leave-one-out plan needs at least one unobserved letter");
  for (int i : observed)
    if (i < 0 || i >= kNumLetters)
      throw ShapeError("observed letter index " + std::to_string(i) + " outside 0..25");

  LeaveOneOutPlan plan;
  plan.observed = observed;
  std::vector<int> sorted(observed.begin(), observed.end());

  // One stack per observed letter, conditioned on all the others.
  for (size_t k = 0; k < sorted.size(); ++k) {
    std::set<int> cond = observed;
    if (observed.size() > 1) cond.erase(sorted[k]);
    // |S| = 1: an empty conditioning stack is out of distribution; condition
    // on S itself instead.
    plan.stacks.push_back(mask_stack(observed_stack, cond));
    plan.extract[static_cast<size_t>(sorted[k])] = {static_cast<int>(k), sorted[k]};
  }
  // Final stack sees the full observed set and sources every unobserved letter.
  plan.stacks.push_back(mask_stack(observed_stack, observed));
  int full_index = static_cast<int>(sorted.size());
  for (int letter = 0; letter < kNumLetters; ++letter)
    if (!observed.count(letter))
      plan.extract[static_cast<size_t>(letter)] = {full_index, letter};
  return plan;
}

Tensor plan_to_batch(const LeaveOneOutPlan& plan) {
  int B = plan.batch_size();
  Tensor batch({B, kNumLetters, kGlyphSize, kGlyphSize});
  int64_t stack_size = static_cast<int64_t>(kNumLetters) * kGlyphSize * kGlyphSize;
  for (int b = 0; b < B; ++b) {
    const Tensor& ch = plan.stacks[static_cast<size_t>(b)].channels;
    for (int64_t i = 0; i < stack_size; ++i) batch[b * stack_size + i] = ch[i] * 2.0 - 1.0;
  }
  return batch;
}

Tensor assemble_prediction(const LeaveOneOutPlan& plan, const Tensor& g1_out) {
  if (g1_out.rank() != 4 || g1_out.dim(0) != plan.batch_size() || g1_out.dim(1) != kNumLetters)
    throw ShapeError("assemble_prediction: unexpected generator output " + g1_out.shape_str());
  int H = g1_out.dim(2), W = g1_out.dim(3);
  int64_t plane = static_cast<int64_t>(H) * W;
  Tensor out({1, kNumLetters, H, W});
  for (int letter = 0; letter < kNumLetters; ++letter) {
    auto [stack_idx, channel] = plan.extract[static_cast<size_t>(letter)];
    const double* src =
        g1_out.data() + (static_cast<int64_t>(stack_idx) * kNumLetters + channel) * plane;
    std::copy(src, src + plane, out.data() + static_cast<int64_t>(letter) * plane);
  }
  return out;
}

Tensor assemble_backward(const LeaveOneOutPlan& plan, const Tensor& dassembled,
                         const std::vector<int>& batch_shape) {
  Tensor dbatch(batch_shape);
  int H = dassembled.dim(2), W = dassembled.dim(3);
  int64_t plane = static_cast<int64_t>(H) * W;
  for (int letter = 0; letter < kNumLetters; ++letter) {
    auto [stack_idx, channel] = plan.extract[static_cast<size_t>(letter)];
    const double* src = dassembled.data() + static_cast<int64_t>(letter) * plane;
    double* dst = dbatch.data() + (static_cast<int64_t>(stack_idx) * kNumLetters + channel) * plane;
    std::copy(src, src + plane, dst);
  }
  return dbatch;
}

Tensor transform_T(const Tensor& full_stack) {
  if (full_stack.rank() != 4 || full_stack.dim(0) != 1 || full_stack.dim(1) != kNumLetters)
    throw ShapeError("transform_T expects (1,26,H,W), got " + full_stack.shape_str());
  int H = full_stack.dim(2), W = full_stack.dim(3);
  int64_t plane = static_cast<int64_t>(H) * W;
  Tensor out({kNumLetters, 3, H, W});
  for (int letter = 0; letter < kNumLetters; ++letter) {
    const double* src = full_stack.data() + static_cast<int64_t>(letter) * plane;
    for (int c = 0; c < 3; ++c)
      std::copy(src, src + plane,
                out.data() + (static_cast<int64_t>(letter) * 3 + c) * plane);
  }
  return out;
}

Tensor transform_T_backward(const Tensor& d_out) {
  if (d_out.rank() != 4 || d_out.dim(0) != kNumLetters || d_out.dim(1) != 3)
    throw ShapeError("transform_T_backward expects (26,3,H,W), got " + d_out.shape_str());
  int H = d_out.dim(2), W = d_out.dim(3);
  int64_t plane = static_cast<int64_t>(H) * W;
  Tensor din({1, kNumLetters, H, W});
  for (int letter = 0; letter < kNumLetters; ++letter) {
    double* dst = din.data() + static_cast<int64_t>(letter) * plane;
    for (int c = 0; c < 3; ++c) {
      const double* src = d_out.data() + (static_cast<int64_t>(letter) * 3 + c) * plane;
      for (int64_t i = 0; i < plane; ++i) dst[i] += src[i];
    }
  }
  return din;
}

}  // namespace glyphgan
