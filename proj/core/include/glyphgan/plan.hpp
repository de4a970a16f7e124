// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "glyphgan/stack.hpp"

namespace glyphgan {

/// The n+1 masked input stacks that reassemble one full 26-glyph prediction:
/// each observed letter is generated by the stack that observes every other
/// observed letter (never itself), and all unobserved letters come from the
/// stack conditioned on the full observed set. `extract[letter]` is the
/// (stack index, channel) pair sourcing that letter; it covers 0..25 exactly
/// once.
struct LeaveOneOutPlan {
  std::vector<GlyphStack> stacks;
  std::array<std::pair<int, int>, kNumLetters> extract;
  std::set<int> observed;

  int batch_size() const { return static_cast<int>(stacks.size()); }
};

/// Builds the plan from the observed glyph images. Requires 1 <= |S| <= 25.
/// For |S| = 1 the leave-one-out stack would be empty, so the single observed
/// letter conditions on S itself.
LeaveOneOutPlan build_leave_one_out_plan(const GlyphStack& observed_stack,
                                         const std::set<int>& observed);

/// Stacks the plan's inputs into one (n+1, 26, 64, 64) network batch in
/// [-1,1] space.
Tensor plan_to_batch(const LeaveOneOutPlan& plan);

/// Gathers each letter's plane from the generator output batch per the
/// extraction indices, producing (1, 26, H, W).
Tensor assemble_prediction(const LeaveOneOutPlan& plan, const Tensor& g1_out);

/// Adjoint of assemble_prediction: scatters a (1,26,H,W) gradient back to the
/// (n+1,26,H,W) batch (zeros everywhere else).
Tensor assemble_backward(const LeaveOneOutPlan& plan, const Tensor& dassembled,
                         const std::vector<int>& batch_shape);

/// Reshape + grayscale channel repetition: (1,26,H,W) -> (26,3,H,W).
Tensor transform_T(const Tensor& full_stack);

/// Adjoint of transform_T: sums the three channel copies back.
Tensor transform_T_backward(const Tensor& d_out);

}  // namespace glyphgan
