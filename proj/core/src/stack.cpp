// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/stack.hpp"

#include <algorithm>

#include "glyphgan/error.hpp"

namespace glyphgan {

namespace {
constexpr int64_t kPlane = static_cast<int64_t>(kGlyphSize) * kGlyphSize;

void check_observed_range(const std::set<int>& observed) {
  if (observed.empty()) throw EmptyObservationSetError();
  for (int i : observed)
    if (i < 0 || i >= kNumLetters)
      throw ShapeError("observed letter index " + std::to_string(i) + " outside 0..25");
}
}  // namespace

void GlyphStack::set_letter(int letter, const GlyphImage& g) {
  std::copy(g.v.begin(), g.v.end(), channels.data() + letter * kPlane);
}

GlyphImage GlyphStack::letter(int index) const {
  GlyphImage g;
  std::copy(channels.data() + index * kPlane, channels.data() + (index + 1) * kPlane, g.v.begin());
  return g;
}

void ColorGlyphSet::set_letter(int letter, const RgbImage& img) {
  std::copy(img.v.begin(), img.v.end(), images.data() + letter * 3 * kPlane);
}

RgbImage ColorGlyphSet::letter(int index) const {
  RgbImage img(kGlyphSize, kGlyphSize);
  std::copy(images.data() + index * 3 * kPlane, images.data() + (index + 1) * 3 * kPlane,
            img.v.begin());
  return img;
}

GlyphStack mask_stack(const GlyphStack& stack, const std::set<int>& observed) {
  check_observed_range(observed);
  GlyphStack out;
  out.observed = observed;
  out.channels.fill(0.0);
  for (int i : observed)
    std::copy(stack.channels.data() + i * kPlane, stack.channels.data() + (i + 1) * kPlane,
              out.channels.data() + i * kPlane);
  return out;
}

ColorStack mask_color_stack(const ColorStack& stack, const std::set<int>& observed) {
  check_observed_range(observed);
  ColorStack out;
  out.observed = observed;
  out.channels.fill(0.0);
  for (int i : observed)
    std::copy(stack.channels.data() + i * 3 * kPlane, stack.channels.data() + (i + 1) * 3 * kPlane,
              out.channels.data() + i * 3 * kPlane);
  return out;
}

ColorStack to_color_stack(const ColorGlyphSet& set) {
  ColorStack out;
  out.observed = set.observed;
  std::copy(set.images.data(), set.images.data() + set.images.size(), out.channels.data());
  return out;
}

ColorGlyphSet to_color_glyph_set(const Tensor& channels78, const std::set<int>& observed) {
  check_shape(channels78, {3 * kNumLetters, kGlyphSize, kGlyphSize}, "to_color_glyph_set input");
  ColorGlyphSet out;
  out.observed = observed;
  std::copy(channels78.data(), channels78.data() + channels78.size(), out.images.data());
  return out;
}

namespace {
Tensor rest_to_net(const Tensor& t, std::vector<int> shape) {
  Tensor out = t;
  for (int64_t i = 0; i < out.size(); ++i) out[i] = out[i] * 2.0 - 1.0;
  out.reshape(std::move(shape));
  return out;
}

Tensor net_to_rest(const Tensor& t, std::vector<int> shape) {
  Tensor out = t;
  for (int64_t i = 0; i < out.size(); ++i) out[i] = std::clamp((out[i] + 1.0) * 0.5, 0.0, 1.0);
  out.reshape(std::move(shape));
  return out;
}
}  // namespace

Tensor stack_to_net(const GlyphStack& stack) {
  return rest_to_net(stack.channels, {1, kNumLetters, kGlyphSize, kGlyphSize});
}

GlyphStack net_to_stack(const Tensor& t, const std::set<int>& observed) {
  check_shape(t, {1, kNumLetters, kGlyphSize, kGlyphSize}, "net_to_stack input");
  GlyphStack out;
  out.observed = observed;
  out.channels = net_to_rest(t, {kNumLetters, kGlyphSize, kGlyphSize});
  return out;
}

Tensor color_set_to_net(const ColorGlyphSet& set) {
  return rest_to_net(set.images, {kNumLetters, 3, kGlyphSize, kGlyphSize});
}

ColorGlyphSet net_to_color_set(const Tensor& t, const std::set<int>& observed) {
  check_shape(t, {kNumLetters, 3, kGlyphSize, kGlyphSize}, "net_to_color_set input");
  ColorGlyphSet out;
  out.observed = observed;
  out.images = net_to_rest(t, {kNumLetters, 3, kGlyphSize, kGlyphSize});
  return out;
}

Tensor color_stack_to_net(const ColorStack& stack) {
  return rest_to_net(stack.channels, {1, 3 * kNumLetters, kGlyphSize, kGlyphSize});
}

}  // namespace glyphgan
