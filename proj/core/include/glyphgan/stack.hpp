// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <set>

#include "glyphgan/image.hpp"
#include "glyphgan/tensor.hpp"

namespace glyphgan {

/// 26-channel grayscale stack for one font, A..Z in channel order, values in
/// [0,1] at rest. `observed` lists the letter indices carrying real content;
/// every other channel is expected to be all zeros after masking.
struct GlyphStack {
  Tensor channels;  // (26, 64, 64)
  std::set<int> observed;

  GlyphStack() : channels({kNumLetters, kGlyphSize, kGlyphSize}) {
    for (int i = 0; i < kNumLetters; ++i) observed.insert(i);
  }

  double& at(int letter, int y, int x) {
    return channels[(static_cast<int64_t>(letter) * kGlyphSize + y) * kGlyphSize + x];
  }
  double at(int letter, int y, int x) const {
    return channels[(static_cast<int64_t>(letter) * kGlyphSize + y) * kGlyphSize + x];
  }

  void set_letter(int letter, const GlyphImage& g);
  GlyphImage letter(int index) const;
};

/// 26 RGB images for one font, A..Z order, values in [0,1] at rest.
struct ColorGlyphSet {
  Tensor images;  // (26, 3, 64, 64)
  std::set<int> observed;

  ColorGlyphSet() : images({kNumLetters, 3, kGlyphSize, kGlyphSize}) {
    for (int i = 0; i < kNumLetters; ++i) observed.insert(i);
  }

  void set_letter(int letter, const RgbImage& img);
  RgbImage letter(int index) const;
};

/// 78-channel representation used by the image-translation baseline:
/// 26 letters x 3 RGB planes. Unobserved letters have all 3 planes zeroed.
struct ColorStack {
  Tensor channels;  // (78, 64, 64)
  std::set<int> observed;

  ColorStack() : channels({3 * kNumLetters, kGlyphSize, kGlyphSize}) {
    for (int i = 0; i < kNumLetters; ++i) observed.insert(i);
  }
};

/// Copies channels named in `observed` verbatim and zeroes out the rest.
/// Throws EmptyObservationSetError when `observed` is empty and ShapeError
/// when an index falls outside 0..25.
GlyphStack mask_stack(const GlyphStack& stack, const std::set<int>& observed);
ColorStack mask_color_stack(const ColorStack& stack, const std::set<int>& observed);

ColorStack to_color_stack(const ColorGlyphSet& set);
ColorGlyphSet to_color_glyph_set(const Tensor& channels78, const std::set<int>& observed);

// Network boundary: [0,1] rest values map to [-1,1] and back. Batch dimension
// is added/removed here so model code deals only in NCHW tensors.
Tensor stack_to_net(const GlyphStack& stack);              // (1,26,64,64)
GlyphStack net_to_stack(const Tensor& t, const std::set<int>& observed);
Tensor color_set_to_net(const ColorGlyphSet& set);         // (26,3,64,64)
ColorGlyphSet net_to_color_set(const Tensor& t, const std::set<int>& observed);
Tensor color_stack_to_net(const ColorStack& stack);        // (1,78,64,64)

}  // namespace glyphgan
