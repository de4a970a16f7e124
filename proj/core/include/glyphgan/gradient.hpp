// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>

#include "glyphgan/image.hpp"
#include "glyphgan/rng.hpp"

namespace glyphgan {

/// Synthetic ornamentation: a linear two-color gradient across the glyph
/// bounding box, optionally ringed by a solid outline.
struct GradientSpec {
  std::array<double, 3> color_a{1.0, 1.0, 1.0};
  std::array<double, 3> color_b{1.0, 1.0, 1.0};
  std::array<double, 2> direction{1.0, 0.0};  // unit (dx, dy)
  std::optional<std::array<double, 3>> outline_color;
  int outline_width = 0;  // pixels, chebyshev radius

  void validate() const;
};

/// Colors each foreground pixel by interpolating color_a -> color_b along
/// `direction`, with the interpolation parameter normalized over the glyph
/// bounding box. Pixel intensity modulates the color, so anti-aliased edges
/// stay soft and the background stays exactly black. The optional outline is
/// a chebyshev ring of `outline_width` pixels around the foreground.
RgbImage apply_gradient(const GlyphImage& glyph, const GradientSpec& spec);

/// Random spec: colors uniform in [0,1]^3 (re-drawn in the vanishingly rare
/// case every channel rounds to 0, so the glyph stays visible), direction
/// uniform on the circle, outline with probability 0.5 and width 1-2 px.
GradientSpec sample_gradient_spec(Rng& rng);

}  // namespace glyphgan
