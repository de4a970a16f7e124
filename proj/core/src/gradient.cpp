// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/gradient.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "glyphgan/error.hpp"

namespace glyphgan {

void GradientSpec::validate() const {
  double norm = std::hypot(direction[0], direction[1]);
  if (std::abs(norm - 1.0) > 1e-6) throw Error("GradientSpec direction must have unit norm");
  auto check_color = [](const std::array<double, 3>& c) {
    for (double v : c)
      if (v < 0.0 || v > 1.0) throw Error("GradientSpec color outside [0,1]");
  };
  check_color(color_a);
  check_color(color_b);
  if (outline_color) check_color(*outline_color);
  if (outline_width < 0) throw Error("GradientSpec outline_width must be >= 0");
}

RgbImage apply_gradient(const GlyphImage& glyph, const GradientSpec& spec) {
  spec.validate();

  // Bounding box of the foreground; the gradient parameter spans it.
  int x0 = kGlyphSize, y0 = kGlyphSize, x1 = -1, y1 = -1;
  for (int y = 0; y < kGlyphSize; ++y)
    for (int x = 0; x < kGlyphSize; ++x)
      if (glyph.at(y, x) > 0.0) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
      }
  if (x1 < 0) throw EmptyGlyphError();

  // Projection range of the box corners onto the gradient direction.
  double tmin = 1e300, tmax = -1e300;
  for (int cy : {y0, y1})
    for (int cx : {x0, x1}) {
      double t = spec.direction[0] * cx + spec.direction[1] * cy;
      tmin = std::min(tmin, t);
      tmax = std::max(tmax, t);
    }
  double span = std::max(tmax - tmin, 1e-12);

  RgbImage out(kGlyphSize, kGlyphSize);
  for (int y = 0; y < kGlyphSize; ++y)
    for (int x = 0; x < kGlyphSize; ++x) {
      double a = glyph.at(y, x);
      if (a <= 0.0) continue;
      double t = (spec.direction[0] * x + spec.direction[1] * y - tmin) / span;
      t = std::clamp(t, 0.0, 1.0);
      for (int c = 0; c < 3; ++c)
        out.at(c, y, x) = a * ((1.0 - t) * spec.color_a[c] + t * spec.color_b[c]);
    }

  if (spec.outline_color && spec.outline_width > 0) {
    int w = spec.outline_width;
    for (int y = 0; y < kGlyphSize; ++y)
      for (int x = 0; x < kGlyphSize; ++x) {
        if (glyph.at(y, x) > 0.0) continue;  // outline only outside the glyph
        bool near = false;
        for (int dy = -w; dy <= w && !near; ++dy)
          for (int dx = -w; dx <= w && !near; ++dx) {
            int ny = y + dy, nx = x + dx;
            if (ny >= 0 && ny < kGlyphSize && nx >= 0 && nx < kGlyphSize && glyph.at(ny, nx) > 0.0)
              near = true;
          }
        if (near)
          for (int c = 0; c < 3; ++c) out.at(c, y, x) = (*spec.outline_color)[c];
      }
  }
  return out;
}

GradientSpec sample_gradient_spec(Rng& rng) {
  GradientSpec spec;
  auto draw_color = [&rng] {
    std::array<double, 3> c;
    do {
      for (double& v : c) v = rng.uniform();
    } while (std::max({c[0], c[1], c[2]}) < 2.0 / 255.0);
    return c;
  };
  spec.color_a = draw_color();
  spec.color_b = draw_color();
  double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
  spec.direction = {std::cos(theta), std::sin(theta)};
  if (rng.uniform() < 0.5) {
    spec.outline_color = draw_color();
    spec.outline_width = rng.uniform_int(1, 2);
  }
  return spec;
}

}  // namespace glyphgan
