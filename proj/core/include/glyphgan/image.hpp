// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace glyphgan {

inline constexpr int kGlyphSize = 64;
inline constexpr int kNumLetters = 26;

/// Grayscale raster of arbitrary size, intensities in [0,1].
/// Glyph foreground is white (1.0) on a black (0.0) background.
struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<double> v;  // row-major, height*width

  GrayImage() = default;
  GrayImage(int w, int h) : width(w), height(h), v(static_cast<size_t>(w) * h, 0.0) {}

  double& at(int y, int x) { return v[static_cast<size_t>(y) * width + x]; }
  double at(int y, int x) const { return v[static_cast<size_t>(y) * width + x]; }
};

/// RGB raster, planar channel layout (3 planes of height*width), values in [0,1].
struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<double> v;  // 3*height*width

  RgbImage() = default;
  RgbImage(int w, int h) : width(w), height(h), v(3 * static_cast<size_t>(w) * h, 0.0) {}

  double& at(int c, int y, int x) {
    return v[(static_cast<size_t>(c) * height + y) * width + x];
  }
  double at(int c, int y, int x) const {
    return v[(static_cast<size_t>(c) * height + y) * width + x];
  }
};

/// A normalized 64x64 glyph raster. See GrayImage for the polarity convention.
struct GlyphImage {
  std::vector<double> v;

  GlyphImage() : v(static_cast<size_t>(kGlyphSize) * kGlyphSize, 0.0) {}

  double& at(int y, int x) { return v[static_cast<size_t>(y) * kGlyphSize + x]; }
  double at(int y, int x) const { return v[static_cast<size_t>(y) * kGlyphSize + x]; }

  bool has_foreground() const;
};

/// Tight bounding box of foreground (> 0) pixels. Throws EmptyGlyphError when
/// there is none.
struct BBox {
  int x0, y0, x1, y1;  // half-open [x0,x1) x [y0,y1)
  int width() const { return x1 - x0; }
  int height() const { return y1 - y0; }
};
BBox foreground_bbox(const GrayImage& img);

/// Resampling used throughout: area averaging when shrinking, bilinear when
/// enlarging. An identity resize is an exact copy.
GrayImage resize(const GrayImage& src, int new_width, int new_height);

/// Crop -> isotropic resize so max(h,w) == kGlyphSize -> centered zero pad.
GlyphImage normalize_glyph(const GrayImage& raw);

GrayImage to_gray_image(const GlyphImage& g);

/// PNG bridging. Values are clamped to [0,1] and quantized to 8 bits on save.
GrayImage load_gray_png(const std::string& path);
RgbImage load_rgb_png(const std::string& path);
void save_gray_png(const std::string& path, const GrayImage& img);
void save_rgb_png(const std::string& path, const RgbImage& img);

}  // namespace glyphgan
