// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/image.hpp"

#include <algorithm>
#include <cmath>

#include "glyphgan/error.hpp"
#include "glyphgan/png_io.hpp"

namespace glyphgan {

bool GlyphImage::has_foreground() const {
  for (double p : v)
    if (p > 0.0) return true;
  return false;
}

BBox foreground_bbox(const GrayImage& img) {
  int x0 = img.width, y0 = img.height, x1 = 0, y1 = 0;
  for (int y = 0; y < img.height; ++y)
    for (int x = 0; x < img.width; ++x)
      if (img.at(y, x) > 0.0) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x + 1);
        y1 = std::max(y1, y + 1);
      }
  if (x1 <= x0) throw EmptyGlyphError();
  return BBox{x0, y0, x1, y1};
}

namespace {

GrayImage crop(const GrayImage& src, const BBox& box) {
  GrayImage out(box.width(), box.height());
  for (int y = 0; y < out.height; ++y)
    for (int x = 0; x < out.width; ++x) out.at(y, x) = src.at(box.y0 + y, box.x0 + x);
  return out;
}

// Exact box-filter average over the source rectangle covered by each output
// pixel; handles fractional coverage at the edges.
GrayImage resize_area(const GrayImage& src, int nw, int nh) {
  GrayImage out(nw, nh);
  double sx = static_cast<double>(src.width) / nw;
  double sy = static_cast<double>(src.height) / nh;
  for (int oy = 0; oy < nh; ++oy) {
    double ty0 = oy * sy, ty1 = (oy + 1) * sy;
    int iy0 = static_cast<int>(std::floor(ty0));
    int iy1 = std::min(src.height, static_cast<int>(std::ceil(ty1)));
    for (int ox = 0; ox < nw; ++ox) {
      double tx0 = ox * sx, tx1 = (ox + 1) * sx;
      int ix0 = static_cast<int>(std::floor(tx0));
      int ix1 = std::min(src.width, static_cast<int>(std::ceil(tx1)));
      double acc = 0.0, area = 0.0;
      for (int y = iy0; y < iy1; ++y) {
        double wy = std::min<double>(y + 1, ty1) - std::max<double>(y, ty0);
        for (int x = ix0; x < ix1; ++x) {
          double wx = std::min<double>(x + 1, tx1) - std::max<double>(x, tx0);
          acc += src.at(y, x) * wy * wx;
          area += wy * wx;
        }
      }
      out.at(oy, ox) = acc / area;
    }
  }
  return out;
}

GrayImage resize_bilinear(const GrayImage& src, int nw, int nh) {
  GrayImage out(nw, nh);
  double sx = static_cast<double>(src.width) / nw;
  double sy = static_cast<double>(src.height) / nh;
  for (int oy = 0; oy < nh; ++oy) {
    double fy = (oy + 0.5) * sy - 0.5;
    int y0 = static_cast<int>(std::floor(fy));
    double wy = fy - y0;
    int ya = std::clamp(y0, 0, src.height - 1);
    int yb = std::clamp(y0 + 1, 0, src.height - 1);
    for (int ox = 0; ox < nw; ++ox) {
      double fx = (ox + 0.5) * sx - 0.5;
      int x0 = static_cast<int>(std::floor(fx));
      double wx = fx - x0;
      int xa = std::clamp(x0, 0, src.width - 1);
      int xb = std::clamp(x0 + 1, 0, src.width - 1);
      out.at(oy, ox) = (1 - wy) * ((1 - wx) * src.at(ya, xa) + wx * src.at(ya, xb)) +
                       wy * ((1 - wx) * src.at(yb, xa) + wx * src.at(yb, xb));
    }
  }
  return out;
}

}  // namespace

GrayImage resize(const GrayImage& src, int nw, int nh) {
  if (nw <= 0 || nh <= 0) throw ShapeError("resize target must be positive");
  if (nw == src.width && nh == src.height) return src;
  if (nw <= src.width && nh <= src.height) return resize_area(src, nw, nh);
  return resize_bilinear(src, nw, nh);
}

GlyphImage normalize_glyph(const GrayImage& raw) {
  BBox box = foreground_bbox(raw);
  GrayImage tight = crop(raw, box);

  double scale = static_cast<double>(kGlyphSize) / std::max(tight.width, tight.height);
  int nw, nh;
  if (tight.width >= tight.height) {
    nw = kGlyphSize;
    nh = std::max(1, static_cast<int>(std::lround(tight.height * scale)));
  } else {
    nh = kGlyphSize;
    nw = std::max(1, static_cast<int>(std::lround(tight.width * scale)));
  }
  GrayImage scaled = resize(tight, nw, nh);

  GlyphImage out;
  int px = (kGlyphSize - nw) / 2;
  int py = (kGlyphSize - nh) / 2;
  for (int y = 0; y < nh; ++y)
    for (int x = 0; x < nw; ++x) out.at(py + y, px + x) = scaled.at(y, x);
  return out;
}

GrayImage to_gray_image(const GlyphImage& g) {
  GrayImage out(kGlyphSize, kGlyphSize);
  out.v = g.v;
  return out;
}

namespace {
uint8_t quantize(double v) {
  double c = std::clamp(v, 0.0, 1.0);
  return static_cast<uint8_t>(std::lround(c * 255.0));
}
}  // namespace

GrayImage load_gray_png(const std::string& path) {
  PngImage p = read_png(path);
  GrayImage out(p.width, p.height);
  if (p.channels == 1) {
    for (size_t i = 0; i < out.v.size(); ++i) out.v[i] = p.pixels[i] / 255.0;
  } else {
    // Rec.601 luma.
    for (size_t i = 0; i < out.v.size(); ++i) {
      double r = p.pixels[3 * i + 0], g = p.pixels[3 * i + 1], b = p.pixels[3 * i + 2];
      out.v[i] = (0.299 * r + 0.587 * g + 0.114 * b) / 255.0;
    }
  }
  return out;
}

RgbImage load_rgb_png(const std::string& path) {
  PngImage p = read_png(path);
  RgbImage out(p.width, p.height);
  size_t n = static_cast<size_t>(p.width) * p.height;
  for (size_t i = 0; i < n; ++i) {
    if (p.channels == 1) {
      for (int c = 0; c < 3; ++c) out.v[c * n + i] = p.pixels[i] / 255.0;
    } else {
      for (int c = 0; c < 3; ++c) out.v[c * n + i] = p.pixels[3 * i + c] / 255.0;
    }
  }
  return out;
}

void save_gray_png(const std::string& path, const GrayImage& img) {
  std::vector<uint8_t> bytes(img.v.size());
  for (size_t i = 0; i < bytes.size(); ++i) bytes[i] = quantize(img.v[i]);
  write_png_gray(path, bytes, img.width, img.height);
}

void save_rgb_png(const std::string& path, const RgbImage& img) {
  size_t n = static_cast<size_t>(img.width) * img.height;
  std::vector<uint8_t> bytes(3 * n);
  for (size_t i = 0; i < n; ++i)
    for (int c = 0; c < 3; ++c) bytes[3 * i + c] = quantize(img.v[c * n + i]);
  write_png_rgb(path, bytes, img.width, img.height);
}

}  // namespace glyphgan
