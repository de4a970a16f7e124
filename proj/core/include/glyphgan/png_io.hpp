// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glyphgan {

/// 8-bit decoded image, channel-interleaved rows. channels is 1 (gray) or 3 (RGB).
struct PngImage {
  int width = 0;
  int height = 0;
  int channels = 1;
  std::vector<uint8_t> pixels;
};

/// Reads any libpng-supported file, normalizing to 8-bit gray or RGB
/// (palette expanded, 16-bit stripped, alpha composited over black).
PngImage read_png(const std::string& path);

void write_png_gray(const std::string& path, const std::vector<uint8_t>& pixels, int width, int height);
void write_png_rgb(const std::string& path, const std::vector<uint8_t>& pixels, int width, int height);

}  // namespace glyphgan
