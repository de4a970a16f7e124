// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/manifest.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "glyphgan/error.hpp"
#include "glyphgan/gradient.hpp"
#include "glyphgan/png_io.hpp"

namespace fs = std::filesystem;

namespace glyphgan {

namespace {
constexpr int kStripWidth = kNumLetters * kGlyphSize;
constexpr int64_t kPlane = static_cast<int64_t>(kGlyphSize) * kGlyphSize;

uint8_t quantize(double v) {
  double c = std::clamp(v, 0.0, 1.0);
  return static_cast<uint8_t>(std::lround(c * 255.0));
}
}  // namespace

std::string DatasetManifest::record_path(size_t i) const {
  if (base_dir.empty()) return entries[i].path;
  return (fs::path(base_dir) / entries[i].path).string();
}

void save_manifest(const std::string& path, const DatasetManifest& manifest) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  if (manifest.split == Split::Test) out << "#split=test\n";
  for (const auto& e : manifest.entries) out << e.font_id << '\t' << e.path << '\n';
  if (!out) throw IoError("failed writing " + path);
}

DatasetManifest load_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open manifest " + path);

  DatasetManifest m;
  m.base_dir = fs::path(path).parent_path().string();

  std::string line;
  int lineno = 0;
  std::set<std::string> seen_ids;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    if (line[0] == '#') {
      if (line == "#split=test") m.split = Split::Test;
      else if (line == "#split=train") m.split = Split::Train;
      continue;
    }
    size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0 || tab + 1 >= line.size())
      throw IoError(path + ":" + std::to_string(lineno) +
                    ": expected `font_id<TAB>relative_path`");
    ManifestEntry e{line.substr(0, tab), line.substr(tab + 1)};
    if (!seen_ids.insert(e.font_id).second)
      throw IoError(path + ":" + std::to_string(lineno) + ": duplicate font_id " + e.font_id);
    m.entries.push_back(std::move(e));
  }

  std::vector<std::string> missing;
  for (size_t i = 0; i < m.entries.size(); ++i)
    if (!fs::exists(m.record_path(i))) missing.push_back(m.record_path(i));
  if (!missing.empty()) {
    std::ostringstream os;
    os << path << ": " << missing.size() << " referenced file(s) missing:";
    for (const auto& p : missing) os << ' ' << p;
    throw IoError(os.str());
  }
  return m;
}

void save_glyph_record(const std::string& path, const GlyphStack& stack) {
  std::vector<uint8_t> bytes(static_cast<size_t>(kStripWidth) * kGlyphSize);
  for (int letter = 0; letter < kNumLetters; ++letter)
    for (int y = 0; y < kGlyphSize; ++y)
      for (int x = 0; x < kGlyphSize; ++x)
        bytes[static_cast<size_t>(y) * kStripWidth + letter * kGlyphSize + x] =
            quantize(stack.at(letter, y, x));
  write_png_gray(path, bytes, kStripWidth, kGlyphSize);
}

GlyphStack load_glyph_record(const std::string& path) {
  PngImage p = read_png(path);
  if (p.width != kStripWidth || p.height != kGlyphSize || p.channels != 1)
    throw IoError("glyph record " + path + " is not a 1664x64 grayscale strip");
  GlyphStack stack;
  for (int letter = 0; letter < kNumLetters; ++letter)
    for (int y = 0; y < kGlyphSize; ++y)
      for (int x = 0; x < kGlyphSize; ++x)
        stack.at(letter, y, x) =
            p.pixels[static_cast<size_t>(y) * kStripWidth + letter * kGlyphSize + x] / 255.0;
  return stack;
}

void save_color_record(const std::string& path, const ColorGlyphSet& set) {
  std::vector<uint8_t> bytes(3 * static_cast<size_t>(kStripWidth) * kGlyphSize);
  for (int letter = 0; letter < kNumLetters; ++letter)
    for (int y = 0; y < kGlyphSize; ++y)
      for (int x = 0; x < kGlyphSize; ++x)
        for (int c = 0; c < 3; ++c)
          bytes[3 * (static_cast<size_t>(y) * kStripWidth + letter * kGlyphSize + x) + c] =
              quantize(set.images[((static_cast<int64_t>(letter) * 3 + c) * kGlyphSize + y) *
                                      kGlyphSize + x]);
  write_png_rgb(path, bytes, kStripWidth, kGlyphSize);
}

ColorGlyphSet load_color_record(const std::string& path) {
  PngImage p = read_png(path);
  if (p.width != kStripWidth || p.height != kGlyphSize || p.channels != 3)
    throw IoError("color record " + path + " is not a 1664x64 RGB strip");
  ColorGlyphSet set;
  for (int letter = 0; letter < kNumLetters; ++letter)
    for (int y = 0; y < kGlyphSize; ++y)
      for (int x = 0; x < kGlyphSize; ++x)
        for (int c = 0; c < 3; ++c)
          set.images[((static_cast<int64_t>(letter) * 3 + c) * kGlyphSize + y) * kGlyphSize + x] =
              p.pixels[3 * (static_cast<size_t>(y) * kStripWidth + letter * kGlyphSize + x) + c] /
              255.0;
  return set;
}

DatasetManifest generate_color_dataset(const DatasetManifest& manifest, const std::string& out_dir,
                                       int variants_per_font, uint64_t seed) {
  if (variants_per_font < 1) throw Error("variants_per_font must be >= 1");
  fs::create_directories(out_dir);

  DatasetManifest out;
  out.split = manifest.split;
  out.base_dir = out_dir;

  for (size_t i = 0; i < manifest.entries.size(); ++i) {
    GlyphStack stack;
    try {
      stack = load_glyph_record(manifest.record_path(i));
    } catch (const Error& e) {
      throw IoError("font " + manifest.entries[i].font_id + ": " + e.what());
    }
    for (int v = 0; v < variants_per_font; ++v) {
      Rng rng = Rng::derive(seed, i * 1000003ULL + static_cast<uint64_t>(v));
      // One spec per variant: the whole font shares a consistent ornamentation.
      GradientSpec spec = sample_gradient_spec(rng);
      ColorGlyphSet set;
      for (int letter = 0; letter < kNumLetters; ++letter) {
        GlyphImage glyph = stack.letter(letter);
        if (!glyph.has_foreground()) continue;  // leave empty letters black
        set.set_letter(letter, apply_gradient(glyph, spec));
      }
      std::string id = manifest.entries[i].font_id + "#v" + std::to_string(v);
      std::string rel = id + ".png";
      try {
        save_color_record((fs::path(out_dir) / rel).string(), set);
      } catch (const Error& e) {
        throw IoError("font " + id + ": " + e.what());
      }
      out.entries.push_back({id, rel});
    }
  }
  return out;
}

}  // namespace glyphgan
