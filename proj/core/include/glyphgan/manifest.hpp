// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "glyphgan/stack.hpp"

namespace glyphgan {

/// One dataset entry: a font id plus the path (relative to the manifest's
/// directory) of its packed record. A record is a single PNG strip of the 26
/// glyphs A..Z laid out left to right: grayscale 1664x64 for glyph stacks,
/// RGB for color sets.
struct ManifestEntry {
  std::string font_id;
  std::string path;
};

enum class Split { Train, Test };

struct DatasetManifest {
  Split split = Split::Train;
  std::vector<ManifestEntry> entries;
  std::string base_dir;  // directory the entry paths are relative to

  std::string record_path(size_t i) const;
};

/// Text format: one `font_id<TAB>relative_path` per line, UTF-8. Lines
/// beginning with '#' are directives/comments; `#split=test` marks the split.
void save_manifest(const std::string& path, const DatasetManifest& manifest);

/// Parse errors cite line numbers; after parsing, referenced files are
/// checked and every missing path is reported in one exhaustive error.
DatasetManifest load_manifest(const std::string& path);

// Packed record I/O.
void save_glyph_record(const std::string& path, const GlyphStack& stack);
GlyphStack load_glyph_record(const std::string& path);
void save_color_record(const std::string& path, const ColorGlyphSet& set);
ColorGlyphSet load_color_record(const std::string& path);

/// Applies `variants_per_font` random gradient ornamentations (default 2) to
/// every font in `manifest`, writing RGB records under `out_dir` and
/// returning the manifest of the colorized dataset. Deterministic for a
/// fixed seed: each output entry derives its own random stream, so entry
/// order and parallelism cannot change the result.
DatasetManifest generate_color_dataset(const DatasetManifest& manifest, const std::string& out_dir,
                                       int variants_per_font, uint64_t seed);

}  // namespace glyphgan
