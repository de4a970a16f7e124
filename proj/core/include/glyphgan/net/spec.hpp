// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace glyphgan {

enum class LayerKind {
  Conv,
  GroupedConv,
  BatchNorm,
  ReLU,
  LeakyReLU,
  Dropout,
  Tanh,
  Sigmoid,
  ResnetBlock,
};

/// One declarative layer. `stride` is a spatial factor: downsampling for
/// plain convolutions, upsampling (transposed convolution) when `upsample`
/// is set. A ResnetBlock is conv-bn-relu-dropout / conv-bn with an additive
/// skip, all at stride 1.
struct LayerSpec {
  LayerKind kind = LayerKind::Conv;
  int channels_in = 0;
  int channels_out = 0;
  int kernel = 0;
  int stride = 1;
  bool upsample = false;
  int groups = 1;
  double slope = 0.0;    // LeakyReLU negative slope
  double rate = 0.0;     // Dropout rate (also the rate inside a ResnetBlock)

  bool has_params() const;
  bool has_spatial_extent() const;
  /// Trainable parameter count implied by the spec arithmetic.
  int64_t param_count() const;
};

struct NetworkSpec {
  std::string name;
  std::vector<LayerSpec> layers;

  int input_channels() const;
  int output_channels() const;
  int64_t param_count() const;
  /// Validates channel agreement between adjacent layers and stride factors.
  void validate() const;
};

/// Stable content hash used to guard checkpoint/spec compatibility.
uint64_t spec_hash(const NetworkSpec& spec);
std::string spec_to_string(const NetworkSpec& spec);

/// Knobs for building generator specs. Defaults reproduce the full-size
/// architecture; tests shrink `width`, block counts, and kernels.
struct GeneratorOptions {
  int in_channels = 26;
  int out_channels = 26;
  bool grouped_first = true;  // first layer convolves each channel with its own filters
  int width = 64;             // channel ladder is width, 3*width, 9*width
  int encoder_blocks = 3;
  int decoder_blocks = 3;
  int first_kernel = 7;
  int last_kernel = 7;
  int body_kernel = 3;
  double dropout = 0.5;
};

/// Glyph generator: grouped 26-way ingest, CR64-CR192-CR576 encoder with
/// downsampling factors 1-1-2-2, six ResNet blocks, mirrored decoder
/// upsampling by 2-2, and a final conv into tanh.
NetworkSpec build_g1_spec(const GeneratorOptions& opts = {});

/// Ornamentation generator: same trunk, but the grouped ingest layer is
/// dropped and the net maps 3 RGB channels to 3.
NetworkSpec build_g2_spec(GeneratorOptions opts = {});

/// 78-channel translation baseline: the glyph generator trunk with a 26-group
/// first layer over 26 letters x 3 RGB planes.
NetworkSpec build_baseline_spec(const GeneratorOptions& opts = {});

struct DiscriminatorOptions {
  int image_channels = 26;      // channels of the judged image
  int condition_channels = 26;  // channels of the conditioning stack (0 = unconditional)
  int width = 64;               // local path is width, 2*width
  int kernel = 5;
  double slope = 0.2;
};

/// Local patch discriminator plus the two-stride-2-block global prefix that
/// reuses (shares) the local layers. `local` consumes the conditioned image
/// directly; the global path runs `global_prefix` then `local`.
struct DiscriminatorSpec {
  NetworkSpec local;
  NetworkSpec global_prefix;
  int input_channels() const { return local.input_channels(); }
};

DiscriminatorSpec build_d1_spec(const DiscriminatorOptions& opts = {});
DiscriminatorSpec build_d2_spec(DiscriminatorOptions opts = {});
DiscriminatorSpec build_baseline_d_spec(DiscriminatorOptions opts = {});

/// Receptive field of a pure (down-)convolutional chain via the standard
/// recurrence r += (k-1) * prod(strides). Layers without spatial extent pass
/// through; upsampling or resnet blocks are rejected.
int receptive_field(const NetworkSpec& spec);

/// Receptive field of the global path: prefix chained into the shared local layers.
int receptive_field(const DiscriminatorSpec& spec);

}  // namespace glyphgan
