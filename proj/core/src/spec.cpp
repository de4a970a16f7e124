// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/net/spec.hpp"

#include <sstream>

#include "glyphgan/error.hpp"

namespace glyphgan {

bool LayerSpec::has_params() const {
  switch (kind) {
    case LayerKind::Conv:
    case LayerKind::GroupedConv:
    case LayerKind::BatchNorm:
    case LayerKind::ResnetBlock:
      return true;
    default:
      return false;
  }
}

bool LayerSpec::has_spatial_extent() const {
  switch (kind) {
    case LayerKind::Conv:
    case LayerKind::GroupedConv:
    case LayerKind::ResnetBlock:
      return true;
    default:
      return false;
  }
}

int64_t LayerSpec::param_count() const {
  switch (kind) {
    case LayerKind::Conv:
    case LayerKind::GroupedConv:
      return static_cast<int64_t>(kernel) * kernel * (channels_in / groups) * channels_out +
             channels_out;
    case LayerKind::BatchNorm:
      return 2LL * channels_out;  // gamma, beta (running stats are not trainable)
    case LayerKind::ResnetBlock: {
      int64_t conv = static_cast<int64_t>(kernel) * kernel * channels_in * channels_out +
                     channels_out;
      int64_t bn = 2LL * channels_out;
      return 2 * (conv + bn);
    }
    default:
      return 0;
  }
}

int NetworkSpec::input_channels() const {
  for (const auto& l : layers)
    if (l.channels_in > 0) return l.channels_in;
  return 0;
}

int NetworkSpec::output_channels() const {
  for (auto it = layers.rbegin(); it != layers.rend(); ++it)
    if (it->channels_out > 0) return it->channels_out;
  return 0;
}

int64_t NetworkSpec::param_count() const {
  int64_t n = 0;
  for (const auto& l : layers) n += l.param_count();
  return n;
}

void NetworkSpec::validate() const {
  int carry = -1;
  for (size_t i = 0; i < layers.size(); ++i) {
    const LayerSpec& l = layers[i];
    if (l.stride != 1 && l.stride != 2)
      throw ShapeError(name + " layer " + std::to_string(i) + ": stride factor must be 1 or 2");
    if (l.channels_in > 0) {
      if (carry >= 0 && l.channels_in != carry)
        throw ShapeError(name + " layer " + std::to_string(i) + ": channels_in " +
                         std::to_string(l.channels_in) + " does not match previous channels " +
                         std::to_string(carry));
      if (l.channels_in % l.groups != 0 || l.channels_out % l.groups != 0)
        throw ShapeError(name + " layer " + std::to_string(i) + ": channels not divisible by groups");
      carry = l.channels_out;
    } else if (carry >= 0 && l.channels_out > 0 && l.channels_out != carry) {
      throw ShapeError(name + " layer " + std::to_string(i) + ": channel annotation mismatch");
    }
  }
}

std::string spec_to_string(const NetworkSpec& spec) {
  std::ostringstream os;
  os << spec.name << ':';
  for (const auto& l : spec.layers) {
    os << static_cast<int>(l.kind) << ',' << l.channels_in << ',' << l.channels_out << ','
       << l.kernel << ',' << l.stride << ',' << (l.upsample ? 1 : 0) << ',' << l.groups << ','
       << l.slope << ',' << l.rate << ';';
  }
  return os.str();
}

uint64_t spec_hash(const NetworkSpec& spec) {
  // FNV-1a over the canonical string form.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : spec_to_string(spec)) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

namespace {

void push_cr(NetworkSpec& spec, int cin, int cout, int kernel, int stride, bool upsample) {
  spec.layers.push_back({LayerKind::Conv, cin, cout, kernel, stride, upsample, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::BatchNorm, 0, cout, 0, 1, false, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::ReLU, 0, 0, 0, 1, false, 1, 0.0, 0.0});
}

void push_cl(NetworkSpec& spec, int cin, int cout, int kernel, int stride, double slope) {
  spec.layers.push_back({LayerKind::Conv, cin, cout, kernel, stride, false, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::LeakyReLU, 0, 0, 0, 1, false, 1, slope, 0.0});
}

NetworkSpec build_generator(const GeneratorOptions& o, const std::string& name) {
  NetworkSpec spec;
  spec.name = name;
  int w1 = o.width, w2 = 3 * o.width, w3 = 9 * o.width;

  int trunk_in = o.in_channels;
  if (o.grouped_first) {
    // Each input channel convolved with its own filters, channel count kept.
    spec.layers.push_back({LayerKind::GroupedConv, o.in_channels, o.in_channels, o.first_kernel, 1,
                           false, o.in_channels, 0.0, 0.0});
    spec.layers.push_back({LayerKind::BatchNorm, 0, o.in_channels, 0, 1, false, 1, 0.0, 0.0});
    spec.layers.push_back({LayerKind::ReLU, 0, 0, 0, 1, false, 1, 0.0, 0.0});
    push_cr(spec, trunk_in, w1, o.body_kernel, 1, false);
  } else {
    push_cr(spec, trunk_in, w1, o.first_kernel, 1, false);
  }
  push_cr(spec, w1, w2, o.body_kernel, 2, false);
  push_cr(spec, w2, w3, o.body_kernel, 2, false);

  for (int b = 0; b < o.encoder_blocks + o.decoder_blocks; ++b)
    spec.layers.push_back(
        {LayerKind::ResnetBlock, w3, w3, o.body_kernel, 1, false, 1, 0.0, o.dropout});

  push_cr(spec, w3, w2, o.body_kernel, 2, true);
  push_cr(spec, w2, w1, o.body_kernel, 2, true);
  spec.layers.push_back({LayerKind::Conv, w1, o.out_channels, o.last_kernel, 1, false, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::Tanh, 0, 0, 0, 1, false, 1, 0.0, 0.0});

  spec.validate();
  return spec;
}

}  // namespace

NetworkSpec build_g1_spec(const GeneratorOptions& opts) { return build_generator(opts, "g1"); }

NetworkSpec build_g2_spec(GeneratorOptions opts) {
  opts.in_channels = 3;
  opts.out_channels = 3;
  opts.grouped_first = false;
  return build_generator(opts, "g2");
}

NetworkSpec build_baseline_spec(const GeneratorOptions& opts) {
  GeneratorOptions o = opts;
  o.in_channels = 78;
  o.out_channels = 78;
  o.grouped_first = true;
  NetworkSpec spec;
  spec.name = "baseline";
  // Same trunk as the glyph generator but the ingest groups span one letter
  // (3 RGB planes) each: 26 groups over 78 channels.
  int w1 = o.width, w2 = 3 * o.width, w3 = 9 * o.width;
  spec.layers.push_back(
      {LayerKind::GroupedConv, 78, 78, o.first_kernel, 1, false, 26, 0.0, 0.0});
  spec.layers.push_back({LayerKind::BatchNorm, 0, 78, 0, 1, false, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::ReLU, 0, 0, 0, 1, false, 1, 0.0, 0.0});
  push_cr(spec, 78, w1, o.body_kernel, 1, false);
  push_cr(spec, w1, w2, o.body_kernel, 2, false);
  push_cr(spec, w2, w3, o.body_kernel, 2, false);
  for (int b = 0; b < o.encoder_blocks + o.decoder_blocks; ++b)
    spec.layers.push_back(
        {LayerKind::ResnetBlock, w3, w3, o.body_kernel, 1, false, 1, 0.0, o.dropout});
  push_cr(spec, w3, w2, o.body_kernel, 2, true);
  push_cr(spec, w2, w1, o.body_kernel, 2, true);
  spec.layers.push_back({LayerKind::Conv, w1, 78, o.last_kernel, 1, false, 1, 0.0, 0.0});
  spec.layers.push_back({LayerKind::Tanh, 0, 0, 0, 1, false, 1, 0.0, 0.0});
  spec.validate();
  return spec;
}

namespace {

DiscriminatorSpec build_discriminator(const DiscriminatorOptions& o, const std::string& name) {
  int in = o.image_channels + o.condition_channels;
  DiscriminatorSpec d;

  d.local.name = name + "_local";
  push_cl(d.local, in, o.width, o.kernel, 2, o.slope);
  push_cl(d.local, o.width, 2 * o.width, o.kernel, 1, o.slope);
  d.local.layers.push_back({LayerKind::Conv, 2 * o.width, 1, o.kernel, 1, false, 1, 0.0, 0.0});
  d.local.validate();

  // Two stride-2 conv-bn-relu blocks; the second returns to the local input
  // channel count so the local layers can be shared verbatim.
  int mid = in;
  d.global_prefix.name = name + "_global_prefix";
  push_cr(d.global_prefix, in, mid, o.kernel, 2, false);
  push_cr(d.global_prefix, mid, in, o.kernel, 2, false);
  d.global_prefix.validate();
  return d;
}

}  // namespace

DiscriminatorSpec build_d1_spec(const DiscriminatorOptions& opts) {
  return build_discriminator(opts, "d1");
}

DiscriminatorSpec build_d2_spec(DiscriminatorOptions opts) {
  opts.image_channels = 3;
  opts.condition_channels = 3;
  return build_discriminator(opts, "d2");
}

DiscriminatorSpec build_baseline_d_spec(DiscriminatorOptions opts) {
  opts.image_channels = 78;
  opts.condition_channels = 78;
  return build_discriminator(opts, "baseline_d");
}

int receptive_field(const NetworkSpec& spec) {
  int r = 1;
  int jump = 1;
  for (const auto& l : spec.layers) {
    switch (l.kind) {
      case LayerKind::Conv:
      case LayerKind::GroupedConv:
        if (l.upsample)
          throw ShapeError("receptive_field: upsampling layer in " + spec.name);
        r += (l.kernel - 1) * jump;
        jump *= l.stride;
        break;
      case LayerKind::ResnetBlock:
        throw ShapeError("receptive_field: resnet block is not a pure conv chain in " + spec.name);
      default:
        break;  // pointwise layers do not change the field
    }
  }
  return r;
}

int receptive_field(const DiscriminatorSpec& spec) {
  NetworkSpec chained = spec.global_prefix;
  chained.name = spec.global_prefix.name + "+local";
  for (const auto& l : spec.local.layers) chained.layers.push_back(l);
  return receptive_field(chained);
}

}  // namespace glyphgan
