// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "glyphgan/net/adam.hpp"
#include "glyphgan/net/network.hpp"

namespace glyphgan {

/// Versioned training snapshot: spec hashes, parameter arrays, optimizer
/// moments, iteration counter, and RNG state. Loading refuses containers
/// whose spec hash does not match the live network.
struct Checkpoint {
  static constexpr uint64_t kMagic = 0x31544b4347474c47ULL;  // "GLGGCKT1"
  static constexpr uint32_t kVersion = 1;

  uint64_t iteration = 0;
  std::string rng_state;
  std::map<std::string, uint64_t> spec_hashes;                       // component name -> hash
  std::map<std::string, std::map<std::string, Tensor>> tensor_maps;  // section -> name -> tensor
  std::map<std::string, uint64_t> counters;                          // e.g. adam step counts

  void save(const std::string& path) const;
  static Checkpoint load(const std::string& path);

  // Convenience wiring for one network + optional optimizer.
  void put_network(const std::string& name, const Network& net);
  void restore_network(const std::string& name, Network& net) const;
  void put_adam(const std::string& name, Adam& opt);
  void restore_adam(const std::string& name, Adam& opt) const;
};

}  // namespace glyphgan
