// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/net/checkpoint.hpp"

#include <fstream>

#include "glyphgan/error.hpp"

namespace glyphgan {

namespace {

void write_u32(std::ostream& os, uint32_t v) { os.write(reinterpret_cast<const char*>(&v), 4); }
void write_u64(std::ostream& os, uint64_t v) { os.write(reinterpret_cast<const char*>(&v), 8); }
void write_str(std::ostream& os, const std::string& s) {
  write_u32(os, static_cast<uint32_t>(s.size()));
  os.write(s.data(), static_cast<std::streamsize>(s.size()));
}
void write_tensor(std::ostream& os, const Tensor& t) {
  write_u32(os, static_cast<uint32_t>(t.shape().size()));
  for (int d : t.shape()) write_u32(os, static_cast<uint32_t>(d));
  os.write(reinterpret_cast<const char*>(t.data()), static_cast<std::streamsize>(t.size() * 8));
}

uint32_t read_u32(std::istream& is) {
  uint32_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 4);
  return v;
}
uint64_t read_u64(std::istream& is) {
  uint64_t v = 0;
  is.read(reinterpret_cast<char*>(&v), 8);
  return v;
}
std::string read_str(std::istream& is) {
  uint32_t n = read_u32(is);
  std::string s(n, '\0');
  is.read(s.data(), n);
  return s;
}
Tensor read_tensor(std::istream& is) {
  uint32_t rank = read_u32(is);
  std::vector<int> shape(rank);
  for (uint32_t i = 0; i < rank; ++i) shape[i] = static_cast<int>(read_u32(is));
  Tensor t(shape);
  is.read(reinterpret_cast<char*>(t.data()), static_cast<std::streamsize>(t.size() * 8));
  return t;
}

}  // namespace

void Checkpoint::save(const std::string& path) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw IoError("cannot open checkpoint " + path + " for writing");
  write_u64(os, kMagic);
  write_u32(os, kVersion);
  write_u64(os, iteration);
  write_str(os, rng_state);

  write_u32(os, static_cast<uint32_t>(spec_hashes.size()));
  for (const auto& [name, hash] : spec_hashes) {
    write_str(os, name);
    write_u64(os, hash);
  }
  write_u32(os, static_cast<uint32_t>(counters.size()));
  for (const auto& [name, v] : counters) {
    write_str(os, name);
    write_u64(os, v);
  }
  write_u32(os, static_cast<uint32_t>(tensor_maps.size()));
  for (const auto& [section, tensors] : tensor_maps) {
    write_str(os, section);
    write_u32(os, static_cast<uint32_t>(tensors.size()));
    for (const auto& [name, t] : tensors) {
      write_str(os, name);
      write_tensor(os, t);
    }
  }
  if (!os) throw IoError("failed writing checkpoint " + path);
}

Checkpoint Checkpoint::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw IoError("cannot open checkpoint " + path);
  if (read_u64(is) != kMagic) throw IoError(path + " is not a checkpoint file");
  uint32_t version = read_u32(is);
  if (version != kVersion)
    throw IoError(path + ": unsupported checkpoint version " + std::to_string(version));

  Checkpoint c;
  c.iteration = read_u64(is);
  c.rng_state = read_str(is);
  uint32_t nh = read_u32(is);
  for (uint32_t i = 0; i < nh; ++i) {
    std::string name = read_str(is);
    c.spec_hashes[name] = read_u64(is);
  }
  uint32_t nc = read_u32(is);
  for (uint32_t i = 0; i < nc; ++i) {
    std::string name = read_str(is);
    c.counters[name] = read_u64(is);
  }
  uint32_t ns = read_u32(is);
  for (uint32_t i = 0; i < ns; ++i) {
    std::string section = read_str(is);
    uint32_t nt = read_u32(is);
    for (uint32_t j = 0; j < nt; ++j) {
      std::string name = read_str(is);
      c.tensor_maps[section][name] = read_tensor(is);
    }
  }
  if (!is) throw IoError("truncated checkpoint " + path);
  return c;
}

void Checkpoint::put_network(const std::string& name, const Network& net) {
  spec_hashes[name] = net.params().spec_hash;
  tensor_maps[name + ".values"] = net.params().values;
}

void Checkpoint::restore_network(const std::string& name, Network& net) const {
  auto hit = spec_hashes.find(name);
  if (hit == spec_hashes.end()) throw IoError("checkpoint has no component " + name);
  if (hit->second != net.params().spec_hash)
    throw IoError("checkpoint spec hash mismatch for " + name +
                  ": refusing to load weights built for a different architecture");
  const auto& stored = tensor_maps.at(name + ".values");
  for (auto& [key, value] : net.params().values) {
    auto it = stored.find(key);
    if (it == stored.end()) throw IoError("checkpoint missing tensor " + name + "." + key);
    if (!it->second.same_shape(value))
      throw IoError("checkpoint tensor shape mismatch for " + name + "." + key);
    value = it->second;
  }
  net.rebind();
}

void Checkpoint::put_adam(const std::string& name, Adam& opt) {
  tensor_maps[name + ".m"] = opt.moment1();
  tensor_maps[name + ".v"] = opt.moment2();
  counters[name + ".t"] = opt.iterations();
}

void Checkpoint::restore_adam(const std::string& name, Adam& opt) const {
  auto mit = tensor_maps.find(name + ".m");
  auto vit = tensor_maps.find(name + ".v");
  if (mit != tensor_maps.end()) opt.moment1() = mit->second;
  if (vit != tensor_maps.end()) opt.moment2() = vit->second;
  auto tit = counters.find(name + ".t");
  if (tit != counters.end()) opt.set_iterations(tit->second);
}

}  // namespace glyphgan
