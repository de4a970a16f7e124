// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/tensor.hpp"

#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "glyphgan/error.hpp"

namespace glyphgan {

namespace {
int64_t shape_size(const std::vector<int>& shape) {
  int64_t n = 1;
  for (int d : shape) {
    if (d <= 0) throw ShapeError("non-positive dimension in shape");
    n *= d;
  }
  return n;
}
}  // namespace

Tensor::Tensor(std::vector<int> shape) : shape_(std::move(shape)) {
  data_.assign(static_cast<size_t>(shape_size(shape_)), 0.0);
}

Tensor Tensor::full(std::vector<int> shape, double value) {
  Tensor t(std::move(shape));
  t.fill(value);
  return t;
}

void Tensor::fill(double v) { std::fill(data_.begin(), data_.end(), v); }

void Tensor::reshape(std::vector<int> shape) {
  if (shape_size(shape) != size())
    throw ShapeError("reshape size mismatch: " + shape_str());
  shape_ = std::move(shape);
}

Tensor& Tensor::operator+=(const Tensor& other) {
  if (!same_shape(other)) throw ShapeError("operator+= shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& other) {
  if (!same_shape(other)) throw ShapeError("operator-= shape mismatch");
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

Tensor& Tensor::operator*=(double s) {
  for (double& v : data_) v *= s;
  return *this;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << ",";
    os << shape_[i];
  }
  os << ")";
  return os.str();
}

bool Tensor::all_finite() const {
  for (double v : data_)
    if (!std::isfinite(v)) return false;
  return true;
}

void check_shape(const Tensor& t, const std::vector<int>& expected, const std::string& what) {
  if (t.shape() != expected) {
    Tensor e;  // only for formatting
    std::ostringstream os;
    os << what << ": expected (";
    for (size_t i = 0; i < expected.size(); ++i) {
      if (i) os << ",";
      os << expected[i];
    }
    os << "), got " << t.shape_str();
    throw ShapeError(os.str());
  }
}

double dot(const Tensor& a, const Tensor& b) {
  if (!a.same_shape(b)) throw ShapeError("dot shape mismatch");
  double s = 0.0;
  for (int64_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double max_abs(const Tensor& t) {
  double m = 0.0;
  for (int64_t i = 0; i < t.size(); ++i) m = std::max(m, std::abs(t[i]));
  return m;
}

}  // namespace glyphgan
