// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace glyphgan {

/// Dense row-major tensor of doubles. Shapes follow the NCHW convention for
/// image batches but any rank up to 4 is allowed.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(std::vector<int> shape);

  static Tensor zeros(std::vector<int> shape) { return Tensor(std::move(shape)); }
  static Tensor full(std::vector<int> shape, double value);

  const std::vector<int>& shape() const { return shape_; }
  int dim(int i) const { return shape_[static_cast<size_t>(i)]; }
  int rank() const { return static_cast<int>(shape_.size()); }
  int64_t size() const { return static_cast<int64_t>(data_.size()); }
  bool empty() const { return data_.empty(); }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  double& operator[](int64_t i) { return data_[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data_[static_cast<size_t>(i)]; }

  // NCHW accessors.
  double& at(int n, int c, int h, int w) {
    return data_[static_cast<size_t>(((static_cast<int64_t>(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }
  double at(int n, int c, int h, int w) const {
    return data_[static_cast<size_t>(((static_cast<int64_t>(n) * shape_[1] + c) * shape_[2] + h) * shape_[3] + w)];
  }

  void fill(double v);
  void reshape(std::vector<int> shape);  // size-preserving

  Tensor& operator+=(const Tensor& other);
  Tensor& operator-=(const Tensor& other);
  Tensor& operator*=(double s);

  bool same_shape(const Tensor& other) const { return shape_ == other.shape_; }
  std::string shape_str() const;

  /// True when every element is finite.
  bool all_finite() const;

 private:
  std::vector<int> shape_;
  std::vector<double> data_;
};

/// Throws ShapeError with expected-vs-actual dims when shapes differ.
void check_shape(const Tensor& t, const std::vector<int>& expected, const std::string& what);

double dot(const Tensor& a, const Tensor& b);
double max_abs(const Tensor& t);

}  // namespace glyphgan
