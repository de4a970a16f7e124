// Copyright (c) 2026 The glyphgan authors
// SPDX-License-Identifier: Apache-2.0

#include "glyphgan/net/layers.hpp"

#include <Eigen/Core>

#include <cmath>

#include "glyphgan/error.hpp"

namespace glyphgan {

using RowMat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using MapMat = Eigen::Map<RowMat>;
using MapConst = Eigen::Map<const RowMat>;

void Layer::init_params(const std::string&, ParamSet&, Rng&) {}
void Layer::bind(const std::string&, ParamSet&) {}

Tensor& ParamSet::value(const std::string& key) {
  auto it = values.find(key);
  if (it == values.end()) throw Error("ParamSet: missing value " + key);
  return it->second;
}

Tensor& ParamSet::grad(const std::string& key) {
  auto it = grads.find(key);
  if (it == grads.end()) throw Error("ParamSet: missing grad " + key);
  return it->second;
}

int64_t ParamSet::param_count() const {
  int64_t n = 0;
  for (const auto& [key, g] : grads) n += values.at(key).size();
  return n;
}

void ParamSet::zero_grad() {
  for (auto& [key, g] : grads) g.fill(0.0);
}

namespace {

int out_size_down(int in, int k, int s) { return (in + (k - 1) - k) / s + 1; }

// col[(c*k+kh)*k+kw][oh*OW+ow] = x[c][oh*s - p + kh][ow*s - p + kw], zero outside.
void im2col(const double* x, int C, int H, int W, int k, int s, int OH, int OW, double* col) {
  int p = (k - 1) / 2;
  for (int c = 0; c < C; ++c)
    for (int kh = 0; kh < k; ++kh)
      for (int kw = 0; kw < k; ++kw) {
        double* row = col + ((static_cast<int64_t>(c) * k + kh) * k + kw) * OH * OW;
        for (int oh = 0; oh < OH; ++oh) {
          int y = oh * s - p + kh;
          if (y < 0 || y >= H) {
            for (int ow = 0; ow < OW; ++ow) row[oh * OW + ow] = 0.0;
            continue;
          }
          const double* xrow = x + (static_cast<int64_t>(c) * H + y) * W;
          for (int ow = 0; ow < OW; ++ow) {
            int xx = ow * s - p + kw;
            row[oh * OW + ow] = (xx >= 0 && xx < W) ? xrow[xx] : 0.0;
          }
        }
      }
}

// Adjoint of im2col: scatter-adds col back into x.
void col2im(const double* col, int C, int H, int W, int k, int s, int OH, int OW, double* x) {
  int p = (k - 1) / 2;
  for (int c = 0; c < C; ++c)
    for (int kh = 0; kh < k; ++kh)
      for (int kw = 0; kw < k; ++kw) {
        const double* row = col + ((static_cast<int64_t>(c) * k + kh) * k + kw) * OH * OW;
        for (int oh = 0; oh < OH; ++oh) {
          int y = oh * s - p + kh;
          if (y < 0 || y >= H) continue;
          double* xrow = x + (static_cast<int64_t>(c) * H + y) * W;
          for (int ow = 0; ow < OW; ++ow) {
            int xx = ow * s - p + kw;
            if (xx >= 0 && xx < W) xrow[xx] += row[oh * OW + ow];
          }
        }
      }
}

class ConvLayer : public Layer {
 public:
  explicit ConvLayer(const LayerSpec& spec) : Layer(spec) {
    if (spec.kernel % 2 == 0) throw ShapeError("conv kernel must be odd");
    if (spec.upsample && spec.groups != 1)
      throw ShapeError("grouped transposed convolution not supported");
  }

  void init_params(const std::string& prefix, ParamSet& ps, Rng& rng) override {
    int cin = spec_.channels_in, cout = spec_.channels_out, k = spec_.kernel, g = spec_.groups;
    Tensor w = spec_.upsample ? Tensor({cin, cout, k, k}) : Tensor({cout, cin / g, k, k});
    for (int64_t i = 0; i < w.size(); ++i) w[i] = rng.normal(0.0, 0.02);
    Tensor b({cout});
    ps.values[prefix + ".weight"] = w;
    ps.values[prefix + ".bias"] = b;
    ps.grads[prefix + ".weight"] = Tensor(w.shape());
    ps.grads[prefix + ".bias"] = Tensor(b.shape());
  }

  void bind(const std::string& prefix, ParamSet& ps) override {
    w_ = &ps.value(prefix + ".weight");
    b_ = &ps.value(prefix + ".bias");
    dw_ = &ps.grad(prefix + ".weight");
    db_ = &ps.grad(prefix + ".bias");
  }

  Tensor forward(const Tensor& x, const PassContext&, LayerCache* cache) override {
    if (x.rank() != 4 || x.dim(1) != spec_.channels_in)
      throw ShapeError("conv input: expected channels " + std::to_string(spec_.channels_in) +
                       ", got " + x.shape_str());
    if (cache) cache->input = x;
    return spec_.upsample ? forward_up(x) : forward_down(x);
  }

  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    return spec_.upsample ? backward_up(dy, cache.input) : backward_down(dy, cache.input);
  }

 private:
  Tensor forward_down(const Tensor& x) {
    int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
    int k = spec_.kernel, s = spec_.stride, g = spec_.groups;
    int OH = out_size_down(H, k, s), OW = out_size_down(W, k, s);
    int cout = spec_.channels_out;
    int ckk = (C / g) * k * k;

    Tensor y({N, cout, OH, OW});
    std::vector<double> col(static_cast<size_t>(C) * k * k * OH * OW);
    for (int n = 0; n < N; ++n) {
      im2col(x.data() + static_cast<int64_t>(n) * C * H * W, C, H, W, k, s, OH, OW, col.data());
      for (int gi = 0; gi < g; ++gi) {
        MapConst wm(w_->data() + static_cast<int64_t>(gi) * (cout / g) * ckk, cout / g, ckk);
        MapConst cm(col.data() + static_cast<int64_t>(gi) * ckk * OH * OW, ckk, OH * OW);
        MapMat ym(y.data() + (static_cast<int64_t>(n) * cout + gi * (cout / g)) * OH * OW,
                  cout / g, OH * OW);
        ym.noalias() = wm * cm;
      }
      for (int co = 0; co < cout; ++co) {
        double bias = (*b_)[co];
        double* yp = y.data() + (static_cast<int64_t>(n) * cout + co) * OH * OW;
        for (int i = 0; i < OH * OW; ++i) yp[i] += bias;
      }
    }
    return y;
  }

  Tensor backward_down(const Tensor& dy, const Tensor& x) {
    int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
    int k = spec_.kernel, s = spec_.stride, g = spec_.groups;
    int OH = dy.dim(2), OW = dy.dim(3);
    int cout = spec_.channels_out;
    int ckk = (C / g) * k * k;

    Tensor dx({N, C, H, W});
    std::vector<double> col(static_cast<size_t>(C) * k * k * OH * OW);
    std::vector<double> dcol(col.size());
    for (int n = 0; n < N; ++n) {
      im2col(x.data() + static_cast<int64_t>(n) * C * H * W, C, H, W, k, s, OH, OW, col.data());
      for (int gi = 0; gi < g; ++gi) {
        MapConst dym(dy.data() + (static_cast<int64_t>(n) * cout + gi * (cout / g)) * OH * OW,
                     cout / g, OH * OW);
        MapConst cm(col.data() + static_cast<int64_t>(gi) * ckk * OH * OW, ckk, OH * OW);
        MapMat dwm(dw_->data() + static_cast<int64_t>(gi) * (cout / g) * ckk, cout / g, ckk);
        dwm.noalias() += dym * cm.transpose();

        MapConst wm(w_->data() + static_cast<int64_t>(gi) * (cout / g) * ckk, cout / g, ckk);
        MapMat dcm(dcol.data() + static_cast<int64_t>(gi) * ckk * OH * OW, ckk, OH * OW);
        dcm.noalias() = wm.transpose() * dym;
      }
      for (int co = 0; co < cout; ++co) {
        const double* dyp = dy.data() + (static_cast<int64_t>(n) * cout + co) * OH * OW;
        double acc = 0.0;
        for (int i = 0; i < OH * OW; ++i) acc += dyp[i];
        (*db_)[co] += acc;
      }
      col2im(dcol.data(), C, H, W, k, s, OH, OW,
             dx.data() + static_cast<int64_t>(n) * C * H * W);
    }
    return dx;
  }

  // Transposed convolution: output spatial size = input * stride (odd kernel,
  // pad (k-1)/2, output padding stride-1).
  Tensor forward_up(const Tensor& x) {
    int N = x.dim(0), C = x.dim(1), IH = x.dim(2), IW = x.dim(3);
    int k = spec_.kernel, s = spec_.stride;
    int cout = spec_.channels_out;
    int OH = IH * s, OW = IW * s;

    Tensor y({N, cout, OH, OW});
    std::vector<double> coly(static_cast<size_t>(cout) * k * k * IH * IW);
    for (int n = 0; n < N; ++n) {
      MapConst wm(w_->data(), C, cout * k * k);
      MapConst xm(x.data() + static_cast<int64_t>(n) * C * IH * IW, C, IH * IW);
      MapMat cym(coly.data(), cout * k * k, IH * IW);
      cym.noalias() = wm.transpose() * xm;
      col2im(coly.data(), cout, OH, OW, k, s, IH, IW,
             y.data() + static_cast<int64_t>(n) * cout * OH * OW);
      for (int co = 0; co < cout; ++co) {
        double bias = (*b_)[co];
        double* yp = y.data() + (static_cast<int64_t>(n) * cout + co) * OH * OW;
        for (int i = 0; i < OH * OW; ++i) yp[i] += bias;
      }
    }
    return y;
  }

  Tensor backward_up(const Tensor& dy, const Tensor& x) {
    int N = x.dim(0), C = x.dim(1), IH = x.dim(2), IW = x.dim(3);
    int k = spec_.kernel, s = spec_.stride;
    int cout = spec_.channels_out;
    int OH = dy.dim(2), OW = dy.dim(3);

    Tensor dx({N, C, IH, IW});
    std::vector<double> dcoly(static_cast<size_t>(cout) * k * k * IH * IW);
    for (int n = 0; n < N; ++n) {
      im2col(dy.data() + static_cast<int64_t>(n) * cout * OH * OW, cout, OH, OW, k, s, IH, IW,
             dcoly.data());
      MapConst dcym(dcoly.data(), cout * k * k, IH * IW);
      MapConst xm(x.data() + static_cast<int64_t>(n) * C * IH * IW, C, IH * IW);
      MapMat dwm(dw_->data(), C, cout * k * k);
      dwm.noalias() += xm * dcym.transpose();

      MapConst wm(w_->data(), C, cout * k * k);
      MapMat dxm(dx.data() + static_cast<int64_t>(n) * C * IH * IW, C, IH * IW);
      dxm.noalias() = wm * dcym;

      for (int co = 0; co < cout; ++co) {
        const double* dyp = dy.data() + (static_cast<int64_t>(n) * cout + co) * OH * OW;
        double acc = 0.0;
        for (int i = 0; i < OH * OW; ++i) acc += dyp[i];
        (*db_)[co] += acc;
      }
    }
    return dx;
  }

  Tensor* w_ = nullptr;
  Tensor* b_ = nullptr;
  Tensor* dw_ = nullptr;
  Tensor* db_ = nullptr;
};

class BatchNormLayer : public Layer {
 public:
  explicit BatchNormLayer(const LayerSpec& spec) : Layer(spec) {}

  void init_params(const std::string& prefix, ParamSet& ps, Rng& rng) override {
    int c = spec_.channels_out;
    Tensor gamma({c}), beta({c}), rm({c}), rv({c});
    for (int i = 0; i < c; ++i) gamma[i] = rng.normal(1.0, 0.02);
    rv.fill(1.0);
    ps.values[prefix + ".gamma"] = gamma;
    ps.values[prefix + ".beta"] = beta;
    ps.values[prefix + ".running_mean"] = rm;
    ps.values[prefix + ".running_var"] = rv;
    ps.grads[prefix + ".gamma"] = Tensor({c});
    ps.grads[prefix + ".beta"] = Tensor({c});
  }

  void bind(const std::string& prefix, ParamSet& ps) override {
    gamma_ = &ps.value(prefix + ".gamma");
    beta_ = &ps.value(prefix + ".beta");
    rm_ = &ps.value(prefix + ".running_mean");
    rv_ = &ps.value(prefix + ".running_var");
    dgamma_ = &ps.grad(prefix + ".gamma");
    dbeta_ = &ps.grad(prefix + ".beta");
  }

  Tensor forward(const Tensor& x, const PassContext& ctx, LayerCache* cache) override {
    int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
    if (C != spec_.channels_out)
      throw ShapeError("batchnorm channels: expected " + std::to_string(spec_.channels_out) +
                       ", got " + x.shape_str());
    int64_t plane = static_cast<int64_t>(H) * W;
    int64_t n_per_c = static_cast<int64_t>(N) * plane;

    Tensor y(x.shape());
    Tensor xhat(x.shape());
    Tensor invstd({C});

    for (int c = 0; c < C; ++c) {
      double mean, var;
      if (ctx.training) {
        double sum = 0.0, sq = 0.0;
        for (int n = 0; n < N; ++n) {
          const double* p = x.data() + (static_cast<int64_t>(n) * C + c) * plane;
          for (int64_t i = 0; i < plane; ++i) {
            sum += p[i];
            sq += p[i] * p[i];
          }
        }
        mean = sum / static_cast<double>(n_per_c);
        var = sq / static_cast<double>(n_per_c) - mean * mean;
        if (var < 0.0) var = 0.0;
        // Running averages use the unbiased estimate, momentum 0.1.
        double unbiased = n_per_c > 1 ? var * static_cast<double>(n_per_c) /
                                            static_cast<double>(n_per_c - 1)
                                      : var;
        (*rm_)[c] = 0.9 * (*rm_)[c] + 0.1 * mean;
        (*rv_)[c] = 0.9 * (*rv_)[c] + 0.1 * unbiased;
      } else {
        mean = (*rm_)[c];
        var = (*rv_)[c];
      }
      double is = 1.0 / std::sqrt(var + kEps);
      invstd[c] = is;
      double g = (*gamma_)[c], b = (*beta_)[c];
      for (int n = 0; n < N; ++n) {
        const double* p = x.data() + (static_cast<int64_t>(n) * C + c) * plane;
        double* xh = xhat.data() + (static_cast<int64_t>(n) * C + c) * plane;
        double* yp = y.data() + (static_cast<int64_t>(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) {
          xh[i] = (p[i] - mean) * is;
          yp[i] = g * xh[i] + b;
        }
      }
    }
    if (cache) {
      cache->a = std::move(xhat);
      cache->b = invstd;
      cache->training = ctx.training;
    }
    return y;
  }

  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    const Tensor& xhat = cache.a;
    const Tensor& invstd = cache.b;
    int N = dy.dim(0), C = dy.dim(1), H = dy.dim(2), W = dy.dim(3);
    int64_t plane = static_cast<int64_t>(H) * W;
    int64_t n_per_c = static_cast<int64_t>(N) * plane;

    Tensor dx(dy.shape());
    for (int c = 0; c < C; ++c) {
      double sum_dy = 0.0, sum_dy_xhat = 0.0;
      for (int n = 0; n < N; ++n) {
        const double* dyp = dy.data() + (static_cast<int64_t>(n) * C + c) * plane;
        const double* xh = xhat.data() + (static_cast<int64_t>(n) * C + c) * plane;
        for (int64_t i = 0; i < plane; ++i) {
          sum_dy += dyp[i];
          sum_dy_xhat += dyp[i] * xh[i];
        }
      }
      (*dbeta_)[c] += sum_dy;
      (*dgamma_)[c] += sum_dy_xhat;

      double g = (*gamma_)[c], is = invstd[c];
      if (cache.training) {
        double inv_n = 1.0 / static_cast<double>(n_per_c);
        for (int n = 0; n < N; ++n) {
          const double* dyp = dy.data() + (static_cast<int64_t>(n) * C + c) * plane;
          const double* xh = xhat.data() + (static_cast<int64_t>(n) * C + c) * plane;
          double* dxp = dx.data() + (static_cast<int64_t>(n) * C + c) * plane;
          for (int64_t i = 0; i < plane; ++i)
            dxp[i] = g * is * (dyp[i] - inv_n * sum_dy - xh[i] * inv_n * sum_dy_xhat);
        }
      } else {
        for (int n = 0; n < N; ++n) {
          const double* dyp = dy.data() + (static_cast<int64_t>(n) * C + c) * plane;
          double* dxp = dx.data() + (static_cast<int64_t>(n) * C + c) * plane;
          for (int64_t i = 0; i < plane; ++i) dxp[i] = g * is * dyp[i];
        }
      }
    }
    return dx;
  }

 private:
  static constexpr double kEps = 1e-5;
  Tensor* gamma_ = nullptr;
  Tensor* beta_ = nullptr;
  Tensor* rm_ = nullptr;
  Tensor* rv_ = nullptr;
  Tensor* dgamma_ = nullptr;
  Tensor* dbeta_ = nullptr;
};

class ReluLayer : public Layer {
 public:
  explicit ReluLayer(const LayerSpec& spec) : Layer(spec) {}
  Tensor forward(const Tensor& x, const PassContext&, LayerCache* cache) override {
    Tensor y = x;
    for (int64_t i = 0; i < y.size(); ++i)
      if (y[i] < 0.0) y[i] = 0.0;
    if (cache) cache->input = x;
    return y;
  }
  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    Tensor dx = dy;
    for (int64_t i = 0; i < dx.size(); ++i)
      if (cache.input[i] <= 0.0) dx[i] = 0.0;
    return dx;
  }
};

class LeakyReluLayer : public Layer {
 public:
  explicit LeakyReluLayer(const LayerSpec& spec) : Layer(spec) {}
  Tensor forward(const Tensor& x, const PassContext&, LayerCache* cache) override {
    Tensor y = x;
    for (int64_t i = 0; i < y.size(); ++i)
      if (y[i] < 0.0) y[i] *= spec_.slope;
    if (cache) cache->input = x;
    return y;
  }
  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    Tensor dx = dy;
    for (int64_t i = 0; i < dx.size(); ++i)
      if (cache.input[i] <= 0.0) dx[i] *= spec_.slope;
    return dx;
  }
};

class DropoutLayer : public Layer {
 public:
  explicit DropoutLayer(const LayerSpec& spec) : Layer(spec) {}
  Tensor forward(const Tensor& x, const PassContext& ctx, LayerCache* cache) override {
    if (!ctx.training || spec_.rate <= 0.0) {
      if (cache) cache->a = Tensor();
      return x;
    }
    if (!ctx.rng) throw Error("dropout in training mode requires an rng");
    double keep = 1.0 - spec_.rate;
    Tensor mask(x.shape());
    for (int64_t i = 0; i < mask.size(); ++i)
      mask[i] = ctx.rng->uniform() < keep ? 1.0 / keep : 0.0;
    Tensor y = x;
    for (int64_t i = 0; i < y.size(); ++i) y[i] *= mask[i];
    if (cache) cache->a = std::move(mask);
    return y;
  }
  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    if (cache.a.empty()) return dy;
    Tensor dx = dy;
    for (int64_t i = 0; i < dx.size(); ++i) dx[i] *= cache.a[i];
    return dx;
  }
};

class TanhLayer : public Layer {
 public:
  explicit TanhLayer(const LayerSpec& spec) : Layer(spec) {}
  Tensor forward(const Tensor& x, const PassContext&, LayerCache* cache) override {
    Tensor y = x;
    for (int64_t i = 0; i < y.size(); ++i) y[i] = std::tanh(y[i]);
    if (cache) cache->a = y;
    return y;
  }
  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    Tensor dx = dy;
    for (int64_t i = 0; i < dx.size(); ++i) dx[i] *= 1.0 - cache.a[i] * cache.a[i];
    return dx;
  }
};

class SigmoidLayer : public Layer {
 public:
  explicit SigmoidLayer(const LayerSpec& spec) : Layer(spec) {}
  Tensor forward(const Tensor& x, const PassContext&, LayerCache* cache) override {
    Tensor y = x;
    for (int64_t i = 0; i < y.size(); ++i) y[i] = 1.0 / (1.0 + std::exp(-y[i]));
    if (cache) cache->a = y;
    return y;
  }
  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    Tensor dx = dy;
    for (int64_t i = 0; i < dx.size(); ++i) dx[i] *= cache.a[i] * (1.0 - cache.a[i]);
    return dx;
  }
};

// conv-bn-relu-dropout / conv-bn with an additive skip.
class ResnetBlockLayer : public Layer {
 public:
  explicit ResnetBlockLayer(const LayerSpec& spec) : Layer(spec) {
    int c = spec.channels_out, k = spec.kernel;
    LayerSpec conv{LayerKind::Conv, c, c, k, 1, false, 1, 0.0, 0.0};
    LayerSpec bn{LayerKind::BatchNorm, 0, c, 0, 1, false, 1, 0.0, 0.0};
    LayerSpec relu{LayerKind::ReLU, 0, 0, 0, 1, false, 1, 0.0, 0.0};
    LayerSpec drop{LayerKind::Dropout, 0, 0, 0, 1, false, 1, 0.0, spec.rate};
    sub_.push_back(std::make_unique<ConvLayer>(conv));
    sub_.push_back(std::make_unique<BatchNormLayer>(bn));
    sub_.push_back(std::make_unique<ReluLayer>(relu));
    sub_.push_back(std::make_unique<DropoutLayer>(drop));
    sub_.push_back(std::make_unique<ConvLayer>(conv));
    sub_.push_back(std::make_unique<BatchNormLayer>(bn));
    names_ = {".c1", ".bn1", ".relu", ".drop", ".c2", ".bn2"};
  }

  void init_params(const std::string& prefix, ParamSet& ps, Rng& rng) override {
    for (size_t i = 0; i < sub_.size(); ++i) sub_[i]->init_params(prefix + names_[i], ps, rng);
  }
  void bind(const std::string& prefix, ParamSet& ps) override {
    for (size_t i = 0; i < sub_.size(); ++i) sub_[i]->bind(prefix + names_[i], ps);
  }

  Tensor forward(const Tensor& x, const PassContext& ctx, LayerCache* cache) override {
    if (cache) cache->children.resize(sub_.size());
    Tensor h = x;
    for (size_t i = 0; i < sub_.size(); ++i)
      h = sub_[i]->forward(h, ctx, cache ? &cache->children[i] : nullptr);
    h += x;
    return h;
  }

  Tensor backward(const Tensor& dy, const LayerCache& cache) override {
    Tensor dh = dy;
    for (size_t i = sub_.size(); i-- > 0;) dh = sub_[i]->backward(dh, cache.children[i]);
    dh += dy;  // skip connection
    return dh;
  }

 private:
  std::vector<std::unique_ptr<Layer>> sub_;
  std::vector<std::string> names_;
};

}  // namespace

std::unique_ptr<Layer> make_layer(const LayerSpec& spec) {
  switch (spec.kind) {
    case LayerKind::Conv:
    case LayerKind::GroupedConv:
      return std::make_unique<ConvLayer>(spec);
    case LayerKind::BatchNorm:
      return std::make_unique<BatchNormLayer>(spec);
    case LayerKind::ReLU:
      return std::make_unique<ReluLayer>(spec);
    case LayerKind::LeakyReLU:
      return std::make_unique<LeakyReluLayer>(spec);
    case LayerKind::Dropout:
      return std::make_unique<DropoutLayer>(spec);
    case LayerKind::Tanh:
      return std::make_unique<TanhLayer>(spec);
    case LayerKind::Sigmoid:
      return std::make_unique<SigmoidLayer>(spec);
    case LayerKind::ResnetBlock:
      return std::make_unique<ResnetBlockLayer>(spec);
  }
  throw Error("unknown layer kind");
}

Tensor conv2d_reference(const Tensor& x, const Tensor& w, const Tensor& bias, int stride,
                        int groups) {
  int N = x.dim(0), C = x.dim(1), H = x.dim(2), W = x.dim(3);
  int cout = w.dim(0), k = w.dim(2);
  int p = (k - 1) / 2;
  int OH = out_size_down(H, k, stride), OW = out_size_down(W, k, stride);
  int cing = C / groups, coutg = cout / groups;

  Tensor y({N, cout, OH, OW});
  for (int n = 0; n < N; ++n)
    for (int co = 0; co < cout; ++co) {
      int gi = co / coutg;
      for (int oh = 0; oh < OH; ++oh)
        for (int ow = 0; ow < OW; ++ow) {
          double acc = bias[co];
          for (int ci = 0; ci < cing; ++ci)
            for (int kh = 0; kh < k; ++kh)
              for (int kw = 0; kw < k; ++kw) {
                int yy = oh * stride - p + kh, xx = ow * stride - p + kw;
                if (yy < 0 || yy >= H || xx < 0 || xx >= W) continue;
                acc += w.at(co, ci, kh, kw) * x.at(n, gi * cing + ci, yy, xx);
              }
          y.at(n, co, oh, ow) = acc;
        }
    }
  return y;
}

}  // namespace glyphgan
