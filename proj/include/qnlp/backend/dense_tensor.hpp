// Copyright 2026 The qnlp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <Eigen/Core>
#include <cstddef>
#include <numeric>
#include <vector>

#include "qnlp/errors.hpp"

namespace qnlp {

using Shape = std::vector<std::size_t>;

inline std::size_t shape_size(const Shape& shape) {
  return std::accumulate(shape.begin(), shape.end(), std::size_t{1}, std::multiplies<>());
}

/// Dense tensor with row-major (last index fastest) storage.
template <typename Scalar>
class DenseTensor {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using RowMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

  DenseTensor() : data_(Vector::Ones(1)) {}
  explicit DenseTensor(Shape shape)
      : shape_(std::move(shape)), data_(Vector::Zero(shape_size(shape_))) {}
  DenseTensor(Shape shape, Vector data) : shape_(std::move(shape)), data_(std::move(data)) {
    if (static_cast<std::size_t>(data_.size()) != shape_size(shape_))
      throw ShapeMismatch("tensor data does not match its shape");
  }

  static DenseTensor scalar(Scalar v) {
    Vector d(1);
    d(0) = v;
    return DenseTensor({}, d);
  }

  /// Generalized Kronecker delta: 1 where all indices agree.
  static DenseTensor delta(std::size_t order, std::size_t dim) {
    DenseTensor t(Shape(order, dim));
    if (order == 0) {
      t.data_(0) = Scalar(1);
      return t;
    }
    std::size_t stride = 0;
    for (std::size_t k = 0, s = 1; k < order; ++k, s *= dim) stride += s;
    for (std::size_t i = 0; i < dim; ++i) t.data_(static_cast<Eigen::Index>(i * stride)) = Scalar(1);
    return t;
  }

  const Shape& shape() const { return shape_; }
  std::size_t rank() const { return shape_.size(); }
  std::size_t size() const { return static_cast<std::size_t>(data_.size()); }
  const Vector& data() const { return data_; }
  Vector& data() { return data_; }

  Scalar& operator[](std::size_t flat) { return data_(static_cast<Eigen::Index>(flat)); }
  Scalar operator[](std::size_t flat) const { return data_(static_cast<Eigen::Index>(flat)); }

  Scalar& at(const std::vector<std::size_t>& index) { return data_(flat_index(index)); }
  Scalar at(const std::vector<std::size_t>& index) const { return data_(flat_index(index)); }

  /// View as a (rows x cols) row-major matrix; rows * cols must equal size().
  Eigen::Map<const RowMatrix> matrix(std::size_t rows, std::size_t cols) const {
    return Eigen::Map<const RowMatrix>(data_.data(), static_cast<Eigen::Index>(rows),
                                       static_cast<Eigen::Index>(cols));
  }

  DenseTensor reshaped(Shape shape) const { return DenseTensor(std::move(shape), data_); }

 private:
  Eigen::Index flat_index(const std::vector<std::size_t>& index) const {
    if (index.size() != shape_.size()) throw ShapeMismatch("index rank does not match tensor rank");
    std::size_t flat = 0;
    for (std::size_t k = 0; k < index.size(); ++k) flat = flat * shape_[k] + index[k];
    return static_cast<Eigen::Index>(flat);
  }

  Shape shape_;
  Vector data_;
};

/// Reorders axes: result axis k is input axis perm[k].
template <typename Scalar>
DenseTensor<Scalar> permute(const DenseTensor<Scalar>& t, const std::vector<std::size_t>& perm) {
  const std::size_t r = t.rank();
  if (perm.size() != r) throw ShapeMismatch("permutation rank does not match tensor rank");
  bool identity = true;
  for (std::size_t k = 0; k < r; ++k) identity = identity && perm[k] == k;
  if (identity) return t;

  Shape out_shape(r);
  std::vector<std::size_t> in_strides(r, 1);
  for (std::size_t k = r; k-- > 1;) in_strides[k - 1] = in_strides[k] * t.shape()[k];
  std::vector<std::size_t> strides(r);
  for (std::size_t k = 0; k < r; ++k) {
    out_shape[k] = t.shape()[perm[k]];
    strides[k] = in_strides[perm[k]];
  }
  DenseTensor<Scalar> out(out_shape);
  std::vector<std::size_t> idx(r, 0);
  std::size_t src = 0;
  const std::size_t n = t.size();
  for (std::size_t flat = 0; flat < n; ++flat) {
    out[flat] = t[src];
    for (std::size_t k = r; k-- > 0;) {
      if (++idx[k] < out_shape[k]) {
        src += strides[k];
        break;
      }
      src -= strides[k] * (out_shape[k] - 1);
      idx[k] = 0;
    }
  }
  return out;
}

/// Contracts axes_a of `a` with axes_b of `b` pairwise. The result holds the
/// free axes of `a` followed by the free axes of `b`, each in order.
template <typename Scalar>
DenseTensor<Scalar> tensordot(const DenseTensor<Scalar>& a, const DenseTensor<Scalar>& b,
                              const std::vector<std::size_t>& axes_a,
                              const std::vector<std::size_t>& axes_b) {
  if (axes_a.size() != axes_b.size()) throw ShapeMismatch("tensordot axis lists differ in length");
  std::vector<bool> ca(a.rank(), false), cb(b.rank(), false);
  std::size_t k = 1;
  for (std::size_t i = 0; i < axes_a.size(); ++i) {
    if (a.shape()[axes_a[i]] != b.shape()[axes_b[i]])
      throw ShapeMismatch("tensordot contracts axes of different dimension");
    ca[axes_a[i]] = cb[axes_b[i]] = true;
    k *= a.shape()[axes_a[i]];
  }
  std::vector<std::size_t> pa, pb;
  Shape out_shape;
  std::size_t m = 1, n = 1;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (ca[i]) continue;
    pa.push_back(i);
    out_shape.push_back(a.shape()[i]);
    m *= a.shape()[i];
  }
  pa.insert(pa.end(), axes_a.begin(), axes_a.end());
  pb = axes_b;
  for (std::size_t i = 0; i < b.rank(); ++i) {
    if (cb[i]) continue;
    pb.push_back(i);
    out_shape.push_back(b.shape()[i]);
    n *= b.shape()[i];
  }
  const DenseTensor<Scalar> ta = permute(a, pa);
  const DenseTensor<Scalar> tb = permute(b, pb);
  typename DenseTensor<Scalar>::RowMatrix prod = ta.matrix(m, k) * tb.matrix(k, n);
  typename DenseTensor<Scalar>::Vector flat =
      Eigen::Map<const typename DenseTensor<Scalar>::Vector>(prod.data(), prod.size());
  return DenseTensor<Scalar>(out_shape, flat);
}

/// Sums the diagonal of axes i and j; the remaining axes keep their order.
template <typename Scalar>
DenseTensor<Scalar> trace(const DenseTensor<Scalar>& t, std::size_t i, std::size_t j) {
  if (i == j || t.shape()[i] != t.shape()[j]) throw ShapeMismatch("trace over incompatible axes");
  std::vector<std::size_t> perm;
  Shape rest;
  for (std::size_t k = 0; k < t.rank(); ++k) {
    if (k == i || k == j) continue;
    perm.push_back(k);
    rest.push_back(t.shape()[k]);
  }
  perm.push_back(i);
  perm.push_back(j);
  const DenseTensor<Scalar> p = permute(t, perm);
  const std::size_t d = t.shape()[i];
  const std::size_t m = shape_size(rest);
  auto mat = p.matrix(m, d * d);
  typename DenseTensor<Scalar>::Vector out = DenseTensor<Scalar>::Vector::Zero(static_cast<Eigen::Index>(m));
  for (std::size_t a = 0; a < d; ++a) out += mat.col(static_cast<Eigen::Index>(a * d + a));
  return DenseTensor<Scalar>(rest, out);
}

}  // namespace qnlp
