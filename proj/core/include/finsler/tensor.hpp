#pragma once

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

namespace finsler {

/// Dense rank-r coordinate tensor with n entries per slot, r <= 4.
template <class T>
class Tensor {
 public:
  Tensor() = default;
  Tensor(int n, int rank) : n_(n), rank_(rank), v_(static_cast<std::size_t>(size_of(n, rank))) {}

  int n() const { return n_; }
  int rank() const { return rank_; }

  T& operator()(int i) { return v_[idx1(i)]; }
  const T& operator()(int i) const { return v_[idx1(i)]; }
  T& operator()(int i, int j) { return v_[idx2(i, j)]; }
  const T& operator()(int i, int j) const { return v_[idx2(i, j)]; }
  T& operator()(int i, int j, int k) { return v_[idx3(i, j, k)]; }
  const T& operator()(int i, int j, int k) const { return v_[idx3(i, j, k)]; }
  T& operator()(int i, int j, int k, int l) { return v_[idx4(i, j, k, l)]; }
  const T& operator()(int i, int j, int k, int l) const { return v_[idx4(i, j, k, l)]; }

  std::span<T> flat() { return v_; }
  std::span<const T> flat() const { return v_; }

 private:
  static long size_of(int n, int rank) {
    long s = 1;
    for (int r = 0; r < rank; ++r) s *= n;
    return s;
  }
  std::size_t idx1(int i) const {
    assert(rank_ == 1);
    return static_cast<std::size_t>(i);
  }
  std::size_t idx2(int i, int j) const {
    assert(rank_ == 2);
    return static_cast<std::size_t>(i * n_ + j);
  }
  std::size_t idx3(int i, int j, int k) const {
    assert(rank_ == 3);
    return static_cast<std::size_t>((i * n_ + j) * n_ + k);
  }
  std::size_t idx4(int i, int j, int k, int l) const {
    assert(rank_ == 4);
    return static_cast<std::size_t>(((i * n_ + j) * n_ + k) * n_ + l);
  }

  int n_ = 0;
  int rank_ = 0;
  std::vector<T> v_;
};

inline double max_abs(const Tensor<double>& t) {
  double m = 0.0;
  for (double v : t.flat()) m = std::max(m, std::abs(v));
  return m;
}

inline Tensor<double> tensor_diff(const Tensor<double>& a, const Tensor<double>& b) {
  Tensor<double> out = a;
  auto fa = out.flat();
  auto fb = b.flat();
  for (std::size_t i = 0; i < fa.size(); ++i) fa[i] -= fb[i];
  return out;
}

/// Dense tensor value plus the declared index symmetries and y-homogeneity
/// degree of the quantity it stores.
struct TensorBlock {
  Tensor<double> values;
  std::vector<std::vector<int>> symmetric_groups;  // slot groups, 0-based
  int homogeneity = 0;

  int rank() const { return values.rank(); }
  int n() const { return values.n(); }
  double max_norm() const { return max_abs(values); }
};

/// Averages a rank-3 tensor over all six slot permutations.
Tensor<double> symmetrize3(const Tensor<double>& t);

}  // namespace finsler
