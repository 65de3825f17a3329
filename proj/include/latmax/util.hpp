#ifndef LATMAX_UTIL_HPP
#define LATMAX_UTIL_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace latmax {

/// Dense row-major 2-d array.
template <typename T>
class Array2 {
 public:
  Array2() : d0_(0), d1_(0) {}
  Array2(int d0, int d1, const T& init = T()) : d0_(d0), d1_(d1), v_(std::size_t(d0) * d1, init) {}

  T& at(int i, int j) {
    assert(i >= 0 && i < d0_ && j >= 0 && j < d1_);
    return v_[std::size_t(i) * d1_ + j];
  }
  const T& at(int i, int j) const { return const_cast<Array2*>(this)->at(i, j); }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  bool empty() const { return v_.empty(); }

 private:
  int d0_, d1_;
  std::vector<T> v_;
};

/// Dense row-major 3-d array.
template <typename T>
class Array3 {
 public:
  Array3() : d0_(0), d1_(0), d2_(0) {}
  Array3(int d0, int d1, int d2, const T& init = T())
      : d0_(d0), d1_(d1), d2_(d2), v_(std::size_t(d0) * d1 * d2, init) {}

  T& at(int i, int j, int k) {
    assert(i >= 0 && i < d0_ && j >= 0 && j < d1_ && k >= 0 && k < d2_);
    return v_[(std::size_t(i) * d1_ + j) * d2_ + k];
  }
  const T& at(int i, int j, int k) const { return const_cast<Array3*>(this)->at(i, j, k); }

  int dim0() const { return d0_; }
  int dim1() const { return d1_; }
  int dim2() const { return d2_; }
  bool empty() const { return v_.empty(); }

 private:
  int d0_, d1_, d2_;
  std::vector<T> v_;
};

}  // namespace latmax

#endif
