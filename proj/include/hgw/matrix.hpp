#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace hgw {

/// Dense row-major matrix. Element type is either int (0/1 adjacency
/// counts) or Rat; all arithmetic stays exact.
template <class T>
class Mat {
 public:
  Mat() = default;

  Mat(int rows, int cols, T init = T{})
      : rows_(rows),
        cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), init) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  T& operator()(int r, int c) { return data_[idx(r, c)]; }
  const T& operator()(int r, int c) const { return data_[idx(r, c)]; }

  Mat operator*(const Mat& rhs) const {
    if (cols_ != rhs.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Mat out(rows_, rhs.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == T{}) continue;
        for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
      }
    }
    return out;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

 private:
  std::size_t idx(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) +
           static_cast<std::size_t>(c);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

}  // namespace hgw
