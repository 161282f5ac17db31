#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "crsym/poly.hpp"
#include "crsym/scalar.hpp"

namespace crsym {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over Scalar or Poly.
template <class T>
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Mat identity(std::size_t n) {
    Mat m(n, n);
    for (std::size_t k = 0; k < n; ++k) m(k, k) = T(1);
    return m;
  }

  static Mat diagonal(const std::vector<T>& d) {
    Mat m(d.size(), d.size());
    for (std::size_t k = 0; k < d.size(); ++k) m(k, k) = d[k];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> column(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  bool is_zero() const {
    for (const auto& e : data_)
      if (!crsym::is_zero(e)) return false;
    return true;
  }

  T trace() const {
    require_square("trace");
    T t;
    for (std::size_t k = 0; k < rows_; ++k) t += (*this)(k, k);
    return t;
  }

  Mat transpose() const {
    Mat m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
    return m;
  }

  Mat& operator+=(const Mat& o) {
    require_same(o, "addition");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  Mat& operator-=(const Mat& o) {
    require_same(o, "subtraction");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  Mat& operator*=(const T& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend Mat operator+(Mat a, const Mat& b) { return a += b; }
  friend Mat operator-(Mat a, const Mat& b) { return a -= b; }
  friend Mat operator-(Mat a) {
    for (auto& e : a.data_) e = -e;
    return a;
  }
  friend Mat operator*(const T& s, Mat a) { return a *= s; }
  friend Mat operator*(Mat a, const T& s) { return a *= s; }

  friend Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_)
      throw DimensionError("product of " + a.shape() + " and " + b.shape());
    Mat m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(r, k);
        if (crsym::is_zero(x)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) m(r, c) += x * b(k, c);
      }
    return m;
  }

  friend bool operator==(const Mat& a, const Mat& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

  std::string shape() const { return std::to_string(rows_) + "x" + std::to_string(cols_); }

  void require_square(const char* what) const {
    if (!is_square()) throw DimensionError(std::string(what) + " needs a square matrix, got " + shape());
  }

 private:
  void require_same(const Mat& o, const char* what) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
      throw DimensionError(std::string(what) + " of " + shape() + " and " + o.shape());
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using SMat = Mat<Scalar>;
using PMat = Mat<Poly>;

template <class T>
Mat<T> bracket(const Mat<T>& a, const Mat<T>& b) {
  a.require_square("bracket");
  b.require_square("bracket");
  if (a.rows() != b.rows()) throw DimensionError("bracket of " + a.shape() + " and " + b.shape());
  return a * b - b * a;
}

template <class T>
Mat<T> conj_transpose(const Mat<T>& a) {
  Mat<T> m(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(c, r) = conj(a(r, c));
  return m;
}

template <class T>
Mat<T> entrywise_re(const Mat<T>& a) {
  Mat<T> m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = re(a(r, c));
  return m;
}

template <class T>
Mat<T> entrywise_im(const Mat<T>& a) {
  Mat<T> m(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = im(a(r, c));
  return m;
}

PMat to_poly(const SMat& m);
// Throws if any entry still contains unknowns.
SMat to_scalar(const PMat& m);
SMat evaluate(const PMat& m, const Assignment& a);
PMat substitute(const PMat& m, const std::map<std::string, Poly>& subs);

// Matrix unit E_rc (0-indexed) of size n.
SMat unit(std::size_t n, std::size_t r, std::size_t c, const Scalar& v = Scalar(1));

std::string to_string(const SMat& m);
std::string to_string(const PMat& m);

}  // namespace crsym
