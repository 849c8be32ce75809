#ifndef POLARIS_MATRIX_HPP
#define POLARIS_MATRIX_HPP

#include "polaris/numeric.hpp"

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace polaris {

/// Dense square matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), a_(n * n) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows) : n_(rows.size()), a_() {
    a_.reserve(n_ * n_);
    for (const auto& r : rows) {
      if (r.size() != n_) throw std::invalid_argument("matrix rows must form a square");
      a_.insert(a_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  friend Matrix operator*(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    Matrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        const Rational& xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }
  friend Matrix operator+(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] += y.a_[i];
    return x;
  }
  friend Matrix operator-(Matrix x, const Matrix& y) {
    for (std::size_t i = 0; i < x.a_.size(); ++i) x.a_[i] -= y.a_[i];
    return x;
  }

  Matrix transpose() const {
    Matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Rational trace() const {
    Rational t = 0;
    for (std::size_t i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
  }

  /// Gauss-Jordan inverse; std::nullopt when singular.
  std::optional<Matrix> inverse() const {
    Matrix w = *this;
    Matrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && w(piv, col) == 0) ++piv;
      if (piv == n_) return std::nullopt;
      if (piv != col)
        for (std::size_t j = 0; j < n_; ++j) {
          std::swap(w(piv, j), w(col, j));
          std::swap(inv(piv, j), inv(col, j));
        }
      Rational p = w(col, col);
      for (std::size_t j = 0; j < n_; ++j) {
        w(col, j) /= p;
        inv(col, j) /= p;
      }
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == col || w(i, col) == 0) continue;
        Rational f = w(i, col);
        for (std::size_t j = 0; j < n_; ++j) {
          w(i, j) -= f * w(col, j);
          inv(i, j) -= f * inv(col, j);
        }
      }
    }
    return inv;
  }

  Rational determinant() const {
    Matrix w = *this;
    Rational det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t piv = col;
      while (piv < n_ && w(piv, col) == 0) ++piv;
      if (piv == n_) return 0;
      if (piv != col) {
        for (std::size_t j = 0; j < n_; ++j) std::swap(w(piv, j), w(col, j));
        det = -det;
      }
      det *= w(col, col);
      for (std::size_t i = col + 1; i < n_; ++i) {
        if (w(i, col) == 0) continue;
        Rational f = w(i, col) / w(col, col);
        for (std::size_t j = col; j < n_; ++j) w(i, j) -= f * w(col, j);
      }
    }
    return det;
  }

  bool is_identity() const { return *this == identity(n_); }

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend bool operator<(const Matrix& x, const Matrix& y) {
    if (x.n_ != y.n_) return x.n_ < y.n_;
    return x.a_ < y.a_;
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < n_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < n_; ++j) s += (j ? "," : "") + to_string((*this)(i, j));
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

/// Block-diagonal sum of square matrices.
inline Matrix direct_sum(const std::vector<Matrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.size();
  Matrix r(n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) r(off + i, off + j) = b(i, j);
    off += b.size();
  }
  return r;
}

}  // namespace polaris

#endif  // POLARIS_MATRIX_HPP
