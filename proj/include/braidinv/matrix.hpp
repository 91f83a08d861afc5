#pragma once

#include <vector>

#include "braidinv/errors.hpp"
#include "braidinv/laurent.hpp"

namespace braidinv {

// Square matrix over an exact ring.  Immutable in practice: built once,
// then only multiplied and traced.
template <class R>
class Matrix {
 public:
  explicit Matrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, R(0)) {
    if (n < 1) throw internal_error("matrix dimension must be positive");
  }

  static Matrix identity(int n) {
    Matrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = R(1);
    return m;
  }

  int size() const { return n_; }
  R &at(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  const R &at(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  Matrix operator*(const Matrix &o) const {
    if (o.n_ != n_) throw internal_error("matrix dimension mismatch");
    Matrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) {
        R acc = R(0);
        for (int k = 0; k < n_; ++k) fma(acc, at(i, k), o.at(k, j));
        out.at(i, j) = std::move(acc);
      }
    return out;
  }

  R trace() const {
    R s = R(0);
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
  }

  // trace(*this * o) without forming the product.
  R trace_of_product(const Matrix &o) const {
    if (o.n_ != n_) throw internal_error("matrix dimension mismatch");
    R s = R(0);
    for (int i = 0; i < n_; ++i)
      for (int k = 0; k < n_; ++k) fma(s, at(i, k), o.at(k, i));
    return s;
  }

  bool operator==(const Matrix &) const = default;

 private:
  int n_;
  std::vector<R> a_;
};

}  // namespace braidinv
