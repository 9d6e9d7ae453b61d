#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "triet/errors.hpp"
#include "triet/rational.hpp"

namespace triet {

/** Dense integer matrix, sized for incidence data (2 or 3 rows). */
class IntMatrix {
 public:
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols, BigInt(0)) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const BigInt& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw InvalidParameters("matrix shapes do not match");
    IntMatrix r(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        const BigInt& v = x.at(i, k);
        if (v == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) r.at(i, j) += v * y.at(k, j);
      }
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix pow(unsigned k) const {
    if (rows_ != cols_) throw InvalidParameters("power of a non-square matrix");
    IntMatrix r = identity(rows_);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
  }

  bool all_positive() const {
    for (const BigInt& v : e_)
      if (v <= 0) return false;
    return true;
  }

  /** Row major rendering, e.g. "[[0,1,0],[2,0,1],[1,0,0]]". */
  std::string str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
      s += i ? ",[" : "[";
      for (std::size_t j = 0; j < cols_; ++j) {
        if (j) s += ",";
        s += at(i, j).str();
      }
      s += "]";
    }
    return s + "]";
  }

 private:
  std::size_t rows_, cols_;
  std::vector<BigInt> e_;
};

}  // namespace triet
