#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "proapt/errors.hpp"
#include "proapt/kernels.hpp"

namespace proapt {

// Dense row-major matrix. Double in tests/oracles, float in training.
template <class T>
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, T{}) {}
  Matrix(std::size_t r, std::size_t c, std::vector<T> d)
      : rows(r), cols(c), data(std::move(d)) {
    if (data.size() != rows * cols)
      throw ShapeError("matrix data length " + std::to_string(data.size()) +
                       " != " + std::to_string(rows) + "x" +
                       std::to_string(cols));
  }

  T& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const T& at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::size_t size() const { return data.size(); }

  bool operator==(const Matrix& o) const {
    return rows == o.rows && cols == o.cols && data == o.data;
  }
};

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols != b.rows)
    throw ShapeError("matmul shape mismatch: " + std::to_string(a.rows) + "x" +
                     std::to_string(a.cols) + " * " + std::to_string(b.rows) +
                     "x" + std::to_string(b.cols));
  Matrix<T> c(a.rows, b.cols);
  for (std::size_t i = 0; i < a.rows; ++i)
    for (std::size_t k = 0; k < a.cols; ++k)
      kern::axpy(a.at(i, k), b.data.data() + k * b.cols,
                 c.data.data() + i * b.cols, b.cols);
  return c;
}

template <class T>
Matrix<T> identity(std::size_t n) {
  Matrix<T> m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = T(1);
  return m;
}

}  // namespace proapt
