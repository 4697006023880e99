#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops of the trainer. Every primitive exists as a
// scalar reference kernel (proapt::kern::scalar) and, on x86 hosts with
// AVX2+FMA, as a vectorized variant. The dispatched entry points below pick
// the widest supported implementation once at startup; the PROAPT_ISA
// environment variable ("scalar" | "avx2" | "auto") or set_isa() override
// the choice. Scalar and SIMD variants are equivalence-tested against each
// other; each path on its own is bit-deterministic.

namespace proapt::kern {

namespace scalar {

template <class T>
T dot(const T* x, const T* y, std::size_t n) {
  T acc{};
  for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
  return acc;
}

// y += a * x
template <class T>
void axpy(T a, const T* x, T* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <class T>
void add(const T* x, const T* y, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] + y[i];
}

template <class T>
void sub(const T* x, const T* y, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] - y[i];
}

template <class T>
void hadamard(const T* x, const T* y, T* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = x[i] * y[i];
}

template <class T>
void scale(T a, T* x, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

// One bias-corrected Adam update over a flat span.
// m <- b1 m + (1-b1) g ; v <- b2 v + (1-b2) g^2 ;
// p -= lr * (m / bc1) / (sqrt(v / bc2) + eps)
template <class T>
void adam_update(T* p, const T* g, T* m, T* v, std::size_t n, T lr, T b1, T b2,
                 T eps, T bc1, T bc2);

}  // namespace scalar

// Dispatched entry points (scalar or AVX2, chosen at runtime).
float dot(const float* x, const float* y, std::size_t n);
double dot(const double* x, const double* y, std::size_t n);
void axpy(float a, const float* x, float* y, std::size_t n);
void axpy(double a, const double* x, double* y, std::size_t n);
void add(const float* x, const float* y, float* out, std::size_t n);
void add(const double* x, const double* y, double* out, std::size_t n);
void sub(const float* x, const float* y, float* out, std::size_t n);
void sub(const double* x, const double* y, double* out, std::size_t n);
void hadamard(const float* x, const float* y, float* out, std::size_t n);
void hadamard(const double* x, const double* y, double* out, std::size_t n);
void scale(float a, float* x, std::size_t n);
void scale(double a, double* x, std::size_t n);
void adam_update(float* p, const float* g, float* m, float* v, std::size_t n,
                 float lr, float b1, float b2, float eps, float bc1, float bc2);
void adam_update(double* p, const double* g, double* m, double* v,
                 std::size_t n, double lr, double b1, double b2, double eps,
                 double bc1, double bc2);

// Name of the active implementation: "scalar" or "avx2".
std::string_view active_isa();

// Force an implementation ("scalar", "avx2", "auto"). Returns false when the
// requested ISA is unavailable on this host. Not thread-safe; test hook.
bool set_isa(std::string_view name);

// True when the binary carries AVX2 kernels and the CPU supports them.
bool avx2_available();

// ---- Composites built on the dispatched primitives ----

// y = A x, A row-major (rows x cols).
template <class T>
void gemv(const T* a, std::size_t rows, std::size_t cols, const T* x, T* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] = dot(a + r * cols, x, cols);
}

// y += A x
template <class T>
void gemv_add(const T* a, std::size_t rows, std::size_t cols, const T* x,
              T* y) {
  for (std::size_t r = 0; r < rows; ++r) y[r] += dot(a + r * cols, x, cols);
}

// y += A^T x, A row-major (rows x cols), x has rows entries, y has cols.
template <class T>
void gemv_t_add(const T* a, std::size_t rows, std::size_t cols, const T* x,
                T* y) {
  for (std::size_t r = 0; r < rows; ++r) axpy(x[r], a + r * cols, y, cols);
}

// A += u v^T, A row-major (m x n).
template <class T>
void outer_add(const T* u, std::size_t m, const T* v, std::size_t n, T* a) {
  for (std::size_t i = 0; i < m; ++i) axpy(u[i], v, a + i * n, n);
}

}  // namespace proapt::kern
