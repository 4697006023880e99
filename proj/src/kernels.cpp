#include "proapt/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace proapt::kern {

namespace scalar {

template <class T>
void adam_update(T* p, const T* g, T* m, T* v, std::size_t n, T lr, T b1, T b2,
                 T eps, T bc1, T bc2) {
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = b1 * m[i] + (T(1) - b1) * g[i];
    v[i] = b2 * v[i] + (T(1) - b2) * g[i] * g[i];
    T mhat = m[i] / bc1;
    T vhat = v[i] / bc2;
    p[i] -= lr * mhat / (std::sqrt(vhat) + eps);
  }
}

template void adam_update<float>(float*, const float*, float*, float*,
                                 std::size_t, float, float, float, float,
                                 float, float);
template void adam_update<double>(double*, const double*, double*, double*,
                                  std::size_t, double, double, double, double,
                                  double, double);

}  // namespace scalar

#if defined(PROAPT_HAVE_AVX2)
namespace avx2 {
float dot_f(const float*, const float*, std::size_t);
double dot_d(const double*, const double*, std::size_t);
void axpy_f(float, const float*, float*, std::size_t);
void axpy_d(double, const double*, double*, std::size_t);
void add_f(const float*, const float*, float*, std::size_t);
void add_d(const double*, const double*, double*, std::size_t);
void sub_f(const float*, const float*, float*, std::size_t);
void sub_d(const double*, const double*, double*, std::size_t);
void hadamard_f(const float*, const float*, float*, std::size_t);
void hadamard_d(const double*, const double*, double*, std::size_t);
void scale_f(float, float*, std::size_t);
void scale_d(double, double*, std::size_t);
void adam_update_f(float*, const float*, float*, float*, std::size_t, float,
                   float, float, float, float, float);
void adam_update_d(double*, const double*, double*, double*, std::size_t,
                   double, double, double, double, double, double);
bool cpu_supported();
}  // namespace avx2
#endif

namespace {

struct Table {
  float (*dot_f)(const float*, const float*, std::size_t);
  double (*dot_d)(const double*, const double*, std::size_t);
  void (*axpy_f)(float, const float*, float*, std::size_t);
  void (*axpy_d)(double, const double*, double*, std::size_t);
  void (*add_f)(const float*, const float*, float*, std::size_t);
  void (*add_d)(const double*, const double*, double*, std::size_t);
  void (*sub_f)(const float*, const float*, float*, std::size_t);
  void (*sub_d)(const double*, const double*, double*, std::size_t);
  void (*hadamard_f)(const float*, const float*, float*, std::size_t);
  void (*hadamard_d)(const double*, const double*, double*, std::size_t);
  void (*scale_f)(float, float*, std::size_t);
  void (*scale_d)(double, double*, std::size_t);
  void (*adam_f)(float*, const float*, float*, float*, std::size_t, float,
                 float, float, float, float, float);
  void (*adam_d)(double*, const double*, double*, double*, std::size_t, double,
                 double, double, double, double, double);
  const char* name;
};

constexpr Table scalar_table() {
  return Table{&scalar::dot<float>,      &scalar::dot<double>,
               &scalar::axpy<float>,     &scalar::axpy<double>,
               &scalar::add<float>,      &scalar::add<double>,
               &scalar::sub<float>,      &scalar::sub<double>,
               &scalar::hadamard<float>, &scalar::hadamard<double>,
               &scalar::scale<float>,    &scalar::scale<double>,
               &scalar::adam_update<float>, &scalar::adam_update<double>,
               "scalar"};
}

#if defined(PROAPT_HAVE_AVX2)
Table avx2_table() {
  return Table{&avx2::dot_f,      &avx2::dot_d,      &avx2::axpy_f,
               &avx2::axpy_d,     &avx2::add_f,      &avx2::add_d,
               &avx2::sub_f,      &avx2::sub_d,      &avx2::hadamard_f,
               &avx2::hadamard_d, &avx2::scale_f,    &avx2::scale_d,
               &avx2::adam_update_f, &avx2::adam_update_d, "avx2"};
}
#endif

Table pick(std::string_view want) {
#if defined(PROAPT_HAVE_AVX2)
  bool have = avx2::cpu_supported();
  if (want == "avx2" && have) return avx2_table();
  if (want == "auto" && have) return avx2_table();
#else
  (void)want;
#endif
  return scalar_table();
}

Table init_table() {
  const char* env = std::getenv("PROAPT_ISA");
  return pick(env ? std::string_view(env) : std::string_view("auto"));
}

Table g_tab = init_table();

}  // namespace

float dot(const float* x, const float* y, std::size_t n) {
  return g_tab.dot_f(x, y, n);
}
double dot(const double* x, const double* y, std::size_t n) {
  return g_tab.dot_d(x, y, n);
}
void axpy(float a, const float* x, float* y, std::size_t n) {
  g_tab.axpy_f(a, x, y, n);
}
void axpy(double a, const double* x, double* y, std::size_t n) {
  g_tab.axpy_d(a, x, y, n);
}
void add(const float* x, const float* y, float* out, std::size_t n) {
  g_tab.add_f(x, y, out, n);
}
void add(const double* x, const double* y, double* out, std::size_t n) {
  g_tab.add_d(x, y, out, n);
}
void sub(const float* x, const float* y, float* out, std::size_t n) {
  g_tab.sub_f(x, y, out, n);
}
void sub(const double* x, const double* y, double* out, std::size_t n) {
  g_tab.sub_d(x, y, out, n);
}
void hadamard(const float* x, const float* y, float* out, std::size_t n) {
  g_tab.hadamard_f(x, y, out, n);
}
void hadamard(const double* x, const double* y, double* out, std::size_t n) {
  g_tab.hadamard_d(x, y, out, n);
}
void scale(float a, float* x, std::size_t n) { g_tab.scale_f(a, x, n); }
void scale(double a, double* x, std::size_t n) { g_tab.scale_d(a, x, n); }
void adam_update(float* p, const float* g, float* m, float* v, std::size_t n,
                 float lr, float b1, float b2, float eps, float bc1,
                 float bc2) {
  g_tab.adam_f(p, g, m, v, n, lr, b1, b2, eps, bc1, bc2);
}
void adam_update(double* p, const double* g, double* m, double* v,
                 std::size_t n, double lr, double b1, double b2, double eps,
                 double bc1, double bc2) {
  g_tab.adam_d(p, g, m, v, n, lr, b1, b2, eps, bc1, bc2);
}

std::string_view active_isa() { return g_tab.name; }

bool set_isa(std::string_view name) {
  if (name == "scalar") {
    g_tab = scalar_table();
    return true;
  }
  if (name == "avx2") {
#if defined(PROAPT_HAVE_AVX2)
    if (avx2::cpu_supported()) {
      g_tab = avx2_table();
      return true;
    }
#endif
    return false;
  }
  if (name == "auto") {
    g_tab = pick("auto");
    return true;
  }
  return false;
}

bool avx2_available() {
#if defined(PROAPT_HAVE_AVX2)
  return avx2::cpu_supported();
#else
  return false;
#endif
}

}  // namespace proapt::kern
