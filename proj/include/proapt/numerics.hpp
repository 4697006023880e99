#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "proapt/errors.hpp"

namespace proapt {

// Max-subtracted softmax. Output entries in (0,1), sum 1.
template <class T>
std::vector<T> softmax(const std::vector<T>& v) {
  if (v.empty()) throw ArgumentError("softmax: empty vector");
  T mx = *std::max_element(v.begin(), v.end());
  std::vector<T> out(v.size());
  T sum{};
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i] = std::exp(v[i] - mx);
    sum += out[i];
  }
  for (auto& e : out) e /= sum;
  return out;
}

// d(softmax)/dz pulled back through s = softmax(z):
// dz = s * (ds - <ds, s>)
template <class T>
std::vector<T> softmax_backward(const std::vector<T>& s,
                                const std::vector<T>& ds) {
  T inner{};
  for (std::size_t i = 0; i < s.size(); ++i) inner += ds[i] * s[i];
  std::vector<T> dz(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) dz[i] = s[i] * (ds[i] - inner);
  return dz;
}

template <class T>
T sigmoid(T x) {
  if (x >= T(0)) return T(1) / (T(1) + std::exp(-x));
  T e = std::exp(x);
  return e / (T(1) + e);
}

// loss = (1/n) * sum (q - q_ref)^2 ; dq = (2/n) * (q - q_ref)
template <class T>
std::pair<T, std::vector<T>> mse_loss(const std::vector<T>& q,
                                      const std::vector<T>& q_ref) {
  if (q.size() != q_ref.size())
    throw ArgumentError("mse_loss: length mismatch " +
                        std::to_string(q.size()) + " vs " +
                        std::to_string(q_ref.size()));
  if (q.empty()) throw ArgumentError("mse_loss: empty input");
  T n = static_cast<T>(q.size());
  T loss{};
  std::vector<T> dq(q.size());
  for (std::size_t i = 0; i < q.size(); ++i) {
    T d = q[i] - q_ref[i];
    loss += d * d;
    dq[i] = T(2) / n * d;
  }
  return {loss / n, std::move(dq)};
}

}  // namespace proapt
