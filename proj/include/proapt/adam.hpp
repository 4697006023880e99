#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "proapt/errors.hpp"
#include "proapt/kernels.hpp"

namespace proapt {

// Bias-corrected Adam over a fixed parameter-tensor order. Moments are one
// flat buffer; spans must be passed in the same order every step.
template <class T>
struct AdamState {
  std::vector<T> m, v;
  std::uint64_t t = 0;
  T beta1 = T(0.9);
  T beta2 = T(0.999);
  T eps = T(1e-8);

  AdamState() = default;
  explicit AdamState(std::size_t n_params) : m(n_params, T{}), v(n_params, T{}) {}
};

template <class T>
void adam_step(std::vector<std::span<T>> params,
               std::vector<std::span<T>> grads, AdamState<T>& state, T lr) {
  if (lr <= T(0)) throw ArgumentError("adam_step: lr must be > 0");
  if (params.size() != grads.size())
    throw ShapeError("adam_step: " + std::to_string(params.size()) +
                     " param tensors vs " + std::to_string(grads.size()) +
                     " grad tensors");
  std::size_t total = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (params[i].size() != grads[i].size())
      throw ShapeError("adam_step: tensor " + std::to_string(i) + " shape " +
                       std::to_string(params[i].size()) + " vs grad " +
                       std::to_string(grads[i].size()));
    total += params[i].size();
  }
  if (state.m.size() != total)
    throw ShapeError("adam_step: moment size " + std::to_string(state.m.size()) +
                     " vs param count " + std::to_string(total));

  state.t += 1;
  T bc1 = T(1) - static_cast<T>(std::pow(static_cast<double>(state.beta1),
                                         static_cast<double>(state.t)));
  T bc2 = T(1) - static_cast<T>(std::pow(static_cast<double>(state.beta2),
                                         static_cast<double>(state.t)));
  std::size_t off = 0;
  for (std::size_t i = 0; i < params.size(); ++i) {
    kern::adam_update(params[i].data(), grads[i].data(), state.m.data() + off,
                      state.v.data() + off, params[i].size(), lr, state.beta1,
                      state.beta2, state.eps, bc1, bc2);
    off += params[i].size();
  }
}

}  // namespace proapt
