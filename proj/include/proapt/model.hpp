#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

#include "proapt/errors.hpp"
#include "proapt/qnet.hpp"
#include "proapt/rng.hpp"

namespace proapt {

// Main/target network pair. The target is refreshed from the main every
// `sync_period` learning rounds.
template <class T>
struct NetworkPair {
  QNetwork<T> main;
  QNetwork<T> target;
  std::size_t rounds_since_sync = 0;
  std::size_t sync_period = 100;
};

// Seeded init: every parameter uniform in [-1/sqrt(hidden), +1/sqrt(hidden)]
// except the forget-gate bias, which starts at 1. Draw order equals the
// canonical param order, so identical seeds give identical networks.
template <class T>
QNetwork<T> build_network(std::size_t input_size, std::size_t hidden_size,
                          std::size_t n_actions, std::uint64_t seed) {
  if (input_size == 0 || hidden_size == 0 || n_actions == 0)
    throw ArgumentError("build_network: all sizes must be >= 1");
  QNetwork<T> net(input_size, hidden_size, n_actions);
  const double bound = 1.0 / std::sqrt(static_cast<double>(hidden_size));
  Rng rng(seed);
  for (auto span : net.param_views())
    for (auto& w : span) w = static_cast<T>(rng.uniform_range(-bound, bound));
  for (auto& b : net.lstm.b_forget) b = T(1);
  return net;
}

template <class T>
NetworkPair<T> build_pair(std::size_t input_size, std::size_t hidden_size,
                          std::size_t n_actions, std::uint64_t seed,
                          std::size_t sync_period) {
  NetworkPair<T> pair;
  pair.main = build_network<T>(input_size, hidden_size, n_actions, seed);
  pair.target = pair.main;
  pair.sync_period = sync_period;
  return pair;
}

// Copies every main parameter into the target (deep copy) and resets the
// round counter. Idempotent.
template <class T>
void sync_target(NetworkPair<T>& pair) {
  pair.target = pair.main;
  pair.rounds_since_sync = 0;
}

}  // namespace proapt
