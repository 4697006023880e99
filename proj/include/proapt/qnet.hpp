#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "proapt/errors.hpp"
#include "proapt/kernels.hpp"
#include "proapt/lstm.hpp"

namespace proapt {

// Fig-8 wiring: the LSTM hidden vector is softmax-normalized before the
// fully-connected layer. `None` skips the softmax (ablation).
enum class SoftmaxPosition { PreFc, None };

template <class T>
struct DenseParams {
  Matrix<T> w;        // n_actions x hidden
  std::vector<T> b;   // n_actions

  DenseParams() = default;
  DenseParams(std::size_t hidden, std::size_t n_actions)
      : w(n_actions, hidden), b(n_actions, T{}) {}
};

// LSTM -> (softmax) -> dense value head. One Q-value per action.
template <class T>
struct QNetwork {
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;
  std::size_t n_actions = 0;
  SoftmaxPosition softmax_position = SoftmaxPosition::PreFc;
  LstmParams<T> lstm;
  DenseParams<T> dense;

  QNetwork() = default;
  QNetwork(std::size_t in, std::size_t hidden, std::size_t actions)
      : input_size(in),
        hidden_size(hidden),
        n_actions(actions),
        lstm(in, hidden),
        dense(hidden, actions) {}

  // Parameter tensors in the canonical order shared by initialization,
  // Adam state, gradients, and checkpoints:
  //   w_in u_in b_in | w_forget u_forget b_forget | w_out u_out b_out |
  //   w_cand u_cand b_cand | dense.w dense.b
  std::vector<std::span<T>> param_views() {
    return {std::span<T>(lstm.w_in.data),     std::span<T>(lstm.u_in.data),
            std::span<T>(lstm.b_in),          std::span<T>(lstm.w_forget.data),
            std::span<T>(lstm.u_forget.data), std::span<T>(lstm.b_forget),
            std::span<T>(lstm.w_out.data),    std::span<T>(lstm.u_out.data),
            std::span<T>(lstm.b_out),         std::span<T>(lstm.w_cand.data),
            std::span<T>(lstm.u_cand.data),   std::span<T>(lstm.b_cand),
            std::span<T>(dense.w.data),       std::span<T>(dense.b)};
  }

  std::size_t param_count() {
    std::size_t n = 0;
    for (auto s : param_views()) n += s.size();
    return n;
  }
};

template <class T>
struct QNetGrads {
  LstmGrads<T> lstm;
  Matrix<T> dense_w;
  std::vector<T> dense_b;

  QNetGrads() = default;
  explicit QNetGrads(const QNetwork<T>& net)
      : lstm(net.lstm),
        dense_w(net.n_actions, net.hidden_size),
        dense_b(net.n_actions, T{}) {}

  std::vector<std::span<T>> param_views() {
    return {std::span<T>(lstm.w_in.data),     std::span<T>(lstm.u_in.data),
            std::span<T>(lstm.b_in),          std::span<T>(lstm.w_forget.data),
            std::span<T>(lstm.u_forget.data), std::span<T>(lstm.b_forget),
            std::span<T>(lstm.w_out.data),    std::span<T>(lstm.u_out.data),
            std::span<T>(lstm.b_out),         std::span<T>(lstm.w_cand.data),
            std::span<T>(lstm.u_cand.data),   std::span<T>(lstm.b_cand),
            std::span<T>(dense_w.data),       std::span<T>(dense_b)};
  }
};

template <class T>
struct QnetStepCache {
  LstmCellCache<T> cell;
  std::vector<T> h;  // cell output
  std::vector<T> s;  // dense input (softmax(h) or h itself)
  std::vector<T> q;
};

template <class T>
struct QnetCache {
  std::vector<QnetStepCache<T>> steps;
};

// Carried recurrent state for streaming (per-record) prediction.
template <class T>
struct HiddenState {
  std::vector<T> h, c;

  HiddenState() = default;
  explicit HiddenState(std::size_t hidden) : h(hidden, T{}), c(hidden, T{}) {}
  void reset() {
    std::fill(h.begin(), h.end(), T{});
    std::fill(c.begin(), c.end(), T{});
  }
};

// One step: advances the hidden state, returns the q-vector. Appends the
// step cache when `cache` is non-null.
template <class T>
std::vector<T> qnet_step(const QNetwork<T>& net, const std::vector<T>& x,
                         HiddenState<T>& state, QnetCache<T>* cache = nullptr) {
  if (x.size() != net.input_size)
    throw ShapeError("qnet input length " + std::to_string(x.size()) +
                     " != input_size " + std::to_string(net.input_size));
  auto cell = lstm_cell_forward(x, state.h, state.c, net.lstm);
  state.h = cell.h;
  state.c = cell.c;

  std::vector<T> s = net.softmax_position == SoftmaxPosition::PreFc
                         ? softmax(cell.h)
                         : cell.h;
  std::vector<T> q = net.dense.b;
  kern::gemv_add(net.dense.w.data.data(), net.n_actions, net.hidden_size,
                 s.data(), q.data());
  if (cache) {
    QnetStepCache<T> sc;
    sc.cell = std::move(cell.cache);
    sc.h = cell.h;
    sc.s = std::move(s);
    sc.q = q;
    cache->steps.push_back(std::move(sc));
  }
  return q;
}

// Runs the whole sequence from a zero hidden state. One q-vector per
// position; hidden state carried across positions.
template <class T>
std::vector<std::vector<T>> qnet_forward(const QNetwork<T>& net,
                                         const std::vector<std::vector<T>>& seq,
                                         QnetCache<T>* cache = nullptr) {
  if (seq.empty()) throw ArgumentError("qnet_forward: empty sequence");
  HiddenState<T> state(net.hidden_size);
  std::vector<std::vector<T>> qs;
  qs.reserve(seq.size());
  for (const auto& x : seq) qs.push_back(qnet_step(net, x, state, cache));
  return qs;
}

// Backpropagation through time over the cached sequence. dq holds one
// gradient vector per position.
template <class T>
QNetGrads<T> qnet_backward(const QNetwork<T>& net, const QnetCache<T>& cache,
                           const std::vector<std::vector<T>>& dq) {
  if (dq.size() != cache.steps.size())
    throw ArgumentError("qnet_backward: dq length " + std::to_string(dq.size()) +
                        " != cached steps " +
                        std::to_string(cache.steps.size()));
  QNetGrads<T> grads(net);
  const std::size_t hid = net.hidden_size;
  std::vector<T> dh_next(hid, T{}), dc_next(hid, T{});
  std::vector<T> dx, dh_prev, dc_prev;
  for (std::size_t t = cache.steps.size(); t-- > 0;) {
    const auto& sc = cache.steps[t];
    if (dq[t].size() != net.n_actions)
      throw ArgumentError("qnet_backward: dq[" + std::to_string(t) +
                          "] length " + std::to_string(dq[t].size()) +
                          " != n_actions " + std::to_string(net.n_actions));
    // dense head
    std::vector<T> ds(hid, T{});
    kern::gemv_t_add(net.dense.w.data.data(), net.n_actions, hid,
                     dq[t].data(), ds.data());
    kern::outer_add(dq[t].data(), net.n_actions, sc.s.data(), hid,
                    grads.dense_w.data.data());
    kern::add(grads.dense_b.data(), dq[t].data(), grads.dense_b.data(),
              net.n_actions);
    // softmax jacobian (when present), then add the recurrent flow
    std::vector<T> dh = net.softmax_position == SoftmaxPosition::PreFc
                            ? softmax_backward(sc.s, ds)
                            : ds;
    kern::add(dh.data(), dh_next.data(), dh.data(), hid);
    lstm_cell_backward(net.lstm, sc.cell, dh, dc_next, grads.lstm, dx, dh_prev,
                       dc_prev);
    dh_next = dh_prev;
    dc_next = dc_prev;
  }
  return grads;
}

}  // namespace proapt
