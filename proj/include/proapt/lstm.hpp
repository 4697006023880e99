#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "proapt/errors.hpp"
#include "proapt/kernels.hpp"
#include "proapt/matrix.hpp"
#include "proapt/numerics.hpp"

namespace proapt {

// Single-layer LSTM cell parameters. Gate order everywhere (params,
// gradients, checkpoints): input, forget, output, candidate.
//   i = sigmoid(W_in x + U_in h + b_in)
//   f = sigmoid(W_forget x + U_forget h + b_forget)
//   o = sigmoid(W_out x + U_out h + b_out)
//   g = tanh   (W_cand x + U_cand h + b_cand)
//   c' = f*c + i*g ; h' = o*tanh(c')
template <class T>
struct LstmParams {
  std::size_t input_size = 0;
  std::size_t hidden_size = 0;
  Matrix<T> w_in, w_forget, w_out, w_cand;  // hidden x input
  Matrix<T> u_in, u_forget, u_out, u_cand;  // hidden x hidden
  std::vector<T> b_in, b_forget, b_out, b_cand;

  LstmParams() = default;
  LstmParams(std::size_t in, std::size_t hidden)
      : input_size(in),
        hidden_size(hidden),
        w_in(hidden, in),
        w_forget(hidden, in),
        w_out(hidden, in),
        w_cand(hidden, in),
        u_in(hidden, hidden),
        u_forget(hidden, hidden),
        u_out(hidden, hidden),
        u_cand(hidden, hidden),
        b_in(hidden, T{}),
        b_forget(hidden, T{}),
        b_out(hidden, T{}),
        b_cand(hidden, T{}) {}
};

template <class T>
struct LstmCellCache {
  std::vector<T> x, h_prev, c_prev;
  std::vector<T> gate_in, gate_forget, gate_out, gate_cand;  // post-activation
  std::vector<T> c, tanh_c;
};

template <class T>
struct LstmCellOut {
  std::vector<T> h, c;
  LstmCellCache<T> cache;
};

namespace detail {
template <class T>
void check_len(const std::vector<T>& v, std::size_t want, const char* name) {
  if (v.size() != want)
    throw ShapeError(std::string(name) + " length " + std::to_string(v.size()) +
                     " != expected " + std::to_string(want));
}
}  // namespace detail

template <class T>
LstmCellOut<T> lstm_cell_forward(const std::vector<T>& x,
                                 const std::vector<T>& h_prev,
                                 const std::vector<T>& c_prev,
                                 const LstmParams<T>& p) {
  const std::size_t in = p.input_size, hid = p.hidden_size;
  detail::check_len(x, in, "lstm x");
  detail::check_len(h_prev, hid, "lstm h_prev");
  detail::check_len(c_prev, hid, "lstm c_prev");

  auto gate = [&](const Matrix<T>& w, const Matrix<T>& u,
                  const std::vector<T>& b) {
    std::vector<T> a = b;
    kern::gemv_add(w.data.data(), hid, in, x.data(), a.data());
    kern::gemv_add(u.data.data(), hid, hid, h_prev.data(), a.data());
    return a;
  };

  LstmCellOut<T> out;
  auto& cc = out.cache;
  cc.x = x;
  cc.h_prev = h_prev;
  cc.c_prev = c_prev;

  cc.gate_in = gate(p.w_in, p.u_in, p.b_in);
  cc.gate_forget = gate(p.w_forget, p.u_forget, p.b_forget);
  cc.gate_out = gate(p.w_out, p.u_out, p.b_out);
  cc.gate_cand = gate(p.w_cand, p.u_cand, p.b_cand);
  for (std::size_t j = 0; j < hid; ++j) {
    cc.gate_in[j] = sigmoid(cc.gate_in[j]);
    cc.gate_forget[j] = sigmoid(cc.gate_forget[j]);
    cc.gate_out[j] = sigmoid(cc.gate_out[j]);
    cc.gate_cand[j] = std::tanh(cc.gate_cand[j]);
  }

  cc.c.resize(hid);
  cc.tanh_c.resize(hid);
  out.h.resize(hid);
  for (std::size_t j = 0; j < hid; ++j) {
    cc.c[j] = cc.gate_forget[j] * c_prev[j] + cc.gate_in[j] * cc.gate_cand[j];
    cc.tanh_c[j] = std::tanh(cc.c[j]);
    out.h[j] = cc.gate_out[j] * cc.tanh_c[j];
  }
  out.c = cc.c;
  return out;
}

// Gradient accumulators mirroring LstmParams shapes.
template <class T>
struct LstmGrads {
  Matrix<T> w_in, w_forget, w_out, w_cand;
  Matrix<T> u_in, u_forget, u_out, u_cand;
  std::vector<T> b_in, b_forget, b_out, b_cand;

  LstmGrads() = default;
  explicit LstmGrads(const LstmParams<T>& p)
      : w_in(p.hidden_size, p.input_size),
        w_forget(p.hidden_size, p.input_size),
        w_out(p.hidden_size, p.input_size),
        w_cand(p.hidden_size, p.input_size),
        u_in(p.hidden_size, p.hidden_size),
        u_forget(p.hidden_size, p.hidden_size),
        u_out(p.hidden_size, p.hidden_size),
        u_cand(p.hidden_size, p.hidden_size),
        b_in(p.hidden_size, T{}),
        b_forget(p.hidden_size, T{}),
        b_out(p.hidden_size, T{}),
        b_cand(p.hidden_size, T{}) {}
};

// Backprop through one cell. dh/dc are the gradients flowing into this
// step's h and c outputs. Accumulates parameter gradients into `grads` and
// writes input-side gradients to dx/dh_prev/dc_prev (overwritten).
template <class T>
void lstm_cell_backward(const LstmParams<T>& p, const LstmCellCache<T>& cc,
                        const std::vector<T>& dh, const std::vector<T>& dc_in,
                        LstmGrads<T>& grads, std::vector<T>& dx,
                        std::vector<T>& dh_prev, std::vector<T>& dc_prev) {
  const std::size_t in = p.input_size, hid = p.hidden_size;
  detail::check_len(dh, hid, "lstm dh");
  detail::check_len(dc_in, hid, "lstm dc");

  std::vector<T> da_in(hid), da_forget(hid), da_out(hid), da_cand(hid);
  dc_prev.assign(hid, T{});
  for (std::size_t j = 0; j < hid; ++j) {
    T o = cc.gate_out[j], i = cc.gate_in[j], f = cc.gate_forget[j],
      g = cc.gate_cand[j], tc = cc.tanh_c[j];
    T dout = dh[j] * tc;
    T dc = dc_in[j] + dh[j] * o * (T(1) - tc * tc);
    T dforget = dc * cc.c_prev[j];
    T din = dc * g;
    T dcand = dc * i;
    dc_prev[j] = dc * f;
    da_in[j] = din * i * (T(1) - i);
    da_forget[j] = dforget * f * (T(1) - f);
    da_out[j] = dout * o * (T(1) - o);
    da_cand[j] = dcand * (T(1) - g * g);
  }

  auto acc = [&](const std::vector<T>& da, Matrix<T>& gw, Matrix<T>& gu,
                 std::vector<T>& gb) {
    kern::outer_add(da.data(), hid, cc.x.data(), in, gw.data.data());
    kern::outer_add(da.data(), hid, cc.h_prev.data(), hid, gu.data.data());
    kern::add(gb.data(), da.data(), gb.data(), hid);
  };
  acc(da_in, grads.w_in, grads.u_in, grads.b_in);
  acc(da_forget, grads.w_forget, grads.u_forget, grads.b_forget);
  acc(da_out, grads.w_out, grads.u_out, grads.b_out);
  acc(da_cand, grads.w_cand, grads.u_cand, grads.b_cand);

  dx.assign(in, T{});
  dh_prev.assign(hid, T{});
  kern::gemv_t_add(p.w_in.data.data(), hid, in, da_in.data(), dx.data());
  kern::gemv_t_add(p.w_forget.data.data(), hid, in, da_forget.data(), dx.data());
  kern::gemv_t_add(p.w_out.data.data(), hid, in, da_out.data(), dx.data());
  kern::gemv_t_add(p.w_cand.data.data(), hid, in, da_cand.data(), dx.data());
  kern::gemv_t_add(p.u_in.data.data(), hid, hid, da_in.data(), dh_prev.data());
  kern::gemv_t_add(p.u_forget.data.data(), hid, hid, da_forget.data(),
                   dh_prev.data());
  kern::gemv_t_add(p.u_out.data.data(), hid, hid, da_out.data(), dh_prev.data());
  kern::gemv_t_add(p.u_cand.data.data(), hid, hid, da_cand.data(),
                   dh_prev.data());
}

}  // namespace proapt
