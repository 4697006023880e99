#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "proapt/qnet.hpp"

namespace proapt {

// Central finite differences of L(theta) = sum_t <q_t(theta), dq_t> over
// every parameter. 64-bit only; the step default matches truncation error
// well below the 1e-4 acceptance threshold.
inline QNetGrads<double> fd_gradients(QNetwork<double> net,
                                      const std::vector<std::vector<double>>& seq,
                                      const std::vector<std::vector<double>>& dq,
                                      double step = 1e-5) {
  auto loss = [&]() {
    auto qs = qnet_forward(net, seq);
    double l = 0.0;
    for (std::size_t t = 0; t < qs.size(); ++t)
      for (std::size_t a = 0; a < qs[t].size(); ++a) l += qs[t][a] * dq[t][a];
    return l;
  };
  QNetGrads<double> fd(net);
  auto params = net.param_views();
  auto out = fd.param_views();
  for (std::size_t pi = 0; pi < params.size(); ++pi) {
    for (std::size_t j = 0; j < params[pi].size(); ++j) {
      double orig = params[pi][j];
      params[pi][j] = orig + step;
      double lp = loss();
      params[pi][j] = orig - step;
      double lm = loss();
      params[pi][j] = orig;
      out[pi][j] = (lp - lm) / (2.0 * step);
    }
  }
  return fd;
}

// Max over coordinates of |a-n| / (|a|+|n|+1e-4). The additive floor keeps
// finite-difference noise on near-zero gradients from dominating.
inline double compare_grads(QNetGrads<double>& a, QNetGrads<double>& b) {
  double worst = 0.0;
  auto va = a.param_views();
  auto vb = b.param_views();
  for (std::size_t pi = 0; pi < va.size(); ++pi)
    for (std::size_t j = 0; j < va[pi].size(); ++j) {
      double x = va[pi][j], y = vb[pi][j];
      double rel = std::abs(x - y) / (std::abs(x) + std::abs(y) + 1e-4);
      if (rel > worst) worst = rel;
    }
  return worst;
}

// Analytic-vs-numeric gradient comparison over the full network.
inline double grad_check(const QNetwork<double>& net,
                         const std::vector<std::vector<double>>& seq,
                         const std::vector<std::vector<double>>& dq,
                         double step = 1e-5) {
  QnetCache<double> cache;
  qnet_forward(net, seq, &cache);
  auto analytic = qnet_backward(net, cache, dq);
  auto numeric = fd_gradients(net, seq, dq, step);
  return compare_grads(analytic, numeric);
}

}  // namespace proapt
