#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/escape.hpp"
#include "egonet/score.hpp"

namespace egonet {

struct PprParams {
  double alpha = 0.9;        // probability of continuing the walk
  double epsilon = 1e-10;    // L1 residual bound (power) / per-degree residual bound (push)
  std::size_t max_steps = 10'000'000;  // iterations (power) / push operations (push)

  void validate() const {
    if (!(alpha > 0.0 && alpha < 1.0)) throw ConfigError("ppr: require 0 < alpha < 1");
    if (!(epsilon > 0.0)) throw ConfigError("ppr: require epsilon > 0");
    if (max_steps == 0) throw ConfigError("ppr: require max_steps > 0");
  }
};

struct SolveInfo {
  std::size_t steps = 0;
  double last_residual = 0.0;          // final L1 delta (power) / total wet mass (push)
  std::vector<double> residuals;       // per-iteration L1 deltas (power only)
};

// out = W^T in, applied edge-wise: out_i = sum_{j ~ i} in_j / d_j.
// Column-stochastic, so the entry sum of `in` is preserved.
inline void walk_transpose_apply(const EgoView& view, std::span<const double> in,
                                 std::span<double> out) {
  const std::size_t n = view.node_count();
  for (LocalId j = 0; j < n; ++j) {
    double share = in[j] / static_cast<double>(view.degree(j));
    for (LocalId i : view.neighbors(j)) out[i] += share;
  }
}

// Power iteration v <- alpha W^T v + (1 - alpha) beta, started at beta and
// stopped when the L1 step delta drops to epsilon. Every iterate sums to 1;
// deltas contract by at least alpha per step.
inline ScoreVector ppr_power(const EgoView& view, const EscapeVector& ev, const PprParams& params,
                             SolveInfo* info = nullptr) {
  params.validate();
  const std::size_t n = view.node_count();
  std::vector<double> beta = ev.normalized(n);
  std::vector<double> v = beta;
  std::vector<double> next(n, 0.0);

  SolveInfo local;
  bool converged = false;
  while (local.steps < params.max_steps) {
    std::fill(next.begin(), next.end(), 0.0);
    walk_transpose_apply(view, v, next);
    double delta = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] = params.alpha * next[i] + (1.0 - params.alpha) * beta[i];
      delta += std::abs(next[i] - v[i]);
    }
    v.swap(next);
    ++local.steps;
    local.last_residual = delta;
    local.residuals.push_back(delta);
    if (delta <= params.epsilon) {
      converged = true;
      break;
    }
  }
  if (!converged) {
    throw ConvergenceError("ppr_power: no convergence after " + std::to_string(local.steps) +
                           " steps, last residual " + format_double(local.last_residual));
  }
  if (info) *info = std::move(local);

  ScoreVector score;
  score.values = std::move(v);
  score.method = "ppr_power";
  score.tag("alpha", format_double(params.alpha));
  score.tag("epsilon", format_double(params.epsilon));
  score.tag("ev", ev.description);
  return score;
}

// Called after every push with the current dry scores and wet residual.
using PushHook = std::function<void(std::span<const double>, std::span<const double>)>;

// Asynchronous ink spilling. Wet ink r starts at beta; a push at node i dries
// (1-alpha)*r(i) into the score, spreads alpha*r(i) evenly over the
// neighbors, and resets r(i) to zero, so score + wet mass stays exactly 1.
// Nodes are processed through a FIFO queue of everyone over the threshold
// r(i) > epsilon*d(i); on exit no node is over it, which bounds the L1
// distance from the exact solution by epsilon * 2m.
inline ScoreVector ppr_push(const EgoView& view, const EscapeVector& ev, const PprParams& params,
                            SolveInfo* info = nullptr, const PushHook& hook = {}) {
  params.validate();
  const std::size_t n = view.node_count();
  std::vector<double> residual = ev.normalized(n);
  std::vector<double> score(n, 0.0);

  std::deque<LocalId> queue;
  std::vector<char> queued(n, 0);
  auto over_threshold = [&](LocalId i) {
    return residual[i] > params.epsilon * static_cast<double>(view.degree(i));
  };
  for (LocalId i = 0; i < n; ++i) {
    if (over_threshold(i)) {
      queue.push_back(i);
      queued[i] = 1;
    }
  }

  SolveInfo local;
  while (!queue.empty()) {
    LocalId i = queue.front();
    queue.pop_front();
    queued[i] = 0;
    if (!over_threshold(i)) continue;  // drained below threshold since enqueue
    if (local.steps == params.max_steps) {
      double wet = 0.0;
      for (double r : residual) wet += r;
      throw ConvergenceError("ppr_push: push budget exhausted at " +
                             std::to_string(params.max_steps) + " steps, wet mass " +
                             format_double(wet));
    }

    double ink = residual[i];
    residual[i] = 0.0;
    score[i] += (1.0 - params.alpha) * ink;
    double share = params.alpha * ink / static_cast<double>(view.degree(i));
    for (LocalId j : view.neighbors(i)) {
      residual[j] += share;
      if (!queued[j] && over_threshold(j)) {
        queue.push_back(j);
        queued[j] = 1;
      }
    }
    ++local.steps;
    if (hook) hook(score, residual);
  }
  double wet = 0.0;
  for (double r : residual) wet += r;
  local.last_residual = wet;
  if (info) *info = std::move(local);

  ScoreVector out;
  out.values = std::move(score);
  out.method = "ppr_push";
  out.tag("alpha", format_double(params.alpha));
  out.tag("epsilon", format_double(params.epsilon));
  out.tag("ev", ev.description);
  return out;
}

// Stationary walk distribution of the connected view, v_i = d_i / 2m.
// This is the closed form of the restart-free fixed point, so no iteration
// is involved.
inline ScoreVector pagerank_basic(const EgoView& view) {
  ScoreVector score;
  score.method = "pagerank_basic";
  score.values.resize(view.node_count());
  const double two_m = 2.0 * static_cast<double>(view.edge_count);
  for (LocalId v = 0; v < view.node_count(); ++v) {
    score.values[v] = static_cast<double>(view.degree(v)) / two_m;
  }
  return score;
}

// Uniform-restart special case: interpolates between the uniform
// distribution (alpha -> 0) and the degree-proportional one (alpha -> 1).
inline ScoreVector pagerank_escape(const EgoView& view, const PprParams& params,
                                   SolveInfo* info = nullptr) {
  ScoreVector score = ppr_power(view, ev_uniform(view), params, info);
  score.method = "pagerank_escape";
  return score;
}

}  // namespace egonet
