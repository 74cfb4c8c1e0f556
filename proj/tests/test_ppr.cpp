#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "egonet/escape.hpp"
#include "egonet/ppr.hpp"
#include "support/oracles.hpp"

using namespace egonet;

namespace {

PprParams tight(double alpha, double epsilon = 1e-12) {
  PprParams p;
  p.alpha = alpha;
  p.epsilon = epsilon;
  return p;
}

}  // namespace

TEST_CASE("two-node walk has the hand-solved fixed point", "[ppr]") {
  // K2, beta = (1,0), alpha = 1/2: v0 = a*v1 + 1/2, v1 = a*v0  =>  v = (2/3, 1/3)
  Graph g = oracle::make_graph({{"a", "b"}});
  EgoView view = oracle::full_view(g, 0);
  EscapeVector ev = ev_from_set(view, {0});

  ScoreVector power = ppr_power(view, ev, tight(0.5));
  REQUIRE_THAT(power[0], Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-9));
  REQUIRE_THAT(power[1], Catch::Matchers::WithinAbs(1.0 / 3.0, 1e-9));

  auto exact = oracle::exact_ppr(view, ev.normalized(2), 0.5);
  REQUIRE_THAT(exact[0], Catch::Matchers::WithinAbs(2.0 / 3.0, 1e-12));

  ScoreVector push = ppr_push(view, ev, tight(0.5, 1e-12));
  REQUIRE(oracle::l1(power.values, push.values) < 1e-8);
}

TEST_CASE("tiny alpha returns the escape distribution itself", "[ppr]") {
  std::mt19937_64 rng(7);
  Graph g = oracle::random_connected_graph(rng, 10, 20, 0.3, 0.5);
  EgoView view = oracle::full_view(g, 0);
  EscapeVector ev = oracle::random_ev(rng, view);

  ScoreVector v = ppr_power(view, ev, tight(1e-9));
  REQUIRE(oracle::l1(v.values, ev.normalized(view.node_count())) < 1e-8);
}

TEST_CASE("cycle symmetry forces a uniform score", "[ppr]") {
  Graph g = oracle::make_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  EgoView view = oracle::full_view(g, 0);
  for (double alpha : {0.3, 0.9}) {
    ScoreVector v = ppr_power(view, ev_uniform(view), tight(alpha));
    for (double s : v.values) REQUIRE_THAT(s, Catch::Matchers::WithinAbs(0.25, 1e-11));
  }
}

TEST_CASE("power iterates report steps and sum to one", "[ppr]") {
  std::mt19937_64 rng(8);
  Graph g = oracle::random_connected_graph(rng, 15, 40, 0.2, 0.4);
  EgoView view = oracle::full_view(g, 0);
  SolveInfo info;
  ScoreVector v = ppr_power(view, oracle::random_ev(rng, view), tight(0.9, 1e-10), &info);

  REQUIRE_THAT(oracle::sum(v.values), Catch::Matchers::WithinAbs(1.0, 1e-12));
  REQUIRE(info.steps > 0);
  REQUIRE(info.steps == info.residuals.size());
  REQUIRE(info.last_residual <= 1e-10);
  REQUIRE(info.residuals.back() == info.last_residual);
}

TEST_CASE("residuals contract at least geometrically", "[ppr]") {
  std::mt19937_64 rng(9);
  Graph g = oracle::random_connected_graph(rng, 12, 30, 0.25, 0.5);
  EgoView view = oracle::full_view(g, 0);
  SolveInfo info;
  double alpha = 0.85;
  ppr_power(view, oracle::random_ev(rng, view), tight(alpha, 1e-9), &info);
  for (std::size_t t = 1; t < info.residuals.size(); ++t) {
    REQUIRE(info.residuals[t] <= alpha * info.residuals[t - 1] + 1e-14);
  }
}

TEST_CASE("hitting the step cap raises an error carrying the residual", "[ppr]") {
  Graph g = oracle::make_graph({{"a", "b"}, {"b", "c"}});
  EgoView view = oracle::full_view(g, 0);
  PprParams params = tight(0.9, 1e-14);
  params.max_steps = 3;
  REQUIRE_THROWS_MATCHES(ppr_power(view, ev_uniform(view), params), ConvergenceError,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("residual")));
}

TEST_CASE("truncated escape series converges with a geometric tail", "[ppr]") {
  std::mt19937_64 rng(10);
  Graph g = oracle::random_connected_graph(rng, 10, 25, 0.25, 0.5);
  EgoView view = oracle::full_view(g, 0);
  const std::size_t n = view.node_count();
  EscapeVector ev = oracle::random_ev(rng, view);
  double alpha = 0.8;
  ScoreVector v = ppr_power(view, ev, tight(alpha));

  // partial sums (1-a) * sum_{t<=T} a^t (W^T)^t beta
  std::vector<double> term = ev.normalized(n);
  std::vector<double> partial(n, 0.0);
  std::vector<double> next(n, 0.0);
  for (std::size_t t = 0; t <= 20; ++t) {
    for (std::size_t i = 0; i < n; ++i) partial[i] += (1.0 - alpha) * term[i];
    if (t == 5 || t == 10 || t == 20) {
      REQUIRE(oracle::l1(partial, v.values) <=
              std::pow(alpha, static_cast<double>(t) + 1.0) + 1e-9);
    }
    std::fill(next.begin(), next.end(), 0.0);
    walk_transpose_apply(view, term, next);
    for (std::size_t i = 0; i < n; ++i) term[i] = alpha * next[i];
  }
}

TEST_CASE("push on a star favors the restart center", "[ppr]") {
  Graph g = oracle::make_graph(
      {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}, {"c", "l5"}});
  EgoView view = extract_ego(g, "c", 1);
  ScoreVector v = ppr_push(view, ev_from_set(view, {kObserverLocal}), tight(0.9, 1e-10));

  for (LocalId leaf = 1; leaf < 6; ++leaf) {
    REQUIRE(v[kObserverLocal] > v[leaf]);
    REQUIRE(v[leaf] == v[1]);  // symmetry
  }
}

TEST_CASE("oversized tolerance leaves all ink wet", "[ppr]") {
  Graph g = oracle::make_graph({{"a", "b"}});
  EgoView view = oracle::full_view(g, 0);
  SolveInfo info;
  ScoreVector v = ppr_push(view, ev_from_set(view, {0}), tight(0.9, 1.5), &info);
  REQUIRE(v[0] == 0.0);
  REQUIRE(v[1] == 0.0);
  REQUIRE(info.steps == 0);
  REQUIRE_THAT(info.last_residual, Catch::Matchers::WithinAbs(1.0, 1e-15));
}

TEST_CASE("push conserves ink after every step", "[ppr]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 8, 30, 0.2, 0.5);
    EgoView view = oracle::full_view(g, 0);
    std::size_t checks = 0;
    ppr_push(view, oracle::random_ev(rng, view), tight(0.9, 1e-8), nullptr,
             [&](std::span<const double> score, std::span<const double> residual) {
               REQUIRE_THAT(oracle::sum(score) + oracle::sum(residual),
                            Catch::Matchers::WithinAbs(1.0, 1e-12));
               ++checks;
             });
    REQUIRE(checks > 0);
  }
}

TEST_CASE("push lands within the wet-mass bound of the exact solution", "[ppr]") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 8, 40, 0.2, 0.5);
    EgoView view = oracle::full_view(g, 0);
    EscapeVector ev = oracle::random_ev(rng, view);
    double alpha = 0.9, epsilon = 1e-6;
    auto exact = oracle::exact_ppr(view, ev.normalized(view.node_count()), alpha);

    ScoreVector queue_push = ppr_push(view, ev, tight(alpha, epsilon));
    double bound = epsilon * 2.0 * static_cast<double>(view.edge_count);
    REQUIRE(oracle::l1(queue_push.values, exact) <= bound);

    // a different schedule stays within the same bound
    auto stack_push = oracle::lifo_push(view, ev, alpha, epsilon);
    REQUIRE(oracle::l1(stack_push, exact) <= bound);
  }
}

TEST_CASE("push step cap raises an error", "[ppr]") {
  std::mt19937_64 rng(13);
  Graph g = oracle::random_connected_graph(rng, 10, 20, 0.3, 0.5);
  EgoView view = oracle::full_view(g, 0);
  PprParams params = tight(0.9, 1e-12);
  params.max_steps = 5;
  REQUIRE_THROWS_AS(ppr_push(view, ev_uniform(view), params), ConvergenceError);
}

TEST_CASE("basic walk scores are degree over twice the edge count", "[ppr]") {
  Graph star = oracle::make_graph(
      {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}, {"c", "l5"}});
  EgoView sview = extract_ego(star, "c", 1);
  ScoreVector s = pagerank_basic(sview);
  REQUIRE_THAT(s[kObserverLocal], Catch::Matchers::WithinAbs(0.5, 1e-15));
  for (LocalId leaf = 1; leaf < 6; ++leaf) {
    REQUIRE_THAT(s[leaf], Catch::Matchers::WithinAbs(0.1, 1e-15));
  }

  Graph cyc = oracle::make_graph({{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
  EgoView cview = oracle::full_view(cyc, 0);
  for (double v : pagerank_basic(cview).values) {
    REQUIRE_THAT(v, Catch::Matchers::WithinAbs(0.25, 1e-15));
  }
}

TEST_CASE("basic walk scores satisfy the fixed point", "[ppr]") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = oracle::random_connected_graph(rng, 8, 40, 0.2, 0.5);
    EgoView view = oracle::full_view(g, 0);
    ScoreVector v = pagerank_basic(view);
    std::vector<double> applied(view.node_count(), 0.0);
    walk_transpose_apply(view, v.values, applied);
    REQUIRE(oracle::l1(applied, v.values) < 1e-12);
  }
}

TEST_CASE("uniform-restart walk interpolates uniform and degree orders", "[ppr]") {
  std::mt19937_64 rng(15);
  Graph g = oracle::random_connected_graph(rng, 10, 25, 0.2, 0.4);
  EgoView view = oracle::full_view(g, 0);

  PprParams nearly_stationary = tight(0.9999, 1e-10);
  nearly_stationary.max_steps = 100'000'000;
  ScoreVector high = pagerank_escape(view, nearly_stationary);
  for (LocalId i = 0; i < view.node_count(); ++i) {
    for (LocalId j = 0; j < view.node_count(); ++j) {
      if (view.degree(i) > view.degree(j)) REQUIRE(high[i] > high[j]);
    }
  }

  ScoreVector low = pagerank_escape(view, tight(1e-9));
  double uniform = 1.0 / static_cast<double>(view.node_count());
  for (double s : low.values) REQUIRE_THAT(s, Catch::Matchers::WithinAbs(uniform, 1e-8));
}

TEST_CASE("parameters are validated before solving", "[ppr]") {
  Graph g = oracle::make_graph({{"a", "b"}});
  EgoView view = oracle::full_view(g, 0);
  PprParams bad;
  bad.alpha = 1.0;
  REQUIRE_THROWS_AS(ppr_power(view, ev_uniform(view), bad), ConfigError);
  bad.alpha = 0.9;
  bad.epsilon = 0.0;
  REQUIRE_THROWS_AS(ppr_push(view, ev_uniform(view), bad), ConfigError);
  bad.epsilon = 1e-8;
  bad.max_steps = 0;
  REQUIRE_THROWS_AS(ppr_power(view, ev_uniform(view), bad), ConfigError);
}
