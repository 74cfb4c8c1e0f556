#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "egonet/classify.hpp"
#include "egonet/common.hpp"
#include "egonet/ego.hpp"
#include "egonet/escape.hpp"
#include "egonet/eval.hpp"
#include "egonet/heuristics.hpp"
#include "egonet/labels.hpp"
#include "egonet/ppr.hpp"
#include "egonet/score.hpp"

namespace egonet {

inline double elapsed_ms(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - since)
      .count();
}

// ---------------------------------------------------------------------------
// Four-method comparison: both neighborhood heuristics, uniform-restart
// walk scoring, and the personalized walk restarted at the observer plus the
// top-degree positives.

struct ComparePlan {
  double alpha = 0.9;
  double epsilon = 1e-10;
  TestScope scope = TestScope::within2();
  std::size_t ev_top = 3;  // positives joining the observer in the restart set
};

struct CompareResult {
  // parallel arrays in fixed report order: common, adamic_adar, pr, ppr
  std::vector<std::string> methods;
  std::vector<double> aucs;
  std::vector<RocCurve> curves;
  double improvement_ppr_over_pr = 0.0;  // fraction of the margin above 0.5

  double auc_of(const std::string& method) const {
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (methods[i] == method) return aucs[i];
    }
    throw ConfigError("no method \"" + method + "\" in comparison");
  }
};

inline CompareResult run_compare(const EgoView& view, const LabelMap& labels,
                                 const ComparePlan& plan) {
  PprParams params;
  params.alpha = plan.alpha;
  params.epsilon = plan.epsilon;

  std::vector<LocalId> test = test_set(view, plan.scope);
  CompareResult result;
  auto add = [&](const char* name, const ScoreVector& scores) {
    result.methods.emplace_back(name);
    result.curves.push_back(roc(view, scores, test, labels));
    result.aucs.push_back(auc(result.curves.back()));
  };
  add("common", common_neighbors(view));
  add("adamic_adar", adamic_adar(view));
  add("pr", pagerank_escape(view, params));
  EscapeVector ev = ev_strategy(view, labels, EvStrategy::observer_plus_top, plan.ev_top);
  add("ppr", ppr_power(view, ev, params));
  result.improvement_ppr_over_pr =
      relative_improvement(result.auc_of("ppr"), result.auc_of("pr"));
  return result;
}

// ---------------------------------------------------------------------------
// Restart-set sweep: AUC of the personalized walk as the restart set grows,
// per strategy, scope, and round.

struct SweepPlan {
  std::vector<EvStrategy> strategies{EvStrategy::random_positive,
                                     EvStrategy::high_degree_positive};
  std::vector<TestScope> scopes{TestScope::level1(), TestScope::within2()};
  std::vector<std::size_t> ks;
  std::size_t rounds = 50;
  std::uint64_t master_seed = 0;
  double alpha = 0.9;
  double epsilon = 1e-10;
};

struct SweepRow {
  std::string strategy;
  std::string scope;
  std::size_t k = 0;
  std::size_t round = 0;
  std::uint64_t seed = 0;
  double auc = 0.0;
};

struct SweepSkip {
  std::string strategy;
  std::string scope;
  std::size_t k = 0;
  std::string reason;
};

struct SweepAggregate {
  std::string strategy;
  std::string scope;
  std::size_t k = 0;
  std::size_t rounds = 0;
  double mean_auc = 0.0;
  double var_auc = 0.0;  // sample variance over rounds
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepSkip> skips;
  std::vector<SweepAggregate> aggregates;
};

// Every cell gets its own seed so any row can be re-run in isolation.
inline std::uint64_t sweep_seed(std::uint64_t master, EvStrategy strategy, TestScope scope,
                                std::size_t k, std::size_t round) {
  std::uint64_t s = derive_seed(master, static_cast<std::uint64_t>(strategy));
  s = derive_seed(s, static_cast<std::uint64_t>(scope.levels));
  s = derive_seed(s, static_cast<std::uint64_t>(k));
  return derive_seed(s, static_cast<std::uint64_t>(round));
}

inline SweepResult run_sweep(const EgoView& view, const LabelMap& labels, const SweepPlan& plan) {
  if (plan.ks.empty()) throw ConfigError("sweep: no restart-set sizes given");
  for (std::size_t k : plan.ks) {
    if (k == 0) throw ConfigError("sweep: restart-set sizes must be positive");
  }
  if (plan.rounds == 0) throw ConfigError("sweep: rounds must be >= 1");
  PprParams params;
  params.alpha = plan.alpha;
  params.epsilon = plan.epsilon;

  std::size_t available = positive_candidates(view, labels).size();
  SweepResult result;
  for (EvStrategy strategy : plan.strategies) {
    for (TestScope scope : plan.scopes) {
      std::vector<LocalId> test = test_set(view, scope);
      for (std::size_t k : plan.ks) {
        if (k > available) {
          result.skips.push_back({to_string(strategy), to_string(scope), k,
                                  "need " + std::to_string(k) + " positives, have " +
                                      std::to_string(available)});
          continue;
        }
        double sum = 0.0, sumsq = 0.0;
        for (std::size_t round = 0; round < plan.rounds; ++round) {
          std::uint64_t seed = sweep_seed(plan.master_seed, strategy, scope, k, round);
          EscapeVector ev = ev_strategy(view, labels, strategy, k, seed);
          ScoreVector scores = ppr_power(view, ev, params);
          double a = auc(roc(view, scores, test, labels));
          result.rows.push_back({to_string(strategy), to_string(scope), k, round, seed, a});
          sum += a;
          sumsq += a * a;
        }
        auto n = static_cast<double>(plan.rounds);
        double mean = sum / n;
        double var = plan.rounds < 2 ? 0.0 : std::max(0.0, (sumsq - n * mean * mean) / (n - 1.0));
        result.aggregates.push_back(
            {to_string(strategy), to_string(scope), k, plan.rounds, mean, var});
      }
    }
  }
  return result;
}

inline void write_sweep_rows_csv(const SweepResult& result, std::ostream& out) {
  out << "strategy,scope,k,round,seed,auc\n";
  for (const SweepRow& r : result.rows) {
    out << r.strategy << ',' << r.scope << ',' << r.k << ',' << r.round << ',' << r.seed << ','
        << format_double(r.auc) << '\n';
  }
}

inline void write_sweep_aggregates_csv(const SweepResult& result, std::ostream& out) {
  out << "strategy,scope,k,rounds,mean_auc,var_auc\n";
  for (const SweepAggregate& a : result.aggregates) {
    out << a.strategy << ',' << a.scope << ',' << a.k << ',' << a.rounds << ','
        << format_double(a.mean_auc) << ',' << format_double(a.var_auc) << '\n';
  }
}

inline void write_sweep_skips_csv(const SweepResult& result, std::ostream& out) {
  out << "strategy,scope,k,reason\n";
  for (const SweepSkip& s : result.skips) {
    out << s.strategy << ',' << s.scope << ',' << s.k << ",\"" << s.reason << "\"\n";
  }
}

// ---------------------------------------------------------------------------
// Solver convergence study: error against a tight power-iteration benchmark
// as the tolerance relaxes, for both solvers.

struct ConvergencePlan {
  double alpha = 0.9;
  double benchmark_epsilon = 1e-10;
  std::vector<double> epsilons{1e-2, 1e-3, 1e-4, 1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10};
  std::size_t ev_top = 5;  // highest-degree positives forming the restart set
};

struct ConvergenceRow {
  std::string solver;
  double epsilon = 0.0;
  double l1_error = 0.0;
  double wall_time_ms = 0.0;  // informational; excluded from determinism claims
  std::size_t steps = 0;
};

struct ConvergenceResult {
  std::vector<ConvergenceRow> rows;  // sorted (solver, epsilon descending)
  ScoreVector benchmark;
};

inline double l1_distance(std::span<const double> x, std::span<const double> y) {
  double d = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) d += std::abs(x[i] - y[i]);
  return d;
}

inline ConvergenceResult run_convergence(const EgoView& view, const LabelMap& labels,
                                         const ConvergencePlan& plan) {
  if (plan.epsilons.empty()) throw ConfigError("convergence: no tolerances given");
  EscapeVector ev = ev_strategy(view, labels, EvStrategy::high_degree_positive, plan.ev_top);

  PprParams bench_params;
  bench_params.alpha = plan.alpha;
  bench_params.epsilon = plan.benchmark_epsilon;
  ConvergenceResult result;
  result.benchmark = ppr_power(view, ev, bench_params);

  for (const char* solver : {"power", "push"}) {
    for (double eps : plan.epsilons) {
      PprParams params = bench_params;
      params.epsilon = eps;
      SolveInfo info;
      auto start = std::chrono::steady_clock::now();
      ScoreVector scores = solver == std::string_view("power")
                               ? ppr_power(view, ev, params, &info)
                               : ppr_push(view, ev, params, &info);
      double ms = elapsed_ms(start);
      result.rows.push_back(
          {solver, eps, l1_distance(scores.values, result.benchmark.values), ms, info.steps});
    }
  }
  std::sort(result.rows.begin(), result.rows.end(),
            [](const ConvergenceRow& x, const ConvergenceRow& y) {
              if (x.solver != y.solver) return x.solver < y.solver;
              return x.epsilon > y.epsilon;
            });
  return result;
}

inline void write_convergence_csv(const ConvergenceResult& result, std::ostream& out) {
  out << "solver,epsilon,l1_error,wall_time_ms,steps\n";
  for (const ConvergenceRow& r : result.rows) {
    out << r.solver << ',' << format_double(r.epsilon) << ',' << format_double(r.l1_error) << ','
        << format_double(r.wall_time_ms) << ',' << r.steps << '\n';
  }
}

}  // namespace egonet
