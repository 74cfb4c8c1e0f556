// Command-line front end: generate synthetic graphs, extract observer views,
// rank and classify nodes, and run the three batch experiments.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "egonet/egonet.hpp"

namespace {

using namespace egonet;

// Runs `fn` against the file at `path`, or stdout when no path was given.
template <class Fn>
void with_out(const std::string& path, Fn&& fn) {
  if (path.empty()) {
    fn(std::cout);
    return;
  }
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  fn(out);
}

void dump_json(const nlohmann::json& j, const std::string& path) {
  with_out(path, [&](std::ostream& out) { out << j.dump(2) << '\n'; });
}

// Flags shared by every command that works on an existing graph.
struct ViewArgs {
  std::string edges;
  std::string labels;
  std::string observer;
  int hops = 2;

  void add_to(CLI::App* cmd, bool labels_required) {
    cmd->add_option("--edges", edges, "edge list file")->required();
    auto* lab = cmd->add_option("--labels", labels, "node label file");
    if (labels_required) lab->required();
    cmd->add_option("--observer", observer, "observer node name")->required();
    cmd->add_option("--hops", hops, "view radius")->capture_default_str();
  }

  EgoView view(Graph& storage) const {
    storage = load_graph_file(edges);
    return extract_ego(storage, observer, hops);
  }
};

// Ranking-method selection shared by `rank` and `classify`.
struct RankArgs {
  std::string method = "ppr";
  std::string solver = "power";
  std::string strategy = "observer_plus_top";
  std::size_t k = 3;
  double alpha = 0.9;
  double epsilon = 1e-10;
  std::uint64_t seed = 0;

  void add_to(CLI::App* cmd) {
    cmd->add_option("--method", method, "ranking method")
        ->check(CLI::IsMember({"common", "adamic-adar", "pr-basic", "pr", "ppr"}))
        ->capture_default_str();
    cmd->add_option("--solver", solver, "walk solver for pr/ppr")
        ->check(CLI::IsMember({"power", "push"}))
        ->capture_default_str();
    cmd->add_option("--strategy", strategy, "restart-set strategy for ppr")
        ->capture_default_str();
    cmd->add_option("--k", k, "restart-set size for ppr")->capture_default_str();
    cmd->add_option("--alpha", alpha, "walk continuation probability")->capture_default_str();
    cmd->add_option("--epsilon", epsilon, "solver tolerance")->capture_default_str();
    cmd->add_option("--seed", seed, "rng seed for random strategies")->capture_default_str();
  }

  ScoreVector compute(const EgoView& view, const std::string& labels_path) const {
    if (method == "common") return common_neighbors(view);
    if (method == "adamic-adar") return adamic_adar(view);
    if (method == "pr-basic") return pagerank_basic(view);

    PprParams params;
    params.alpha = alpha;
    params.epsilon = epsilon;
    EscapeVector ev;
    if (method == "pr") {
      ev = ev_uniform(view);
    } else {
      if (labels_path.empty()) throw ConfigError("method ppr needs --labels");
      LabelMap labels = load_labels_file(labels_path);
      ev = ev_strategy(view, labels, parse_strategy(strategy), k, seed);
    }
    ScoreVector scores =
        solver == "push" ? ppr_push(view, ev, params) : ppr_power(view, ev, params);
    if (method == "pr") scores.method = "pagerank_escape";
    return scores;
  }
};

void cmd_gen(CLI::App* cmd) {
  struct Args {
    std::string spec, out, labels_out, id_map, observer = "0";
    std::uint64_t seed = 0;
    bool seed_set = false;
  };
  auto args = std::make_shared<Args>();
  cmd->add_option("--spec", args->spec, "generator spec (JSON)")->required();
  cmd->add_option("--out", args->out, "edge list output")->required();
  cmd->add_option("--labels-out", args->labels_out, "label file output")->required();
  cmd->add_option("--id-map", args->id_map, "write node-id map here");
  cmd->add_option("--observer", args->observer, "node whose 2-hop view must be viable")
      ->capture_default_str();
  cmd->add_option("--seed", args->seed, "override the spec's seed")
      ->each([args](const std::string&) { args->seed_set = true; });

  cmd->callback([args] {
    SbmSpec spec = load_sbm_spec_file(args->spec);
    if (args->seed_set) spec.rng_seed = args->seed;
    SbmResult result = gen_sbm(spec, args->observer);
    with_out(args->out, [&](std::ostream& out) { save_edge_list(result.graph, out); });
    with_out(args->labels_out, [&](std::ostream& out) { save_labels(result.labels, out); });
    if (!args->id_map.empty()) {
      with_out(args->id_map, [&](std::ostream& out) { export_id_map(result.graph, out); });
    }
    std::cout << "nodes=" << result.graph.node_count() << " edges=" << result.graph.edge_count()
              << " attempts=" << result.attempts << '\n';
  });
}

void cmd_extract(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/false);
  cmd->add_option("--out", args->out, "view edge list output (default stdout)");

  cmd->callback([args] {
    Graph g;
    EgoView view = args->view.view(g);
    with_out(args->out, [&](std::ostream& out) { save_edge_list(view, out); });
    if (!args->out.empty()) {
      std::cout << "nodes=" << view.node_count() << " edges=" << view.edge_count;
      for (int r = 0; r <= view.hops; ++r) {
        std::cout << (r == 0 ? " rings=" : ",") << view.ring_size(r);
      }
      std::cout << '\n';
    }
  });
}

void cmd_rank(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    RankArgs rank;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/false);
  args->rank.add_to(cmd);
  cmd->add_option("--out", args->out, "score JSON output (default stdout)");

  cmd->callback([args] {
    Graph g;
    EgoView view = args->view.view(g);
    ScoreVector scores = args->rank.compute(view, args->view.labels);
    dump_json(to_json(view, scores), args->out);
  });
}

void cmd_classify(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    RankArgs rank;
    std::string scope = "within2";
    std::int64_t count = -1;
    double prior = -1.0, target_fpr = -1.0, target_tpr = -1.0;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/true);
  args->rank.add_to(cmd);
  cmd->add_option("--scope", args->scope, "test-set scope")
      ->check(CLI::IsMember({"level1", "within2"}))
      ->capture_default_str();
  cmd->add_option("--count", args->count, "predict exactly this many positives");
  cmd->add_option("--prior", args->prior, "positive-class prior for the count rule");
  cmd->add_option("--target-fpr", args->target_fpr, "operating-point false positive rate");
  cmd->add_option("--target-tpr", args->target_tpr, "operating-point true positive rate");
  cmd->add_option("--out", args->out, "prediction JSON output (default stdout)");

  cmd->callback([args] {
    bool by_count = args->count >= 0;
    bool by_prior = args->prior >= 0 || args->target_fpr >= 0 || args->target_tpr >= 0;
    if (by_count == by_prior) {
      throw ConfigError("choose one rule: --count, or --prior with --target-fpr/--target-tpr");
    }
    if (by_prior && (args->prior < 0 || args->target_fpr < 0 || args->target_tpr < 0)) {
      throw ConfigError("the prior rule needs all of --prior, --target-fpr, --target-tpr");
    }
    Graph g;
    EgoView view = args->view.view(g);
    LabelMap labels = load_labels_file(args->view.labels);
    ScoreVector scores = args->rank.compute(view, args->view.labels);
    TestScope scope = parse_scope(args->scope);
    Prediction pred =
        by_count ? threshold_by_count(view, scores, scope, static_cast<std::size_t>(args->count))
                 : threshold_by_prior(view, scores, scope, args->prior, args->target_fpr,
                                      args->target_tpr);
    dump_json(to_json(view, pred, &labels), args->out);
  });
}

void cmd_compare(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    ComparePlan plan;
    std::string scope = "within2";
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/true);
  cmd->add_option("--alpha", args->plan.alpha, "walk continuation probability")
      ->capture_default_str();
  cmd->add_option("--epsilon", args->plan.epsilon, "solver tolerance")->capture_default_str();
  cmd->add_option("--scope", args->scope, "test-set scope")
      ->check(CLI::IsMember({"level1", "within2"}))
      ->capture_default_str();
  cmd->add_option("--k", args->plan.ev_top, "positives joining the observer's restart set")
      ->capture_default_str();
  cmd->add_option("--out", args->out, "output directory")->required();

  cmd->callback([args] {
    args->plan.scope = parse_scope(args->scope);
    Graph g;
    EgoView view = args->view.view(g);
    LabelMap labels = load_labels_file(args->view.labels);
    CompareResult result = run_compare(view, labels, args->plan);

    std::filesystem::create_directories(args->out);
    nlohmann::json summary;
    for (std::size_t i = 0; i < result.methods.size(); ++i) {
      summary["auc"][result.methods[i]] = result.aucs[i];
      std::ofstream out(args->out + "/roc_" + result.methods[i] + ".csv");
      if (!out) throw ConfigError("cannot write into " + args->out);
      write_roc_csv(result.curves[i], out);
    }
    summary["relative_improvement_ppr_over_pr_pct"] = 100.0 * result.improvement_ppr_over_pr;
    summary["alpha"] = args->plan.alpha;
    summary["scope"] = to_string(args->plan.scope);
    summary["restart_set"] = "observer_plus_top:" + std::to_string(args->plan.ev_top);
    write_json_file(summary, args->out + "/auc_summary.json");

    for (std::size_t i = 0; i < result.methods.size(); ++i) {
      std::cout << result.methods[i] << " auc=" << format_double(result.aucs[i]) << '\n';
    }
    std::cout << "ppr improves pr by "
              << format_double(100.0 * result.improvement_ppr_over_pr) << "%\n";
  });
}

void cmd_sweep_ev(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    SweepPlan plan;
    std::vector<std::string> strategies{"random_positive", "high_degree_positive"};
    std::vector<std::string> scopes{"level1", "within2"};
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/true);
  cmd->add_option("--strategy", args->strategies, "restart-set strategies to sweep")
      ->capture_default_str();
  cmd->add_option("--scope", args->scopes, "test-set scopes to sweep")->capture_default_str();
  cmd->add_option("--k", args->plan.ks, "restart-set sizes to sweep")->required();
  cmd->add_option("--rounds", args->plan.rounds, "rounds per size")->capture_default_str();
  cmd->add_option("--seed", args->plan.master_seed, "master seed")->capture_default_str();
  cmd->add_option("--alpha", args->plan.alpha, "walk continuation probability")
      ->capture_default_str();
  cmd->add_option("--epsilon", args->plan.epsilon, "solver tolerance")->capture_default_str();
  cmd->add_option("--out", args->out, "output directory")->required();

  cmd->callback([args] {
    args->plan.strategies.clear();
    for (const std::string& s : args->strategies) args->plan.strategies.push_back(parse_strategy(s));
    args->plan.scopes.clear();
    for (const std::string& s : args->scopes) args->plan.scopes.push_back(parse_scope(s));

    Graph g;
    EgoView view = args->view.view(g);
    LabelMap labels = load_labels_file(args->view.labels);
    SweepResult result = run_sweep(view, labels, args->plan);

    std::filesystem::create_directories(args->out);
    with_out(args->out + "/sweep_rows.csv",
             [&](std::ostream& out) { write_sweep_rows_csv(result, out); });
    with_out(args->out + "/sweep_mean.csv",
             [&](std::ostream& out) { write_sweep_aggregates_csv(result, out); });
    with_out(args->out + "/sweep_skips.csv",
             [&](std::ostream& out) { write_sweep_skips_csv(result, out); });
    std::cout << "rows=" << result.rows.size() << " skips=" << result.skips.size() << '\n';
  });
}

void cmd_convergence(CLI::App* cmd) {
  struct Args {
    ViewArgs view;
    ConvergencePlan plan;
    std::string out;
  };
  auto args = std::make_shared<Args>();
  args->view.add_to(cmd, /*labels_required=*/true);
  cmd->add_option("--alpha", args->plan.alpha, "walk continuation probability")
      ->capture_default_str();
  cmd->add_option("--epsilon", args->plan.epsilons, "tolerance grid to sweep");
  cmd->add_option("--benchmark-epsilon", args->plan.benchmark_epsilon,
                  "tolerance of the reference solve")
      ->capture_default_str();
  cmd->add_option("--k", args->plan.ev_top, "highest-degree positives in the restart set")
      ->capture_default_str();
  cmd->add_option("--out", args->out, "CSV output (default stdout)");

  cmd->callback([args] {
    Graph g;
    EgoView view = args->view.view(g);
    LabelMap labels = load_labels_file(args->view.labels);
    ConvergenceResult result = run_convergence(view, labels, args->plan);
    with_out(args->out, [&](std::ostream& out) { write_convergence_csv(result, out); });
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"observer-centric community detection toolkit"};
  app.require_subcommand(1);
  cmd_gen(app.add_subcommand("gen", "generate a planted-community graph"));
  cmd_extract(app.add_subcommand("extract", "extract an observer's h-hop view"));
  cmd_rank(app.add_subcommand("rank", "score view nodes by a ranking method"));
  cmd_classify(app.add_subcommand("classify", "threshold a ranking into labels"));
  cmd_compare(app.add_subcommand("compare", "AUC comparison of the four methods"));
  cmd_sweep_ev(app.add_subcommand("sweep-ev", "AUC versus restart-set size"));
  cmd_convergence(app.add_subcommand("convergence", "solver error/time versus tolerance"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are config errors
  } catch (const egonet::ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const egonet::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
