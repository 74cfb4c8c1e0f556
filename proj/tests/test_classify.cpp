#include <catch2/catch_amalgamated.hpp>

#include <limits>
#include <random>

#include "egonet/classify.hpp"
#include "egonet/sbm.hpp"
#include "support/oracles.hpp"

using namespace egonet;

namespace {

// scores assigned directly by local id for threshold tests
ScoreVector direct_scores(const EgoView& view, std::vector<double> values) {
  ScoreVector s;
  s.method = "direct";
  s.values = std::move(values);
  REQUIRE(s.values.size() == view.node_count());
  return s;
}

}  // namespace

TEST_CASE("level-1 scope of a star is exactly the leaves", "[classify]") {
  Graph g = oracle::make_graph(
      {{"c", "l1"}, {"c", "l2"}, {"c", "l3"}, {"c", "l4"}, {"c", "l5"}});
  EgoView view = extract_ego(g, "c", 1);
  auto test = test_set(view, TestScope::level1());
  REQUIRE(test.size() == 5);
  for (LocalId v : test) REQUIRE(view.level[v] == 1);
}

TEST_CASE("within-2 scope of the path fixture is b and c", "[classify]") {
  Graph g = oracle::make_graph({{"a", "b"}, {"b", "c"}, {"c", "d"}});
  EgoView view = extract_ego(g, "a", 2);
  auto test = test_set(view, TestScope::within2());
  REQUIRE(test.size() == 2);
  REQUIRE(view.name(test[0]) == "b");
  REQUIRE(view.name(test[1]) == "c");
}

TEST_CASE("scopes nest by ring arithmetic", "[classify]") {
  SbmSpec spec;
  spec.sizes = {40, 40};
  spec.p_in = 0.2;
  spec.p_out = 0.03;
  spec.rng_seed = 2;
  SbmResult r = gen_sbm(spec);
  EgoView view = extract_ego(r.graph, "0", 2);

  auto level1 = test_set(view, TestScope::level1());
  auto within2 = test_set(view, TestScope::within2());
  REQUIRE(level1.size() + view.ring_size(2) == within2.size());
  REQUIRE(level1.size() == view.ring_size(1));
}

TEST_CASE("scope beyond the view radius is rejected", "[classify]") {
  Graph g = oracle::make_graph({{"a", "b"}, {"b", "c"}});
  EgoView view = extract_ego(g, "a", 1);
  REQUIRE_THROWS_AS(test_set(view, TestScope::within2()), ConfigError);
  REQUIRE_THROWS_AS(test_set(view, TestScope{0}), ConfigError);
}

TEST_CASE("scope names parse and print", "[classify]") {
  REQUIRE(parse_scope("level1").levels == 1);
  REQUIRE(parse_scope("within2").levels == 2);
  REQUIRE(to_string(TestScope::within2()) == "within2");
  REQUIRE_THROWS_AS(parse_scope("within3"), ConfigError);
}

TEST_CASE("count threshold keeps exactly the top k", "[classify]") {
  Graph g = oracle::make_graph({{"o", "a"}, {"o", "b"}, {"o", "c"}, {"o", "d"}});
  EgoView view = extract_ego(g, "o", 1);
  ScoreVector scores = direct_scores(view, {0.0, 0.9, 0.4, 0.7, 0.1});

  Prediction top2 = threshold_by_count(view, scores, TestScope::level1(), 2);
  REQUIRE(top2.positive_count() == 2);
  REQUIRE(top2.threshold == 0.7);
  REQUIRE(top2.positive[0] == 1);  // a = 0.9
  REQUIRE(top2.positive[2] == 1);  // c = 0.7
  REQUIRE(top2.positive[1] == 0);
  REQUIRE(top2.positive[3] == 0);
}

TEST_CASE("count threshold edge cases", "[classify]") {
  Graph g = oracle::make_graph({{"o", "a"}, {"o", "b"}});
  EgoView view = extract_ego(g, "o", 1);
  ScoreVector scores = direct_scores(view, {0.0, 0.3, 0.8});

  Prediction none = threshold_by_count(view, scores, TestScope::level1(), 0);
  REQUIRE(none.positive_count() == 0);
  REQUIRE(none.threshold == std::numeric_limits<double>::infinity());

  Prediction all = threshold_by_count(view, scores, TestScope::level1(), 2);
  REQUIRE(all.positive_count() == 2);
  REQUIRE(all.threshold == 0.3);

  REQUIRE_THROWS_AS(threshold_by_count(view, scores, TestScope::level1(), 3), ConfigError);
}

TEST_CASE("a tie group straddling the cut is split by global id", "[classify]") {
  Graph g = oracle::make_graph({{"o", "a"}, {"o", "b"}, {"o", "c"}, {"o", "d"}});
  EgoView view = extract_ego(g, "o", 1);
  // a, c, d all tie; k=2 admits a then c (smaller global ids), not d
  ScoreVector scores = direct_scores(view, {0.0, 0.5, 0.2, 0.5, 0.5});

  Prediction pred = threshold_by_count(view, scores, TestScope::level1(), 2);
  REQUIRE(pred.positive_count() == 2);
  REQUIRE(pred.threshold == 0.5);
  REQUIRE(pred.positive[0] == 1);  // a
  REQUIRE(pred.positive[2] == 1);  // c
  REQUIRE(pred.positive[3] == 0);  // d loses the id tie-break
}

TEST_CASE("growing k never flips a positive back to negative", "[classify]") {
  std::mt19937_64 rng(31);
  Graph g = oracle::random_connected_graph(rng, 20, 40, 0.2, 0.4);
  EgoView view = extract_ego(g, NodeId{0}, 2);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<double> values(view.node_count());
  for (double& v : values) v = coin(rng) < 0.3 ? 0.5 : coin(rng);  // plenty of ties
  ScoreVector scores = direct_scores(view, values);

  auto test = test_set(view, TestScope::within2());
  Prediction prev = threshold_by_count(view, scores, TestScope::within2(), 0);
  for (std::size_t k = 1; k <= test.size(); ++k) {
    Prediction next = threshold_by_count(view, scores, TestScope::within2(), k);
    REQUIRE(next.positive_count() == k);
    for (std::size_t i = 0; i < test.size(); ++i) {
      if (prev.positive[i]) REQUIRE(next.positive[i]);
    }
    // a strictly better-scored node is predicted whenever a worse one is
    for (std::size_t i = 0; i < test.size(); ++i) {
      for (std::size_t j = 0; j < test.size(); ++j) {
        if (scores[test[i]] > scores[test[j]] && next.positive[j]) REQUIRE(next.positive[i]);
      }
    }
    prev = std::move(next);
  }
}

TEST_CASE("prior rule computes the expected count", "[classify]") {
  REQUIRE(prior_count(0.5, 0.19, 0.9, 446) == 243);
  REQUIRE(prior_count(0.0, 0.2, 0.9, 100) == 20);
  REQUIRE(prior_count(1.0, 0.2, 1.0, 57) == 57);
  REQUIRE_THROWS_AS(prior_count(1.2, 0.2, 0.9, 10), ConfigError);
  REQUIRE_THROWS_AS(prior_count(0.5, -0.1, 0.9, 10), ConfigError);
  REQUIRE_THROWS_AS(prior_count(0.5, 0.2, 1.7, 10), ConfigError);
}

TEST_CASE("prior threshold delegates to the count rule", "[classify]") {
  Graph g = oracle::make_graph({{"o", "a"}, {"o", "b"}, {"o", "c"}, {"o", "d"}});
  EgoView view = extract_ego(g, "o", 1);
  ScoreVector scores = direct_scores(view, {0.0, 0.9, 0.4, 0.7, 0.1});

  // k = round((0.1*0.5 + 0.9*0.5) * 4) = 2
  Prediction pred = threshold_by_prior(view, scores, TestScope::level1(), 0.5, 0.1, 0.9);
  Prediction direct = threshold_by_count(view, scores, TestScope::level1(), 2);
  REQUIRE(pred.positive == direct.positive);
  REQUIRE(pred.threshold == direct.threshold);

  bool saw_rule = false;
  for (auto& [key, value] : pred.params) {
    if (key == "rule") {
      REQUIRE(value == "prior");
      saw_rule = true;
    }
  }
  REQUIRE(saw_rule);
}

TEST_CASE("predictions carry the ranking provenance", "[classify]") {
  Graph g = oracle::make_graph({{"o", "a"}, {"o", "b"}});
  EgoView view = extract_ego(g, "o", 1);
  ScoreVector scores = direct_scores(view, {0.0, 0.3, 0.8});
  scores.tag("alpha", "0.9");

  Prediction pred = threshold_by_count(view, scores, TestScope::level1(), 1);
  REQUIRE(pred.method == "direct");
  bool saw_alpha = false, saw_k = false, saw_scope = false;
  for (auto& [key, value] : pred.params) {
    saw_alpha = saw_alpha || (key == "alpha" && value == "0.9");
    saw_k = saw_k || (key == "k" && value == "1");
    saw_scope = saw_scope || (key == "scope" && value == "level1");
  }
  REQUIRE(saw_alpha);
  REQUIRE(saw_k);
  REQUIRE(saw_scope);
}
