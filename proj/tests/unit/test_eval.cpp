// Copyright 2026 The dockspec Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <cmath>
#include <random>

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/eval/eval.hpp"
#include "dockspec/inference/infer.hpp"
#include "dockspec/util/strings.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace dockspec;
using namespace dockspec::eval;
using syntax::TreeNode;

namespace {

const std::vector<std::string> kLabels = {"a", "b", "c"};

std::vector<std::string> words(const std::string& s) { return util::split_whitespace(s); }

}  // namespace

TEST_CASE("adherence") {
  spec::DockerSpec t;
  t.os = "alpine";
  t.dependencies = {"a", "b"};
  t.uses_env = true;
  auto same = adherence(t, t);
  for (double v : same.scores) CHECK(v == 1.0);

  spec::DockerSpec o = t;
  o.dependencies = {"a", "z"};
  o.uses_env = false;
  o.os = "debian";
  const auto r = adherence(t, o);
  CHECK(r.dependency_recall() == 0.5);
  CHECK(r.scores[0] == 0.0);
  CHECK(r.scores[1] == 1.0);
  CHECK(r.scores[4] == 0.0);

  spec::DockerSpec none;
  CHECK(adherence(none, o).dependency_recall() == 1.0);
}

TEST_CASE("tree edit distance basics") {
  const TreeNode a{"a", {}};
  const TreeNode b{"b", {}};
  CHECK(tree_edit_distance(a, a) == 0);
  CHECK(tree_edit_distance(a, b) == 1);
  CHECK(normalized_distance(a, b) == 0.5);
  CHECK(normalized_distance(a, a) == 0.0);
  const TreeNode t1{"r", {{"x", {}}, {"y", {{"z", {}}}}}};
  const TreeNode t2{"r", {{"y", {{"z", {}}}}}};
  CHECK(tree_edit_distance(t1, t2) == 1);
  CHECK(tree_edit_distance(t2, t1) == 1);
  // Deleting an inner node lifts its children.
  const TreeNode t3{"r", {{"z", {}}}};
  CHECK(tree_edit_distance(t2, t3) == 1);
}

TEST_CASE("tree edit distance matches exhaustive search") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 300; ++i) {
    const auto a = oracle::random_tree(rng, 5, kLabels);
    const auto b = oracle::random_tree(rng, 5, kLabels);
    CHECK(tree_edit_distance(a, b) == oracle::tree_edit_distance(a, b));
  }
}

TEST_CASE("tree edit distance is a metric on small trees") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const auto a = oracle::random_tree(rng, 6, kLabels);
    const auto b = oracle::random_tree(rng, 6, kLabels);
    const auto c = oracle::random_tree(rng, 6, kLabels);
    CHECK(tree_edit_distance(a, b) == tree_edit_distance(b, a));
    CHECK(tree_edit_distance(a, c) <= tree_edit_distance(a, b) + tree_edit_distance(b, c));
    const double n = normalized_distance(a, b);
    CHECK(n >= 0.0);
    CHECK(n < 1.0);
  }
}

TEST_CASE("bleu4") {
  const auto x = words("the quick brown fox jumps over");
  CHECK(bleu4(x, x) == doctest::Approx(1.0));
  // the:2 cat sat on mat vs the:2 cat is on mat: 1-4 gram matches 5/6, 3/5, 1/4, 0/3.
  const double hand = std::pow(5.0 / 6 * 3.0 / 5 * 1.0 / 4 * (1.0 / 12), 0.25);
  CHECK(bleu4(words("the cat sat on the mat"), words("the cat is on the mat")) ==
        doctest::Approx(hand).epsilon(1e-12));
  // Nothing shared: every precision smooths to 1/20.
  const double disjoint = bleu4(words("a b c d e f g h i j"), words("k l m n o p q r s t"));
  CHECK(disjoint == doctest::Approx(0.05).epsilon(1e-12));
  // Short candidate gets the brevity penalty.
  CHECK(bleu4(words("a b c d"), words("a b c d e f g h")) == doctest::Approx(std::exp(1.0 - 2.0)));
  CHECK_THROWS_AS(bleu4({}, x), Error);
}

TEST_CASE("bleu4 never increases when a matching token is replaced") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> tok(0, 6);
  for (int i = 0; i < 50; ++i) {
    std::vector<std::string> ref;
    for (int k = 0; k < 12; ++k) ref.push_back("t" + std::to_string(tok(rng)));
    auto cand = ref;
    double prev = bleu4(cand, ref);
    CHECK(prev == doctest::Approx(1.0));
    for (std::size_t k = 0; k < cand.size(); k += 3) {
      cand[k] = "unseen" + std::to_string(k);
      const double now = bleu4(cand, ref);
      CHECK(now <= prev + 1e-15);
      prev = now;
    }
  }
}

TEST_CASE("layer matching") {
  const std::vector<std::string> orig = {"l1", "l2", "l3", "l4"};
  auto same = layer_match(orig, orig, "img", "img");
  CHECK(same.digest_equal);
  CHECK(same.matching_layer_ratio == 1.0);
  auto disjoint = layer_match(orig, {"x"}, "img", "other");
  CHECK_FALSE(disjoint.digest_equal);
  CHECK(disjoint.matching_layer_ratio == 0.0);
  CHECK(layer_match(orig, {"l3", "z"}, "a", "b").matching_layer_ratio == 0.25);
  CHECK_THROWS_AS(layer_match({}, orig, "a", "b"), Error);
  CHECK_THROWS_AS(layer_match(orig, {"l1"}, "img", "img"), Error);

  const auto list = parse_layer_manifest(R"(["l1","l2"])");
  CHECK(list.layers.size() == 2);
  CHECK_FALSE(list.image_digest);
  CHECK(layer_match(list, list).digest_equal);
  const auto obj = parse_layer_manifest(R"({"image":"sha256:1","layers":["l1"]})");
  CHECK(*obj.image_digest == "sha256:1");
  CHECK_THROWS_AS(parse_layer_manifest("{}"), Error);
  CHECK_THROWS_AS(parse_layer_manifest("[1]"), Error);
}

TEST_CASE("mann whitney examples") {
  const auto flat = mann_whitney_u({3, 3, 3}, {3, 3});
  CHECK(flat.p == 1.0);
  const auto r = mann_whitney_u({1, 2}, {3, 4});
  CHECK(r.u == 0.0);
  CHECK(r.exact);
  CHECK(r.p == doctest::Approx(2.0 / 6.0));
  CHECK_THROWS_AS(mann_whitney_u({}, {1}), Error);
}

TEST_CASE("mann whitney exact p matches enumeration") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> value(0, 5);
  for (std::size_t na = 1; na <= 8; ++na) {
    for (std::size_t nb = 1; na + nb <= 12; ++nb) {
      for (int rep = 0; rep < 3; ++rep) {
        std::vector<double> a(na), b(nb);
        for (auto& v : a) v = value(rng);
        for (auto& v : b) v = value(rng);
        CAPTURE(na);
        CAPTURE(nb);
        CHECK(mann_whitney_u(a, b).p == doctest::Approx(oracle::mann_whitney_p(a, b)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("mann whitney normal approximation") {
  std::vector<double> a, b;
  for (int i = 0; i < 15; ++i) a.push_back(i);
  for (int i = 0; i < 15; ++i) b.push_back(i + 30);
  const auto r = mann_whitney_u(a, b);
  CHECK_FALSE(r.exact);
  CHECK(r.u == 0.0);
  CHECK(r.p < 1e-4);
  // Symmetric samples are not significant.
  CHECK(mann_whitney_u(a, a).p == doctest::Approx(1.0));
}

TEST_CASE("benjamini hochberg") {
  CHECK(benjamini_hochberg({0.03}) == std::vector<double>{0.03});
  const auto two = benjamini_hochberg({0.01, 0.04});
  CHECK(two[0] == doctest::Approx(0.02));
  CHECK(two[1] == doctest::Approx(0.04));
  for (double p : benjamini_hochberg({0.2, 0.2, 0.2})) CHECK(p == doctest::Approx(0.2));
  const std::vector<double> raw = {0.5, 0.001, 0.04, 0.9, 0.03};
  const auto adj = benjamini_hochberg(raw);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    CHECK(adj[i] >= raw[i]);
    CHECK(adj[i] <= 1.0);
  }
  auto sorted_raw = raw;
  std::sort(sorted_raw.begin(), sorted_raw.end());
  const auto adj_sorted = benjamini_hochberg(sorted_raw);
  CHECK(std::is_sorted(adj_sorted.begin(), adj_sorted.end()));
}

TEST_CASE("cliffs delta") {
  CHECK(cliffs_delta({1, 2}, {1, 2}).delta == 0.0);
  CHECK(cliffs_delta({1, 2}, {1, 2}).magnitude == "negligible");
  const auto dom = cliffs_delta({5, 6}, {1, 2});
  CHECK(dom.delta == 1.0);
  CHECK(dom.magnitude == "large");
  CHECK(cliffs_delta({1, 3}, {2}).delta == 0.0);
  CHECK(cliffs_magnitude(0.2) == "small");
  CHECK(cliffs_magnitude(-0.4) == "medium");
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> value(0, 9);
  for (int i = 0; i < 100; ++i) {
    std::vector<double> a(1 + i % 7), b(1 + i % 5);
    for (auto& v : a) v = value(rng);
    for (auto& v : b) v = value(rng);
    CHECK(cliffs_delta(a, b).delta == oracle::cliffs_delta(a, b));
    CHECK(cliffs_delta(a, b).delta == -cliffs_delta(b, a).delta);
  }
  CHECK_THROWS_AS(cliffs_delta({}, {1}), Error);
}

TEST_CASE("summaries") {
  const auto s = summarize({4, 1, 3, 2});
  CHECK(s.min == 1);
  CHECK(s.max == 4);
  CHECK(s.median == 2.5);
  CHECK(s.mean == 2.5);
  CHECK(s.stddev == doctest::Approx(std::sqrt(1.25)));
}

TEST_CASE("evaluate_run with outputs equal to targets") {
  std::vector<TargetFile> targets;
  SystemOutputs same{"same", {}};
  for (const char* name : {"tomcat_ffmpeg.Dockerfile", "tomcat_alpine.Dockerfile", "debian_slim.Dockerfile"}) {
    targets.push_back({name, fixture_text(name), std::nullopt});
    same.files[name] = fixture_text(name);
  }
  const auto report = evaluate_run(targets, {same}, spec::default_word_lists());
  REQUIRE(report.systems.size() == 1);
  const auto& s = report.systems[0];
  CHECK(s.evaluated == 3);
  for (double m : s.adherence_means) CHECK(m == 1.0);
  CHECK(s.distance.max == 0.0);
  CHECK(s.bleu_mean == doctest::Approx(1.0));
  CHECK(report.comparisons.empty());
  CHECK_THROWS_AS(evaluate_run({}, {same}, spec::default_word_lists()), Error);
}

TEST_CASE("evaluate_run composes the pair metrics") {
  const auto& lists = spec::default_word_lists();
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"FROM tomcat:8\n# Install ffmpeg\nRUN apt-get install -y ffmpeg\n",
       "FROM tomcat:8\nRUN apt-get install -y git\n"},
      {"FROM alpine:3.15\n# Install redis\nRUN apk add redis\nEXPOSE 6379\n",
       "FROM alpine:3.15\nRUN apk add redis\n"},
      {"FROM node:16\n# installing express\nRUN npm install express\n",
       "FROM python:3.9\nRUN pip install flask\nCMD [\"python\"]\n"}};
  std::vector<TargetFile> targets;
  SystemOutputs sys{"sys", {}};
  SystemOutputs other{"other", {}};
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const std::string name = "t" + std::to_string(i);
    targets.push_back({name, pairs[i].first, std::nullopt});
    sys.files[name] = pairs[i].second;
    other.files[name] = pairs[i].first;
  }
  other.files.erase("t2");
  const auto report = evaluate_run(targets, {sys, other}, lists, 3);
  const auto& s = report.systems[0];
  REQUIRE(s.evaluated == 3);
  double recall_sum = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto tdoc = syntax::parse_dockerfile(pairs[i].first);
    const auto gdoc = syntax::parse_dockerfile(pairs[i].second);
    const auto tspec = inference::infer_spec(tdoc, lists);
    const auto a = adherence(tspec, inference::infer_generated_spec(gdoc, tspec.dependencies, lists));
    recall_sum += a.dependency_recall();
    const auto d = distance(syntax::build_ast(tdoc).root, syntax::build_ast(gdoc).root);
    CHECK(s.pairs[i].distance.raw == d.raw);
    CHECK(s.pairs[i].distance.normalized == d.normalized);
    CHECK(s.pairs[i].adherence.scores == a.scores);
    CHECK(s.pairs[i].bleu == bleu4(words(corpus::normalize_for_training(gdoc)),
                                   words(corpus::normalize_for_training(tdoc))));
  }
  CHECK(s.adherence_means[2] == doctest::Approx(recall_sum / 3));
  // The second system is missing one output; the failure is recorded, not fatal.
  const auto& o = report.systems[1];
  CHECK(o.evaluated == 2);
  CHECK(o.pairs[2].error);
  REQUIRE(report.comparisons.size() == 1);
  CHECK(report.comparisons[0].p_adjusted == report.comparisons[0].test.p);
  CHECK(report_to_json(report).find("\"comparisons\"") != std::string::npos);
}
