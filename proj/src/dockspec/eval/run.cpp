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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "json.hpp"

#include "dockspec/corpus/corpus.hpp"
#include "dockspec/error.hpp"
#include "dockspec/eval/eval.hpp"
#include "dockspec/inference/infer.hpp"
#include "dockspec/syntax/dockerfile.hpp"
#include "dockspec/util/parallel.hpp"
#include "dockspec/util/strings.hpp"

namespace dockspec::eval {
namespace {

using nlohmann::ordered_json;

ordered_json summary_json(const Summary& s) {
  ordered_json j;
  j["min"] = s.min;
  j["median"] = s.median;
  j["mean"] = s.mean;
  j["max"] = s.max;
  j["stddev"] = s.stddev;
  return j;
}

double mean_of(const std::vector<double>& v) {
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

}  // namespace

Summary summarize(std::vector<double> values) {
  Summary s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  s.min = values.front();
  s.max = values.back();
  s.median = n % 2 == 1 ? values[n / 2] : (values[n / 2 - 1] + values[n / 2]) / 2.0;
  s.mean = mean_of(values);
  double sq = 0.0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.stddev = std::sqrt(sq / static_cast<double>(n));
  return s;
}

std::vector<double> SystemReport::distances() const {
  std::vector<double> out;
  for (const auto& p : pairs)
    if (!p.error) out.push_back(p.distance.normalized);
  return out;
}

PairResult evaluate_pair(const TargetFile& target, const std::string& generated,
                         const spec::WordLists& lists) {
  PairResult r;
  r.name = target.name;
  try {
    const auto target_doc = syntax::parse_dockerfile(target.text);
    const spec::DockerSpec target_spec =
        target.spec ? *target.spec : inference::infer_spec(target_doc, lists);
    const auto generated_doc = syntax::parse_dockerfile(generated);
    const auto obtained =
        inference::infer_generated_spec(generated_doc, target_spec.dependencies, lists);
    r.adherence = adherence(target_spec, obtained);
    r.distance = distance(syntax::build_ast(target_doc).root, syntax::build_ast(generated_doc).root);
    r.bleu = bleu4(util::split_whitespace(corpus::normalize_for_training(generated_doc)),
                   util::split_whitespace(corpus::normalize_for_training(target_doc)));
  } catch (const Error& e) {
    r.error = std::string(error_code_name(e.code())) + ": " + e.what();
  }
  return r;
}

RunReport evaluate_run(const std::vector<TargetFile>& targets,
                       const std::vector<SystemOutputs>& systems, const spec::WordLists& lists,
                       unsigned jobs) {
  if (targets.empty()) throw Error(ErrorCode::kEmptyInput, "no target Dockerfiles to evaluate");
  if (systems.empty()) throw Error(ErrorCode::kEmptyInput, "no generated outputs to evaluate");

  RunReport report;
  for (const auto& system : systems) {
    SystemReport sr;
    sr.name = system.name;
    sr.pairs.resize(targets.size());
    util::parallel_for(targets.size(), jobs, [&](std::size_t i) {
      auto it = system.files.find(targets[i].name);
      if (it == system.files.end()) {
        sr.pairs[i].name = targets[i].name;
        sr.pairs[i].error = "missing generated file";
        return;
      }
      sr.pairs[i] = evaluate_pair(targets[i], it->second, lists);
    });

    std::vector<double> bleus;
    for (const auto& p : sr.pairs) {
      if (p.error) continue;
      ++sr.evaluated;
      for (std::size_t f = 0; f < sr.adherence_means.size(); ++f)
        sr.adherence_means[f] += p.adherence.scores[f];
      bleus.push_back(p.bleu);
    }
    if (sr.evaluated > 0) {
      for (auto& m : sr.adherence_means) m /= static_cast<double>(sr.evaluated);
      sr.distance = summarize(sr.distances());
      sr.bleu_mean = mean_of(bleus);
    }
    report.systems.push_back(std::move(sr));
  }

  for (std::size_t a = 0; a < report.systems.size(); ++a) {
    for (std::size_t b = a + 1; b < report.systems.size(); ++b) {
      const auto da = report.systems[a].distances();
      const auto db = report.systems[b].distances();
      if (da.empty() || db.empty()) continue;
      Comparison c;
      c.a = report.systems[a].name;
      c.b = report.systems[b].name;
      c.test = mann_whitney_u(da, db);
      c.effect = cliffs_delta(da, db);
      report.comparisons.push_back(std::move(c));
    }
  }
  std::vector<double> ps;
  for (const auto& c : report.comparisons) ps.push_back(c.test.p);
  const auto adjusted = benjamini_hochberg(ps);
  for (std::size_t i = 0; i < adjusted.size(); ++i) report.comparisons[i].p_adjusted = adjusted[i];
  return report;
}

std::string report_to_json(const RunReport& report) {
  ordered_json j;
  j["systems"] = ordered_json::array();
  for (const auto& s : report.systems) {
    ordered_json js;
    js["name"] = s.name;
    js["pairs"] = s.pairs.size();
    js["evaluated"] = s.evaluated;
    js["adherence"] = ordered_json::object();
    for (std::size_t f = 0; f < s.adherence_means.size(); ++f)
      js["adherence"][std::string(spec::kFieldNames[f])] = s.adherence_means[f];
    js["distance"] = summary_json(s.distance);
    js["bleu4_mean"] = s.bleu_mean;
    js["results"] = ordered_json::array();
    for (const auto& p : s.pairs) {
      ordered_json jp;
      jp["name"] = p.name;
      if (p.error) {
        jp["error"] = *p.error;
      } else {
        jp["dependency_recall"] = p.adherence.dependency_recall();
        jp["adherence"] = p.adherence.scores;
        jp["distance"] = p.distance.raw;
        jp["normalized_distance"] = p.distance.normalized;
        jp["bleu4"] = p.bleu;
      }
      js["results"].push_back(std::move(jp));
    }
    j["systems"].push_back(std::move(js));
  }
  j["comparisons"] = ordered_json::array();
  for (const auto& c : report.comparisons) {
    ordered_json jc;
    jc["a"] = c.a;
    jc["b"] = c.b;
    jc["u"] = c.test.u;
    jc["p"] = c.test.p;
    jc["p_adjusted"] = c.p_adjusted;
    jc["exact"] = c.test.exact;
    jc["delta"] = c.effect.delta;
    jc["magnitude"] = c.effect.magnitude;
    j["comparisons"].push_back(std::move(jc));
  }
  return j.dump(2);
}

}  // namespace dockspec::eval
