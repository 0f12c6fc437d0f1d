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
#include <cstdint>
#include <numeric>

#include "dockspec/error.hpp"
#include "dockspec/eval/eval.hpp"

namespace dockspec::eval {
namespace {

// Midranks of the pooled sample, doubled so they stay integral.
std::vector<std::int64_t> doubled_midranks(const std::vector<double>& pooled) {
  std::vector<std::size_t> order(pooled.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return pooled[x] < pooled[y]; });
  std::vector<std::int64_t> ranks(pooled.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // Positions i..j share rank ((i+1) + (j+1)) / 2.
    const auto twice = static_cast<std::int64_t>(i + j + 2);
    for (std::size_t t = i; t <= j; ++t) ranks[order[t]] = twice;
    i = j + 1;
  }
  return ranks;
}

double exact_p(const std::vector<std::int64_t>& ranks, std::size_t na, std::int64_t twice_u_obs) {
  const std::size_t n = ranks.size();
  const std::int64_t max_sum = std::accumulate(ranks.begin(), ranks.end(), std::int64_t{0});
  // ways[k][s]: number of k-subsets whose doubled rank sum is s.
  std::vector<std::vector<double>> ways(na + 1, std::vector<double>(max_sum + 1, 0.0));
  ways[0][0] = 1.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = std::min(na, i + 1); k-- > 0;)
      for (std::int64_t s = max_sum - ranks[i]; s >= 0; --s)
        if (ways[k][s] != 0.0) ways[k + 1][s + ranks[i]] += ways[k][s];

  const auto na_i = static_cast<std::int64_t>(na);
  const auto nb_i = static_cast<std::int64_t>(n - na);
  const std::int64_t center = na_i * nb_i;  // 2 * mean U
  const std::int64_t observed = std::llabs(twice_u_obs - center);
  double extreme = 0.0;
  double total = 0.0;
  for (std::int64_t s = 0; s <= max_sum; ++s) {
    const double w = ways[na][s];
    if (w == 0.0) continue;
    total += w;
    const std::int64_t twice_u = s - na_i * (na_i + 1);
    if (std::llabs(twice_u - center) >= observed) extreme += w;
  }
  return std::min(1.0, extreme / total);
}

}  // namespace

MannWhitney mann_whitney_u(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptySample, "Mann-Whitney needs two non-empty samples");
  std::vector<double> pooled(a);
  pooled.insert(pooled.end(), b.begin(), b.end());
  const auto ranks = doubled_midranks(pooled);
  const std::size_t na = a.size();
  const std::size_t nb = b.size();
  const std::size_t n = na + nb;

  std::int64_t twice_rank_sum = 0;
  for (std::size_t i = 0; i < na; ++i) twice_rank_sum += ranks[i];
  const auto na_i = static_cast<std::int64_t>(na);
  const std::int64_t twice_u = twice_rank_sum - na_i * (na_i + 1);

  MannWhitney result;
  result.u = static_cast<double>(twice_u) / 2.0;
  if (n <= kExactMannWhitneyLimit) {
    result.exact = true;
    result.p = exact_p(ranks, na, twice_u);
    return result;
  }

  double tie_term = 0.0;
  std::vector<double> sorted(pooled);
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && sorted[j] == sorted[i]) ++j;
    const double t = static_cast<double>(j - i);
    tie_term += t * t * t - t;
    i = j;
  }
  const double dn = static_cast<double>(n);
  const double prod = static_cast<double>(na) * static_cast<double>(nb);
  const double variance = prod / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));
  if (variance <= 0.0) {
    result.p = 1.0;
    return result;
  }
  const double dev = std::max(0.0, std::fabs(result.u - prod / 2.0) - 0.5);
  const double z = dev / std::sqrt(variance);
  result.p = std::min(1.0, std::erfc(z / std::sqrt(2.0)));
  return result;
}

std::vector<double> benjamini_hochberg(const std::vector<double>& p) {
  const std::size_t m = p.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return p[x] < p[y]; });
  std::vector<double> adjusted(m);
  double running = 1.0;
  for (std::size_t r = m; r-- > 0;) {
    const std::size_t i = order[r];
    running = std::min(running, p[i] * static_cast<double>(m) / static_cast<double>(r + 1));
    adjusted[i] = std::min(1.0, running);
  }
  return adjusted;
}

std::string_view cliffs_magnitude(double delta) {
  const double d = std::fabs(delta);
  if (d < 0.147) return "negligible";
  if (d < 0.33) return "small";
  if (d < 0.474) return "medium";
  return "large";
}

CliffsDelta cliffs_delta(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.empty() || b.empty()) throw Error(ErrorCode::kEmptySample, "Cliff's delta needs two non-empty samples");
  // Count pairs through the sorted second sample.
  std::vector<double> sb(b);
  std::sort(sb.begin(), sb.end());
  std::int64_t dominance = 0;
  for (double x : a) {
    const auto below = std::lower_bound(sb.begin(), sb.end(), x) - sb.begin();
    const auto above = sb.end() - std::upper_bound(sb.begin(), sb.end(), x);
    dominance += below - above;
  }
  CliffsDelta r;
  r.delta = static_cast<double>(dominance) /
            (static_cast<double>(a.size()) * static_cast<double>(b.size()));
  r.magnitude = std::string(cliffs_magnitude(r.delta));
  return r;
}

}  // namespace dockspec::eval
