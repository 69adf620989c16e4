// Copyright 2026 The unimap Authors.
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

#pragma once

// Uniform samplers for trees, trees with triples and their labelled
// versions, and Monte-Carlo estimators built on label histograms.
//
// Estimators split the work into fixed-size blocks. Block b always draws
// from rng.substream(b) and block results are merged in block order, so the
// output does not depend on the number of workers.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "unimap/bijection.hpp"
#include "unimap/labelled.hpp"
#include "unimap/rng.hpp"
#include "unimap/trees.hpp"

namespace unimap {

// gamma = 2^{-1/4} 3^{1/2}
double gamma_constant();

// Uniform Dyck word of semilength n, by rotating a uniform shuffle of the
// steps to its first minimum (cycle lemma).
DyckWord sample_dyck_word(int n, SeededRng& rng);
// Both throw InvalidArgument when n < 1.
RootedMap sample_plane_tree(int n, SeededRng& rng);
LabelledTree sample_labelled_tree(int n, SeededRng& rng);

// Throw EmptyClass when g < 0, or g >= 1 and n < 6g - 3.
TreeWithTriples sample_tree_with_triples(int g, int n, SeededRng& rng);
RootedMap sample_dominant_map(int g, int n, SeededRng& rng);
WellLabelledTriples sample_well_labelled(int g, int n, SeededRng& rng);

class LabelHistogram {
 public:
  // labels: one entry per vertex.
  explicit LabelHistogram(const std::vector<std::int32_t>& labels);
  int n() const noexcept { return vertices_ - 1; }
  std::int32_t min_label() const noexcept { return min_; }
  std::int32_t max_label() const noexcept { return min_ + static_cast<std::int32_t>(counts_.size()) - 1; }
  // X(k), zero outside the support.
  std::uint32_t count(std::int32_t k) const;
  const std::vector<std::uint32_t>& counts() const noexcept { return counts_; }
  // Sum over k of X(k)^3, exact.
  std::uint64_t cube_sum() const;

 private:
  int vertices_ = 0;
  std::int32_t min_ = 0;
  std::vector<std::uint32_t> counts_;  // counts_[k - min_]
};

LabelHistogram label_histogram(const LabelledTree& t);

// sum X(k)^3 / (gamma^2 n^{5/2})
double w_statistic(const LabelledTree& t);
double w_statistic(const LabelHistogram& h);

struct Estimate {
  double mean = 0;
  double std_error = 0;
  std::uint64_t samples = 0;
  std::string target;
};

struct StatsConfig {
  int workers = 1;
  std::uint64_t block = 1000;  // samples per substream
};

// 2 gamma^{2g} / (12^g g! sqrt(pi)) times the mean of W_n^g. Throws
// InvalidArgument when samples < 100 or n < 1.
Estimate estimate_tg_moment(int g, int n, std::uint64_t samples, const SeededRng& rng,
                            const StatsConfig& cfg = {});
// 2 n^{g/2} / (12^g g! sqrt(pi)) times the frequency with which 3g
// independent uniform vertices have equal labels within each triple.
Estimate estimate_tg_probability(int g, int n, std::uint64_t samples,
                                 const SeededRng& rng, const StatsConfig& cfg = {});

// Atom k sits at position scale * k and weighs numerators[k] / denominator.
struct ProfileMeasure {
  std::vector<std::int64_t> numerators;
  std::int64_t denominator = 1;  // n + 2 - 2g
  double scale = 0;              // gamma n^{-1/4}
  std::vector<std::pair<double, double>> atoms() const;
  std::int64_t total_numerator() const;
};

// Label histogram shifted so the smallest label sits at 1, plus the pointed
// vertex at 0, minus two vertices per glued triple.
ProfileMeasure profile_statistics(const WellLabelledTriples& w);
// scale times the largest occupied atom index.
double radius(const WellLabelledTriples& w);

struct PooledProfile {
  int g = 0;
  int n = 0;
  std::uint64_t samples = 0;
  double scale = 0;
  // Summed integer masses per atom index over all samples; divide by
  // samples * denominator for the pooled measure.
  std::vector<std::int64_t> numerators;
  std::int64_t denominator = 1;
  std::vector<double> radii;  // per sample, in sample order
  // bins equal-width bins over [0, scale * numerators.size()): (left edge,
  // mass).
  std::vector<std::pair<double, double>> histogram(int bins) const;
};

PooledProfile pooled_profile(int g, int n, std::uint64_t samples, const SeededRng& rng,
                             const StatsConfig& cfg = {});

}  // namespace unimap
