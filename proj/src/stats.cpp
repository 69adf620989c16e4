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

#include "unimap/stats.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <thread>

#include "unimap/error.hpp"
#include "unimap/kernels.hpp"

namespace unimap {

namespace {

// Uniform Dyck word as bytes (1 = up). Picks which of 2n+1 steps go up by
// sequential selection, then rotates to just after the first minimum of the
// partial sums; the rotated walk stays non-negative until its final down
// step, which is dropped (cycle lemma).
void sample_steps(int n, SeededRng& rng, std::vector<char>& out) {
  const std::size_t len = 2 * static_cast<std::size_t>(n) + 1;
  std::vector<char> steps(len);
  std::uint64_t ups = static_cast<std::uint64_t>(n);
  long sum = 0;
  long low = 1;
  std::size_t at = 0;
  for (std::size_t i = 0; i < len; ++i) {
    const bool up = rng.uniform_below(len - i) < ups;
    steps[i] = up ? 1 : 0;
    ups -= up ? 1 : 0;
    sum += up ? 1 : -1;
    if (sum < low) {
      low = sum;
      at = i;
    }
  }
  out.resize(len - 1);
  std::copy(steps.begin() + static_cast<std::ptrdiff_t>(at) + 1, steps.end(), out.begin());
  std::copy(steps.begin(), steps.begin() + static_cast<std::ptrdiff_t>(at),
            out.begin() + static_cast<std::ptrdiff_t>(len - 1 - at));
}

DyckWord to_word(const std::vector<char>& steps) {
  DyckWord w(steps.size());
  for (std::size_t i = 0; i < steps.size(); ++i) w[i] = steps[i] != 0;
  return w;
}

// A uniform labelled tree kept as contour steps, increments and the labels
// in vertex_labels order. Buffers are reused between draws.
struct SampledLabels {
  std::vector<char> steps;
  std::vector<std::int8_t> increments;
  std::vector<std::int32_t> labels;
  std::vector<std::int32_t> stack;
  DyckWord word() const { return to_word(steps); }
};

void sample_labels(int n, SeededRng& rng, SampledLabels& s) {
  sample_steps(n, rng, s.steps);
  s.increments.resize(static_cast<std::size_t>(n));
  // 40 base-3 digits per 64-bit draw.
  constexpr std::uint64_t kPow40 = 12157665459056928801ull;  // 3^40
  for (std::size_t i = 0; i < s.increments.size(); i += 40) {
    std::uint64_t x = rng.uniform_below(kPow40);
    const std::size_t end = std::min(s.increments.size(), i + 40);
    for (std::size_t j = i; j < end; ++j, x /= 3) {
      s.increments[j] = static_cast<std::int8_t>(x % 3) - 1;
    }
  }
  s.labels.resize(static_cast<std::size_t>(n) + 1);
  s.labels[0] = 0;
  s.stack.assign(1, 0);
  std::size_t k = 0;
  for (char up : s.steps) {
    if (up) {
      const std::int32_t l = s.stack.back() + s.increments[k];
      s.labels[++k] = l;
      s.stack.push_back(l);
    } else {
      s.stack.pop_back();
    }
  }
}

SampledLabels sample_labels(int n, SeededRng& rng) {
  SampledLabels s;
  sample_labels(n, rng, s);
  return s;
}

// Vertex id of each position of vertex_labels.
std::vector<VertexId> position_ids(const DyckWord& w) {
  std::vector<VertexId> ids{VertexId{0}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i]) ids.push_back(VertexId{static_cast<HalfEdge>(i) + 1});
  }
  return ids;
}

void check_class(int g, int n) {
  if (g < 0 || (g >= 1 && n < 6 * g - 3) || n < 1) {
    fail(Errc::kEmptyClass, "no tree with " + std::to_string(g) + " triples and " +
                                std::to_string(n) + " edges");
  }
}

double factorial(int g) {
  double f = 1;
  for (int k = 2; k <= g; ++k) f *= k;
  return f;
}

// Running mean and second moment; merge() is the pairwise update.
struct Moments {
  std::uint64_t count = 0;
  double mean = 0;
  double m2 = 0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / static_cast<double>(count);
    m2 += d * (x - mean);
  }

  void merge(const Moments& o) {
    if (o.count == 0) return;
    if (count == 0) {
      *this = o;
      return;
    }
    const double total = static_cast<double>(count + o.count);
    const double d = o.mean - mean;
    mean += d * static_cast<double>(o.count) / total;
    m2 += o.m2 + d * d * static_cast<double>(count) * static_cast<double>(o.count) / total;
    count += o.count;
  }
};

template <class Result, class Fn>
std::vector<Result> run_blocks(std::uint64_t samples, const StatsConfig& cfg,
                               const SeededRng& rng, Fn fn) {
  if (cfg.block == 0 || cfg.workers < 1) {
    fail(Errc::kInvalidArgument, "need a positive block size and worker count");
  }
  const std::uint64_t blocks = (samples + cfg.block - 1) / cfg.block;
  std::vector<Result> out(blocks);
  const auto workers = static_cast<std::uint64_t>(
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(cfg.workers, blocks)));
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::uint64_t w) {
    try {
      for (std::uint64_t b = w; b < blocks; b += workers) {
        SeededRng r = rng.substream(b);
        const std::uint64_t count = std::min(cfg.block, samples - b * cfg.block);
        out[b] = fn(r, count);
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

Estimate finish(const std::vector<Moments>& blocks, double scale, std::string target) {
  Moments all;
  for (const auto& b : blocks) all.merge(b);
  Estimate e;
  e.samples = all.count;
  e.mean = scale * all.mean;
  const double var = all.count > 1 ? all.m2 / static_cast<double>(all.count - 1) : 0.0;
  e.std_error = scale * std::sqrt(var / static_cast<double>(all.count));
  e.target = std::move(target);
  return e;
}

void check_estimate_args(int g, int n, std::uint64_t samples) {
  if (g < 0) fail(Errc::kInvalidArgument, "negative genus");
  if (n < 1) fail(Errc::kInvalidArgument, "trees need at least one edge");
  if (samples < 100) fail(Errc::kInvalidArgument, "at least 100 samples are required");
}

std::string describe(const char* what, int g, int n) {
  return std::string(what) + " g=" + std::to_string(g) + " n=" + std::to_string(n);
}

}  // namespace

double gamma_constant() { return std::pow(2.0, -0.25) * std::sqrt(3.0); }

DyckWord sample_dyck_word(int n, SeededRng& rng) {
  if (n < 1) fail(Errc::kInvalidArgument, "trees need at least one edge");
  std::vector<char> steps;
  sample_steps(n, rng, steps);
  return to_word(steps);
}

RootedMap sample_plane_tree(int n, SeededRng& rng) {
  return tree_from_dyck(sample_dyck_word(n, rng));
}

LabelledTree sample_labelled_tree(int n, SeededRng& rng) {
  if (n < 1) fail(Errc::kInvalidArgument, "trees need at least one edge");
  SampledLabels s = sample_labels(n, rng);
  return LabelledTree{tree_from_dyck(s.word()), std::move(s.increments)};
}

TreeWithTriples sample_tree_with_triples(int g, int n, SeededRng& rng) {
  check_class(g, n);
  const auto vertices = static_cast<std::uint64_t>(n) + 1;
  while (true) {
    const DyckWord w = sample_dyck_word(n, rng);
    const std::vector<VertexId> ids = position_ids(w);
    std::vector<VertexId> chosen;
    while (chosen.size() < 3 * static_cast<std::size_t>(g)) {
      const VertexId v = ids[rng.uniform_below(vertices)];
      if (std::find(chosen.begin(), chosen.end(), v) == chosen.end()) chosen.push_back(v);
    }
    RootedMap t = tree_from_dyck(w);
    if (g > 0 && !is_non_singular(t, chosen)) continue;
    std::vector<Triple> triples(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
      triples[i] = {chosen[3 * i], chosen[3 * i + 1], chosen[3 * i + 2]};
    }
    return make_tree_with_triples(std::move(t), std::move(triples));
  }
}

RootedMap sample_dominant_map(int g, int n, SeededRng& rng) {
  if (g < 1) fail(Errc::kEmptyClass, "dominant maps have positive genus");
  return close_psi(sample_tree_with_triples(g, n, rng)).map;
}

WellLabelledTriples sample_well_labelled(int g, int n, SeededRng& rng) {
  check_class(g, n);
  const auto vertices = static_cast<std::uint64_t>(n) + 1;
  const std::uint64_t cube = vertices * vertices * vertices;
  SampledLabels s;
  while (true) {
    sample_labels(n, rng, s);
    const LabelHistogram h(s.labels);
    const std::uint64_t total = h.cube_sum();
    // Keep the tree with probability (S / (n+1)^3)^g so that every
    // label-coincident vertex sequence ends up equally likely.
    bool keep = true;
    for (int i = 0; i < g && keep; ++i) keep = rng.uniform_below(cube) < total;
    if (!keep) continue;

    std::vector<std::vector<std::size_t>> by_label(h.counts().size());
    for (std::size_t p = 0; p < s.labels.size(); ++p) {
      by_label[s.labels[p] - h.min_label()].push_back(p);
    }
    std::vector<std::size_t> picked;
    bool clash = false;
    for (int i = 0; i < g && !clash; ++i) {
      std::uint64_t r = rng.uniform_below(total);
      std::size_t k = 0;
      for (;; ++k) {
        const std::uint64_t x = h.counts()[k];
        if (r < x * x * x) break;
        r -= x * x * x;
      }
      for (int j = 0; j < 3; ++j) {
        const auto& bucket = by_label[k];
        const std::size_t p = bucket[rng.uniform_below(bucket.size())];
        if (std::find(picked.begin(), picked.end(), p) != picked.end()) clash = true;
        picked.push_back(p);
      }
    }
    if (clash) continue;

    const DyckWord word = s.word();
    const std::vector<VertexId> ids = position_ids(word);
    std::vector<VertexId> chosen;
    for (std::size_t p : picked) chosen.push_back(ids[p]);
    RootedMap t = tree_from_dyck(word);
    if (g > 0 && !is_non_singular(t, chosen)) continue;

    Labelling l(t.map().half_edge_count());
    for (std::size_t p = 0; p < ids.size(); ++p) l.set(ids[p], s.labels[p]);
    std::vector<Triple> triples(static_cast<std::size_t>(g));
    for (int i = 0; i < g; ++i) {
      triples[i] = {chosen[3 * i], chosen[3 * i + 1], chosen[3 * i + 2]};
    }
    return WellLabelledTriples{make_tree_with_triples(std::move(t), std::move(triples)),
                               std::move(l)};
  }
}

LabelHistogram::LabelHistogram(const std::vector<std::int32_t>& labels)
    : vertices_(static_cast<int>(labels.size())) {
  if (labels.empty()) fail(Errc::kInvalidArgument, "a tree has at least one vertex");
  const auto [lo, hi] = kernels::minmax(labels);
  min_ = lo;
  counts_.assign(static_cast<std::size_t>(hi - lo) + 1, 0);
  for (std::int32_t l : labels) ++counts_[l - lo];
}

std::uint32_t LabelHistogram::count(std::int32_t k) const {
  if (k < min_ || k > max_label()) return 0;
  return counts_[k - min_];
}

std::uint64_t LabelHistogram::cube_sum() const { return kernels::sum_cubes(counts_); }

LabelHistogram label_histogram(const LabelledTree& t) {
  return LabelHistogram(vertex_labels(dyck_from_tree(t.tree), t.increments));
}

double w_statistic(const LabelHistogram& h) {
  const double gm = gamma_constant();
  return static_cast<double>(h.cube_sum()) / (gm * gm * std::pow(h.n(), 2.5));
}

double w_statistic(const LabelledTree& t) { return w_statistic(label_histogram(t)); }

Estimate estimate_tg_moment(int g, int n, std::uint64_t samples, const SeededRng& rng,
                            const StatsConfig& cfg) {
  check_estimate_args(g, n, samples);
  const auto blocks = run_blocks<Moments>(samples, cfg, rng, [&](SeededRng& r, std::uint64_t k) {
    Moments m;
    SampledLabels sl;
    for (std::uint64_t s = 0; s < k; ++s) {
      sample_labels(n, r, sl);
      const double w = w_statistic(LabelHistogram(sl.labels));
      double v = 1;
      for (int i = 0; i < g; ++i) v *= w;
      m.add(v);
    }
    return m;
  });
  const double gm = gamma_constant();
  const double scale = 2.0 * std::pow(gm, 2 * g) /
                       (std::pow(12.0, g) * factorial(g) * std::sqrt(std::numbers::pi));
  return finish(blocks, scale, describe("t_g moment", g, n));
}

Estimate estimate_tg_probability(int g, int n, std::uint64_t samples,
                                 const SeededRng& rng, const StatsConfig& cfg) {
  check_estimate_args(g, n, samples);
  const auto vertices = static_cast<std::uint64_t>(n) + 1;
  const auto blocks = run_blocks<Moments>(samples, cfg, rng, [&](SeededRng& r, std::uint64_t k) {
    Moments m;
    SampledLabels sl;
    for (std::uint64_t s = 0; s < k; ++s) {
      sample_labels(n, r, sl);
      const std::vector<std::int32_t>& lab = sl.labels;
      bool hit = true;
      for (int i = 0; i < g; ++i) {
        const std::int32_t a = lab[r.uniform_below(vertices)];
        const std::int32_t b = lab[r.uniform_below(vertices)];
        const std::int32_t c = lab[r.uniform_below(vertices)];
        hit = hit && a == b && b == c;
      }
      m.add(hit ? 1.0 : 0.0);
    }
    return m;
  });
  const double scale = 2.0 * std::pow(static_cast<double>(n), 0.5 * g) /
                       (std::pow(12.0, g) * factorial(g) * std::sqrt(std::numbers::pi));
  return finish(blocks, scale, describe("t_g probability", g, n));
}

std::vector<std::pair<double, double>> ProfileMeasure::atoms() const {
  std::vector<std::pair<double, double>> out;
  for (std::size_t k = 0; k < numerators.size(); ++k) {
    if (numerators[k] == 0) continue;
    out.emplace_back(scale * static_cast<double>(k),
                     static_cast<double>(numerators[k]) / static_cast<double>(denominator));
  }
  return out;
}

std::int64_t ProfileMeasure::total_numerator() const {
  std::int64_t s = 0;
  for (std::int64_t x : numerators) s += x;
  return s;
}

ProfileMeasure profile_statistics(const WellLabelledTriples& w) {
  const CombMap& t = w.base.tree.map();
  const int n = t.n();
  const int g = static_cast<int>(w.base.triples.size());
  std::vector<std::int32_t> labels;
  for (VertexId v : t.vertices()) labels.push_back(w.labelling.at(v));
  const LabelHistogram h(labels);
  ProfileMeasure p;
  p.denominator = n + 2 - 2 * static_cast<std::int64_t>(g);
  p.scale = gamma_constant() * std::pow(static_cast<double>(n), -0.25);
  // Atom k holds the vertices of label min + k - 1.
  p.numerators.assign(h.counts().size() + 1, 0);
  for (std::size_t k = 0; k < h.counts().size(); ++k) p.numerators[k + 1] = h.counts()[k];
  p.numerators[0] += 1;
  for (const Triple& c : w.base.triples) {
    p.numerators[w.labelling.at(c[0]) - h.min_label() + 1] -= 2;
  }
  return p;
}

double radius(const WellLabelledTriples& w) {
  const ProfileMeasure p = profile_statistics(w);
  std::size_t last = 0;
  for (std::size_t k = 0; k < p.numerators.size(); ++k) {
    if (p.numerators[k] != 0) last = k;
  }
  return p.scale * static_cast<double>(last);
}

std::vector<std::pair<double, double>> PooledProfile::histogram(int bins) const {
  if (bins < 1) fail(Errc::kInvalidArgument, "need at least one bin");
  std::vector<std::pair<double, double>> out;
  const std::size_t atoms = numerators.size();
  const double width = scale * static_cast<double>(atoms) / bins;
  std::vector<std::int64_t> sums(static_cast<std::size_t>(bins), 0);
  for (std::size_t k = 0; k < atoms; ++k) sums[k * bins / std::max<std::size_t>(atoms, 1)] += numerators[k];
  const double total = static_cast<double>(samples) * static_cast<double>(denominator);
  for (int b = 0; b < bins; ++b) {
    out.emplace_back(width * b, total > 0 ? static_cast<double>(sums[b]) / total : 0.0);
  }
  return out;
}

PooledProfile pooled_profile(int g, int n, std::uint64_t samples, const SeededRng& rng,
                             const StatsConfig& cfg) {
  check_class(g, n);
  struct Block {
    std::vector<std::int64_t> numerators;
    std::vector<double> radii;
    std::int64_t denominator = 1;
    double scale = 0;
  };
  const auto blocks = run_blocks<Block>(samples, cfg, rng, [&](SeededRng& r, std::uint64_t k) {
    Block b;
    for (std::uint64_t s = 0; s < k; ++s) {
      const ProfileMeasure p = profile_statistics(sample_well_labelled(g, n, r));
      if (p.total_numerator() != p.denominator) {
        fail(Errc::kInvalidArgument, "profile mass is not one");
      }
      if (b.numerators.size() < p.numerators.size()) b.numerators.resize(p.numerators.size(), 0);
      std::size_t last = 0;
      for (std::size_t i = 0; i < p.numerators.size(); ++i) {
        b.numerators[i] += p.numerators[i];
        if (p.numerators[i] != 0) last = i;
      }
      b.radii.push_back(p.scale * static_cast<double>(last));
      b.denominator = p.denominator;
      b.scale = p.scale;
    }
    return b;
  });
  PooledProfile out;
  out.g = g;
  out.n = n;
  out.samples = samples;
  for (const Block& b : blocks) {
    if (out.numerators.size() < b.numerators.size()) out.numerators.resize(b.numerators.size(), 0);
    for (std::size_t i = 0; i < b.numerators.size(); ++i) out.numerators[i] += b.numerators[i];
    out.radii.insert(out.radii.end(), b.radii.begin(), b.radii.end());
    out.denominator = b.denominator;
    out.scale = b.scale;
  }
  return out;
}

}  // namespace unimap
