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

#include "unimap/enumerate.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <thread>

#include "unimap/error.hpp"
#include "unimap/scheme.hpp"
#include "unimap/trees.hpp"

namespace unimap {

namespace {

using Rational = boost::multiprecision::cpp_rational;

void check_genus_range(int g, int n) {
  if (n < 1 || g < 0 || 2 * g > n) {
    fail(Errc::kGenusOutOfRange, "need n >= 1 and 0 <= g <= n/2, got g=" +
                                     std::to_string(g) + " n=" + std::to_string(n));
  }
}

BigInt factorial(int n) {
  BigInt r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

class InvolutionWalker {
 public:
  InvolutionWalker(int n, int unit,
                   const std::function<void(int, std::span<const HalfEdge>)>& visit)
      : size_(2 * n), unit_(unit), visit_(visit), alpha_(size_),
        buffers_(static_cast<std::size_t>(n) + 1) {}

  void run() {
    alpha_[0] = unit_ + 1;
    alpha_[unit_ + 1] = 0;
    auto& rest = buffers_[1];
    rest.clear();
    for (int i = 1; i < size_; ++i) {
      if (i != unit_ + 1) rest.push_back(i);
    }
    rec(1);
  }

 private:
  void rec(std::size_t depth) {
    const auto& pts = buffers_[depth];
    if (pts.empty()) {
      visit_(unit_, alpha_);
      return;
    }
    const HalfEdge a = pts[0];
    auto& next = buffers_[depth + 1];
    for (std::size_t k = 1; k < pts.size(); ++k) {
      const HalfEdge b = pts[k];
      alpha_[a] = b;
      alpha_[b] = a;
      next.clear();
      for (std::size_t j = 1; j < pts.size(); ++j) {
        if (j != k) next.push_back(pts[j]);
      }
      rec(depth + 1);
    }
  }

  int size_;
  int unit_;
  const std::function<void(int, std::span<const HalfEdge>)>& visit_;
  std::vector<HalfEdge> alpha_;
  std::vector<std::vector<HalfEdge>> buffers_;
};

// Per-unit results, filled in parallel and read back in unit order.
template <class T>
std::vector<T> collect(int n, const EnumConfig& cfg,
                       const std::function<void(std::span<const HalfEdge>,
                                                std::vector<T>&)>& take) {
  std::vector<std::vector<T>> per_unit(static_cast<std::size_t>(2 * n - 1));
  for_each_involution(n, cfg, [&](int unit, std::span<const HalfEdge> alpha) {
    take(alpha, per_unit[unit]);
  });
  std::vector<T> out;
  for (auto& part : per_unit) {
    for (auto& x : part) out.push_back(std::move(x));
  }
  return out;
}

std::uint64_t count_where(int n, const EnumConfig& cfg,
                          const std::function<bool(std::span<const HalfEdge>)>& pred) {
  std::vector<std::uint64_t> per_unit(static_cast<std::size_t>(2 * n - 1), 0);
  for_each_involution(n, cfg, [&](int unit, std::span<const HalfEdge> alpha) {
    if (pred(alpha)) ++per_unit[unit];
  });
  std::uint64_t total = 0;
  for (auto c : per_unit) total += c;
  return total;
}

RootedMap to_map(std::span<const HalfEdge> alpha) {
  return RootedMap::from_alpha(
      Permutation(std::vector<HalfEdge>(alpha.begin(), alpha.end())));
}

// Vertex degrees of the canonical map, as cycle lengths of beta(i) = alpha(i)+1.
bool all_degrees_at_least(std::span<const HalfEdge> alpha, int min_degree) {
  const int size = static_cast<int>(alpha.size());
  std::uint64_t seen = 0;
  for (int i = 0; i < size; ++i) {
    if (seen >> i & 1) continue;
    int len = 0;
    for (int j = i; !(seen >> j & 1); j = (alpha[j] + 1) % size) {
      seen |= std::uint64_t{1} << j;
      ++len;
    }
    if (len < min_degree) return false;
  }
  return true;
}

// Every ordered sequence of g disjoint 3-subsets of {0..count-1}.
void for_each_triple_sequence(int g, int count,
                              const std::function<void(const std::vector<std::array<int, 3>>&)>& f) {
  std::vector<std::array<int, 3>> seq(static_cast<std::size_t>(g));
  std::vector<char> used(static_cast<std::size_t>(count), 0);
  std::function<void(int)> rec = [&](int i) {
    if (i == g) {
      f(seq);
      return;
    }
    for (int a = 0; a < count; ++a) {
      if (used[a]) continue;
      for (int b = a + 1; b < count; ++b) {
        if (used[b]) continue;
        for (int c = b + 1; c < count; ++c) {
          if (used[c]) continue;
          used[a] = used[b] = used[c] = 1;
          seq[i] = {a, b, c};
          rec(i + 1);
          used[a] = used[b] = used[c] = 0;
        }
      }
    }
  };
  rec(0);
}

// Coefficients [z^0..z^n_max] of T(z) = sum_n C(2n,n)/2 z^n.
std::vector<BigInt> t_series(int n_max) {
  std::vector<BigInt> t(static_cast<std::size_t>(n_max) + 1, 0);
  for (int n = 1; n <= n_max; ++n) t[n] = half_t(n);
  return t;
}

std::vector<BigInt> multiply(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; i + j < a.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

}  // namespace

BigInt double_factorial_odd(int n) {
  BigInt r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
  return r;
}

void for_each_involution(
    int n, const EnumConfig& cfg,
    const std::function<void(int unit, std::span<const HalfEdge> alpha)>& visit) {
  if (n < 1) fail(Errc::kInvalidArgument, "need at least one edge");
  if (n > 32) fail(Errc::kResourceBound, "too many half-edges for exhaustive search");
  if (cfg.workers < 1) fail(Errc::kInvalidArgument, "need at least one worker");
  if (double_factorial_odd(n) > cfg.budget) {
    fail(Errc::kResourceBound, std::to_string(2 * n - 1) +
                                   "!! involutions exceed the budget of " +
                                   std::to_string(cfg.budget));
  }
  const int units = 2 * n - 1;
  const int workers = std::min(cfg.workers, units);
  auto work = [&](int w) {
    for (int u = w; u < units; u += workers) InvolutionWalker(n, u, visit).run();
  };
  if (workers == 1) {
    work(0);
    return;
  }
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();
}

int canonical_vertex_count(std::span<const HalfEdge> alpha) {
  const int size = static_cast<int>(alpha.size());
  std::vector<char> seen(alpha.size(), 0);
  int count = 0;
  for (int i = 0; i < size; ++i) {
    if (seen[i]) continue;
    ++count;
    for (int j = i; !seen[j]; j = (alpha[j] + 1) % size) seen[j] = 1;
  }
  return count;
}

std::uint64_t count_unicellular(int g, int n, const EnumConfig& cfg) {
  check_genus_range(g, n);
  const int v = n + 1 - 2 * g;
  return count_where(n, cfg, [v](std::span<const HalfEdge> a) {
    return canonical_vertex_count(a) == v;
  });
}

std::vector<RootedMap> enum_unicellular(int g, int n, const EnumConfig& cfg) {
  check_genus_range(g, n);
  const int v = n + 1 - 2 * g;
  return collect<RootedMap>(n, cfg, [v](std::span<const HalfEdge> a, auto& out) {
    if (canonical_vertex_count(a) == v) out.push_back(to_map(a));
  });
}

std::uint64_t count_dominant(int g, int n, const EnumConfig& cfg) {
  check_genus_range(g, n);
  const int v = n + 1 - 2 * g;
  return count_where(n, cfg, [v, g](std::span<const HalfEdge> a) {
    return g > 0 && canonical_vertex_count(a) == v && is_dominant(to_map(a));
  });
}

std::vector<RootedMap> enum_dominant(int g, int n, const EnumConfig& cfg) {
  check_genus_range(g, n);
  const int v = n + 1 - 2 * g;
  return collect<RootedMap>(n, cfg, [v, g](std::span<const HalfEdge> a, auto& out) {
    if (g == 0 || canonical_vertex_count(a) != v) return;
    RootedMap m = to_map(a);
    if (is_dominant(m)) out.push_back(std::move(m));
  });
}

std::vector<RootedMap> enum_schemes(int g, const EnumConfig& cfg) {
  if (g < 1) fail(Errc::kGenusOutOfRange, "schemes have positive genus");
  std::vector<RootedMap> out;
  for (int n = 2 * g; n <= 6 * g - 3; ++n) {
    const int v = n + 1 - 2 * g;
    auto part = collect<RootedMap>(n, cfg, [v](std::span<const HalfEdge> a, auto& o) {
      if (canonical_vertex_count(a) == v && all_degrees_at_least(a, 3)) {
        o.push_back(to_map(a));
      }
    });
    for (auto& m : part) out.push_back(std::move(m));
  }
  return out;
}

std::uint64_t count_dominant_schemes(int g, const EnumConfig& cfg) {
  if (g < 1) fail(Errc::kGenusOutOfRange, "schemes have positive genus");
  const int n = 6 * g - 3;
  const int v = 4 * g - 2;
  return count_where(n, cfg, [v](std::span<const HalfEdge> a) {
    return canonical_vertex_count(a) == v && all_degrees_at_least(a, 3);
  });
}

std::vector<TreeWithTriples> enum_trees_with_triples(int g, int n) {
  if (g < 1 || n < 1) fail(Errc::kGenusOutOfRange, "need g >= 1 and n >= 1");
  std::vector<TreeWithTriples> out;
  for (const RootedMap& t : all_plane_trees(n)) {
    const auto verts = t.map().vertices();
    for_each_triple_sequence(g, static_cast<int>(verts.size()), [&](const auto& seq) {
      std::vector<Triple> triples;
      for (const auto& c : seq) triples.push_back({verts[c[0]], verts[c[1]], verts[c[2]]});
      if (is_non_singular(t, flatten(triples))) {
        out.push_back(TreeWithTriples{t, std::move(triples)});
      }
    });
  }
  return out;
}

std::uint64_t count_trees_with_triples(int g, int n) {
  if (g < 1 || n < 1) fail(Errc::kGenusOutOfRange, "need g >= 1 and n >= 1");
  std::uint64_t count = 0;
  for (const RootedMap& t : all_plane_trees(n)) {
    const auto verts = t.map().vertices();
    for_each_triple_sequence(g, static_cast<int>(verts.size()), [&](const auto& seq) {
      std::vector<VertexId> w;
      for (const auto& c : seq) {
        for (int k : c) w.push_back(verts[k]);
      }
      if (is_non_singular(t, w)) ++count;
    });
  }
  return count;
}

std::uint64_t count_marked_trees(int g, int n) {
  if (g < 0 || n < 1) fail(Errc::kGenusOutOfRange, "need g >= 0 and n >= 1");
  std::uint64_t count = 0;
  for_each_dyck_word(n, [&](const DyckWord&) {
    for_each_triple_sequence(g, n + 1, [&](const auto&) { ++count; });
  });
  return count;
}

BigInt binomial(int n, int k) {
  if (n < 0) fail(Errc::kOutOfRange, "binomial needs n >= 0");
  if (k < 0 || k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

BigInt catalan(int n) {
  if (n < 0) fail(Errc::kOutOfRange, "catalan needs n >= 0");
  return binomial(2 * n, n) / (n + 1);
}

BigInt marked_trees(int g, int n) {
  if (g < 0 || n < 1 || n + 1 < 3 * g) {
    fail(Errc::kOutOfRange, "marked_trees needs n + 1 >= 3g");
  }
  BigInt six_g = 1;
  for (int i = 0; i < g; ++i) six_g *= 6;
  return factorial(2 * n) / (six_g * factorial(n) * factorial(n + 1 - 3 * g));
}

BigInt dominant_schemes(int g) {
  if (g < 1) fail(Errc::kOutOfRange, "dominant_schemes needs g >= 1");
  BigInt twelve_g = 1;
  for (int i = 0; i < g; ++i) twelve_g *= 12;
  return 2 * factorial(6 * g - 3) / (twelve_g * factorial(g) * factorial(3 * g - 2));
}

BigInt tstar(int g) {
  if (g < 1) fail(Errc::kOutOfRange, "tstar needs g >= 1");
  return 2 * factorial(6 * g - 3) / (factorial(3 * g) * factorial(3 * g - 2));
}

BigInt half_t(int n) {
  if (n < 1) fail(Errc::kOutOfRange, "half_t needs n >= 1");
  return binomial(2 * n, n) / 2;
}

double u_asym(int g, int n) {
  if (g < 0 || n < 1) fail(Errc::kOutOfRange, "u_asym needs g >= 0 and n >= 1");
  const double log_value = (3.0 * g - 1.5) * std::log(n) + n * std::log(4.0) -
                           g * std::log(12.0) - std::lgamma(g + 1.0) -
                           0.5 * std::log(std::numbers::pi);
  return std::exp(log_value);
}

DoublerootingReport doublerooting_check(int g, int n_max, const EnumConfig& cfg) {
  if (n_max > 8) fail(Errc::kOutOfRange, "doublerooting check is limited to n <= 8");
  DoublerootingReport report;
  report.g = g;
  std::map<int, BigInt> schemes_by_size;  // edges -> rooted schemes
  for (const RootedMap& s : enum_schemes(g, cfg)) schemes_by_size[s.n()] += 1;

  const std::vector<BigInt> t = t_series(n_max);
  std::vector<BigInt> t_tilde(t.size(), 0);
  for (std::size_t n = 1; n < t.size(); ++n) t_tilde[n] = t[n] * static_cast<int>(n);

  std::vector<Rational> dr(t.size(), 0);
  std::vector<BigInt> all(t.size(), 0);
  for (const auto& [k, count] : schemes_by_size) {
    std::vector<BigInt> power = t;  // T^1
    for (int e = 1; e < k; ++e) power = multiply(power, t);
    std::vector<BigInt> power_minus = t_tilde;  // Ttilde T^(k-1)
    for (int e = 1; e < k; ++e) power_minus = multiply(power_minus, t);
    for (std::size_t n = 1; n < t.size(); ++n) {
      dr[n] += Rational(count * power[n] * static_cast<int>(n), k);
      all[n] += count * power_minus[n];
    }
  }
  for (int n = 1; n <= n_max; ++n) {
    DoublerootingRow row;
    row.n = n;
    row.brute = 2 * g > n ? BigInt(0) : BigInt(count_unicellular(g, n, cfg));
    if (denominator(dr[n]) != 1) report.ok = false;
    row.doublerooting = numerator(dr[n]) / denominator(dr[n]);
    row.allschemes = all[n];
    report.ok = report.ok && row.brute == row.doublerooting && row.brute == row.allschemes;
    report.rows.push_back(std::move(row));
  }
  return report;
}

void CountTable::add(int g, int n, BigInt count, std::string generator) {
  entries_.push_back(CountEntry{g, n, std::move(count), std::move(generator)});
}

bool CountTable::consistent() const {
  std::map<std::pair<int, int>, BigInt> first;
  for (const CountEntry& e : entries_) {
    const auto [it, inserted] = first.emplace(std::make_pair(e.g, e.n), e.count);
    if (!inserted && it->second != e.count) return false;
  }
  return true;
}

std::string CountTable::to_csv() const {
  std::ostringstream out;
  out << "g,n,count,generator\n";
  for (const CountEntry& e : entries_) {
    out << e.g << ',' << e.n << ',' << e.count << ',' << e.generator << '\n';
  }
  return out.str();
}

}  // namespace unimap
