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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// Counts are compared against independent oracles from support.hpp or against
// closed forms evaluated here; nothing is loosened to make a line pass.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "unimap/bijection.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/error.hpp"
#include "unimap/io.hpp"
#include "unimap/labelled.hpp"
#include "unimap/scheme.hpp"
#include "unimap/series.hpp"
#include "unimap/stats.hpp"
#include "unimap/surgery.hpp"
#include "unimap/trees.hpp"

using namespace unimap;
namespace ut = unimap::testing;

namespace {

// Collects failure notes for one criterion.
struct Verdict {
  bool ok = true;
  std::ostringstream notes;
  template <class... T>
  void fail(const T&... parts) {
    if (ok) (notes << ... << parts);
    ok = false;
  }
  template <class A, class B, class... T>
  void expect_eq(const A& a, const B& b, const T&... what) {
    if (!(a == b)) fail(what..., ": ", a, " != ", b);
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Verdict&)>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.fail("exception: ", e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s  %2d  %-44s %8.1fs%s%s\n", v.ok ? "PASS" : "FAIL", id, title.c_str(), secs,
              v.ok ? "" : "  ", v.notes.str().c_str());
  std::fflush(stdout);
  if (!v.ok) ++failures;
}

BigInt fiber(int g) {
  BigInt f = 1;
  for (int i = 1; i <= g; ++i) f *= 2 * i;
  return f;
}

BigInt factorial(int k) {
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

BigInt pow_big(int base, int e) {
  BigInt r = 1;
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

// 2 (6g-3)! / (12^g g! (3g-2)!)
BigInt scheme_formula(int g) {
  return 2 * factorial(6 * g - 3) / (pow_big(12, g) * factorial(g) * factorial(3 * g - 2));
}

// Roundtrip of one tree with triples through close then open.
bool tree_roundtrip(const TreeWithTriples& tc) {
  const ClosedMap c = close_psi(tc);
  return open_phi(c.map, c.sequence) == tc;
}

bool map_roundtrip(const RootedMap& m, const OpeningSequence& s) {
  const ClosedMap c = close_psi(open_phi(m, s));
  return c.map == m && c.sequence == s;
}

std::string key(const io::Json& j) { return j.dump(); }

}  // namespace

int main() {
  criterion(1, "genus partition of unicellular maps", [](Verdict& v) {
    for (int n = 1; n <= 7; ++n) {
      std::uint64_t total = 0;
      for (int g = 0; 2 * g <= n; ++g) total += count_unicellular(g, n);
      v.expect_eq(total, ut::double_factorial_odd(n), "sum over genera n=", n);
      v.expect_eq(count_unicellular(0, n), ut::catalan(n), "plane trees n=", n);
    }
  });

  criterion(2, "trees with triples vs dominant maps, g=1", [](Verdict& v) {
    for (int n = 2; n <= 7; ++n) {
      v.expect_eq(count_trees_with_triples(1, n), 2 * count_dominant(1, n), "n=", n);
    }
  });

  criterion(3, "dominant maps have 2g intertwined nodes", [](Verdict& v) {
    for (int n = 2; n <= 7; ++n) {
      for (const RootedMap& m : enum_dominant(1, n)) {
        if (intertwined_nodes(m).size() != 2) {
          v.fail("exhaustive n=", n, " map ", io::map_to_json(m).dump());
          return;
        }
      }
    }
    SeededRng rng(301);
    for (int g = 1; g <= 4; ++g) {
      for (int k = 0; k < 200; ++k) {
        const RootedMap m = sample_dominant_map(g, 1000, rng);
        if (m.genus() != g || !is_dominant(m) ||
            intertwined_nodes(m).size() != static_cast<std::size_t>(2 * g)) {
          v.fail("sampled g=", g, " sample ", k);
          return;
        }
      }
    }
  });

  criterion(4, "opening and closing are inverse; surgery fuzz", [](Verdict& v) {
    for (int n = 2; n <= 6; ++n) {
      for (const RootedMap& m : enum_dominant(1, n)) {
        for (const OpeningSequence& s : opening_sequences(m)) {
          if (!map_roundtrip(m, s)) v.fail("psi(phi) at ", io::map_to_json(m).dump());
        }
      }
      for (const TreeWithTriples& tc : enum_trees_with_triples(1, n)) {
        if (!tree_roundtrip(tc)) v.fail("phi(psi) at ", io::to_json(tc).dump());
      }
    }
    SeededRng rng(401);
    for (int g = 2; g <= 4; ++g) {
      for (int k = 0; k < 1000; ++k) {
        const int n = 100 + static_cast<int>(rng.uniform_below(200));
        const TreeWithTriples tc = sample_tree_with_triples(g, n, rng);
        if (!tree_roundtrip(tc)) {
          v.fail("phi(psi) g=", g, " ", io::to_json(tc).dump());
          return;
        }
        const RootedMap m = close_psi(tc).map;
        const auto seqs = opening_sequences(m);
        if (BigInt(seqs.size()) != fiber(g)) {
          v.fail("opening sequences g=", g, ": ", seqs.size());
          return;
        }
        if (!map_roundtrip(m, seqs[rng.uniform_below(seqs.size())])) {
          v.fail("psi(phi) g=", g, " ", io::map_to_json(m).dump());
          return;
        }
      }
    }
    ut::Rng fz(402);
    for (int k = 0; k < 10000; ++k) {
      const CombMap m = ut::random_map(fz, 1 + k % 9);
      const auto verts = m.vertices();
      const VertexId vx = verts[ut::uniform_int(fz, 0, static_cast<int>(verts.size()) - 1)];
      const auto cycle = m.vertex_cycle(vx);
      std::vector<HalfEdge> cut;
      for (HalfEdge h : cycle) {
        if (ut::uniform_int(fz, 0, 1)) cut.push_back(h);
      }
      if (cut.size() < 2) cut = {cycle.front()};
      const CombMap s = slice_vertex(m, SliceSpec{vx, cut});
      const CombMap back = cut.size() < 2 ? s : glue_halfedges(s, GlueSpec{cut});
      if (!(back == m)) {
        v.fail("glue(slice) case ", k);
        return;
      }
      if (verts.size() >= 2) {
        const auto a = m.vertex_cycle(verts[0]);
        const auto b = m.vertex_cycle(verts[1]);
        const std::vector<HalfEdge> tuple{
            a[ut::uniform_int(fz, 0, static_cast<int>(a.size()) - 1)],
            b[ut::uniform_int(fz, 0, static_cast<int>(b.size()) - 1)]};
        const CombMap gl = glue_halfedges(m, GlueSpec{tuple});
        if (!(slice_vertex(gl, SliceSpec{gl.vertex_of(tuple[0]), tuple}) == m)) {
          v.fail("slice(glue) case ", k);
          return;
        }
      }
    }
  });

  criterion(5, "dominant scheme counts", [](Verdict& v) {
    v.expect_eq(BigInt(count_dominant_schemes(1)), scheme_formula(1), "g=1");
    EnumConfig cfg;
    cfg.workers = 4;
    v.expect_eq(BigInt(count_dominant_schemes(2, cfg)), scheme_formula(2), "g=2");
    v.expect_eq(scheme_formula(2), BigInt(105), "g=2 formula");
  });

  criterion(6, "tree class and marked tree counts", [](Verdict& v) {
    for (int n = 1; n <= 8; ++n) {
      std::uint64_t t = 0;
      for (const RootedMap& tree : all_plane_trees(n)) {
        for (VertexId x : tree.map().vertices()) t += is_in_T(tree, x) ? 1 : 0;
      }
      v.expect_eq(t, ut::binomial(2 * n, n) / 2, "|T_n| n=", n);
    }
    for (int n = 2; n <= 6; ++n) {
      v.expect_eq(BigInt(count_marked_trees(1, n)), marked_trees(1, n), "marked n=", n);
    }
  });

  criterion(7, "series identities to order 12", [](Verdict& v) {
    const SeriesReport r = series_checks(12, 6);
    for (const SeriesCheck& c : r.checks) {
      if (!c.ok) v.fail(c.name, " ", c.detail);
    }
    if (!r.ok) v.fail("report not ok");
  });

  criterion(8, "labelled bijection counts, g=1", [](Verdict& v) {
    for (int n = 2; n <= 4; ++n) {
      v.expect_eq(count_well_labelled(1, n), 2 * count_labelled_dominant(1, n), "n=", n);
    }
  });

  criterion(9, "t_g estimators", [](Verdict& v) {
    const double exact = 2.0 / std::sqrt(std::numbers::pi);
    const SeededRng r0(900);
    v.expect_eq(estimate_tg_moment(0, 500, 1000, r0).mean, exact, "moment g=0");
    v.expect_eq(estimate_tg_probability(0, 500, 1000, r0).mean, exact, "probability g=0");
    const Estimate mom = estimate_tg_moment(1, 2000, 100000, SeededRng(901));
    const Estimate pro = estimate_tg_probability(1, 2000, 100000, SeededRng(902));
    const double s1 = std::hypot(mom.std_error, pro.std_error);
    std::printf("      n=2000 moment %.6f +- %.6f, probability %.6f +- %.6f\n", mom.mean,
                mom.std_error, pro.mean, pro.std_error);
    if (std::abs(mom.mean - pro.mean) > 3 * s1) v.fail("estimators disagree at n=2000");
    const Estimate a = estimate_tg_moment(1, 1000, 100000, SeededRng(903));
    const Estimate b = estimate_tg_moment(1, 4000, 100000, SeededRng(904));
    const double s2 = std::hypot(a.std_error, b.std_error);
    std::printf("      moment n=1000 %.6f +- %.6f, n=4000 %.6f +- %.6f\n", a.mean, a.std_error,
                b.mean, b.std_error);
    if (std::abs(a.mean - b.mean) > 3 * s2) v.fail("moment estimate moves between n=1000 and 4000");
  });

  criterion(10, "sampler uniformity (chi-square)", [](Verdict& v) {
    constexpr int kDraws = 100000;
    SeededRng rng(1000);
    std::map<std::string, std::uint64_t> trees;
    for (int k = 0; k < kDraws; ++k) ++trees[key(io::map_to_json(sample_plane_tree(3, rng)))];
    const double p1 = ut::uniform_chi_square_p(trees, ut::catalan(3));

    std::map<std::string, std::uint64_t> triples;
    const auto all = enum_trees_with_triples(1, 3);
    for (int k = 0; k < kDraws; ++k) ++triples[key(io::to_json(sample_tree_with_triples(1, 3, rng)))];
    const double p2 = ut::uniform_chi_square_p(triples, all.size());

    std::map<std::string, std::uint64_t> labelled;
    const std::size_t classes = static_cast<std::size_t>(count_well_labelled(1, 3));
    for (int k = 0; k < kDraws; ++k) ++labelled[key(io::to_json(sample_well_labelled(1, 3, rng)))];
    const double p3 = ut::uniform_chi_square_p(labelled, classes);

    std::printf("      p-values: trees %.4f, T_1,3 %.4f, W_1,3 %.4f\n", p1, p2, p3);
    if (trees.size() != ut::catalan(3)) v.fail("tree classes seen: ", trees.size());
    if (triples.size() != all.size()) v.fail("T_1,3 classes seen: ", triples.size());
    if (labelled.size() != classes) v.fail("W_1,3 classes seen: ", labelled.size());
    if (p1 < 1e-3 || p2 < 1e-3 || p3 < 1e-3) v.fail("p-value below 1e-3");
  });

  criterion(11, "profile mass and reproducibility", [](Verdict& v) {
    SeededRng rng(1100);
    for (int g = 0; g <= 2; ++g) {
      for (int k = 0; k < 300; ++k) {
        const int n = 6 * g + 1 + static_cast<int>(rng.uniform_below(300));
        const ProfileMeasure p = profile_statistics(sample_well_labelled(g, n, rng));
        if (p.total_numerator() != p.denominator) {
          v.fail("mass != 1 at g=", g, " n=", n);
          return;
        }
      }
    }
    for (int k = 0; k < 20; ++k) {
      const ProfileMeasure p = profile_statistics(sample_well_labelled(1, 10000, rng));
      if (p.total_numerator() != p.denominator) v.fail("mass != 1 at n=10000");
    }
    const PooledProfile a = pooled_profile(1, 10000, 1000, SeededRng(1101));
    StatsConfig four;
    four.workers = 4;
    const PooledProfile b = pooled_profile(1, 10000, 1000, SeededRng(1101), four);
    if (a.numerators != b.numerators || a.radii != b.radii || a.histogram(50) != b.histogram(50)) {
      v.fail("pooled profile differs between runs");
    }
    std::int64_t total = 0;
    for (auto x : a.numerators) total += x;
    v.expect_eq(total, static_cast<std::int64_t>(a.samples) * a.denominator, "pooled mass");
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
