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

#include "check_suites.hpp"

#include <algorithm>
#include <sstream>

#include "unimap/bijection.hpp"
#include "unimap/labelled.hpp"
#include "unimap/scheme.hpp"
#include "unimap/series.hpp"
#include "unimap/surgery.hpp"
#include "unimap/trees.hpp"

namespace unimap::cli {

namespace {

BigInt fiber(int g) {
  BigInt f = 1;
  for (int i = 1; i <= g; ++i) f *= 2 * i;
  return f;  // 2^g g!
}

void line(CheckResult& r, const std::string& what, bool ok) {
  r.report += (ok ? "ok   " : "FAIL ") + what + "\n";
  r.ok = r.ok && ok;
}

template <class A, class B>
std::string eq(const std::string& what, const A& a, const B& b) {
  std::ostringstream os;
  os << what << ": " << a << " vs " << b;
  return os.str();
}

std::vector<HalfEdge> to_vector(const std::vector<HalfEdge>& cycle, unsigned mask) {
  std::vector<HalfEdge> out;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    if (mask & (1u << i)) out.push_back(cycle[i]);
  }
  return out;
}

}  // namespace

CheckResult check_surgery(int nmax) {
  CheckResult r;
  std::uint64_t cases = 0;
  for (int n = 1; n <= nmax && r.ok; ++n) {
    for (int g = 0; 2 * g <= n && r.ok; ++g) {
      for (const RootedMap& rm : enum_unicellular(g, n)) {
        const CombMap& m = rm.map();
        for (VertexId v : m.vertices()) {
          const auto cycle = m.vertex_cycle(v);
          if (cycle.size() > 12) continue;
          for (unsigned mask = 1; mask < (1u << cycle.size()); ++mask) {
            const auto cut = to_vector(cycle, mask);
            if (cut.size() < 2) continue;
            ++cases;
            const CombMap s = slice_vertex(m, SliceSpec{v, cut});
            const CombMap back = glue_halfedges(s, GlueSpec{cut});
            const CombMap again = slice_vertex(back, SliceSpec{back.vertex_of(cut[0]), cut});
            if (!(back == m) || !(again == s)) {
              io::Json ce;
              ce["map"] = io::map_to_json(m);
              ce["vertex"] = v.id + 1;
              io::Json c = io::Json::array();
              for (HalfEdge h : cut) c.push_back(h + 1);
              ce["cut_set"] = c;
              r.counterexample = ce;
              line(r, "slice/glue inverse at n=" + std::to_string(n), false);
              return r;
            }
          }
        }
      }
    }
  }
  line(r, "slice/glue inverse on " + std::to_string(cases) + " cases", true);
  return r;
}

CheckResult check_bijection(int g, int nmax, const EnumConfig& cfg) {
  CheckResult r;
  if (g < 1) {
    line(r, "the bijection needs g >= 1", false);
    return r;
  }
  for (int n = 2; n <= nmax && r.ok; ++n) {
    std::uint64_t maps = 0;
    for (const RootedMap& m : enum_dominant(g, n, cfg)) {
      ++maps;
      const auto seqs = opening_sequences(m);
      if (BigInt(seqs.size()) != fiber(g)) {
        r.counterexample = io::map_to_json(m);
        line(r, eq("opening sequences at n=" + std::to_string(n), seqs.size(), fiber(g)), false);
        return r;
      }
      for (const OpeningSequence& s : seqs) {
        const ClosedMap c = close_psi(open_phi(m, s));
        if (!(c.map == m) || !(c.sequence == s)) {
          r.counterexample = io::to_json(ClosedMap{m, s, {}});
          line(r, "psi(phi(m, s)) = (m, s) at n=" + std::to_string(n), false);
          return r;
        }
      }
    }
    const auto trees = enum_trees_with_triples(g, n);
    for (const TreeWithTriples& tc : trees) {
      const ClosedMap c = close_psi(tc);
      if (!(open_phi(c.map, c.sequence) == tc)) {
        r.counterexample = io::to_json(tc);
        line(r, "phi(psi(t)) = t at n=" + std::to_string(n), false);
        return r;
      }
    }
    const bool ok = BigInt(trees.size()) == fiber(g) * maps;
    line(r, eq("n=" + std::to_string(n) + " |T_g,n| vs 2^g g! |U*_g,n|", trees.size(),
               fiber(g) * maps),
         ok);
  }
  return r;
}

CheckResult check_counts(int g, int nmax, const EnumConfig& cfg) {
  CheckResult r;
  for (int n = 1; n <= nmax; ++n) {
    BigInt total = 0;
    for (int h = 0; 2 * h <= n; ++h) total += count_unicellular(h, n, cfg);
    line(r, eq("n=" + std::to_string(n) + " sum over genera vs (2n-1)!!", total,
               double_factorial_odd(n)),
         total == double_factorial_odd(n));
    const BigInt planar = count_unicellular(0, n, cfg);
    line(r, eq("n=" + std::to_string(n) + " plane trees vs Catalan", planar, catalan(n)),
         planar == catalan(n));
    if (g >= 1 && n + 1 >= 3 * g && n <= 7) {
      const BigInt marked = count_marked_trees(g, n);
      line(r, eq("n=" + std::to_string(n) + " marked trees vs formula", marked,
                 marked_trees(g, n)),
           marked == marked_trees(g, n));
    }
    if (n <= 8) {
      BigInt t = 0;
      for_each_dyck_word(n, [&](const DyckWord& w) {
        const RootedMap tree = tree_from_dyck(w);
        for (VertexId v : tree.map().vertices()) t += is_in_T(tree, v) ? 1 : 0;
      });
      line(r, eq("n=" + std::to_string(n) + " |T_n| vs C(2n,n)/2", t, half_t(n)), t == half_t(n));
    }
  }
  return r;
}

CheckResult check_labelled(int g, int nmax, const EnumConfig& cfg) {
  CheckResult r;
  for (int n = std::max(1, 2 * g); n <= nmax; ++n) {
    const BigInt w = count_well_labelled(g, n);
    const BigInt l = count_labelled_dominant(g, n, cfg);
    line(r, eq("n=" + std::to_string(n) + " |W_g,n| vs 2^g g! |L*_g,n|", w, fiber(g) * l),
         w == fiber(g) * l);
  }
  return r;
}

CheckResult check_series(int nmax, int order) {
  CheckResult r;
  const SeriesReport s = series_checks(order, nmax);
  for (const SeriesCheck& c : s.checks) {
    line(r, c.name + (c.ok ? "" : " (" + c.detail + ")"), c.ok);
  }
  return r;
}

}  // namespace unimap::cli
