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

#include "unimap/series.hpp"

#include <string>

#include "unimap/error.hpp"
#include "unimap/labelled.hpp"
#include "unimap/scheme.hpp"
#include "unimap/trees.hpp"

namespace unimap {

namespace {

Series truncate(Series s, int order) {
  s.resize(static_cast<std::size_t>(order) + 1);
  return s;
}

Series mul(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(order); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size() && i + j <= static_cast<std::size_t>(order); ++j) {
      out[i + j] += a[i] * b[j];
    }
  }
  return out;
}

Series add(const Series& a, const Series& b, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i < a.size()) out[i] += a[i];
    if (i < b.size()) out[i] += b[i];
  }
  return out;
}

Series shift(const Series& a, int by, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t j = i + static_cast<std::size_t>(by);
    if (j < out.size()) out[j] = a[i];
  }
  return out;
}

Series constant(long v, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  out[0] = v;
  return out;
}

Series power(const Series& a, int e, int order) {
  Series out = constant(1, order);
  for (int k = 0; k < e; ++k) out = mul(out, a, order);
  return out;
}

// f(u(z)) for u with zero constant term, by Horner.
Series compose(const Series& f, const Series& u, int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  for (std::size_t k = f.size(); k-- > 0;) {
    out = mul(out, u, order);
    out[0] += f[k];
  }
  return out;
}

// Index of the first differing coefficient, or -1.
int mismatch(const Series& a, const Series& b, int order) {
  for (int k = 0; k <= order; ++k) {
    const BigInt x = k < static_cast<int>(a.size()) ? a[k] : BigInt(0);
    const BigInt y = k < static_cast<int>(b.size()) ? b[k] : BigInt(0);
    if (x != y) return k;
  }
  return -1;
}

SeriesCheck compare(std::string name, const Series& lhs, const Series& rhs, int order) {
  SeriesCheck c{std::move(name), true, {}};
  const int k = mismatch(lhs, rhs, order);
  if (k >= 0) {
    c.ok = false;
    const auto at = [](const Series& s, int i) {
      return i < static_cast<int>(s.size()) ? s[i].str() : std::string("0");
    };
    c.detail = "coefficient " + std::to_string(k) + ": " + at(lhs, k) + " vs " + at(rhs, k);
  }
  return c;
}

}  // namespace

MotzkinTable::MotzkinTable(int max_length) {
  if (max_length < 0) fail(Errc::kOutOfRange, "negative walk length");
  rows_.push_back({BigInt(1)});
  for (int m = 1; m <= max_length; ++m) {
    std::vector<BigInt> row(2 * static_cast<std::size_t>(m) + 1);
    const auto& prev = rows_.back();
    for (int i = -m; i <= m; ++i) {
      BigInt v = 0;
      for (int d = -1; d <= 1; ++d) {
        const int j = i - d;
        if (j >= -(m - 1) && j <= m - 1) v += prev[j + m - 1];
      }
      row[i + m] = std::move(v);
    }
    rows_.push_back(std::move(row));
  }
}

const BigInt& MotzkinTable::count(int m, int i) const {
  if (m < 0 || m > max_length()) fail(Errc::kOutOfRange, "walk length outside the table");
  if (i < -m || i > m) return zero_;
  return rows_[m][i + m];
}

BigInt motzkin_count(int m, int i) {
  if (m < 0) fail(Errc::kOutOfRange, "negative walk length");
  return MotzkinTable(m).count(m, i);
}

Series excursion_series(int order) {
  // height[h]: walks of the current length staying >= 0, now at height h.
  Series out(static_cast<std::size_t>(order) + 1);
  std::vector<BigInt> height(static_cast<std::size_t>(order) + 2);
  height[0] = 1;
  out[0] = 1;
  for (int m = 1; m <= order; ++m) {
    std::vector<BigInt> next(height.size());
    for (std::size_t h = 0; h + 1 < height.size(); ++h) {
      if (height[h] == 0) continue;
      next[h] += height[h];
      next[h + 1] += height[h];
      if (h > 0) next[h - 1] += height[h];
    }
    height = std::move(next);
    out[m] = height[0];
  }
  return out;
}

Series walk_series(int i, int order) {
  const MotzkinTable table(order);
  Series out(static_cast<std::size_t>(order) + 1);
  for (int m = 0; m <= order; ++m) out[m] = table.count(m, i);
  return out;
}

Series labelled_tree_series(int order) {
  Series out(static_cast<std::size_t>(order) + 1);
  BigInt three = 1;
  for (int n = 0; n <= order; ++n) {
    out[n] = three * catalan(n);
    three *= 3;
  }
  return out;
}

Series marked_tree_series(int i, int order) {
  const Series c = labelled_tree_series(order);
  const Series t = shift(mul(c, c, order), 1, order);
  Series out = compose(walk_series(i, order), t, order);
  if (i == 0) out[0] -= 1;
  return out;
}

Series marked_tree_brute(int i, int max_n) {
  Series out(static_cast<std::size_t>(max_n) + 1);
  for (int n = 1; n <= max_n; ++n) {
    for_each_dyck_word(n, [&](const DyckWord& w) {
      const RootedMap t = tree_from_dyck(w);
      const std::vector<HalfEdge> edges = tree_edges(t);
      // Positions (in vertex_labels order) of the admissible marks.
      std::vector<std::size_t> marks;
      for (std::size_t k = 0; k < edges.size(); ++k) {
        if (is_in_T(t, VertexId{edges[k] + 1})) marks.push_back(k + 1);
      }
      std::vector<std::int8_t> inc(static_cast<std::size_t>(n), -1);
      while (true) {
        const std::vector<std::int32_t> lab = vertex_labels(w, inc);
        for (std::size_t p : marks) {
          if (lab[p] == i) out[n] += 1;
        }
        std::size_t k = 0;
        while (k < inc.size() && inc[k] == 1) inc[k++] = -1;
        if (k == inc.size()) break;
        ++inc[k];
      }
    });
  }
  return out;
}

SeriesReport series_checks(int max_order, int brute_max_n, int bound) {
  if (max_order > bound) {
    fail(Errc::kOrderTooLarge, "order " + std::to_string(max_order) +
                                   " exceeds the bound " + std::to_string(bound));
  }
  if (max_order < 1 || brute_max_n < 1 || brute_max_n > max_order) {
    fail(Errc::kInvalidArgument, "need 1 <= brute_max_n <= max_order");
  }
  const int o = max_order;
  SeriesReport r;
  r.max_order = o;
  r.brute_max_n = brute_max_n;

  const Series e = excursion_series(o);
  const Series te = shift(e, 1, o);
  // E = 1 + tE + t^2 E^2
  r.checks.push_back(compare(
      "E = 1 + tE + t^2 E^2", e,
      add(add(constant(1, o), te, o), shift(mul(e, e, o), 2, o), o), o));

  const Series m0 = walk_series(0, o);
  // M0 (1 - t - 2 t^2 E) = 1
  Series denom = constant(1, o);
  denom[1] -= 1;
  for (int k = 2; k <= o; ++k) denom[k] -= 2 * e[k - 2];
  r.checks.push_back(compare("M0 (1 - t - 2t^2 E) = 1", mul(m0, denom, o), constant(1, o), o));

  // M0^2 (1 + t)(1 - 3t) = 1
  Series poly = constant(1, o);
  if (o >= 1) poly[1] = -2;
  if (o >= 2) poly[2] = -3;
  r.checks.push_back(
      compare("M0^2 (1+t)(1-3t) = 1", mul(mul(m0, m0, o), poly, o), constant(1, o), o));

  // U = tE solves t U^2 + (t - 1) U + t = 0
  {
    Series lhs = add(shift(mul(te, te, o), 1, o), shift(te, 1, o), o);
    for (int k = 0; k <= o; ++k) lhs[k] -= te[k];
    if (o >= 1) lhs[1] += 1;
    r.checks.push_back(compare("t U^2 + (t-1) U + t = 0", lhs, constant(0, o), o));
  }

  SeriesCheck walks{"M_i = M0 (tE)^i", true, {}};
  for (int i = 0; i <= o && walks.ok; ++i) {
    SeriesCheck c = compare("", walk_series(i, o), mul(m0, power(te, i, o), o), o);
    if (!c.ok) {
      walks.ok = false;
      walks.detail = "i = " + std::to_string(i) + ", " + c.detail;
    }
  }
  r.checks.push_back(walks);

  SeriesCheck trees{"N_i(z) = M_i(z C(z)^2) - [i=0] vs enumeration", true, {}};
  for (int i = 0; i <= brute_max_n && trees.ok; ++i) {
    SeriesCheck c = compare("", truncate(marked_tree_series(i, o), brute_max_n),
                            marked_tree_brute(i, brute_max_n), brute_max_n);
    if (!c.ok) {
      trees.ok = false;
      trees.detail = "i = " + std::to_string(i) + ", " + c.detail;
    }
  }
  r.checks.push_back(trees);

  for (const auto& c : r.checks) r.ok = r.ok && c.ok;
  return r;
}

}  // namespace unimap
