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

// Motzkin-walk counts and exact coefficient checks of the walk series used
// to count labelled trees with a marked vertex at a given label.
//
// t stands for the walk variable, z for the tree variable; every series is a
// vector of exact coefficients truncated at a fixed order.

#include <string>
#include <vector>

#include "unimap/enumerate.hpp"

namespace unimap {

using Series = std::vector<BigInt>;  // coefficients of t^0 .. t^order

// M[m][i]: walks of m steps in {-1,0,+1} from 0 to i. Symmetric in i.
class MotzkinTable {
 public:
  explicit MotzkinTable(int max_length);
  int max_length() const noexcept { return static_cast<int>(rows_.size()) - 1; }
  // Zero when |i| > m. Throws OutOfRange when m is outside the table.
  const BigInt& count(int m, int i) const;

 private:
  std::vector<std::vector<BigInt>> rows_;  // rows_[m][i + m]
  BigInt zero_;
};

// Throws OutOfRange when m < 0.
BigInt motzkin_count(int m, int i);

// Excursions (walks staying >= 0 and ending at 0), from their own table.
Series excursion_series(int order);
// M_i(t) read off the Motzkin table.
Series walk_series(int i, int order);
// Rooted labelled trees, 3^n Catalan(n).
Series labelled_tree_series(int order);
// M_i(z C(z)^2) - [i = 0].
Series marked_tree_series(int i, int order);
// Labelled trees with a vertex nu, (tree, nu) in the right-of class, and
// label(nu) = i; counted by exhaustive enumeration for sizes 1..max_n.
Series marked_tree_brute(int i, int max_n);

struct SeriesCheck {
  std::string name;
  bool ok = true;
  std::string detail;  // first mismatch, empty when ok
};

struct SeriesReport {
  int max_order = 0;
  int brute_max_n = 0;
  std::vector<SeriesCheck> checks;
  bool ok = true;
};

constexpr int kDefaultSeriesBound = 30;

// Throws OrderTooLarge when max_order > bound, InvalidArgument when
// brute_max_n > max_order or either is below 1.
SeriesReport series_checks(int max_order, int brute_max_n = 6,
                           int bound = kDefaultSeriesBound);

}  // namespace unimap
