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

// unimap: command-line front end. Exit codes: 0 success, 1 an invariant or
// check failed (the offending object goes to stderr as JSON), 2 usage error.

#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "check_suites.hpp"
#include "unimap/bijection.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/error.hpp"
#include "unimap/io.hpp"
#include "unimap/labelled.hpp"
#include "unimap/stats.hpp"

namespace {

using unimap::io::Json;

struct Config {
  std::uint64_t seed = 1;
  int workers = 1;
  std::uint64_t budget = 100'000'000;
  std::string output;
  std::string format = "csv";
};

// Raised for problems with the request itself; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a check or invariant fails; maps to exit code 1.
struct Failure : std::runtime_error {
  Failure(const std::string& what, std::optional<Json> object)
      : std::runtime_error(what), object(std::move(object)) {}
  std::optional<Json> object;
};

void emit(const Config& cfg, const std::string& text) {
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    unimap::io::write_file_atomic(cfg.output, text);
  }
}

unimap::EnumConfig enum_config(const Config& cfg) {
  return unimap::EnumConfig{cfg.workers, cfg.budget};
}

unimap::StatsConfig stats_config(const Config& cfg) {
  unimap::StatsConfig s;
  s.workers = cfg.workers;
  return s;
}

Json load(const std::string& path) {
  try {
    return unimap::io::read_json_file(path);
  } catch (const unimap::Error& e) {
    throw UsageError(e.what());
  }
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad vertex id '" + item + "' in --sequence");
    }
  }
  return out;
}

// validate ---------------------------------------------------------------

void run_validate(const Config& cfg, const std::string& path) {
  const Json j = load(path);
  const unimap::io::ParsedMap p = [&] {
    try {
      return unimap::io::map_from_json(j);
    } catch (const unimap::Error& e) {
      if (e.code() == unimap::Errc::kParse) throw UsageError(e.what());
      throw Failure(e.what(), j);
    }
  }();
  const auto& m = p.map;
  std::ostringstream out;
  out << "n=" << m.n() << " vertices=" << m.vertex_count() << " faces=" << m.face_count();
  if (!m.is_connected()) {
    out << " connected=no\n";
    emit(cfg, out.str());
    throw Failure("the map is not connected", j);
  }
  out << " genus=" << m.genus() << " unicellular=" << (m.is_unicellular() ? "yes" : "no")
      << '\n';
  emit(cfg, out.str());
}

// enumerate --------------------------------------------------------------

void run_enumerate(const Config& cfg, int g, int n, bool dominant, bool schemes,
                   bool with_triples) {
  if (dominant + schemes + with_triples > 1) {
    throw UsageError("pick at most one of --dominant, --schemes, --trees-with-triples");
  }
  unimap::CountTable table;
  const auto ec = enum_config(cfg);
  unimap::BigInt fiber = 1;
  for (int i = 1; i <= g; ++i) fiber *= 2 * i;
  if (schemes) {
    const int size = 6 * g - 3;
    table.add(g, size, unimap::count_dominant_schemes(g, ec), "brute-force");
    table.add(g, size, unimap::dominant_schemes(g), "formula");
  } else if (dominant) {
    table.add(g, n, unimap::count_dominant(g, n, ec), "brute-force");
    table.add(g, n, unimap::BigInt(unimap::count_trees_with_triples(g, n)) / fiber, "bijection");
  } else if (with_triples) {
    table.add(g, n, unimap::count_trees_with_triples(g, n), "brute-force");
    table.add(g, n, fiber * unimap::count_dominant(g, n, ec), "bijection");
  } else {
    table.add(g, n, unimap::count_unicellular(g, n, ec), "brute-force");
    if (g == 0) table.add(g, n, unimap::catalan(n), "formula");
  }
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& e : table.entries()) {
      rows.push_back({{"g", e.g}, {"n", e.n}, {"count", e.count.str()}, {"generator", e.generator}});
    }
    emit(cfg, rows.dump(2) + "\n");
  } else {
    emit(cfg, table.to_csv());
  }
  if (!table.consistent()) throw Failure("generators disagree", std::nullopt);
}

// open / close -----------------------------------------------------------

Json open_one(const unimap::RootedMap& m, const std::optional<unimap::Labelling>& labels,
              const unimap::OpeningSequence& seq) {
  if (labels) return unimap::io::to_json(unimap::labelled_phi(m, *labels, seq));
  return unimap::io::to_json(unimap::open_phi(m, seq));
}

void run_open(const Config& cfg, const std::string& path, const std::string& sequence,
              bool all) {
  if (all == !sequence.empty()) throw UsageError("give exactly one of --sequence and --all");
  const Json j = load(path);
  try {
    const unimap::RootedMap m = unimap::io::rooted_from_json(j);
    std::optional<unimap::Labelling> labels;
    if (j.contains("labels")) {
      if (!m.map().is_canonical() || unimap::io::map_from_json(j).root != 0) {
        throw UsageError("labelled maps must be given in canonical form");
      }
      labels = unimap::io::labels_from_json(m.map(), j["labels"]);
    }
    if (all) {
      Json out = Json::array();
      for (const auto& seq : unimap::opening_sequences(m)) {
        Json s = Json::array();
        for (auto v : seq.nodes) s.push_back(v.id + 1);
        out.push_back({{"sequence", s}, {"tree", open_one(m, labels, seq)}});
      }
      emit(cfg, out.dump(2) + "\n");
    } else {
      unimap::OpeningSequence seq;
      for (int id : parse_ids(sequence)) seq.nodes.push_back(unimap::VertexId{id - 1});
      emit(cfg, open_one(m, labels, seq).dump(2) + "\n");
    }
  } catch (const unimap::Error& e) {
    if (e.code() == unimap::Errc::kParse) throw UsageError(e.what());
    throw Failure(e.what(), j);
  }
}

void run_close(const Config& cfg, const std::string& path) {
  const Json j = load(path);
  try {
    if (j.contains("labels")) {
      const auto w = unimap::io::well_labelled_from_json(j);
      emit(cfg, unimap::io::to_json(unimap::labelled_psi(w)).dump(2) + "\n");
    } else {
      const auto tc = unimap::io::tree_with_triples_from_json(j);
      emit(cfg, unimap::io::to_json(unimap::close_psi(tc)).dump(2) + "\n");
    }
  } catch (const unimap::Error& e) {
    if (e.code() == unimap::Errc::kParse) throw UsageError(e.what());
    throw Failure(e.what(), j);
  }
}

// check ------------------------------------------------------------------

void run_check(const Config& cfg, const std::string& suite, int g, int nmax, int order) {
  namespace c = unimap::cli;
  const auto ec = enum_config(cfg);
  c::CheckResult r;
  if (suite == "surgery") {
    r = c::check_surgery(nmax);
  } else if (suite == "bijection") {
    r = c::check_bijection(g, nmax, ec);
  } else if (suite == "counts") {
    r = c::check_counts(g, nmax, ec);
  } else if (suite == "labelled") {
    r = c::check_labelled(g, nmax, ec);
  } else {
    r = c::check_series(nmax, order);
  }
  emit(cfg, r.report + (r.ok ? "PASS\n" : "FAIL\n"));
  if (!r.ok) throw Failure("check suite " + suite + " failed", r.counterexample);
}

// sample / estimate-tg / profile -----------------------------------------

void run_sample(const Config& cfg, const std::string& kind, int g, int n, int count) {
  unimap::SeededRng rng(cfg.seed);
  Json out = Json::array();
  for (int k = 0; k < count; ++k) {
    if (kind == "tree") {
      out.push_back(unimap::io::map_to_json(unimap::sample_plane_tree(n, rng)));
    } else if (kind == "labelled-tree") {
      out.push_back(unimap::io::to_json(unimap::sample_labelled_tree(n, rng)));
    } else if (kind == "dominant-map") {
      out.push_back(unimap::io::map_to_json(unimap::sample_dominant_map(g, n, rng)));
    } else {
      out.push_back(unimap::io::to_json(unimap::sample_well_labelled(g, n, rng)));
    }
  }
  emit(cfg, out.dump(2) + "\n");
}

void run_estimate(const Config& cfg, int g, int n, std::uint64_t samples,
                  const std::string& method) {
  const unimap::SeededRng rng(cfg.seed);
  const unimap::Estimate e =
      method == "moment" ? unimap::estimate_tg_moment(g, n, samples, rng, stats_config(cfg))
                         : unimap::estimate_tg_probability(g, n, samples, rng, stats_config(cfg));
  std::ostringstream out;
  out.precision(17);
  if (cfg.format == "json") {
    Json j{{"target", e.target}, {"g", g},          {"n", n},
           {"samples", e.samples}, {"mean", e.mean}, {"stderr", e.std_error},
           {"seed", cfg.seed}};
    out << j.dump(2) << '\n';
  } else {
    out << "target,g,n,samples,mean,stderr,seed\n"
        << e.target << ',' << g << ',' << n << ',' << e.samples << ',' << e.mean << ','
        << e.std_error << ',' << cfg.seed << '\n';
  }
  emit(cfg, out.str());
}

void run_profile(const Config& cfg, int g, int n, std::uint64_t samples, int bins,
                 const std::string& radii_path) {
  const unimap::SeededRng rng(cfg.seed);
  const unimap::PooledProfile p = unimap::pooled_profile(g, n, samples, rng, stats_config(cfg));
  std::ostringstream out;
  out.precision(17);
  const auto hist = p.histogram(bins);
  if (cfg.format == "json") {
    Json rows = Json::array();
    for (const auto& [x, m] : hist) rows.push_back({{"position", x}, {"mass", m}});
    Json radii = p.radii;
    out << Json{{"g", g}, {"n", n}, {"samples", samples}, {"seed", cfg.seed},
                {"profile", rows}, {"radius", radii}}
               .dump(2)
        << '\n';
  } else if (cfg.format == "gnuplot") {
    out << "# position mass (g=" << g << " n=" << n << " samples=" << samples << ")\n";
    for (const auto& [x, m] : hist) out << x << ' ' << m << '\n';
  } else {
    out << "position,mass\n";
    for (const auto& [x, m] : hist) out << x << ',' << m << '\n';
  }
  emit(cfg, out.str());
  if (!radii_path.empty()) {
    std::ostringstream r;
    r.precision(17);
    r << "sample,radius\n";
    for (std::size_t i = 0; i < p.radii.size(); ++i) r << i << ',' << p.radii[i] << '\n';
    unimap::io::write_file_atomic(radii_path, r.str());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unimap: unicellular maps, their opening bijection and labelled trees"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  if (const char* env = std::getenv("UNIMAP_SEED")) {
    try {
      std::size_t used = 0;
      cfg.seed = std::stoull(env, &used);
      if (used != std::string(env).size()) throw std::invalid_argument(env);
    } catch (const std::exception&) {
      std::cerr << "error: UNIMAP_SEED must be an unsigned integer\n";
      return 2;
    }
  }
  app.add_option("--seed", cfg.seed, "random seed (default: $UNIMAP_SEED or 1)");
  app.add_option("--workers", cfg.workers, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "largest number of involutions to visit")
      ->check(CLI::PositiveNumber);
  app.add_option("-o,--output", cfg.output, "output file (default: stdout)");
  app.add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"csv", "json", "gnuplot"}));

  std::string path;
  auto* validate = app.add_subcommand("validate", "check a map file");
  validate->add_option("map", path, "map JSON")->required();

  int g = 1, n = 3, nmax = 6, order = 12, count = 1, bins = 50;
  bool dominant = false, schemes = false, with_triples = false, all = false;
  auto* enumerate = app.add_subcommand("enumerate", "exhaustive counts as CSV");
  enumerate->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--n", n, "edges")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--dominant", dominant, "dominant maps only");
  enumerate->add_flag("--schemes", schemes, "dominant schemes of genus g");
  enumerate->add_flag("--trees-with-triples", with_triples, "trees with g triples");

  std::string sequence;
  auto* open = app.add_subcommand("open", "open a dominant map into a tree with triples");
  open->add_option("map", path, "map JSON")->required();
  open->add_option("--sequence", sequence, "opening sequence v1,...,vg (1-based ids)");
  open->add_flag("--all", all, "every opening sequence");

  auto* close = app.add_subcommand("close", "glue a tree with triples back into a map");
  close->add_option("tree", path, "tree-with-triples JSON")->required();

  std::string suite;
  auto* check = app.add_subcommand("check", "run a self-check suite");
  check->add_option("--suite", suite, "suite")
      ->required()
      ->check(CLI::IsMember({"surgery", "bijection", "counts", "labelled", "series"}));
  check->add_option("--g", g, "genus")->check(CLI::NonNegativeNumber);
  check->add_option("--nmax", nmax, "largest size")->check(CLI::PositiveNumber);
  check->add_option("--order", order, "series order (series suite)")->check(CLI::PositiveNumber);

  std::string kind = "tree";
  auto* sample = app.add_subcommand("sample", "uniform random objects as JSON");
  sample->add_option("--kind", kind, "object kind")
      ->required()
      ->check(CLI::IsMember({"tree", "labelled-tree", "dominant-map", "well-labelled"}));
  sample->add_option("--g", g, "genus")->check(CLI::NonNegativeNumber);
  sample->add_option("--n", n, "edges")->required()->check(CLI::PositiveNumber);
  sample->add_option("--count", count, "how many")->check(CLI::PositiveNumber);

  std::uint64_t samples = 1000;
  std::string method = "moment";
  auto* estimate = app.add_subcommand("estimate-tg", "Monte-Carlo estimate of t_g");
  estimate->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  estimate->add_option("--n", n, "tree size")->required()->check(CLI::PositiveNumber);
  estimate->add_option("--samples", samples, "samples")->check(CLI::Range(100ull, ~0ull));
  estimate->add_option("--method", method, "estimator")
      ->check(CLI::IsMember({"moment", "probability"}));

  std::string radii_path;
  auto* profile = app.add_subcommand("profile", "pooled profile histogram");
  profile->add_option("--g", g, "genus")->required()->check(CLI::NonNegativeNumber);
  profile->add_option("--n", n, "tree size")->required()->check(CLI::PositiveNumber);
  profile->add_option("--samples", samples, "samples")->check(CLI::PositiveNumber);
  profile->add_option("--bins", bins, "histogram bins")->check(CLI::PositiveNumber);
  profile->add_option("--radii", radii_path, "also write per-sample radii to this CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) run_validate(cfg, path);
    if (*enumerate) run_enumerate(cfg, g, n, dominant, schemes, with_triples);
    if (*open) run_open(cfg, path, sequence, all);
    if (*close) run_close(cfg, path);
    if (*check) run_check(cfg, suite, g, nmax, order);
    if (*sample) run_sample(cfg, kind, g, n, count);
    if (*estimate) run_estimate(cfg, g, n, samples, method);
    if (*profile) run_profile(cfg, g, n, samples, bins, radii_path);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const Failure& e) {
    std::cerr << "failure: " << e.what() << '\n';
    if (e.object) std::cerr << e.object->dump(2) << '\n';
    return 1;
  } catch (const unimap::Error& e) {
    std::cerr << "error (" << unimap::to_string(e.code()) << "): " << e.what() << '\n';
    const bool usage = e.code() == unimap::Errc::kParse ||
                       e.code() == unimap::Errc::kGenusOutOfRange ||
                       e.code() == unimap::Errc::kEmptyClass ||
                       e.code() == unimap::Errc::kResourceBound ||
                       e.code() == unimap::Errc::kOrderTooLarge ||
                       e.code() == unimap::Errc::kInvalidArgument;
    return usage ? 2 : 1;
  }
  return 0;
}
