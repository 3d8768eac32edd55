// Copyright 2026 The petersen-cover Authors
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

#include "petersen/harness.hpp"

#include <filesystem>
#include <fstream>

#include <catch_amalgamated.hpp>

#include "fig1.hpp"
#include "petersen/io.hpp"

using namespace petersen;
namespace fs = std::filesystem;

namespace {

struct temp_file {
  fs::path path;
  explicit temp_file(const std::string& name)
      : path(fs::temp_directory_path() / name) {
    fs::remove(path);
  }
  ~temp_file() { fs::remove(path); }
};

std::vector<std::pair<int, std::optional<int>>> betas(
    const sweep_summary& s) {
  std::vector<std::pair<int, std::optional<int>>> out;
  for (const auto& r : s.records) out.push_back({r.n * 100 + r.k, r.beta});
  return out;
}

}  // namespace

TEST_CASE("admissible_pairs enumerates n ascending then k") {
  auto pairs = admissible_pairs(5);
  REQUIRE(pairs == std::vector<graph_params>{{3, 1}, {4, 1}, {5, 1}, {5, 2}});
  CHECK(admissible_pairs(35).size() == 289);
}

TEST_CASE("random_nontrivial_cover yields valid, varied, reproducible covers") {
  graph g = build_graph(12, 5);
  std::mt19937_64 rng_a(7), rng_b(7);
  for (int t = 0; t < 100; ++t) {
    cover a = random_nontrivial_cover(g, rng_a);
    cover b = random_nontrivial_cover(g, rng_b);
    CHECK(a == b);  // same seed, same covers
    CHECK(is_cover(g, a).ok);
    CHECK_FALSE(is_trivial(a));
  }
}

TEST_CASE("sweep to n = 5 reproduces the first betas") {
  sweep_summary s = sweep({.max_n = 5});
  CHECK(s.pairs == 4);
  CHECK(s.resolved == 4);
  CHECK(s.unresolved == 0);
  CHECK(s.ok());
  REQUIRE(s.records.size() == 4);
  CHECK(*s.records[0].beta == 4);   // P(3,1)
  CHECK(*s.records[1].beta == 4);   // P(4,1)
  CHECK(*s.records[2].beta == 6);   // P(5,1)
  CHECK(*s.records[3].beta == 6);   // P(5,2)
  for (const auto& r : s.records) CHECK(r.conjecture_ok);
}

TEST_CASE("sweep records agree with exact formulas where they apply") {
  sweep_summary s = sweep({.max_n = 10});
  CHECK(s.ok());
  for (const auto& r : s.records) {
    if (r.exact) CHECK(*r.exact == *r.beta);
  }
}

TEST_CASE("sweep is deterministic and job-count independent") {
  sweep_summary a = sweep({.max_n = 9, .jobs = 1});
  sweep_summary b = sweep({.max_n = 9, .jobs = 4});
  REQUIRE(a.records.size() == b.records.size());
  CHECK(betas(a) == betas(b));
  for (std::size_t i = 0; i < a.records.size(); ++i) {
    CHECK(a.records[i].digest == b.records[i].digest);
    CHECK(a.records[i].lower == b.records[i].lower);
    CHECK(a.records[i].min_upper == b.records[i].min_upper);
  }
}

TEST_CASE("sweep cache round trip and resume") {
  temp_file cache("petersen_sweep_cache_test.jsonl");
  sweep_options opts{.max_n = 8, .cache_path = cache.path};
  sweep_summary first = sweep(opts);
  REQUIRE(first.ok());

  SECTION("a full cache is reused verbatim") {
    sweep_summary second = sweep(opts);
    CHECK(betas(second) == betas(first));
    for (std::size_t i = 0; i < first.records.size(); ++i) {
      CHECK(second.records[i].digest == first.records[i].digest);
    }
  }

  SECTION("a truncated cache resumes to the same summary") {
    std::ifstream in(cache.path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    in.close();
    REQUIRE(lines.size() > 4);
    std::ofstream out(cache.path, std::ios::trunc);
    for (std::size_t i = 0; i + 3 < lines.size(); ++i) out << lines[i] << "\n";
    // simulate an interrupted write: half a JSON record
    out << lines[lines.size() - 3].substr(0, 20);
    out.close();

    sweep_summary resumed = sweep(opts);
    CHECK(betas(resumed) == betas(first));
  }

  SECTION("a tampered witness is rejected on load") {
    std::ifstream in(cache.path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    in.close();
    nlohmann::json j = nlohmann::json::parse(lines[0]);
    j["witness_u"] = std::vector<int>{1};
    std::ofstream out(cache.path, std::ios::trunc);
    out << j.dump() << "\n";
    out.close();
    results_cache rc(cache.path);
    CHECK_THROWS_AS(rc.load(), domain_error);
  }
}

TEST_CASE("sweep rejects max_n below the smallest admissible n") {
  CHECK_THROWS_AS(sweep({.max_n = 2}), domain_error);
}

TEST_CASE("sweep flags pairs whose conjecture status is solver-only") {
  sweep_summary s = sweep({.max_n = 10});
  std::map<std::pair<int, int>, sweep_record> by_pair;
  for (const auto& r : s.records) by_pair[{r.n, r.k}] = r;
  // (9,4): exact formula (n = 2k+1) meets the conjecture exactly
  CHECK(by_pair[{9, 4}].bound_certified);
  // (16,5)-style bipartite pairs are certified; tested here via (10,3)
  CHECK(by_pair[{10, 3}].bound_certified);
  // (10,4): no formula, and every closed upper bound exceeds n + ceil(n/5)
  CHECK_FALSE(by_pair[{10, 4}].bound_certified);
  CHECK(s.solver_only >= 1);
}

TEST_CASE("budget exhaustion yields unresolved records, never dropped pairs") {
  sweep_options opts;
  opts.max_n = 6;
  opts.node_budget = 1;  // pairs not closed by the root bound stay unresolved
  sweep_summary s = sweep(opts);
  CHECK(s.pairs == 6);
  CHECK(s.resolved + s.unresolved == 6);
  CHECK(s.unresolved >= 1);
  CHECK(static_cast<int>(s.records.size()) == s.pairs);
  for (const auto& r : s.records) {
    if (r.resolved) {
      CHECK(r.beta.has_value());
      continue;
    }
    CHECK_FALSE(r.beta.has_value());
    CHECK(r.method == "unresolved");
    REQUIRE(r.best_upper.has_value());
    CHECK(r.lower <= *r.best_upper);
  }
  // unknown is not a violation
  CHECK(s.violations.empty());
  CHECK(s.ok());
}

TEST_CASE("results cache rejects duplicate records") {
  temp_file cache("petersen_dup_cache_test.jsonl");
  results_cache rc(cache.path);
  sweep_summary s = sweep({.max_n = 4});
  sweep_record r = s.records.front();
  rc.append(r);
  rc.append(r);
  CHECK_THROWS_AS(rc.load(), domain_error);
}

TEST_CASE("verify_theorems passes on small range") {
  theorem_report r = verify_theorems(8, 50);
  REQUIRE(r.suites.size() == 6);
  for (const auto& s : r.suites) {
    INFO(s.name);
    CHECK(s.checked > 0);
    CHECK(s.failures.empty());
  }
  CHECK(r.all_passed());
}

TEST_CASE("witness digest is stable and selection-sensitive") {
  cover c = fig1::cover_p16_5();
  std::string d1 = witness_digest(c, 21);
  CHECK(d1 == witness_digest(fig1::cover_p16_5(), 21));
  CHECK(d1 != witness_digest(c.with(outer_vertex(1)), 21));
  CHECK(d1 != witness_digest(c, 22));
}

TEST_CASE("cover certificate round trip") {
  cover c = fig1::cover_p16_5();
  nlohmann::json j = cover_to_certificate(c);
  CHECK(j["size"] == 21);
  cover back = certificate_to_cover(j);
  CHECK(back == c);

  j["size"] = 20;
  CHECK_THROWS_AS(certificate_to_cover(j), domain_error);
  nlohmann::json incomplete = {{"n", 5}, {"k", 2}};
  CHECK_THROWS_AS(certificate_to_cover(incomplete), domain_error);
}

TEST_CASE("beta_result serialization includes the certificate") {
  graph g = build_graph(6, 1);
  beta_result r = beta_exact(g);
  nlohmann::json j = beta_result_to_json(r);
  CHECK(j["beta"] == 6);
  CHECK(j["witness"]["size"] == 6);
  cover w = certificate_to_cover(j["witness"]);
  CHECK(is_cover(g, w).ok);
}
