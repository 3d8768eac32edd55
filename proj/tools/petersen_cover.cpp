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

// Command-line front end: exact solves, constructed covers, certificate
// verification, bound reports, the conjecture sweep, theorem suites, and
// graph exports. All numeric output uses 1-based indices, matching the
// u_i / v_i notation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "petersen/petersen.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_bad_parameters = 2;
constexpr int exit_resource = 3;
constexpr int exit_internal = 4;

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out.is_open()) {
    throw petersen::resource_error("cannot open output file " + out_path);
  }
  out << text;
}

std::string witness_line(const petersen::cover& c) {
  std::string s = "u:";
  for (int i : c.selected_outer_indices()) s += " " + std::to_string(i);
  s += "  v:";
  for (int i : c.selected_inner_indices()) s += " " + std::to_string(i);
  return s;
}

int run_beta(int n, int k, std::uint64_t budget, bool as_json,
             const std::string& out_path) {
  petersen::graph g = petersen::build_graph(n, k);
  petersen::solve_options opts;
  opts.node_budget = budget;
  petersen::beta_result res = petersen::beta_exact(g, opts);
  if (as_json || !out_path.empty()) {
    write_output(petersen::beta_result_to_json(res).dump(2), out_path);
    return exit_ok;
  }
  std::cout << "beta(P(" << n << "," << k << ")) = " << res.beta << "\n";
  std::cout << "  method:  " << petersen::to_string(res.method) << "\n";
  std::cout << "  nodes:   " << res.nodes << "\n";
  std::cout << "  elapsed: " << res.elapsed.count() / 1000.0 << " ms\n";
  std::cout << "  witness: " << witness_line(res.witness) << "\n";
  if (2 * n <= 24) {
    std::cout << "  d:       " << petersen::d_value_bruteforce(g).value
              << " (exhaustive)\n";
  } else {
    std::cout << "  d:       " << petersen::d_from_beta(g.params(), res.beta).value
              << " (derived via d = 2(beta - n))\n";
  }
  return exit_ok;
}

int run_cover(int n, int k, const std::string& method, std::uint64_t budget,
              const std::string& out_path) {
  petersen::graph g = petersen::build_graph(n, k);
  std::optional<petersen::cover> chosen;
  std::string how;
  if (method == "construction" || method == "auto") {
    petersen::construction_result best = petersen::best_construction(g);
    auto formula = petersen::exact_formula(g.params());
    if (method == "construction" ||
        (formula && best.c.size() == formula->value)) {
      chosen = best.c;
      how = std::string("construction:") + petersen::to_string(best.method);
    }
  }
  if (!chosen) {
    petersen::solve_options opts;
    opts.node_budget = budget;
    petersen::beta_result res = petersen::beta_exact(g, opts);
    chosen = res.witness;
    how = "solver";
  }
  nlohmann::json cert = petersen::cover_to_certificate(*chosen);
  cert["method"] = how;
  write_output(cert.dump(2), out_path);
  return exit_ok;
}

int run_verify_cover(int n, int k, const std::string& cert_path) {
  std::ifstream in(cert_path);
  if (!in.is_open()) {
    throw petersen::resource_error("cannot open certificate " + cert_path);
  }
  nlohmann::json j = nlohmann::json::parse(in);
  petersen::cover c = petersen::certificate_to_cover(j);
  if (c.params().n != n || c.params().k != k) {
    throw petersen::domain_error("certificate is for P(" +
                                 std::to_string(c.params().n) + "," +
                                 std::to_string(c.params().k) +
                                 "), not the requested graph");
  }
  petersen::graph g = petersen::build_graph(n, k);
  petersen::cover_check chk = petersen::is_cover(g, c);
  if (chk.ok) {
    std::cout << "VALID: covers all " << g.num_edges() << " edges with "
              << c.size() << " vertices\n";
    return exit_ok;
  }
  std::cout << "INVALID: edge " << petersen::to_string(*chk.uncovered)
            << " is uncovered\n";
  return exit_verification_failed;
}

int run_bounds(int n, int k, bool as_json, bool as_csv,
               const std::string& out_path) {
  petersen::bound_report r = petersen::make_bound_report({n, k});
  if (as_json) {
    write_output(petersen::bound_report_to_json(r).dump(2), out_path);
    return exit_ok;
  }
  if (as_csv) {
    write_output(std::string(petersen::bound_report_csv_header()) + "\n" +
                     petersen::bound_report_to_csv_row(r) + "\n",
                 out_path);
    return exit_ok;
  }
  std::cout << "P(" << n << "," << k << ")\n";
  std::cout << "  lower bound: " << r.lower << "\n";
  std::cout << "  upper bounds:\n";
  for (const auto& u : r.uppers) {
    std::cout << "    " << u.label() << ": " << u.value << "\n";
  }
  std::cout << "  min upper:   " << r.min_upper() << "\n";
  if (r.exact) {
    std::cout << "  exact:       " << r.exact->value << " (formula "
              << petersen::to_string(r.exact->formula) << ")\n";
  } else {
    std::cout << "  exact:       no closed formula applies\n";
  }
  std::cout << "  conjecture:  n + ceil(n/5) = " << r.conjecture << "\n";
  return exit_ok;
}

int run_sweep(int max_n, int jobs, std::uint64_t budget,
              const std::string& cache_path) {
  petersen::sweep_options opts;
  opts.max_n = max_n;
  opts.jobs = jobs;
  opts.node_budget = budget;
  if (!cache_path.empty()) opts.cache_path = cache_path;
  petersen::sweep_summary s = petersen::sweep(opts);
  for (const auto& r : s.records) {
    std::cout << "P(" << r.n << "," << r.k << "): ";
    if (r.resolved) {
      std::cout << "beta=" << *r.beta << " lower=" << r.lower
                << " min_upper=" << r.min_upper
                << " conjecture=" << r.conjecture
                << (r.conjecture_ok ? " ok" : " VIOLATION");
    } else {
      std::cout << "UNRESOLVED bounds=[" << r.lower << ", "
                << (r.best_upper ? std::to_string(*r.best_upper) : "?") << "]";
    }
    if (!r.bound_certified) std::cout << " [solver-only]";
    std::cout << "\n";
  }
  std::cout << "sweep n <= " << max_n << ": " << s.pairs << " pairs, "
            << s.resolved << " resolved, " << s.unresolved << " unresolved, "
            << s.violations.size() << " conjecture violations, "
            << s.failures.size() << " consistency failures; "
            << s.solver_only
            << " pairs rest on the solver alone (no closed bound meets the "
               "conjecture)\n";
  for (const auto& f : s.failures) std::cout << "  FAILURE " << f << "\n";
  for (auto v : s.violations) {
    std::cout << "  VIOLATION P(" << v.n << "," << v.k << ")\n";
  }
  return s.ok() ? exit_ok : exit_verification_failed;
}

int run_verify_theorems(int max_n) {
  petersen::theorem_report r = petersen::verify_theorems(max_n);
  for (const auto& suite : r.suites) {
    std::cout << (suite.passed() ? "PASS" : "FAIL") << " " << suite.name
              << " (" << suite.checked << " checks)\n";
    for (const auto& f : suite.failures) std::cout << "  " << f << "\n";
  }
  return r.all_passed() ? exit_ok : exit_verification_failed;
}

int run_export(int n, int k, const std::string& format,
               const std::string& out_path) {
  petersen::graph g = petersen::build_graph(n, k);
  if (format == "dimacs") {
    write_output(petersen::to_dimacs(g), out_path);
  } else {
    write_output(petersen::graph_to_json(g).dump(2), out_path);
  }
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum vertex cover toolkit for generalized Petersen graphs P(n,k)"};
  app.require_subcommand(1);

  int n = 0, k = 0, max_n = 0, jobs = 1;
  std::uint64_t budget = 100'000'000;
  bool as_json = false, as_csv = false;
  std::string out_path, cert_path, cache_path;
  std::string method = "auto", format = "dimacs";

  auto* beta = app.add_subcommand("beta", "Exact minimum vertex cover size");
  beta->add_option("n", n, "cycle length")->required();
  beta->add_option("k", k, "inner skip")->required();
  beta->add_option("--budget", budget, "node budget");
  beta->add_flag("--json", as_json, "emit the result as JSON");
  beta->add_option("--out", out_path, "write JSON to a file");

  auto* cov = app.add_subcommand("cover", "Produce a cover certificate");
  cov->add_option("n", n, "cycle length")->required();
  cov->add_option("k", k, "inner skip")->required();
  cov->add_option("--method", method, "solver|construction|auto")
      ->check(CLI::IsMember({"solver", "construction", "auto"}));
  cov->add_option("--budget", budget, "node budget");
  cov->add_option("--out", out_path, "write the certificate to a file");

  auto* ver = app.add_subcommand("verify-cover", "Check a cover certificate");
  ver->add_option("n", n, "cycle length")->required();
  ver->add_option("k", k, "inner skip")->required();
  ver->add_option("--cert", cert_path, "certificate JSON file")->required();

  auto* bnd = app.add_subcommand("bounds", "Bound report for one (n,k)");
  bnd->add_option("n", n, "cycle length")->required();
  bnd->add_option("k", k, "inner skip")->required();
  bnd->add_flag("--json", as_json, "emit JSON");
  bnd->add_flag("--csv", as_csv, "emit CSV");
  bnd->add_option("--out", out_path, "write to a file");

  auto* swp = app.add_subcommand("sweep", "Conjecture sweep over all pairs");
  swp->add_option("--max-n", max_n, "largest n to check")->required();
  swp->add_option("--resume", cache_path, "JSON-lines results cache");
  swp->add_option("--jobs", jobs, "parallel workers");
  swp->add_option("--budget", budget, "node budget per solve");

  auto* vth = app.add_subcommand("verify-theorems", "Theorem property suites");
  vth->add_option("--max-n", max_n, "largest n to check")->required();

  auto* exp = app.add_subcommand("export", "Export the graph structure");
  exp->add_option("n", n, "cycle length")->required();
  exp->add_option("k", k, "inner skip")->required();
  exp->add_option("--format", format, "dimacs|json")
      ->check(CLI::IsMember({"dimacs", "json"}));
  exp->add_option("--out", out_path, "write to a file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (beta->parsed()) return run_beta(n, k, budget, as_json, out_path);
    if (cov->parsed()) return run_cover(n, k, method, budget, out_path);
    if (ver->parsed()) return run_verify_cover(n, k, cert_path);
    if (bnd->parsed()) return run_bounds(n, k, as_json, as_csv, out_path);
    if (swp->parsed()) return run_sweep(max_n, jobs, budget, cache_path);
    if (vth->parsed()) return run_verify_theorems(max_n);
    if (exp->parsed()) return run_export(n, k, format, out_path);
  } catch (const petersen::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_parameters;
  } catch (const petersen::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const petersen::resource_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_resource;
  } catch (const petersen::invariant_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return exit_internal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_internal;
  }
  return exit_ok;
}
