// Copyright 2026 The Authors.
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

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "tutte/io.hpp"
#include "tutte/suites.hpp"

namespace {

int run_compute(const std::string& object_path, const std::string& polynomial,
                const std::string& lambda_text, const std::string& report_path) {
  tutte::ParsedObject po = tutte::load_object(object_path);
  std::optional<tutte::Rational> lambda;
  if (!lambda_text.empty()) lambda = tutte::parse_rational(lambda_text);
  tutte::ComputeResult res = tutte::compute_polynomial(po, polynomial, lambda);
  std::cout << res.text << "\n";
  if (!report_path.empty()) {
    tutte::json j;
    j["polynomial"] = polynomial;
    j["object"] = object_path;
    j["text"] = res.text;
    j["exponents_doubled"] = true;
    if (res.polynomial) j["terms"] = tutte::polynomial_to_json(*res.polynomial);
    if (lambda) j["lambda"] = lambda_text;
    std::ofstream out(report_path);
    out << j.dump(2) << "\n";
  }
  return 0;
}

int run_verify(const std::string& suite, int max_elements, unsigned seed,
               const std::string& report_path) {
  tutte::SuiteReport rep = tutte::run_suite(suite, max_elements, seed);
  std::cout << rep.to_text();
  if (!report_path.empty()) {
    tutte::json j;
    j["suite"] = rep.suite;
    j["max_elements"] = rep.max_elements;
    j["seed"] = seed;
    j["cases"] = rep.cases;
    j["passed"] = rep.passed();
    tutte::json fails = tutte::json::array();
    for (const auto& f : rep.failures)
      fails.push_back({{"object", f.object_id},
                       {"identity", f.identity},
                       {"lhs", f.lhs},
                       {"rhs", f.rhs}});
    j["failures"] = fails;
    std::ofstream out(report_path);
    out << j.dump(2) << "\n";
  }
  return rep.passed() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tuttecalc: canonical Tutte polynomials of minors systems "
      "(matroids, matroid perspectives, graphs, delta-matroids, ribbon "
      "graphs and their vertex-partitioned variants)"};
  app.require_subcommand(1);

  std::string object_path, polynomial, lambda_text, report_path;
  CLI::App* compute = app.add_subcommand("compute", "compute one polynomial");
  compute->add_option("--object", object_path, "object record (JSON file)")
      ->required();
  compute
      ->add_option("--polynomial", polynomial,
                   "tutte|lv|br2|br3|br-partitioned|krushkal|penrose2|penrose")
      ->required();
  compute->add_option("--lambda", lambda_text,
                      "rational evaluation point for penrose (e.g. 3 or 5/2)");
  compute->add_option("--json-report", report_path,
                      "write the structured polynomial to this file");

  std::string suite = "all";
  int max_elements = 4;
  unsigned seed = 0;
  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option(
      "--suite", suite,
      "engines|duality|convolution|morphisms|universality|penrose|"
      "ribbon-square|all");
  verify->add_option("--max-elements", max_elements,
                     "largest object size to verify (<= 6)");
  verify->add_option("--seed", seed,
                     "nonzero adds deterministic randomized extension objects");
  verify->add_option("--json-report", report_path,
                     "write the structured report to this file");

  CLI11_PARSE(app, argc, argv);
  try {
    if (compute->parsed())
      return run_compute(object_path, polynomial, lambda_text, report_path);
    return run_verify(suite, max_elements, seed, report_path);
  } catch (const tutte::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
