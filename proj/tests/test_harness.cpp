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

#include <doctest.h>

#include "tutte/io.hpp"
#include "tutte/suites.hpp"

using namespace tutte;

TEST_CASE("suite dispatch") {
  CHECK_THROWS_AS(run_suite("nope", 2), UnknownSuite);
  CHECK_THROWS_AS(run_suite("engines", 7), CapExceeded);
  SuiteReport rep = run_suite("duality", 2);
  CHECK(rep.passed());
  CHECK(rep.cases > 0);
  // reports are deterministic for a fixed corpus
  SuiteReport rep2 = run_suite("duality", 2);
  CHECK(rep.cases == rep2.cases);
  CHECK(rep.to_text() == rep2.to_text());
}

TEST_CASE("seeded corpus extension stays deterministic") {
  SuiteReport a = run_suite("duality", 2, 7);
  SuiteReport b = run_suite("duality", 2, 7);
  CHECK(a.cases == b.cases);
  CHECK(a.passed());
  CHECK(b.passed());
  // the seed actually adds objects
  SuiteReport base = run_suite("duality", 2, 0);
  CHECK(a.cases > base.cases);
}

TEST_CASE("object parsing") {
  json tri = {{"type", "graph"},
              {"v", 3},
              {"edges", {{0, 1}, {1, 2}, {2, 0}}}};
  ParsedObject po = parse_object(tri);
  CHECK(po.obj.tag == SystemTag::Graph);
  CHECK(po.obj.grade() == 3);

  json uni = {{"type", "uniform"}, {"k", 2}, {"n", 3}};
  CHECK(std::get<Matroid>(parse_object(uni).obj.payload) ==
        Matroid::uniform(2, 3));

  json dm = {{"type", "delta-matroid"},
             {"n", 1},
             {"feasible", json::array({json::array(), {0}})}};
  CHECK(std::get<DeltaMatroid>(parse_object(dm).obj.payload) ==
        dm_nonorientable());

  json ribbon = {{"type", "ribbon"},
                 {"vertices", {{0, 1}}},
                 {"edges", {{{"pair", {0, 1}}, {"sign", -1}}}}};
  CHECK(parse_object(ribbon).obj.tag == SystemTag::Ribbon);

  CHECK_THROWS_AS(parse_object(json{{"type", "widget"}}), ParseError);
  CHECK_THROWS_AS(parse_object(json{{"type", "graph"}, {"v", 1}}), ParseError);
  json bad_ranks = {{"type", "matroid"}, {"n", 2}, {"ranks", {0, 1}}};
  CHECK_THROWS_AS(parse_object(bad_ranks), ParseError);
}

TEST_CASE("compute verb") {
  json tri = {{"type", "graph"},
              {"v", 3},
              {"edges", {{0, 1}, {1, 2}, {2, 0}}}};
  ParsedObject po = parse_object(tri);
  CHECK(compute_polynomial(po, "tutte", std::nullopt).text == "x^2 + x + y");
  CHECK_THROWS_AS(compute_polynomial(po, "br2", std::nullopt), ParseError);
  CHECK_THROWS_AS(compute_polynomial(po, "nope", std::nullopt), ParseError);

  json theta = {{"type", "ribbon"},
                {"vertices", {{0, 2, 4}, {1, 5, 3}}},
                {"edges",
                 {{{"pair", {0, 1}}, {"sign", 1}},
                  {{"pair", {2, 3}}, {"sign", 1}},
                  {{"pair", {4, 5}}, {"sign", 1}}}}};
  ParsedObject pt = parse_object(theta);
  CHECK(compute_polynomial(pt, "penrose", parse_rational("3")).text == "6");
  CHECK_THROWS_AS(compute_polynomial(pt, "penrose", std::nullopt), ParseError);

  // structured form carries doubled exponents
  ComputeResult br2 = compute_polynomial(
      parse_object(json{{"type", "delta-matroid"},
                        {"n", 1},
                        {"feasible", json::array({json::array(), {0}})}}),
      "br2", std::nullopt);
  REQUIRE(br2.polynomial.has_value());
  json terms = polynomial_to_json(*br2.polynomial);
  CHECK(terms.size() == 2);
  CHECK(terms[0]["exponents"].begin().value() == 1);
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == Rational(3));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK(parse_rational("5/2") == Rational(5, 2));
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
}

TEST_CASE("cap surfacing") {
  // the bruteforce engine refuses objects beyond six elements with a clear
  // error that the CLI surfaces
  MinorObject big = matroid_object(Matroid::uniform(3, 7));
  Selector da = canonical_selector_x(SystemTag::Matroid);
  Selector db = canonical_selector_y(SystemTag::Matroid);
  try {
    alpha_bruteforce_scaled(big, da, db);
    CHECK(false);
  } catch (const CapExceeded& e) {
    CHECK(std::string(e.what()).find("6") != std::string::npos);
  }
}
