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

// Acceptance run: one line per criterion, exact checks throughout.  Exits
// nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>

#include "tutte/suites.hpp"

using namespace tutte;

namespace {

int failures_total = 0;

void criterion(int number, const char* text,
               const std::function<void(SuiteReport&)>& body) {
  SuiteReport rep;
  rep.suite = text;
  auto t0 = std::chrono::steady_clock::now();
  bool threw = false;
  std::string what;
  try {
    body(rep);
  } catch (const std::exception& e) {
    threw = true;
    what = e.what();
  }
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  bool ok = !threw && rep.passed();
  std::printf("%s  %2d. %s (%ld cases, %lld ms)\n", ok ? "PASS" : "FAIL",
              number, text, rep.cases, static_cast<long long>(ms));
  if (threw) std::printf("      exception: %s\n", what.c_str());
  for (std::size_t i = 0; i < rep.failures.size() && i < 3; ++i) {
    const auto& f = rep.failures[i];
    std::printf("      [%s] %s\n        lhs = %s\n        rhs = %s\n",
                f.object_id.c_str(), f.identity.c_str(), f.lhs.c_str(),
                f.rhs.c_str());
  }
  if (rep.failures.size() > 3)
    std::printf("      ... %zu further failures\n", rep.failures.size() - 3);
  if (!ok) ++failures_total;
}

}  // namespace

int main() {
  CorpusOptions five{5, 0};
  CorpusOptions four{4, 0};

  criterion(1, "engine agreement: bruteforce = state sum = deletion-contraction",
            [&](SuiteReport& r) { checks::engine_agreement(r, five); });
  criterion(2, "classical anchors: T(triangle), T(U11), T(U01), alpha(triangle)",
            [&](SuiteReport& r) { checks::classical_anchors(r); });
  criterion(3, "specialization chain for matroid perspectives",
            [&](SuiteReport& r) { checks::specialization_chain(r, four); });
  criterion(4, "duality suite: T, R~_D, R~_G, and LV with z-monomial clearing",
            [&](SuiteReport& r) { checks::duality_suite(r, four); });
  criterion(5, "convolution suite: matroid, perspective, even delta-matroid, "
               "partitioned-BR, Krushkal",
            [&](SuiteReport& r) { checks::convolution_suite(r, four); });
  criterion(6, "functor squares: D(G\\e), D(G/e), D(G*), D(G^tau(e))",
            [&](SuiteReport& r) { checks::functor_squares(r, four); });
  criterion(7, "uniformity detector on the free-coefficient witnesses",
            [&](SuiteReport& r) { checks::uniformity_detector(r); });
  criterion(8, "penrose: theta 3-colourings, lam^c transfer, specialization",
            [&](SuiteReport& r) { checks::penrose_suite(r, four); });
  criterion(9, "krushkal: internal identity, plane reduction, R_G = K~(x-1,y,yz^2,y)",
            [&](SuiteReport& r) { checks::krushkal_checks(r, four); });
  criterion(10, "universality: monomial rescaling recovers the full alpha",
            [&](SuiteReport& r) { checks::universality_suite(r, four); });
  criterion(11, "nine-case coverage of the R~_D recursion",
            [&](SuiteReport& r) { checks::nine_case_checks(r, four); });

  if (failures_total == 0) {
    std::printf("acceptance: all 11 criteria passed\n");
    return 0;
  }
  std::printf("acceptance: %d criteria FAILED\n", failures_total);
  return 1;
}
