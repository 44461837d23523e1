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

#include <random>

#include "tutte/poly.hpp"

using namespace tutte;

namespace {

Polynomial X() { return Polynomial::variable("x"); }
Polynomial Y() { return Polynomial::variable("y"); }

Polynomial random_poly(std::mt19937& rng) {
  static const char* vars[] = {"x", "y", "z"};
  std::uniform_int_distribution<int> nterms(0, 4), coeff(-5, 5), exp(0, 3);
  Polynomial p;
  int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (const char* v : vars) m = m.times(Monomial::var(v, exp(rng)));
    p += Polynomial::monomial(m, coeff(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
  // (x + 1) * (x - 1) = x^2 - 1
  Polynomial lhs = (X() + Polynomial::one()) * (X() - Polynomial::one());
  Polynomial rhs = X().pow(2) - Polynomial::one();
  CHECK(lhs == rhs);

  // additive identity
  Polynomial p = X().pow(2) + Y();
  CHECK(p + Polynomial::zero() == p);

  // x^{1/2} * x^{1/2} = x  (doubled-exponent addition 1+1=2)
  Polynomial half = Polynomial::monomial(Monomial::var_doubled("x", 1), 1);
  CHECK(half * half == X());
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(20260811);
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("canonical form") {
  // Building the same polynomial along different routes yields identical term
  // maps, and re-normalizing (adding zero) changes nothing.
  Polynomial p = X() * Y() + X() * Y() - X() * Y();
  Polynomial q = Y() * X();
  CHECK(p == q);
  CHECK(p + Polynomial::zero() == p);
  Polynomial z = X() - X();
  CHECK(z.is_zero());
  CHECK(z.terms().empty());
}

TEST_CASE("doubled-exponent constructors") {
  CHECK(Monomial::var("x", 1) == Monomial::var_doubled("x", 2));
  CHECK(Monomial::var("x", 0).is_unit());
  CHECK(Monomial::var_doubled("x", 1) != Monomial::var("x", 1));
  CHECK(Monomial::var_doubled("x", 1).total_doubled_degree() == 1);
}

TEST_CASE("substitution") {
  Polynomial p = X().pow(2) + X() + Y();
  SUBCASE("direct evaluation by substitution") {
    Polynomial r = substitute(
        p, {{"x", Polynomial::one()}, {"y", Polynomial::constant(2)}});
    CHECK(r == Polynomial::constant(4));
  }
  SUBCASE("unbound variables pass through") {
    Polynomial r = substitute(p, {{"y", Polynomial::constant(0)}});
    CHECK(r == X().pow(2) + X());
  }
  SUBCASE("square-root variable protocol") {
    Polynomial half = Polynomial::monomial(Monomial::var_doubled("x", 1), 1);
    SubstArgs args;
    args.sqrt_bindings["x"] = Polynomial::variable("s");
    CHECK(substitute(half, args) == Polynomial::variable("s"));
    // x^{3/2} -> s^3
    Polynomial threehalf =
        Polynomial::monomial(Monomial::var_doubled("x", 3), 1);
    CHECK(substitute(threehalf, args) == Polynomial::variable("s").pow(3));
  }
  SUBCASE("half-integer exponent with non-monomial binding fails") {
    Polynomial half = Polynomial::monomial(Monomial::var_doubled("x", 1), 1);
    CHECK_THROWS_AS(substitute(half, {{"x", Y() + Polynomial::one()}}),
                    FractionalSubstitution);
  }
  SUBCASE("half-integer exponent with monomial binding") {
    // x^{1/2} with x -> y*z^2 gives y^{1/2}*z.
    Polynomial half = Polynomial::monomial(Monomial::var_doubled("x", 1), 1);
    Polynomial yz2 =
        Polynomial::monomial(Monomial::var("y").times(Monomial::var("z", 2)), 1);
    Polynomial expect = Polynomial::monomial(
        Monomial::var_doubled("y", 1).times(Monomial::var("z")), 1);
    CHECK(substitute(half, {{"x", yz2}}) == expect);
  }
}

TEST_CASE("alpha of triangle specializes to the Tutte polynomial") {
  // Oracle: subset expansion of (x-1)^{r(G)-r(A)} (y-1)^{|A|-r(A)} over the
  // triangle's 8 edge subsets.  Ranks of the triangle's edge subsets by size:
  // |A|=0 -> 0, |A|=1 -> 1, |A|=2 -> 2, |A|=3 -> 2.
  Polynomial xm1 = X() - Polynomial::one();
  Polynomial ym1 = Y() - Polynomial::one();
  Polynomial oracle;
  for (int mask = 0; mask < 8; ++mask) {
    int sz = __builtin_popcount(static_cast<unsigned>(mask));
    int rank = sz < 2 ? sz : 2;
    oracle += xm1.pow(2 - rank) * ym1.pow(sz - rank);
  }
  CHECK(oracle == X().pow(2) + X() + Y());

  // alpha(x1,x2,y1,y2)(triangle) = y1^2*y2 + 3*x1*y1*y2 + 3*x1^2*y2 + x1^2*x2
  auto v = [](const char* n) { return Polynomial::variable(n); };
  Polynomial alpha = v("y1").pow(2) * v("y2") +
                     v("x1") * v("y1") * v("y2") * Polynomial::constant(3) +
                     v("x1").pow(2) * v("y2") * Polynomial::constant(3) +
                     v("x1").pow(2) * v("x2");
  Polynomial r = substitute(alpha, {{"x1", Polynomial::one()},
                                    {"x2", ym1},
                                    {"y1", xm1},
                                    {"y2", Polynomial::one()}});
  CHECK(r == oracle);
}

TEST_CASE("evaluation") {
  Polynomial p = X().pow(2) + X() + Y();
  CHECK(evaluate(p, {{"x", 2}, {"y", 1}}) == 7);

  Polynomial half = Polynomial::monomial(Monomial::var_doubled("x", 1), 1);
  CHECK(evaluate(half, {{"x", 9}}) == 3);
  CHECK(evaluate(half, {{"x", Rational(9, 4)}}) == Rational(3, 2));
  CHECK_THROWS_AS(evaluate(half, {{"x", 2}}), NonSquareBase);
  CHECK_THROWS_AS(evaluate(p, {{"x", 2}}), UnboundVariable);
}

TEST_CASE("reduce_square eliminates t^2") {
  // t^2 := -lam; t^3 + t^2 + t + 1 -> -lam*t - lam + t + 1.
  Polynomial t = Polynomial::variable("t");
  Polynomial lam = Polynomial::variable("lam");
  Polynomial p = t.pow(3) + t.pow(2) + t + Polynomial::one();
  Polynomial r = reduce_square(p, "t", -lam);
  CHECK(r == -lam * t - lam + t + Polynomial::one());
}

TEST_CASE("reciprocal substitution with prefactor") {
  // p = z^2 + z + 1, q = y - 1, m = 2: q^2 * p(1/q) = 1 + q + q^2.
  Polynomial z = Polynomial::variable("z");
  Polynomial q = Y() - Polynomial::one();
  Polynomial p = z.pow(2) + z + Polynomial::one();
  CHECK(substitute_reciprocal(p, "z", q, 2) ==
        Polynomial::one() + q + q.pow(2));
  CHECK_THROWS_AS(substitute_reciprocal(p, "z", q, 1), FractionalSubstitution);
}

TEST_CASE("laurent monomials") {
  Polynomial zinv = Polynomial::monomial(Monomial::var("z", -1), 1);
  Polynomial z = Polynomial::variable("z");
  CHECK(zinv * z == Polynomial::one());
  CHECK(zinv.has_negative_exponent());
  // Substituting the monomial z^{-1} for a variable works at any exponent.
  Polynomial p = Polynomial::monomial(Monomial::var_doubled("w", 3), 1);
  CHECK(substitute(p, {{"w", zinv}}) ==
        Polynomial::monomial(Monomial::var_doubled("z", -3), 1));
}

TEST_CASE("rendering") {
  CHECK(to_string(X().pow(2) + X() + Y()) == "x^2 + x + y");
  CHECK(to_string(Polynomial::zero()) == "0");
  CHECK(to_string(Polynomial::constant(-3)) == "-3");
  Polynomial p = Polynomial::monomial(Monomial::var_doubled("x", 3), 2) -
                 Polynomial::variable("y");
  CHECK(to_string(p) == "2*x^3/2 - y");
  Polynomial shifted =
      Polynomial::monomial(Monomial::var_doubled("x-1", 1), 1) +
      Polynomial::monomial(Monomial::var_doubled("y-1", 1), 1);
  CHECK(to_string(shifted) == "(x-1)^1/2 + (y-1)^1/2");
  // graded-lex: y1^2*y2 precedes x1*y1*y2 at equal degree? x1 < y1 in name
  // order, so x1-term leads.
  auto v = [](const char* n) { return Polynomial::variable(n); };
  CHECK(to_string(v("y1").pow(2) * v("y2") + v("x1") * v("y1") * v("y2")) ==
        "x1*y1*y2 + y1^2*y2");
}
