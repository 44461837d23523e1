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

#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "tutte/errors.hpp"

namespace tutte {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Exponents are stored doubled throughout the library, so x^{1/2} has stored
// exponent 1 and x^2 has stored exponent 4.  All arithmetic on exponents then
// stays in the integers.  Negative stored exponents are allowed (Laurent
// monomials); they only ever appear while clearing monomial prefactors in
// identity checks.
class Monomial {
 public:
  Monomial() = default;

  static Monomial unit() { return Monomial(); }

  // x^e with an integer exponent e.
  static Monomial var(const std::string& name, int exponent = 1) {
    return var_doubled(name, 2 * exponent);
  }

  // x^{d/2}; the explicit entry point for half-integer powers.
  static Monomial var_doubled(const std::string& name, int doubled) {
    Monomial m;
    if (doubled != 0) m.exps_.emplace_back(name, doubled);
    return m;
  }

  static Monomial from_doubled(
      const std::vector<std::pair<std::string, int>>& exps) {
    Monomial m;
    for (const auto& [name, d] : exps)
      if (d != 0) m = m.times(var_doubled(name, d));
    return m;
  }

  const std::vector<std::pair<std::string, int>>& exponents() const {
    return exps_;
  }

  bool is_unit() const { return exps_.empty(); }

  int doubled_exponent(const std::string& name) const {
    for (const auto& [n, d] : exps_)
      if (n == name) return d;
    return 0;
  }

  int total_doubled_degree() const {
    int t = 0;
    for (const auto& [n, d] : exps_) t += d;
    return t;
  }

  bool has_negative_exponent() const {
    for (const auto& [n, d] : exps_)
      if (d < 0) return true;
    return false;
  }

  bool all_exponents_even() const {
    for (const auto& [n, d] : exps_)
      if (d % 2 != 0) return false;
    return true;
  }

  Monomial times(const Monomial& o) const {
    Monomial r;
    auto a = exps_.begin(), b = o.exps_.begin();
    while (a != exps_.end() || b != o.exps_.end()) {
      if (b == o.exps_.end() || (a != exps_.end() && a->first < b->first)) {
        r.exps_.push_back(*a++);
      } else if (a == exps_.end() || b->first < a->first) {
        r.exps_.push_back(*b++);
      } else {
        int d = a->second + b->second;
        if (d != 0) r.exps_.emplace_back(a->first, d);
        ++a, ++b;
      }
    }
    return r;
  }

  // Raises the monomial to the power k/2.  Requires every resulting exponent
  // to stay an integer multiple of 1/2, which holds for any integer k.
  Monomial pow_doubled(int k) const {
    Monomial r;
    for (const auto& [n, d] : exps_) {
      long long prod = static_cast<long long>(d) * k;
      if (prod % 2 != 0)
        throw FractionalSubstitution("monomial power " + n +
                                     " leaves quarter-integer exponent");
      if (prod != 0) r.exps_.emplace_back(n, static_cast<int>(prod / 2));
    }
    return r;
  }

  bool operator==(const Monomial& o) const { return exps_ == o.exps_; }
  bool operator!=(const Monomial& o) const { return exps_ != o.exps_; }
  // Map-key order: plain lexicographic on (name, exponent) pairs.
  bool operator<(const Monomial& o) const { return exps_ < o.exps_; }

 private:
  std::vector<std::pair<std::string, int>> exps_;  // sorted by name, no zeros
};

class Polynomial {
 public:
  Polynomial() = default;

  static Polynomial zero() { return Polynomial(); }
  static Polynomial constant(Int c) {
    Polynomial p;
    if (c != 0) p.terms_[Monomial::unit()] = std::move(c);
    return p;
  }
  static Polynomial one() { return constant(1); }
  static Polynomial variable(const std::string& name) {
    return monomial(Monomial::var(name), 1);
  }
  static Polynomial monomial(const Monomial& m, Int c) {
    Polynomial p;
    if (c != 0) p.terms_[m] = std::move(c);
    return p;
  }

  const std::map<Monomial, Int>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && terms_.begin()->first.is_unit());
  }

  // Nonzero single-term polynomials behave as invertible scalars when the
  // coefficient is +-1; used when substituting reciprocals.
  std::optional<std::pair<Monomial, Int>> as_monomial() const {
    if (terms_.size() != 1) return std::nullopt;
    return *terms_.begin();
  }

  bool operator==(const Polynomial& o) const { return terms_ == o.terms_; }
  bool operator!=(const Polynomial& o) const { return terms_ != o.terms_; }
  bool operator<(const Polynomial& o) const { return terms_ < o.terms_; }

  Polynomial& operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r;
    for (const auto& [m, c] : a.terms_) r.terms_[m] = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
    return r;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator*(const Polynomial& a, const Int& c) {
    Polynomial r;
    if (c == 0) return r;
    for (const auto& [m, k] : a.terms_) r.terms_[m] = k * c;
    return r;
  }

  Polynomial pow(int k) const {
    if (k < 0) throw FractionalSubstitution("negative power of a polynomial");
    Polynomial r = one();
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1) r = r * base;
      base = base * base;
      k >>= 1;
    }
    return r;
  }

  // Raises to the power d/2 where d may be negative or odd.  Negative or odd
  // powers require a monomial base (odd additionally requires a perfect-square
  // monomial with unit coefficient).
  Polynomial pow_doubled(int d) const {
    if (d % 2 == 0 && d >= 0) return pow(d / 2);
    auto mono = as_monomial();
    if (!mono)
      throw FractionalSubstitution(
          "non-monomial raised to a negative or half-integer power");
    const auto& [m, c] = *mono;
    Int coeff;
    if (d % 2 == 0) {
      // Negative integer power of a monomial: coefficient must be +-1.
      if (c == 1)
        coeff = 1;
      else if (c == -1)
        coeff = (d / 2) % 2 == 0 ? 1 : -1;
      else
        throw FractionalSubstitution("reciprocal of non-unit coefficient");
    } else {
      Int root = sqrt_exact(c);
      coeff = pow_int(root, d);  // may itself throw on negative d with |c|>1
    }
    return monomial(m.pow_doubled(d), coeff);
  }

  bool all_exponents_even() const {
    for (const auto& [m, c] : terms_)
      if (!m.all_exponents_even()) return false;
    return true;
  }

  bool has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
      if (m.has_negative_exponent()) return true;
    return false;
  }

  int max_doubled_exponent(const std::string& name) const {
    int mx = 0;
    for (const auto& [m, c] : terms_) mx = std::max(mx, m.doubled_exponent(name));
    return mx;
  }

  std::vector<std::string> variables() const {
    std::vector<std::string> names;
    for (const auto& [m, c] : terms_)
      for (const auto& [n, d] : m.exponents()) {
        bool seen = false;
        for (const auto& s : names) seen = seen || s == n;
        if (!seen) names.push_back(n);
      }
    std::sort(names.begin(), names.end());
    return names;
  }

 private:
  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_[m] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  static Int pow_int(const Int& base, int d) {
    // base^{d/2} for odd d is only requested after base is an exact root, so
    // here d counts plain powers of the root.
    if (d >= 0) {
      Int r = 1;
      for (int i = 0; i < d; ++i) r *= base;
      return r;
    }
    if (base == 1) return 1;
    if (base == -1) return (d % 2 == 0) ? 1 : -1;
    throw FractionalSubstitution("reciprocal of non-unit coefficient");
  }

  static Int sqrt_exact(const Int& c) {
    if (c < 0) throw FractionalSubstitution("square root of negative coefficient");
    Int r = boost::multiprecision::sqrt(c);
    if (r * r != c)
      throw FractionalSubstitution("coefficient is not a perfect square");
    return r;
  }

  std::map<Monomial, Int> terms_;
};

// ---------------------------------------------------------------------------
// Substitution and evaluation.

struct SubstArgs {
  // v := bindings[v]
  std::map<std::string, Polynomial> bindings;
  // v := sqrt_bindings[v]^2, so v^{1/2} becomes sqrt_bindings[v].
  std::map<std::string, Polynomial> sqrt_bindings;
};

// Exact substitution; unbound variables pass through.  A variable carrying a
// half-integer exponent must be bound through sqrt_bindings (or to an exactly
// rootable monomial), otherwise FractionalSubstitution is thrown.
inline Polynomial substitute(const Polynomial& p, const SubstArgs& args) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Polynomial factor = Polynomial::constant(c);
    Monomial passthrough;
    for (const auto& [name, d] : m.exponents()) {
      auto sq = args.sqrt_bindings.find(name);
      if (sq != args.sqrt_bindings.end()) {
        // v = root^2, so v^{d/2} = root^d.
        factor *= sq->second.pow_doubled(2 * d);
        continue;
      }
      auto it = args.bindings.find(name);
      if (it == args.bindings.end()) {
        passthrough = passthrough.times(Monomial::var_doubled(name, d));
        continue;
      }
      if (d % 2 != 0 && !it->second.as_monomial())
        throw FractionalSubstitution(
            "variable " + name +
            " has half-integer exponent; supply a square-root binding");
      factor *= it->second.pow_doubled(d);
    }
    out += factor * Polynomial::monomial(passthrough, 1);
  }
  return out;
}

inline Polynomial substitute(const Polynomial& p,
                             const std::map<std::string, Polynomial>& bindings) {
  SubstArgs a;
  a.bindings = bindings;
  return substitute(p, a);
}

// Simultaneous variable renaming (e.g. swapping x and y for duality checks).
inline Polynomial rename_variables(
    const Polynomial& p, const std::map<std::string, std::string>& names) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    Monomial nm;
    for (const auto& [name, d] : m.exponents()) {
      auto it = names.find(name);
      nm = nm.times(
          Monomial::var_doubled(it == names.end() ? name : it->second, d));
    }
    out += Polynomial::monomial(nm, c);
  }
  return out;
}

// Replaces var^2 := value throughout, leaving at most a single residual power
// of var per term.  Requires integer exponents on var.
inline Polynomial reduce_square(const Polynomial& p, const std::string& var,
                                const Polynomial& value) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    int d = m.doubled_exponent(var);
    if (d % 2 != 0)
      throw FractionalSubstitution("reduce_square on half-integer exponent of " +
                                   var);
    int e = d / 2;                      // actual exponent of var
    int q = (e >= 0) ? e / 2 : -((-e + 1) / 2);  // floor(e/2)
    int r = e - 2 * q;                  // residual in {0,1}
    Monomial rest;
    for (const auto& [name, dd] : m.exponents())
      if (name != var) rest = rest.times(Monomial::var_doubled(name, dd));
    Polynomial term = Polynomial::monomial(rest, c) *
                      Polynomial::monomial(Monomial::var(var, r), 1);
    term *= value.pow_doubled(2 * q);
    out += term;
  }
  return out;
}

// Substitutes var := 1/q with the polynomial prefactor q^m, i.e. computes
// q^m * p|_{var=1/q} exactly.  Requires deg_var(p) <= m and integer exponents
// on var.
inline Polynomial substitute_reciprocal(const Polynomial& p,
                                        const std::string& var,
                                        const Polynomial& q, int m) {
  Polynomial out;
  for (const auto& [mon, c] : p.terms()) {
    int d = mon.doubled_exponent(var);
    if (d % 2 != 0)
      throw FractionalSubstitution("reciprocal substitution at half-integer " +
                                   var);
    int k = d / 2;
    if (k < 0 || k > m)
      throw FractionalSubstitution("prefactor degree too small for 1/" + var);
    Monomial rest;
    for (const auto& [name, dd] : mon.exponents())
      if (name != var) rest = rest.times(Monomial::var_doubled(name, dd));
    out += Polynomial::monomial(rest, c) * q.pow(m - k);
  }
  return out;
}

// Exact evaluation at a rational point.  All variables must be bound.  A
// half-integer exponent demands the bound value be a perfect square of a
// rational; a negative exponent demands a nonzero value.
inline Rational evaluate(const Polynomial& p,
                         const std::map<std::string, Rational>& point) {
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  auto sqrt_rational = [](const Rational& v) -> Rational {
    if (v < 0) throw NonSquareBase("negative base at half-integer exponent");
    Int n = numerator(v), d = denominator(v);
    Int rn = boost::multiprecision::sqrt(n), rd = boost::multiprecision::sqrt(d);
    if (rn * rn != n || rd * rd != d)
      throw NonSquareBase("base is not the square of a rational");
    return Rational(rn, rd);
  };
  Rational total = 0;
  for (const auto& [m, c] : p.terms()) {
    Rational t(c);
    for (const auto& [name, d] : m.exponents()) {
      auto it = point.find(name);
      if (it == point.end()) throw UnboundVariable("variable " + name);
      Rational base = it->second;
      if (d % 2 != 0) base = sqrt_rational(base);
      int e = (d % 2 != 0) ? d : d / 2;
      if (e < 0) {
        if (base == 0) throw NonSquareBase("zero base at negative exponent");
        base = Rational(denominator(base), numerator(base));
        e = -e;
      }
      for (int i = 0; i < e; ++i) t *= base;
    }
    total += t;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Rendering.  Terms are printed in graded-lex order (total degree descending,
// then lexicographic on exponent vectors over the sorted variable names) with
// fractional exponents shown as "x^3/2".

namespace detail {

inline bool grlex_before(const Monomial& a, const Monomial& b) {
  int ta = a.total_doubled_degree(), tb = b.total_doubled_degree();
  if (ta != tb) return ta > tb;
  // Lexicographic: scan variable names in increasing order; larger exponent
  // on the earliest differing variable comes first.
  auto ia = a.exponents().begin(), ib = b.exponents().begin();
  while (ia != a.exponents().end() || ib != b.exponents().end()) {
    if (ia == a.exponents().end()) return false;
    if (ib == b.exponents().end()) return true;
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second > ib->second;
    ++ia, ++ib;
  }
  return false;
}

inline std::string var_token(const std::string& name) {
  for (char ch : name)
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'))
      return "(" + name + ")";
  return name;
}

inline std::string exponent_token(int doubled) {
  if (doubled == 2) return "";
  std::ostringstream os;
  if (doubled % 2 == 0)
    os << "^" << doubled / 2;
  else
    os << "^" << doubled << "/2";
  return os.str();
}

}  // namespace detail

inline std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Monomial, Int>> terms(p.terms().begin(),
                                              p.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return detail::grlex_before(a.first, b.first);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (m.is_unit()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      bool firstv = true;
      for (const auto& [name, d] : m.exponents()) {
        if (!firstv) os << "*";
        firstv = false;
        os << detail::var_token(name) << detail::exponent_token(d);
      }
    }
  }
  return os.str();
}

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

}  // namespace tutte
