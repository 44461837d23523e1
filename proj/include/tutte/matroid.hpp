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

#include <cstdint>
#include <string>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/poly.hpp"

namespace tutte {

constexpr int kMaxGroundSet = 16;

// A matroid on ground set {0, ..., n-1}, stored as the full rank table over
// all 2^n subsets (subset-bitmask order).  The rank axioms are checked
// exhaustively at construction, so every Matroid in flight is valid.
class Matroid {
 public:
  Matroid(int n, std::vector<std::uint8_t> ranks) : n_(n), rank_(std::move(ranks)) {
    if (n < 0 || n > kMaxGroundSet)
      throw CapExceeded("matroid ground set size " + std::to_string(n));
    if (rank_.size() != (std::size_t{1} << n_))
      throw NotAMatroid("rank table has wrong size");
    validate();
  }

  static Matroid uniform(int k, int n) {
    std::vector<std::uint8_t> r(std::size_t{1} << n);
    for (std::uint32_t a = 0; a < r.size(); ++a)
      r[a] = static_cast<std::uint8_t>(std::min(k, popcount(a)));
    return Matroid(n, std::move(r));
  }

  int n() const { return n_; }
  std::uint32_t full_set() const { return (std::uint32_t{1} << n_) - 1; }
  int rank(std::uint32_t subset) const { return rank_[subset]; }
  int rank() const { return rank_[full_set()]; }
  int nullity(std::uint32_t subset) const {
    return popcount(subset) - rank(subset);
  }

  bool is_loop(int e) const { return rank(std::uint32_t{1} << e) == 0; }
  bool is_coloop(int e) const {
    return rank() - rank(full_set() ^ (std::uint32_t{1} << e)) == 1;
  }

  // Minor by simultaneous deletion and contraction of disjoint subsets.  The
  // surviving elements are renumbered in increasing order.
  Matroid minor(std::uint32_t delete_set, std::uint32_t contract_set) const {
    if (delete_set & contract_set)
      throw OverlappingSets("deletion and contraction sets intersect");
    std::uint32_t keep = full_set() & ~(delete_set | contract_set);
    std::vector<int> elems;
    for (int e = 0; e < n_; ++e)
      if (keep & (std::uint32_t{1} << e)) elems.push_back(e);
    int m = static_cast<int>(elems.size());
    std::vector<std::uint8_t> r(std::size_t{1} << m);
    int base = rank(contract_set);
    for (std::uint32_t b = 0; b < r.size(); ++b) {
      std::uint32_t embedded = contract_set;
      for (int i = 0; i < m; ++i)
        if (b & (std::uint32_t{1} << i)) embedded |= std::uint32_t{1} << elems[i];
      r[b] = static_cast<std::uint8_t>(rank(embedded) - base);
    }
    return Matroid(m, std::move(r));
  }

  Matroid del(int e) const { return minor(std::uint32_t{1} << e, 0); }
  Matroid con(int e) const { return minor(0, std::uint32_t{1} << e); }
  Matroid restrict_to(std::uint32_t subset) const {
    return minor(full_set() & ~subset, 0);
  }

  // r*(A) = |A| + r(E \ A) - r(E)
  Matroid dual() const {
    std::vector<std::uint8_t> r(rank_.size());
    for (std::uint32_t a = 0; a < rank_.size(); ++a)
      r[a] = static_cast<std::uint8_t>(popcount(a) + rank(full_set() & ~a) -
                                       rank());
    return Matroid(n_, std::move(r));
  }

  // Direct sum; the second summand's elements follow the first's.
  Matroid direct_sum(const Matroid& o) const {
    int m = n_ + o.n_;
    if (m > kMaxGroundSet) throw CapExceeded("direct sum exceeds ground cap");
    std::vector<std::uint8_t> r(std::size_t{1} << m);
    for (std::uint32_t a = 0; a < r.size(); ++a) {
      std::uint32_t lo = a & full_set();
      std::uint32_t hi = a >> n_;
      r[a] = static_cast<std::uint8_t>(rank(lo) + o.rank(hi));
    }
    return Matroid(m, std::move(r));
  }

  std::string serialize() const {
    std::string s = "m" + std::to_string(n_) + ":";
    for (auto v : rank_) s += static_cast<char>('0' + v);
    return s;
  }

  bool operator==(const Matroid& o) const {
    return n_ == o.n_ && rank_ == o.rank_;
  }

  static int popcount(std::uint32_t x) { return __builtin_popcount(x); }

 private:
  void validate() const {
    if (rank_[0] != 0) throw NotAMatroid("r(empty) != 0");
    std::uint32_t full = full_set();
    for (std::uint32_t a = 0; a <= full && n_ > 0; ++a) {
      for (int e = 0; e < n_; ++e) {
        std::uint32_t be = std::uint32_t{1} << e;
        if (a & be) continue;
        int d = rank(a | be) - rank(a);
        if (d != 0 && d != 1) throw NotAMatroid("unit-increase axiom fails");
        for (int f = e + 1; f < n_; ++f) {
          std::uint32_t bf = std::uint32_t{1} << f;
          if (a & bf) continue;
          if (rank(a) == rank(a | be) && rank(a) == rank(a | bf) &&
              rank(a | be | bf) != rank(a))
            throw NotAMatroid("local exchange axiom fails");
        }
      }
      if (a == full) break;
    }
  }

  int n_;
  std::vector<std::uint8_t> rank_;
};

// T_M(x,y) = sum over subsets of (x-1)^{r(E)-r(A)} (y-1)^{|A|-r(A)}.
inline Polynomial tutte_polynomial(const Matroid& m) {
  Polynomial xm1 = Polynomial::variable("x") - Polynomial::one();
  Polynomial ym1 = Polynomial::variable("y") - Polynomial::one();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    total += xm1.pow(m.rank() - m.rank(a)) * ym1.pow(m.nullity(a));
    if (a == m.full_set()) break;
  }
  return total;
}

// A matroid perspective M -> M' on a common ground set: for all A <= B,
// r(B) - r(A) >= r'(B) - r'(A).  Validation walks all nested pairs.
class MatroidPerspective {
 public:
  MatroidPerspective(Matroid front, Matroid back)
      : front_(std::move(front)), back_(std::move(back)) {
    if (front_.n() != back_.n())
      throw NotAPerspective("ground sets differ in size");
    std::uint32_t full = front_.full_set();
    for (std::uint32_t b = 0;; ++b) {
      // All subsets a of b.
      std::uint32_t a = b;
      while (true) {
        if (front_.rank(b) - front_.rank(a) < back_.rank(b) - back_.rank(a))
          throw NotAPerspective("rank-difference domination fails");
        if (a == 0) break;
        a = (a - 1) & b;
      }
      if (b == full) break;
    }
  }

  const Matroid& front() const { return front_; }  // M
  const Matroid& back() const { return back_; }    // M'
  int n() const { return front_.n(); }
  std::uint32_t full_set() const { return front_.full_set(); }

  MatroidPerspective minor(std::uint32_t delete_set,
                           std::uint32_t contract_set) const {
    return MatroidPerspective(front_.minor(delete_set, contract_set),
                              back_.minor(delete_set, contract_set));
  }
  MatroidPerspective direct_sum(const MatroidPerspective& o) const {
    return MatroidPerspective(front_.direct_sum(o.front_),
                              back_.direct_sum(o.back_));
  }
  // (M -> M')* = M'* -> M*.
  MatroidPerspective dual() const {
    return MatroidPerspective(back_.dual(), front_.dual());
  }

  std::string serialize() const {
    return "p[" + front_.serialize() + "|" + back_.serialize() + "]";
  }

 private:
  Matroid front_, back_;
};

// T_{M->M'}(x,y,z) =
//   sum_A (x-1)^{r'(E)-r'(A)} (y-1)^{|A|-r(A)} z^{(r(E)-r(A))-(r'(E)-r'(A))}.
inline Polynomial lv_tutte(const MatroidPerspective& p) {
  const Matroid& m = p.front();
  const Matroid& mp = p.back();
  Polynomial xm1 = Polynomial::variable("x") - Polynomial::one();
  Polynomial ym1 = Polynomial::variable("y") - Polynomial::one();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int zexp = (m.rank() - m.rank(a)) - (mp.rank() - mp.rank(a));
    total += xm1.pow(mp.rank() - mp.rank(a)) * ym1.pow(m.nullity(a)) *
             Polynomial::monomial(Monomial::var("z", zexp), 1);
    if (a == p.full_set()) break;
  }
  return total;
}

}  // namespace tutte
