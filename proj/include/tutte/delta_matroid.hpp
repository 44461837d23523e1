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
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "tutte/errors.hpp"
#include "tutte/matroid.hpp"
#include "tutte/poly.hpp"

namespace tutte {

enum class LoopKind { NotLoop, Orientable, NonOrientable };

inline const char* loop_kind_name(LoopKind k) {
  switch (k) {
    case LoopKind::NotLoop: return "not-ribbon-loop";
    case LoopKind::Orientable: return "orientable";
    case LoopKind::NonOrientable: return "non-orientable";
  }
  return "?";
}

// A delta-matroid on ground set {0, ..., n-1}: a nonempty feasible family
// (sorted bitmasks) satisfying the Symmetric Exchange Axiom, which is checked
// exhaustively at construction.
class DeltaMatroid {
 public:
  DeltaMatroid(int n, std::vector<std::uint32_t> feasible)
      : n_(n), feas_(std::move(feasible)) {
    if (n < 0 || n > kMaxGroundSet)
      throw CapExceeded("delta-matroid ground set size " + std::to_string(n));
    std::sort(feas_.begin(), feas_.end());
    feas_.erase(std::unique(feas_.begin(), feas_.end()), feas_.end());
    validate();
  }

  // A matroid viewed as a delta-matroid: feasible sets are the bases.
  static DeltaMatroid from_matroid(const Matroid& m) {
    std::vector<std::uint32_t> f;
    for (std::uint32_t a = 0;; ++a) {
      if (m.rank(a) == m.rank() && Matroid::popcount(a) == m.rank())
        f.push_back(a);
      if (a == m.full_set()) break;
    }
    return DeltaMatroid(m.n(), std::move(f));
  }

  int n() const { return n_; }
  std::uint32_t full_set() const { return (std::uint32_t{1} << n_) - 1; }
  const std::vector<std::uint32_t>& feasible() const { return feas_; }

  bool is_feasible(std::uint32_t a) const {
    return std::binary_search(feas_.begin(), feas_.end(), a);
  }

  int r_min() const {
    int m = n_ + 1;
    for (auto f : feas_) m = std::min(m, Matroid::popcount(f));
    return m;
  }
  int r_max() const {
    int m = 0;
    for (auto f : feas_) m = std::max(m, Matroid::popcount(f));
    return m;
  }
  // 2*rho(D) = r_max + r_min.
  int rho_doubled() const { return r_min() + r_max(); }
  int width() const { return r_max() - r_min(); }
  bool is_even() const {
    for (auto f : feas_)
      if ((Matroid::popcount(f) & 1) != (Matroid::popcount(feas_[0]) & 1))
        return false;
    return true;
  }
  bool is_matroid() const { return width() == 0; }

  // The lower and upper matroids: bases are the min/max feasible sets.
  Matroid lower_matroid() const { return matroid_from_bases(min_sets()); }
  Matroid upper_matroid() const { return matroid_from_bases(max_sets()); }

  bool is_loop(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    for (auto f : feas_)
      if (f & b) return false;
    return true;
  }
  bool is_coloop(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    for (auto f : feas_)
      if (!(f & b)) return false;
    return true;
  }

  // Twist: F := { A ^ X : X in F }.
  DeltaMatroid twist(std::uint32_t a) const {
    std::vector<std::uint32_t> f;
    f.reserve(feas_.size());
    for (auto x : feas_) f.push_back(x ^ a);
    return DeltaMatroid(n_, std::move(f));
  }
  DeltaMatroid dual() const { return twist(full_set()); }

  // Loop complementation element by element; each step is revalidated, so a
  // SEA failure surfaces as NotADeltaMatroid (the vf-safety detector).
  DeltaMatroid loop_complement(std::uint32_t a) const {
    DeltaMatroid d = *this;
    for (int e = 0; e < n_; ++e)
      if (a & (std::uint32_t{1} << e)) d = d.loop_complement_one(e);
    return d;
  }

  // Dual pivot on X: ((D*X)+X)*X.
  DeltaMatroid dual_pivot(std::uint32_t x) const {
    return twist(x).loop_complement(x).twist(x);
  }

  // Deletion; a coloop falls back to contraction per the standard convention.
  DeltaMatroid del(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    std::vector<std::uint32_t> f;
    if (is_coloop(e)) {
      for (auto x : feas_) f.push_back(drop_bit(x, e));
    } else {
      for (auto x : feas_)
        if (!(x & b)) f.push_back(drop_bit(x, e));
    }
    return DeltaMatroid(n_ - 1, std::move(f));
  }

  // Contraction; a loop falls back to deletion.
  DeltaMatroid con(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    std::vector<std::uint32_t> f;
    if (is_loop(e)) {
      for (auto x : feas_) f.push_back(drop_bit(x, e));
    } else {
      for (auto x : feas_)
        if (x & b) f.push_back(drop_bit(x, e));
    }
    return DeltaMatroid(n_ - 1, std::move(f));
  }

  // (D+e)/e, the contraction of the Penrose minors system.
  DeltaMatroid complement_contract(int e) const {
    return loop_complement_one(e).con(e);
  }

  DeltaMatroid minor(std::uint32_t delete_set, std::uint32_t contract_set) const {
    if (delete_set & contract_set)
      throw OverlappingSets("deletion and contraction sets intersect");
    DeltaMatroid d = *this;
    for (int e = n_ - 1; e >= 0; --e) {
      if (delete_set & (std::uint32_t{1} << e)) d = d.del(e);
      else if (contract_set & (std::uint32_t{1} << e)) d = d.con(e);
    }
    return d;
  }

  DeltaMatroid restrict_to(std::uint32_t a) const {
    return minor(full_set() & ~a, 0);
  }

  DeltaMatroid direct_sum(const DeltaMatroid& o) const {
    if (n_ + o.n_ > kMaxGroundSet) throw CapExceeded("direct sum too large");
    std::vector<std::uint32_t> f;
    for (auto x : feas_)
      for (auto y : o.feas_) f.push_back(x | (y << n_));
    return DeltaMatroid(n_ + o.n_, std::move(f));
  }

  // 2*rho(A) with rho(A) := rho(D \ A^c).
  int rho_subset_doubled(std::uint32_t a) const {
    return restrict_to(a).rho_doubled();
  }

  // 2*xi(A) = |A| + r_max(D+A) - r_max(D).
  int xi_subset_doubled(std::uint32_t a) const {
    return Matroid::popcount(a) + loop_complement(a).r_max() - r_max();
  }
  int xi_doubled() const { return xi_subset_doubled(full_set()); }

  // Ribbon-loop classification: e is a ribbon loop when it lies in no minimum
  // feasible set; orientability looks at the twist by e.
  LoopKind ribbon_loop_kind(int e) const {
    if (!min_sets_avoid(e)) return LoopKind::NotLoop;
    if (twist(std::uint32_t{1} << e).min_sets_avoid(e))
      return LoopKind::NonOrientable;
    return LoopKind::Orientable;
  }

  // Dual-loop classification: the ribbon-loop classification in D*.
  LoopKind ribbon_dual_loop_kind(int e) const {
    LoopKind k = dual().ribbon_loop_kind(e);
    if (k == LoopKind::NotLoop) return LoopKind::NotLoop;
    return k;
  }

  std::string serialize() const {
    std::string s = "d" + std::to_string(n_) + ":";
    for (auto f : feas_) s += std::to_string(f) + ",";
    return s;
  }

  bool operator==(const DeltaMatroid& o) const {
    return n_ == o.n_ && feas_ == o.feas_;
  }
  bool operator<(const DeltaMatroid& o) const {
    return n_ != o.n_ ? n_ < o.n_ : feas_ < o.feas_;
  }

 private:
  DeltaMatroid loop_complement_one(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    std::set<std::uint32_t> out(feas_.begin(), feas_.end());
    for (auto f : feas_) {
      if (f & b) continue;
      std::uint32_t g = f | b;
      auto it = out.find(g);
      if (it == out.end()) out.insert(g);
      else out.erase(it);
    }
    return DeltaMatroid(n_, std::vector<std::uint32_t>(out.begin(), out.end()));
  }

  bool min_sets_avoid(int e) const {
    std::uint32_t b = std::uint32_t{1} << e;
    int rm = r_min();
    for (auto f : feas_)
      if (Matroid::popcount(f) == rm && (f & b)) return false;
    return true;
  }

  std::vector<std::uint32_t> min_sets() const {
    int rm = r_min();
    std::vector<std::uint32_t> out;
    for (auto f : feas_)
      if (Matroid::popcount(f) == rm) out.push_back(f);
    return out;
  }
  std::vector<std::uint32_t> max_sets() const {
    int rm = r_max();
    std::vector<std::uint32_t> out;
    for (auto f : feas_)
      if (Matroid::popcount(f) == rm) out.push_back(f);
    return out;
  }

  Matroid matroid_from_bases(const std::vector<std::uint32_t>& bases) const {
    std::vector<std::uint8_t> rank(std::size_t{1} << n_, 0);
    for (std::uint32_t a = 0; a < rank.size(); ++a) {
      int best = 0;
      for (auto b : bases) best = std::max(best, Matroid::popcount(a & b));
      rank[a] = static_cast<std::uint8_t>(best);
    }
    return Matroid(n_, std::move(rank));
  }

  void validate() const {
    if (feas_.empty()) throw NotADeltaMatroid("empty feasible family");
    for (auto f : feas_)
      if (f > full_set()) throw NotADeltaMatroid("feasible set out of range");
    for (auto x : feas_) {
      for (auto y : feas_) {
        std::uint32_t sym = x ^ y;
        for (int u = 0; u < n_; ++u) {
          if (!(sym & (std::uint32_t{1} << u))) continue;
          bool ok = false;
          for (int v = 0; v < n_ && !ok; ++v) {
            if (!(sym & (std::uint32_t{1} << v))) continue;
            std::uint32_t uv =
                (std::uint32_t{1} << u) | (std::uint32_t{1} << v);
            ok = is_feasible(x ^ uv);
          }
          if (!ok)
            throw NotADeltaMatroid("symmetric exchange axiom fails");
        }
      }
    }
  }

  static std::uint32_t drop_bit(std::uint32_t mask, int e) {
    std::uint32_t low = mask & ((std::uint32_t{1} << e) - 1);
    std::uint32_t high = mask >> (e + 1);
    return low | (high << e);
  }

  int n_;
  std::vector<std::uint32_t> feas_;
};

// The three one-element delta-matroids.
inline DeltaMatroid dm_coloop() { return DeltaMatroid(1, {1}); }       // D_c
inline DeltaMatroid dm_orientable() { return DeltaMatroid(1, {0}); }   // D_o
inline DeltaMatroid dm_nonorientable() { return DeltaMatroid(1, {0, 1}); }  // D_n

// ---------------------------------------------------------------------------
// Polynomials.  The 2-variable Bollobas-Riordan and Penrose polynomials live
// in Z[(x-1)^{1/2}, (y-1)^{1/2}]; they are returned over the shifted
// generators "x-1" and "y-1" with (half-integer) doubled exponents.

inline Polynomial dm_br2(const DeltaMatroid& d) {
  int rho_e = d.rho_doubled();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int rho_a = d.rho_subset_doubled(a);
    Monomial m = Monomial::var_doubled("x-1", rho_e - rho_a)
                     .times(Monomial::var_doubled(
                         "y-1", 2 * Matroid::popcount(a) - rho_a));
    total += Polynomial::monomial(m, 1);
    if (a == d.full_set()) break;
  }
  return total;
}

// R_D(x,y,z) = sum_A (x-1)^{rmin(E)-rmin(A)} y^{|A|-rmin(A)} z^{w(A)} where
// rmin and the width w are taken in the restriction D|A.
inline Polynomial dm_br3(const DeltaMatroid& d) {
  Polynomial xm1 = Polynomial::variable("x") - Polynomial::one();
  int rmin_e = d.r_min();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    DeltaMatroid r = d.restrict_to(a);
    total += xm1.pow(rmin_e - r.r_min()) *
             Polynomial::monomial(
                 Monomial::var("y", Matroid::popcount(a) - r.r_min())
                     .times(Monomial::var("z", r.width())),
                 1);
    if (a == d.full_set()) break;
  }
  return total;
}

inline Polynomial dm_penrose2(const DeltaMatroid& d) {
  int xi_e = d.xi_doubled();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int xi_a = d.xi_subset_doubled(a);
    Monomial m = Monomial::var_doubled("x-1", xi_e - xi_a)
                     .times(Monomial::var_doubled(
                         "y-1", 2 * Matroid::popcount(a) - xi_a));
    total += Polynomial::monomial(m, 1);
    if (a == d.full_set()) break;
  }
  return total;
}

// P(D;lambda) = sum_A (-1)^{|A|} lambda^{d_{D*E pivot A}} as a polynomial in
// the variable "lam"; d is the minimum feasible cardinality.
inline Polynomial dm_penrose_classic(const DeltaMatroid& d) {
  DeltaMatroid base = d.dual();
  Polynomial total;
  for (std::uint32_t a = 0;; ++a) {
    int deg = base.dual_pivot(a).r_min();
    int sign = (Matroid::popcount(a) & 1) ? -1 : 1;
    total += Polynomial::monomial(Monomial::var("lam", deg), sign);
    if (a == d.full_set()) break;
  }
  return total;
}

inline Rational dm_penrose_eval(const DeltaMatroid& d, const Rational& lambda) {
  return evaluate(dm_penrose_classic(d), {{"lam", lambda}});
}

// Applies every combination of per-element twist/complement words (the
// 6-element group per element) and reports whether all results satisfy the
// symmetric exchange axiom.  Exponential; intended for n <= 4.
inline bool dm_is_vf_safe(const DeltaMatroid& d) {
  if (d.n() > 4) throw CapExceeded("vf-safety checker is exponential; n <= 4");
  static const char* words[6] = {"", "t", "c", "tc", "ct", "tct"};
  int n = d.n();
  std::vector<int> choice(n, 0);
  while (true) {
    try {
      DeltaMatroid cur = d;
      for (int e = 0; e < n; ++e) {
        for (const char* p = words[choice[e]]; *p; ++p) {
          if (*p == 't') cur = cur.twist(std::uint32_t{1} << e);
          else cur = cur.loop_complement(std::uint32_t{1} << e);
        }
      }
    } catch (const NotADeltaMatroid&) {
      return false;
    }
    int i = 0;
    while (i < n && choice[i] == 5) choice[i++] = 0;
    if (i == n) break;
    ++choice[i];
  }
  return true;
}

}  // namespace tutte
