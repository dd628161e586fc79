// Copyright 2026 The drwitt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <functional>
#include <random>
#include <set>

#include "doctest.h"
#include "drwitt/dieudonne.hpp"
#include "drwitt/witt.hpp"

using namespace drw;

namespace {

InvariantFactors cyclic(std::int64_t p, std::vector<int> exps) {
  InvariantFactors inv;
  inv.p = p;
  for (int e : exps)
    if (e > 0) inv.torsion.push_back(e);
  inv.normalize();
  return inv;
}

Grade g1(long num, long den = 1) { return Grade{Rat(num, static_cast<unsigned long>(den))}; }

// Residues of a lattice modulo m, as a sorted list of coordinate tuples.
std::set<std::vector<long>> residues(const IntMat& basis, long m) {
  std::set<std::vector<long>> out;
  const std::size_t k = basis.cols();
  std::vector<long> coeffs(basis.rows(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == basis.rows()) {
      std::vector<long> v(k, 0);
      for (std::size_t r = 0; r < basis.rows(); ++r)
        for (std::size_t j = 0; j < k; ++j) {
          Int x = basis(r, j) * coeffs[r];
          x %= m;
          v[j] = (v[j] + x.get_si() + m) % m;
        }
      out.insert(v);
      return;
    }
    for (long c = 0; c < m; ++c) {
      coeffs[i] = c;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace

TEST_CASE("lift of F_p is Z_p in degree 0 and already saturated") {
  for (std::int64_t p : {2, 3, 5}) {
    RingSpec s = make_finite_field(p);
    DieudonneComplex M = lift_with_frobenius(s, 5);
    REQUIRE(M.grades.size() == 1);
    CHECK(M.top() == 0);
    CHECK(M.at(Grade{}).lattice[0] == lattice_identity(1));
    DieudonneComplex sat = saturate(M, 3);
    CHECK(sat.at(Grade{}).lattice[0] == lattice_identity(1));
    // V = p F^{-1} sends 1 to p.
    DlogForm one{{DlogKey{Grade{}, 0}, Rat(1)}};
    CHECK(dlog_verschiebung(one, p) == DlogForm{{DlogKey{Grade{}, 0}, Rat(static_cast<long>(p))}});
    for (int r = 1; r <= 4; ++r) {
      StrictLevel W = strict_truncate(saturate(M, r), r);
      CHECK(W.invariants(Grade{}, 0) == cyclic(p, {r}));
    }
  }
}

TEST_CASE("lift of F_p[x]: bases and F(dx) = x^(p-1) dx") {
  for (std::int64_t p : {2, 3, 5}) {
    RingSpec s = make_poly(p, {"x"});
    DieudonneComplex M = lift_with_frobenius(s, 6);
    CHECK(M.grades.size() == 7);
    CHECK(M.at(g1(0)).subsets[1].empty());
    for (long w = 1; w <= 6; ++w) {
      CHECK(M.at(g1(w)).subsets[0].size() == 1);
      CHECK(M.at(g1(w)).subsets[1].size() == 1);
    }
    DlogForm x = teichmuller_variable(1, 0);
    DlogForm dx = dlog_d(x);
    DlogForm xpow = x;
    for (int k = 1; k < p - 1; ++k) xpow = dlog_wedge(xpow, x);
    DlogForm rhs = dlog_wedge(xpow, dx);
    CHECK(dlog_frobenius(dx, p) == rhs);
  }
}

TEST_CASE("eta_p on small complexes") {
  // (Z, d = 0) in degree 0.
  auto a = eta_p_lattices(3, {lattice_identity(1)}, {});
  CHECK(a[0] == lattice_identity(1));
  // Z --1--> Z.
  ScaledMat d{lattice_identity(1), 1};
  auto b = eta_p_lattices(3, {lattice_identity(1), lattice_identity(1)}, {d});
  CHECK(b[0] == lattice_scale(lattice_identity(1), 3));
  CHECK(b[1] == lattice_scale(lattice_identity(1), 3));
}

TEST_CASE("eta_p of the F_3[x, y] lift matches a residue scan mod 9") {
  RingSpec s = make_poly(3, {"x", "y"});
  DieudonneComplex E = eta_p(lift_with_frobenius(s, 9));
  const long m = 9;
  for (const auto& [a, g] : E.grades) {
    for (int n = 0; n <= 2; ++n) {
      const auto& L = g.lattice[static_cast<std::size_t>(n)];
      const std::size_t k = g.subsets[static_cast<std::size_t>(n)].size();
      if (k == 0) continue;
      // Brute force: vectors v mod 9 with v in 3^n Z^k and v d in 3^{n+1} Z.
      ScaledMat d = dlog_differential(s, a, n);
      std::set<std::vector<long>> expect;
      std::vector<long> v(k, 0);
      std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == k) {
          long pn = 1;
          for (int t = 0; t < n; ++t) pn *= 3;
          for (long x : v)
            if (x % pn != 0) return;
          for (std::size_t c = 0; c < d.cols(); ++c) {
            Int y = 0;
            for (std::size_t r = 0; r < k; ++r) y += d.num(r, c) * v[r];
            if (y % (pn * 3) != 0) return;
          }
          expect.insert(v);
          return;
        }
        for (long x = 0; x < m; ++x) {
          v[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
      // The lattice contains 3^{n+1} Z^k, so residues mod 9 determine it for n <= 1.
      if (n <= 1) CHECK(residues(L, m) == expect);
    }
  }
}

TEST_CASE("saturation agrees with the closed form and meets the criterion") {
  RingSpec s = make_poly(2, {"x"});
  DieudonneComplex sat = saturate(lift_with_frobenius(s, 4), 3);
  for (const auto& [a, g] : sat.grades) {
    for (int n = 0; n <= 1; ++n) CHECK(g.lattice[static_cast<std::size_t>(n)] == saturated_lattice(s, a, n));
    CHECK(saturation_criterion(s, a));
  }
  RingSpec s2 = make_laurent(3, {"x", "y"});
  for (const auto& a : dieudonne_grades(s2, 3, 1)) CHECK(saturation_criterion(s2, a));
  // V(x) = 2 x^{1/2} sits in degree 0 at weight 1/2 and dV(x) in degree 1.
  CHECK(sat.at(g1(1, 2)).lattice[0] == lattice_scale(lattice_identity(1), 2));
  CHECK(sat.at(g1(1, 2)).lattice[1] == lattice_identity(1));
}

TEST_CASE("perfection: degree 0 only, fractional weights, orders match the witt module") {
  RingSpec s = make_perfection(make_poly(3, {"x"}));
  DieudonneComplex sat = saturate(lift_with_frobenius(s, 2), 2);
  CHECK(sat.top() == 0);
  CHECK(sat.grades.count(g1(1, 3)) == 1);
  StrictLevel W = strict_truncate(sat, 2);
  for (const auto& [a, v] : W.pieces) CHECK(W.invariants(a, 0) == cyclic(3, {2}));
  // [x^{m/3}] in W_2 of F_3[y] with y = x^{1/3}: order exactly 9.
  CoeffRing A = CoeffRing::polynomial(3, {"y"}, {1}, -1).with_precision(1);
  for (int m = 1; m <= 4; ++m) {
    WittVector t = teichmuller(A, A.pow(A.var(0), m), 2);
    CHECK_FALSE(witt_equal(A, witt_int_multiple(A, 3, t), witt_zero(A, 2)));
    CHECK(witt_equal(A, witt_int_multiple(A, 9, t), witt_zero(A, 2)));
  }
}

TEST_CASE("W_r Omega of F_p[x] and F_p[x^{+-1}] against the Teichmuller and V description") {
  for (std::int64_t p : {2, 3}) {
    for (int r = 1; r <= 3; ++r) {
      RingSpec s = make_poly(p, {"x"});
      StrictLevel W = de_rham_witt(s, r, 3);
      for (const auto& [a, v] : W.pieces) {
        const int u = denominator_exponent(a, p);
        if (sgn(a[0]) == 0) {
          CHECK(W.invariants(a, 0) == cyclic(p, {r}));
          CHECK(W.invariants(a, 1).is_zero());
        } else {
          CHECK(W.invariants(a, 0) == cyclic(p, {r - u}));
          CHECK(W.invariants(a, 1) == cyclic(p, {r - u}));
        }
      }
      StrictLevel L = de_rham_witt(make_laurent(p, {"x"}), r, 3);
      for (const auto& [a, v] : L.pieces) {
        const int u = denominator_exponent(a, p);
        CHECK(L.invariants(a, 0) == cyclic(p, {r - u}));
        CHECK(L.invariants(a, 1) == cyclic(p, {r - u}));
      }
    }
  }
}

TEST_CASE("W_1 Omega agrees with the Kaehler differentials") {
  for (std::int64_t p : {2, 3}) {
    for (RingSpec s : {make_poly(p, {"x", "y"}), make_laurent(p, {"x"}), make_poly(p, {"x"}, {}, 2)}) {
      StrictLevel W = de_rham_witt(s, 1, 4);
      DeRhamComplex dr = kaehler(s, dieudonne_top(s), 4);
      for (const auto& [a, gc] : dr.grades) {
        for (int n = 0; n <= dieudonne_top(s); ++n) {
          int dim = static_cast<int>(gc.omega[static_cast<std::size_t>(n)].gens());
          std::vector<int> ones(static_cast<std::size_t>(dim), 1);
          CHECK(W.invariants(a, n) == cyclic(p, ones));
        }
      }
    }
  }
}

TEST_CASE("W_r of finite fields matches the witt module") {
  for (auto [p, f] : std::vector<std::pair<std::int64_t, int>>{{2, 2}, {2, 3}, {3, 2}}) {
    RingSpec s = make_finite_field(p, f);
    for (int r = 1; r <= 3; ++r) {
      StrictLevel W = de_rham_witt(s, r, 1);
      CHECK(W.invariants(Grade{}, 0) == witt_additive_invariants(CoeffRing::finite_field(p, f), r));
      CHECK(W.invariants(Grade{}, 0) == cyclic(p, std::vector<int>(static_cast<std::size_t>(f), r)));
    }
  }
}

TEST_CASE("mod p^r reduction of the saturated model is quasi-isomorphic to W_r") {
  CHECK(mod_p_compatibility(make_finite_field(3), 2, 1).ok);
  ModPReport rep = mod_p_compatibility(make_poly(2, {"x"}), 2, 4);
  CHECK(rep.ok);
  CHECK(rep.entries.size() > 10);
  CHECK(mod_p_compatibility(make_finite_field(3, 2), 3, 1).ok);
  CHECK(mod_p_compatibility(make_poly(3, {"x", "y"}), 2, 2).ok);
  CHECK(mod_p_compatibility(make_laurent(2, {"x"}), 3, 2).ok);
}

TEST_CASE("operator identities on random forms") {
  std::mt19937 rng(7);
  const std::int64_t p = 3;
  for (int trial = 0; trial < 50; ++trial) {
    DlogForm w;
    for (int t = 0; t < 3; ++t) {
      Grade a{Rat(static_cast<long>(rng() % 7), 1u + (rng() % 2) * 2u), Rat(static_cast<long>(rng() % 5) - 2)};
      for (auto& x : a) x.canonicalize();
      w = dlog_add(w, DlogForm{{DlogKey{a, static_cast<unsigned>(rng() % 4)}, Rat(static_cast<long>(rng() % 9) - 4)}});
    }
    CHECK(dlog_d(dlog_d(w)).empty());
    CHECK(dlog_d(dlog_frobenius(w, p)) == dlog_frobenius(dlog_add(DlogForm{}, dlog_d(w), Rat(3)), p));
    CHECK(dlog_frobenius(dlog_d(dlog_verschiebung(w, p)), p) == dlog_d(w));
    CHECK(dlog_frobenius(dlog_verschiebung(w, p), p) == dlog_add(DlogForm{}, w, Rat(3)));
    CHECK(dlog_verschiebung(dlog_frobenius(w, p), p) == dlog_add(DlogForm{}, w, Rat(3)));
  }
}

TEST_CASE("F, V, d and R descend to the strict quotients") {
  const std::int64_t p = 2;
  RingSpec s = make_poly(p, {"x", "y"});
  for (int r = 1; r <= 3; ++r) {
    for (const auto& a : dieudonne_grades(s, 3, r - 1)) {
      const Grade pa = scale_grade(a, Rat(2)), ap = scale_grade(a, Rat(1, 2));
      for (int n = 0; n <= 2; ++n) {
        StrictPiece here = strict_piece(s, a, n, r);
        const std::size_t k = here.numerator.cols();
        ScaledMat Fk = scaled_identity(k), Vk = scaled_identity(k, p);
        // Maps of saturated lattices.
        CHECK(lattice_contains(saturated_lattice(s, pa, n), lattice_image(here.numerator, Fk)));
        CHECK(lattice_contains(saturated_lattice(s, ap, n), lattice_image(here.numerator, Vk)));
        // Well defined on the quotients.
        if (r > 1) CHECK(lattice_contains(strict_piece(s, pa, n, r - 1).denominator, lattice_image(here.denominator, Fk)));
        CHECK(lattice_contains(strict_piece(s, ap, n, r + 1).denominator, lattice_image(here.denominator, Vk)));
        CHECK(lattice_contains(strict_piece(s, a, n, r).denominator, strict_piece(s, a, n, r + 1).denominator));
        if (n < 2)
          CHECK(lattice_contains(strict_piece(s, a, n + 1, r).denominator,
                                 lattice_image(here.denominator, dlog_differential(s, a, n))));
      }
    }
  }
}

TEST_CASE("invariants are stable under a larger weight window") {
  RingSpec s = make_poly(3, {"x"});
  StrictLevel small = de_rham_witt(s, 2, 3), big = de_rham_witt(s, 2, 9);
  for (const auto& [a, v] : small.pieces)
    for (int n = 0; n <= 1; ++n) CHECK(small.invariants(a, n) == big.invariants(a, n));
}

TEST_CASE("quotient rings are rejected") {
  RingSpec q = make_quotient(2, {"x"}, {1}, {"x^2"});
  CHECK_THROWS_AS(lift_with_frobenius(q, 3), Error);
  try {
    lift_with_frobenius(q, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnsupportedKind);
  }
}
