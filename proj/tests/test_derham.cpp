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

#include <random>

#include "doctest.h"
#include "drwitt/derham.hpp"

using namespace drw;

namespace {

// Rank of a dense matrix over F_p by plain Gaussian elimination.
int rank_mod_p(std::vector<std::vector<std::int64_t>> m, std::int64_t p) {
  int rank = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(m.size()); ++c) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[static_cast<std::size_t>(rank)]);
    auto& pr = m[static_cast<std::size_t>(rank)];
    std::int64_t inv = 1;
    while ((pr[c] * inv) % p != 1) ++inv;
    for (auto& x : pr) x = (x * inv) % p;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || m[r][c] % p == 0) continue;
      std::int64_t f = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = ((m[r][j] - f * pr[j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

int dim(const InvariantFactors& f) { return static_cast<int>(f.torsion.size()) + f.free_rank; }

Form mono_times(const RingSpec& s, const Exponent& m, const Form& f) {
  Form out;
  for (const auto& [key, c] : f) {
    FormKey k2 = key;
    for (std::size_t j = 0; j < m.size(); ++j) k2.b[j] += m[j];
    add_form_term(s, out, k2, c);
  }
  return out;
}

Form wedge(const RingSpec& s, const Form& a, const Form& b) {
  Form out;
  for (const auto& [ka, ca] : a)
    for (const auto& [kb, cb] : b) {
      if (ka.J & kb.J) continue;
      FormKey k;
      k.b = ka.b;
      for (std::size_t j = 0; j < k.b.size(); ++j) k.b[j] += kb.b[j];
      k.k = ka.k + kb.k;
      k.J = ka.J | kb.J;
      // Sign of merging the sorted index sets.
      int inversions = 0;
      for (std::size_t i = 0; i < 32; ++i)
        if (ka.J & (1u << i))
          for (std::size_t j = 0; j < i; ++j)
            if (kb.J & (1u << j)) ++inversions;
      add_form_term(s, out, k, (inversions % 2 ? -1 : 1) * ca * cb);
    }
  return out;
}

Form single(const RingSpec& s, Exponent b, unsigned J, std::int64_t c = 1) {
  Form f;
  add_form_term(s, f, FormKey{std::move(b), J, 0}, c);
  return f;
}

Form sum(const RingSpec& s, Form a, const Form& b, std::int64_t scale = 1) {
  for (const auto& [k, c] : b) add_form_term(s, a, k, scale * c);
  return a;
}

}  // namespace

TEST_CASE("Omega^1 of a polynomial ring in one variable") {
  RingSpec s = make_poly(5, {"x"});
  DeRhamComplex dr = kaehler(s, 1, 12);
  for (const auto& [g, gc] : dr.grades) {
    const long w = g[0].get_num().get_si();
    if (w == 0) {
      CHECK(gc.omega[1].gens() == 0);
      continue;
    }
    REQUIRE(gc.omega[1].gens() == 1);
    CHECK(gc.omega[1].basis[0] == FormKey{Exponent{static_cast<int>(w - 1)}, 1u, 0});
    CHECK(form_to_string(s, gc.omega[1].basis[0]) == (w == 1 ? "dx" : w == 2 ? "x dx" : "x^" + std::to_string(w - 1) + " dx"));
  }
}

TEST_CASE("perfections have no differentials") {
  RingSpec s = make_perfection(make_poly(3, {"x"}));
  DeRhamComplex dr = kaehler(s, 2, 3);
  CHECK(dr.grades.size() > 4);
  for (const auto& [g, gc] : dr.grades) {
    CHECK(gc.omega[0].gens() == 1);
    CHECK(gc.omega[1].gens() == 0);
    CHECK(gc.omega[2].gens() == 0);
  }
  CHECK(cartier_smooth_check(s, 1, 3).consistent);
}

TEST_CASE("Omega^1 of the cusp matches a direct presentation") {
  RingSpec s = make_quotient(2, {"x", "y"}, {2, 3}, {"y^2 - x^3"});
  DeRhamComplex dr = kaehler(s, 1, 16);
  for (const auto& [g, gc] : dr.grades) {
    const long w = g[0].get_num().get_si();
    // Free module on x^a y^b dx (weight 2a+3b+2) and x^a y^b dy (weight 2a+3b+3).
    std::vector<std::pair<Exponent, unsigned>> gens;
    for (int a = 0; 2 * a <= w; ++a)
      for (int b = 0; 2 * a + 3 * b <= w; ++b) {
        if (2 * a + 3 * b + 2 == w) gens.push_back({{a, b}, 1u});
        if (2 * a + 3 * b + 3 == w) gens.push_back({{a, b}, 2u});
      }
    auto col = [&](int a, int b, unsigned J) -> int {
      for (std::size_t i = 0; i < gens.size(); ++i)
        if (gens[i].first == Exponent{a, b} && gens[i].second == J) return static_cast<int>(i);
      return -1;
    };
    std::vector<std::vector<std::int64_t>> rels;
    // m*(y^2 - x^3) dx, m*(y^2 - x^3) dy, and m*d(y^2 - x^3) = m*(x^2 dx) over F_2.
    for (int a = 0; 2 * a <= w; ++a)
      for (int b = 0; 2 * a + 3 * b <= w; ++b) {
        for (unsigned J : {1u, 2u}) {
          std::vector<std::int64_t> row(gens.size(), 0);
          int c1 = col(a, b + 2, J), c2 = col(a + 3, b, J);
          if (c1 < 0 && c2 < 0) continue;
          if (c1 >= 0) row[static_cast<std::size_t>(c1)] ^= 1;
          if (c2 >= 0) row[static_cast<std::size_t>(c2)] ^= 1;
          rels.push_back(row);
        }
        std::vector<std::int64_t> row(gens.size(), 0);
        int c = col(a + 2, b, 1u);
        if (c >= 0) {
          row[static_cast<std::size_t>(c)] = 1;
          rels.push_back(row);
        }
      }
    int expected = static_cast<int>(gens.size()) - (gens.empty() ? 0 : rank_mod_p(rels, 2));
    const auto& piece = gc.omega[1];
    CHECK(dim(cokernel_invariants(dr.field, piece.relations, piece.gens(), 2)) == expected);
  }
}

TEST_CASE("de Rham cohomology of F_p[x]") {
  for (std::int64_t p : {2, 3, 5}) {
    RingSpec s = make_poly(p, {"x"});
    auto h0 = derham_cohomology(s, 0, 20);
    auto h1 = derham_cohomology(s, 1, 20);
    for (const auto& [g, inv] : h0) {
      const long w = g[0].get_num().get_si();
      CHECK(dim(inv) == (w % p == 0 ? 1 : 0));
    }
    for (const auto& [g, inv] : h1) {
      const long w = g[0].get_num().get_si();
      CHECK(dim(inv) == (w > 0 && w % p == 0 ? 1 : 0));
    }
  }
}

TEST_CASE("de Rham cohomology of a finite field") {
  RingSpec s = make_finite_field(3, 2);
  auto h0 = derham_cohomology(s, 0, 5);
  REQUIRE(h0.size() == 1);
  CHECK(h0.begin()->second == InvariantFactors{3, {1, 1}, 0});
  CHECK(derham_cohomology(s, 1, 5).begin()->second.is_zero());
  CHECK(cartier_smooth_check(s, 2, 5).consistent);
}

TEST_CASE("inverse Cartier generator rules") {
  for (std::int64_t p : {2, 3, 5}) {
    RingSpec s = make_poly(p, {"x"});
    Form fx = inverse_cartier_form(s, FormKey{{1}, 0u, 0});
    CHECK(fx == single(s, {static_cast<int>(p)}, 0u));
    Form fdx = inverse_cartier_form(s, FormKey{{0}, 1u, 0});
    CHECK(fdx == single(s, {static_cast<int>(p - 1)}, 1u));
    for (const auto& blk : inverse_cartier(s, 1, 30)) {
      CHECK(blk.target == scale_grade(blk.source, Rat(static_cast<long>(p))));
    }
  }
}

TEST_CASE("inverse Cartier is multiplicative on monomials") {
  RingSpec s = make_poly(3, {"x", "y"});
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> e(0, 2);
  const long cap = 40;
  for (int trial = 0; trial < 50; ++trial) {
    Exponent f{e(rng), e(rng)}, g{e(rng), e(rng)};
    if (g == Exponent{0, 0}) g = {1, 0};
    // f dg as a form and C^{-1} applied generator by generator.
    Form dg = exterior_d(s, single(s, g, 0u));
    Form fdg = mono_times(s, f, dg);
    Form lhs;
    for (const auto& [k, c] : fdg) lhs = sum(s, lhs, inverse_cartier_form(s, k), c);
    // f^p g^{p-1} dg
    Exponent fp{3 * f[0] + 2 * g[0], 3 * f[1] + 2 * g[1]};
    Form rhs = mono_times(s, fp, dg);
    Form diff = sum(s, lhs, rhs, -1);
    if (diff.empty()) continue;
    Grade target{Rat(3 * (f[0] + g[0])), Rat(3 * (f[1] + g[1]))};
    REQUIRE(grade_weight(s, target) <= cap);
    GradeComplex gc = grade_complex(s, target, 2);
    auto sq = homology_subquotient(ModRing(3, 1), gc.as_complex(), 1);
    ModMat row = ModMat::zeros(ModRing(3, 1), 0, gc.omega[1].gens());
    row.append_row(gc.omega[1].coordinates(ModRing(3, 1), diff));
    CHECK(contains(ModRing(3, 1), sq.denominator, row));
  }
}

TEST_CASE("d squares to zero and satisfies Leibniz") {
  RingSpec s = make_poly(5, {"x", "y", "z"});
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> e(0, 7);
  std::uniform_int_distribution<unsigned> jm(0, 7);
  for (int trial = 0; trial < 60; ++trial) {
    Exponent b{e(rng), e(rng), e(rng)};
    Form w = single(s, b, jm(rng));
    CHECK(exterior_d(s, exterior_d(s, w)).empty());
    Exponent m{e(rng), e(rng), e(rng)};
    Form lhs = exterior_d(s, mono_times(s, m, w));
    Form rhs = sum(s, wedge(s, exterior_d(s, single(s, m, 0u)), w), mono_times(s, m, exterior_d(s, w)));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("inverse Cartier lands in closed forms") {
  RingSpec s = make_quotient(3, {"x", "y"}, {1, 1}, {"x*y"});
  ModRing F(3, 1);
  for (int i = 0; i <= 1; ++i)
    for (const auto& blk : inverse_cartier(s, i, 9)) {
      GradeComplex gc = grade_complex(s, blk.target, i + 1);
      ModMat dd = matmul(F, blk.matrix, gc.d[static_cast<std::size_t>(i)]);
      CHECK(contains(F, gc.omega[static_cast<std::size_t>(i) + 1].relations, dd));
    }
}

TEST_CASE("Cartier smoothness verdicts") {
  for (std::int64_t p : {2, 3, 5}) {
    CHECK(cartier_smooth_check(make_poly(p, {"x"}), 1, 20).consistent);
    CHECK(cartier_smooth_check(make_laurent(p, {"x"}), 1, 12).consistent);
  }
  CHECK(cartier_smooth_check(make_poly(3, {"x", "y"}), 2, 12).consistent);
  CHECK(cartier_smooth_check(make_laurent(2, {"x", "y"}), 2, 8).consistent);

  RingSpec bad = make_quotient(3, {"x"}, {1}, {"x^2"});
  CartierReport rep = cartier_smooth_check(bad, 1, 9);
  CHECK_FALSE(rep.consistent);
  bool degree_one = false;
  for (const auto& w : rep.witnesses) degree_one = degree_one || w.degree == 1;
  CHECK(degree_one);
  CHECK(rep.flatness == "not checked");
}

TEST_CASE("quotients must be quasi-homogeneous") {
  CHECK_THROWS_AS(make_quotient(2, {"x", "y"}, {1, 1}, {"y^2 - x^3"}), Error);
  try {
    make_quotient(2, {"x", "y"}, {1, 1}, {"y^2 - x^3"});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonQuasiHomogeneous);
  }
}

TEST_CASE("relative inverse Cartier over F_p[x]") {
  for (std::int64_t p : {2, 3}) {
    RingSpec A = make_poly(p, {"x"});
    RingSpec B = make_poly(p, {"x", "y"});
    RingSpec rel = relative_spec(A, B);
    Form img = inverse_cartier_form(rel, FormKey{{0, 0}, 2u, 0});
    CHECK(img == single(rel, {0, static_cast<int>(p - 1)}, 2u));
    // x is a base coordinate: C^{-1}(x dy) = x y^{p-1} dy
    Form img2 = inverse_cartier_form(rel, FormKey{{1, 0}, 2u, 0});
    CHECK(img2 == single(rel, {1, static_cast<int>(p - 1)}, 2u));
    CHECK(relative_cartier_check(A, B, 1, 10).consistent);
  }
}

TEST_CASE("base change of the inverse Cartier map") {
  auto fe = base_change_check(make_poly(3, {"x"}), make_poly(3, {"x"}, {}, 2), 1, 12);
  CHECK(fe.kind == "field_extension");
  CHECK(fe.before_ok);
  CHECK(fe.after_ok);
  CHECK(fe.square_commutes);
  CHECK(fe.blocks_compared > 0);

  auto loc = base_change_check(make_poly(2, {"x", "y"}), make_laurent(2, {"x", "y"}), 1, 8);
  CHECK(loc.kind == "localization");
  CHECK(loc.before_ok);
  CHECK(loc.after_ok);
  CHECK(loc.square_commutes);

  CHECK_THROWS_AS(base_change_check(make_poly(2, {"x"}), make_poly(3, {"x"}), 1, 4), Error);
}

TEST_CASE("ring spec text round trip") {
  RingSpec s = parse_ring_spec("p = 2\nkind = quotient\nvars = x:2, y:3\nrels = y^2 - x^3\n");
  CHECK(s.kind == RingKind::Quotient);
  CHECK(s.weights == std::vector<int>{2, 3});
  RingSpec t = parse_ring_spec(ring_spec_to_text(s));
  CHECK(t.relations == s.relations);
  CHECK(parse_ring_spec("p = 5\nkind = perfection\nof = laurent\nvars = x:1\n").inner == RingKind::Laurent);
  CHECK_THROWS_AS(parse_ring_spec("p = 5\nkind = banana\n"), Error);
  CHECK_THROWS_AS(parse_ring_spec("p = 5\nkind = poly\nvars = x\nrels = x\n"), Error);
}
