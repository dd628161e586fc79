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
#include "drwitt/filtspec.hpp"
#include "support/filtration_fixtures.hpp"

using namespace drw;
using namespace drw::testing;

namespace {

using M = Mat<ModRing>;

InvariantFactors cyclic(std::int64_t p, std::vector<int> exps, int free_rank = 0) {
  InvariantFactors inv;
  inv.p = p;
  for (int e : exps)
    if (e > 0) inv.torsion.push_back(e);
  inv.free_rank = free_rank;
  inv.normalize();
  return inv;
}

}  // namespace

TEST_CASE("gr of a constant filtration is the complex itself") {
  const ModRing ring(3, 2);
  std::mt19937 rng(1);
  Complex<ModRing> c = random_complex(ring, rng, 3, 3);
  FilteredComplex<ModRing> f;
  f.levels = {c};
  GradedComplex<ModRing> g = gr(ring, f);
  REQUIRE(g.pieces.size() == 1);
  for (int n = 0; n < 3; ++n) CHECK(homology(ring, g.pieces[0], n, 3) == homology(ring, c, n, 3));
}

TEST_CASE("gr of pZ inside Z") {
  const IntRing Z;
  Complex<IntRing> one;
  one.modules.push_back(Presentation<IntRing>::free(Z, 1));
  FilteredComplex<IntRing> f;
  f.lo = 0;
  f.hi = 1;
  f.levels = {one, one};
  Mat<IntRing> t = Mat<IntRing>::zeros(Z, 1, 1);
  t(0, 0) = 3;
  f.transitions = {{t}};
  GradedComplex<IntRing> g = gr(Z, f);
  CHECK(homology(Z, g.pieces[0], 0, 3) == cyclic(3, {1}));
  CHECK(homology(Z, g.pieces[1], 0, 3) == cyclic(3, {}, 1));
  // The cone variant gives the same groups.
  GradedComplex<IntRing> cone = gr(Z, f, GrMode::Cone);
  CHECK(homology(Z, cone.pieces[0], 0, 3) == cyclic(3, {1}));
  CHECK(homology(Z, cone.pieces[1], 0, 3) == cyclic(3, {}, 1));
  // The zero transition is not injective.
  const ModRing r3(3, 1);
  FilteredComplex<ModRing> fm;
  fm.hi = 1;
  Complex<ModRing> onem;
  onem.modules.push_back(Presentation<ModRing>::free(r3, 1));
  fm.levels = {onem, onem};
  fm.transitions = {{Mat<ModRing>::zeros(r3, 1, 1)}};
  CHECK_THROWS_AS(gr(r3, fm, GrMode::Strict), Error);
  CHECK_NOTHROW(gr(r3, fm, GrMode::Cone));
}

TEST_CASE("cone and cokernel agree on random injective filtrations") {
  const ModRing ring(2, 3);
  std::mt19937 rng(2);
  for (int seed = 0; seed < 40; ++seed) {
    RandomFiltration rf = random_filtration(ring, rng, 2, 3, 3);
    REQUIRE(has_injective_transitions(ring, rf.filtered));
    GradedComplex<ModRing> a = gr(ring, rf.filtered, GrMode::Strict);
    GradedComplex<ModRing> b = gr(ring, rf.filtered, GrMode::Cone);
    for (std::size_t j = 0; j < a.pieces.size(); ++j)
      for (int n = -1; n <= 3; ++n) CHECK(homology(ring, a.pieces[j], n, 2) == homology(ring, b.pieces[j], n, 2));
  }
}

TEST_CASE("t and c embeddings") {
  const ModRing ring(3, 1);
  std::mt19937 rng(3);
  GradedComplex<ModRing> x;
  x.lo = -1;
  for (int n = 0; n < 3; ++n) x.pieces.push_back(random_complex(ring, rng, 2, 2));
  // Single slot: t = c.
  GradedComplex<ModRing> single{2, {x.pieces[0]}};
  FilteredComplex<ModRing> t1 = t_embed(ring, single), c1 = c_embed(ring, x.pieces[0], 2, 2);
  CHECK(t1.lo == c1.lo);
  CHECK(t1.levels.size() == c1.levels.size());
  // gr t X = X in the cokernel model.
  GradedComplex<ModRing> g = gr(ring, t_embed(ring, x), GrMode::Cokernel);
  for (std::size_t j = 0; j < 3; ++j)
    for (int n = 0; n < 2; ++n) CHECK(homology(ring, g.pieces[j], n, 3) == homology(ring, x.pieces[j], n, 3));
  // t X is the product of the c_n(X^n), level by level.
  FilteredComplex<ModRing> tx = t_embed(ring, x);
  for (int m = x.lo; m <= x.hi(); ++m) {
    std::size_t gens = 0;
    for (int n = x.lo; n <= x.hi(); ++n) {
      FilteredComplex<ModRing> cn = c_embed(ring, x.pieces[static_cast<std::size_t>(n - x.lo)], n, x.lo);
      if (m <= cn.hi) gens += cn.level(m).modules[0].gens;
    }
    CHECK(gens == tx.level(m).modules[0].gens);
  }
}

TEST_CASE("gr is left adjoint to t on finite hom-sets") {
  const ModRing ring(2, 1);
  // F^{>=0} = (Z/2)^2 in degree 0, F^{>=1} the first factor.
  Complex<ModRing> big, small;
  big.modules.push_back(Presentation<ModRing>::free(ring, 2));
  small.modules.push_back(Presentation<ModRing>::free(ring, 1));
  FilteredComplex<ModRing> f;
  f.hi = 1;
  f.levels = {big, small};
  M t = M::zeros(ring, 1, 2);
  t(0, 0) = 1;
  f.transitions = {{t}};
  GradedComplex<ModRing> x{0, {small, small}};
  CHECK(adjunction_check(ring, f, x, 2));
  CHECK(count_chain_maps(ring, gr(ring, f).pieces[0], small, 1 << 10) == 2);
  // X = gr F and F = t X.
  CHECK(adjunction_check(ring, f, gr(ring, f), 2));
  GradedComplex<ModRing> one{0, {big}};
  FilteredComplex<ModRing> tx = t_embed(ring, one);
  CHECK(adjunction_check(ring, tx, one, 2));
  // Random filtrations over Z/4.
  const ModRing r4(2, 2);
  std::mt19937 rng(4);
  for (int seed = 0; seed < 10; ++seed) {
    RandomFiltration rf = random_filtration(r4, rng, 2, 2, 1);
    GradedComplex<ModRing> y{0, {random_complex(r4, rng, 2, 1), random_complex(r4, rng, 2, 1)}};
    CHECK(adjunction_check(r4, rf.filtered, y, 2));
  }
  const ModRing r27(3, 3);
  Complex<ModRing> wide;
  wide.modules.push_back(Presentation<ModRing>::free(r27, 3));
  FilteredComplex<ModRing> fw;
  fw.levels = {wide};
  CHECK_THROWS_AS(adjunction_check(r27, fw, GradedComplex<ModRing>{0, {wide}}, 3, 1000), Error);
}

TEST_CASE("one-row spectral sequence") {
  const ModRing ring(3, 2);
  std::mt19937 rng(5);
  Complex<ModRing> c = random_complex(ring, rng, 3, 3);
  auto pages = spectral_sequence(ring, c_embed(ring, c, 0, 0), 4, 3);
  REQUIRE(pages.size() == 3);
  for (int k = 0; k < 3; ++k) CHECK(pages[0].at(k, 0, 3) == homology(ring, c, k, 3));
  for (const auto& page : pages)
    for (const auto& [key, e] : page.entries) {
      CHECK(key.second == 0);
      CHECK(e.invariants == pages[0].at(key.first, key.second, 3));
    }
  CHECK(pages_consistent(ring, pages, 3));
  auto ses = two_column_extract(ring, pages, 3);
  for (const auto& s : ses) {
    CHECK(s.left.is_zero());
    CHECK(s.right == homology(ring, c, s.degree, 3));
  }
}

TEST_CASE("two-step filtration of Z -3-> Z") {
  const IntRing Z;
  Complex<IntRing> c, s;
  Mat<IntRing> three = Mat<IntRing>::zeros(Z, 1, 1), one = Mat<IntRing>::zeros(Z, 1, 1);
  three(0, 0) = 3;
  one(0, 0) = 1;
  c.modules = {Presentation<IntRing>::free(Z, 1), Presentation<IntRing>::free(Z, 1)};
  c.diffs = {three};
  s = c;
  s.diffs = {one};  // generated by 1 -> 3, i.e. Z -1-> 3Z
  FilteredComplex<IntRing> f;
  f.hi = 1;
  f.levels = {c, s};
  f.transitions = {{one, three}};
  auto pages = spectral_sequence(Z, f, 0, 3);
  // H^1(C) = Z/3 sits entirely in filtration 0; the subcomplex is acyclic.
  const auto& inf = pages.back();
  CHECK(inf.at(1, 0, 3) == cyclic(3, {1}));
  CHECK(inf.at(0, 0, 3).is_zero());
  CHECK(inf.at(1, -1, 3).is_zero());
  CHECK(inf.at(2, -1, 3).is_zero());
  CHECK(pages_consistent(Z, pages, 3));
}

TEST_CASE("E_infinity matches the filtration on cohomology") {
  for (std::int64_t p : {2, 3}) {
    const ModRing ring(p, 3);
    std::mt19937 rng(static_cast<unsigned>(100 + p));
    std::uniform_int_distribution<int> w(1, 4), len(1, 4);
    int nondegenerate = 0;
    for (int seed = 0; seed < 100; ++seed) {
      const int width = w(rng);
      RandomFiltration rf = random_filtration(ring, rng, width, len(rng), 3);
      auto pages = spectral_sequence(ring, rf.filtered, 0, p);
      CHECK(pages_consistent(ring, pages, p));
      const auto& inf = pages.back();
      for (const auto& [key, e] : pages.front().entries)
        if (!(e.invariants == inf.at(key.first, key.second, p))) {
          ++nondegenerate;
          break;
        }
      for (int s = 0; s < width; ++s)
        for (std::size_t k = 0; k < rf.ambient.modules.size(); ++k) {
          const int m = static_cast<int>(k);
          CHECK(inf.at(m + s, -s, p) == oracle(ring, rf, s, k));
        }
    }
    MESSAGE("p = " << p << ": " << nondegenerate << " of 100 do not degenerate at E_2");
    CHECK(nondegenerate > 0);
  }
}

TEST_CASE("two-column extraction") {
  const ModRing ring(3, 2);
  // Columns built from the weight zero syntomic groups of F_3 mod 9.
  SSPage<ModRing> page;
  for (auto key : {std::make_pair(0, 1), std::make_pair(1, 0)}) {
    SSEntry<ModRing> e;
    e.invariants = cyclic(3, {2});
    e.module = presentation_of(ring, e.invariants);
    page.entries.emplace(key, e);
  }
  auto ses = two_column_extract(ring, std::vector<SSPage<ModRing>>{page}, 3);
  REQUIRE(ses.size() == 1);
  CHECK(ses[0].left == cyclic(3, {2}));
  CHECK(ses[0].right == cyclic(3, {2}));
  CHECK(ses[0].middle_log_order == 4);
  // Random two-column pages with zero differentials.
  std::mt19937 rng(6);
  std::uniform_int_distribution<int> e(0, 2), l(-2, 2);
  for (int t = 0; t < 50; ++t) {
    SSPage<ModRing> pg;
    std::map<int, int> order;
    for (int k = 3; k <= 4; ++k)
      for (int li = -2; li <= 2; ++li) {
        SSEntry<ModRing> en;
        en.invariants = cyclic(3, {e(rng), e(rng)});
        en.module = presentation_of(ring, en.invariants);
        order[k + li] += en.invariants.log_order();
        pg.entries.emplace(std::make_pair(k, li), en);
      }
    for (const auto& s : two_column_extract(ring, std::vector<SSPage<ModRing>>{pg}, 3)) {
      CHECK(s.middle_log_order == s.left.log_order() + s.right.log_order());
      CHECK(s.middle_log_order == order[s.degree]);
    }
  }
  // Three columns and three rows.
  SSPage<ModRing> bad;
  for (int k = 0; k < 3; ++k) {
    SSEntry<ModRing> en;
    en.invariants = cyclic(3, {1});
    en.module = presentation_of(ring, en.invariants);
    bad.entries.emplace(std::make_pair(k, -k), en);
  }
  CHECK_THROWS_AS(two_column_extract(ring, std::vector<SSPage<ModRing>>{bad}, 3), Error);
  // Two rows with a nonzero d_2.
  SSPage<ModRing> rows;
  for (auto key : {std::make_pair(0, 1), std::make_pair(2, 0)}) {
    SSEntry<ModRing> en;
    en.invariants = cyclic(3, {1});
    en.module = presentation_of(ring, en.invariants);
    rows.entries.emplace(key, en);
  }
  M d = M::zeros(ring, 1, 1);
  d(0, 0) = 1;
  rows.differentials.emplace(std::make_pair(0, 1), d);
  CHECK_THROWS_AS(two_column_extract(ring, std::vector<SSPage<ModRing>>{rows}, 3), Error);
}
