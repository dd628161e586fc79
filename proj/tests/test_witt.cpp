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
#include "drwitt/witt.hpp"

using namespace drw;

namespace {

CoeffRing::Elem random_elem(const CoeffRing& A, std::mt19937_64& rng, int max_terms = 3, int max_exp = 3,
                            long coef = 7) {
  std::uniform_int_distribution<long> c(-coef, coef);
  std::uniform_int_distribution<int> e(0, max_exp);
  std::uniform_int_distribution<int> n(0, max_terms);
  CoeffRing::Elem out = A.zero();
  int terms = n(rng);
  for (int k = 0; k < terms; ++k) {
    CoeffRing::Elem m = A.from_int(Int(c(rng)));
    for (std::size_t v = 0; v < A.nvars(); ++v) m = A.mul(m, A.pow(A.var(v), e(rng)));
    out = A.add(out, m);
  }
  return out;
}

WittVector random_witt(const CoeffRing& A, int r, std::mt19937_64& rng, int max_exp = 3) {
  WittVector w;
  for (int i = 0; i < r; ++i) w.comps.push_back(random_elem(A, rng, 3, max_exp));
  return w;
}

// Integer ghost components evaluated directly from the defining sum.
std::vector<Int> int_ghost(std::int64_t p, const std::vector<Int>& a) {
  std::vector<Int> w;
  for (std::size_t m = 0; m < a.size(); ++m) {
    Int s = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      Int term, pi;
      mpz_pow_ui(term.get_mpz_t(), a[i].get_mpz_t(), static_cast<unsigned long>(ipow(p, static_cast<int>(m - i))));
      mpz_ui_pow_ui(pi.get_mpz_t(), static_cast<unsigned long>(p), i);
      s += pi * term;
    }
    w.push_back(s);
  }
  return w;
}

std::vector<Int> as_ints(const CoeffRing& Z, const WittVector& a) {
  std::vector<Int> out;
  for (const auto& c : a.comps) {
    auto it = c.terms().find(Exponent(Z.nvars(), 0));
    out.push_back(it == c.terms().end() ? Int(0) : it->second);
  }
  return out;
}

}  // namespace

TEST_CASE("universal addition laws in low depth") {
  for (std::int64_t p : {2, 3, 5}) {
    auto law = synthesize_law(p, 1);
    ZPoly s0 = ZPoly::variable(4, 0) + ZPoly::variable(4, 2);
    CHECK(law->add[0] == s0);
  }
  auto l2 = synthesize_law(2, 1);
  ZPoly x0 = ZPoly::variable(4, 0), x1 = ZPoly::variable(4, 1), y0 = ZPoly::variable(4, 2),
        y1 = ZPoly::variable(4, 3);
  CHECK(l2->add[1] == x1 + y1 - x0 * y0);
  auto l3 = synthesize_law(3, 1);
  CHECK(l3->add[1] == x1 + y1 - x0 * x0 * y0 - x0 * y0 * y0);
}

TEST_CASE("universal laws are ghost compatible at integer points") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> d(-6, 6);
  for (auto [p, n] : std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 2}, {5, 1}}) {
    auto law = synthesize_law(p, n);
    CoeffRing Z = CoeffRing::integers(p);
    for (int trial = 0; trial < 10; ++trial) {
      WittVector a, b;
      for (int i = 0; i <= n; ++i) {
        a.comps.push_back(Z.from_int(Int(d(rng))));
        b.comps.push_back(Z.from_int(Int(d(rng))));
      }
      auto ga = int_ghost(p, as_ints(Z, a)), gb = int_ghost(p, as_ints(Z, b));
      auto gs = int_ghost(p, as_ints(Z, witt_add_universal(Z, a, b)));
      auto gm = int_ghost(p, as_ints(Z, witt_mul_universal(Z, a, b)));
      for (int m = 0; m <= n; ++m) {
        CHECK(gs[m] == ga[m] + gb[m]);
        CHECK(gm[m] == ga[m] * gb[m]);
      }
    }
  }
}

TEST_CASE("depth cap and length errors") {
  CHECK_THROWS_AS(synthesize_law(2, 6), Error);
  try {
    synthesize_law(2, 6);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::DepthCap);
  }
  CoeffRing F = CoeffRing::finite_field(3, 1);
  try {
    witt_add(F, witt_one(F, 2), witt_one(F, 3));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
  try {
    frobenius(F, witt_one(F, 1));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthUnderflow);
  }
  try {
    ghost(F, witt_one(F, 2));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TorsionCoefficients);
  }
}

TEST_CASE("one plus one in W_2(F_2)") {
  CoeffRing F2 = CoeffRing::finite_field(2, 1);
  WittVector s = witt_add(F2, witt_one(F2, 2), witt_one(F2, 2));
  CHECK(witt_equal(F2, s, witt_from_components(F2, {F2.zero(), F2.one()})));
  CHECK(witt_equal(F2, s, verschiebung(F2, witt_one(F2, 1))));
  // Same through the lift to Z: ghost (2, 2) solves back to (2, -1).
  CoeffRing Z = CoeffRing::integers(2);
  WittVector sz = witt_add(Z, witt_one(Z, 2), witt_one(Z, 2));
  CHECK(as_ints(Z, sz) == std::vector<Int>{2, -1});
}

TEST_CASE("Teichmuller lifts are multiplicative in W_3(F_9)") {
  CoeffRing F9 = CoeffRing::finite_field(3, 2);
  auto elems = F9.elements();
  REQUIRE(elems.size() == 9);
  for (const auto& a : elems)
    for (const auto& b : elems) {
      WittVector lhs = witt_mul(F9, teichmuller(F9, a, 3), teichmuller(F9, b, 3));
      CHECK(witt_equal(F9, lhs, teichmuller(F9, F9.mul(a, b), 3)));
    }
}

TEST_CASE("W_3(F_3) is Z/27") {
  CoeffRing F3 = CoeffRing::finite_field(3, 1);
  // Teichmuller representatives of 0, 1, 2 in Z/27 are 0, 1, -1.
  const long teich[3] = {0, 1, 26};
  std::vector<WittVector> vecs;
  std::vector<long> value;
  for (long code = 0; code < 27; ++code) {
    long d0 = code % 3, d1 = (code / 3) % 3, d2 = code / 9;
    vecs.push_back(witt_from_components(F3, {F3.from_int(d0), F3.from_int(d1), F3.from_int(d2)}));
    value.push_back((teich[d0] + 3 * teich[d1] + 9 * teich[d2]) % 27);
  }
  auto find = [&](long v) {
    for (std::size_t i = 0; i < value.size(); ++i)
      if (value[i] == v) return i;
    return value.size();
  };
  for (std::size_t i = 0; i < 27; ++i)
    for (std::size_t j = 0; j < 27; ++j) {
      std::size_t k = find((value[i] + value[j]) % 27);
      REQUIRE(k < 27);
      CHECK(witt_equal(F3, witt_add(F3, vecs[i], vecs[j]), vecs[k]));
    }
}

TEST_CASE("ghost map is a ring homomorphism over Z") {
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> d(-5, 5);
  CoeffRing Zx = CoeffRing::integers(2, {"x"});
  int cases = 0;
  for (std::int64_t p : {2, 3, 5}) {
    CoeffRing Z = CoeffRing::integers(p);
    for (int r = 1; r <= 4; ++r) {
      for (int trial = 0; trial < 4; ++trial, ++cases) {
        WittVector a, b;
        for (int i = 0; i < r; ++i) {
          a.comps.push_back(Z.from_int(Int(d(rng))));
          b.comps.push_back(Z.from_int(Int(d(rng))));
        }
        auto ga = int_ghost(p, as_ints(Z, a)), gb = int_ghost(p, as_ints(Z, b));
        auto gs = ghost(Z, witt_add(Z, a, b));
        auto gm = ghost(Z, witt_mul(Z, a, b));
        for (int m = 0; m < r; ++m) {
          CHECK(Z.equal(gs[m], Z.from_int(ga[m] + gb[m])));
          CHECK(Z.equal(gm[m], Z.from_int(ga[m] * gb[m])));
        }
        if (r <= 3 || p != 5) CHECK(witt_equal(Z, witt_add(Z, a, b), witt_add_universal(Z, a, b)));
      }
    }
  }
  CHECK(cases >= 48);
  for (int trial = 0; trial < 4; ++trial) {
    WittVector a = random_witt(Zx, 3, rng, 2), b = random_witt(Zx, 3, rng, 2);
    auto ga = ghost(Zx, a), gb = ghost(Zx, b), gm = ghost(Zx, witt_mul(Zx, a, b));
    for (int m = 0; m < 3; ++m) CHECK(Zx.equal(gm[m], Zx.mul(ga[m], gb[m])));
  }
}

TEST_CASE("ghost of Teichmuller and Verschiebung") {
  CoeffRing Z = CoeffRing::integers(3);
  auto g = ghost(Z, teichmuller(Z, Z.from_int(2), 3));
  CHECK(Z.equal(g[0], Z.from_int(2)));
  CHECK(Z.equal(g[1], Z.from_int(8)));
  CHECK(Z.equal(g[2], Z.from_int(512)));
  WittVector x = witt_from_components(Z, {Z.from_int(4), Z.from_int(-1)});
  auto gv = ghost(Z, verschiebung(Z, x));
  auto gx = ghost(Z, x);
  CHECK(Z.is_zero(gv[0]));
  for (std::size_t n = 1; n < gv.size(); ++n) CHECK(Z.equal(gv[n], Z.scale(3, gx[n - 1])));
}

TEST_CASE("Frobenius in characteristic p") {
  CoeffRing F3 = CoeffRing::finite_field(3, 1);
  WittVector v1 = witt_from_components(F3, {F3.zero(), F3.one()});
  CHECK(witt_equal(F3, frobenius(F3, v1), witt_zero(F3, 1)));

  for (std::int64_t p : {2, 3, 5}) {
    CoeffRing A = CoeffRing::polynomial(p, {"x"}, {1}, 40);
    auto x = A.var(0);
    CHECK(witt_equal(A, frobenius(A, teichmuller(A, x, 2)), teichmuller(A, A.pow(x, p), 1)));
  }

  std::mt19937_64 rng(3);
  int cases = 0;
  for (std::int64_t p : {2, 3}) {
    CoeffRing A = CoeffRing::polynomial(p, {"x", "y"}, {1, 1}, 12);
    for (int trial = 0; trial < 15; ++trial, ++cases) {
      WittVector a = random_witt(A, 3, rng, 2);
      CHECK(witt_equal(A, frobenius(A, a), frobenius_universal(A, a)));
    }
  }
  CoeffRing F25 = CoeffRing::finite_field(5, 2);
  for (int trial = 0; trial < 20; ++trial, ++cases) {
    WittVector a = random_witt(F25, 3, rng);
    CHECK(witt_equal(F25, frobenius(F25, a), frobenius_universal(F25, a)));
  }
  CHECK(cases == 50);
}

TEST_CASE("F V = V F = p and p = V(1)") {
  std::mt19937_64 rng(8);
  for (std::int64_t p : {2, 3, 5}) {
    CoeffRing A = CoeffRing::polynomial(p, {"x"}, {1}, 30);
    for (int trial = 0; trial < 5; ++trial) {
      WittVector a = random_witt(A, 3, rng);
      WittVector pa = witt_int_multiple(A, Int(static_cast<long>(p)), a);
      CHECK(witt_equal(A, frobenius(A, verschiebung(A, a)), pa));
      CHECK(witt_equal(A, verschiebung(A, frobenius(A, a)), pa));
    }
    CoeffRing F = CoeffRing::finite_field(p, 1);
    CHECK(witt_equal(F, witt_int_multiple(F, Int(static_cast<long>(p)), witt_one(F, 2)),
                     verschiebung(F, witt_one(F, 1))));
  }
}

TEST_CASE("Verschiebung is additive and satisfies the projection formula") {
  std::mt19937_64 rng(21);
  CoeffRing F5 = CoeffRing::finite_field(5, 1);
  auto elems = F5.elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    WittVector a, b;
    for (int i = 0; i < 3; ++i) {
      a.comps.push_back(elems[pick(rng)]);
      b.comps.push_back(elems[pick(rng)]);
    }
    CHECK(witt_equal(F5, verschiebung(F5, witt_add(F5, a, b)),
                     witt_add(F5, verschiebung(F5, a), verschiebung(F5, b))));
  }
  CoeffRing A = CoeffRing::polynomial(2, {"x"}, {1}, 6);
  for (int trial = 0; trial < 50; ++trial) {
    WittVector x = random_witt(A, 2, rng);
    WittVector y = random_witt(A, 1, rng);
    CHECK(witt_equal(A, witt_mul(A, x, verschiebung(A, y)),
                     verschiebung(A, witt_mul(A, frobenius(A, x), y))));
  }
}

TEST_CASE("restriction commutes with F and V") {
  std::mt19937_64 rng(34);
  CoeffRing A = CoeffRing::polynomial(3, {"x"}, {1}, 20);
  auto x = A.var(0);
  CHECK(witt_equal(A, restriction(A, teichmuller(A, x, 3)), teichmuller(A, x, 2)));
  for (int trial = 0; trial < 50; ++trial) {
    WittVector a = random_witt(A, 3, rng);
    CHECK(witt_equal(A, restriction(A, verschiebung(A, a)), verschiebung(A, restriction(A, a))));
    CHECK(witt_equal(A, restriction(A, frobenius(A, a)), frobenius(A, restriction(A, a))));
  }
  CoeffRing F9 = CoeffRing::finite_field(3, 2);
  for (const auto& a : F9.elements())
    for (const auto& b : F9.elements()) {
      WittVector w2 = witt_from_components(F9, {a, b});
      WittVector w3 = witt_from_components(F9, {a, b, F9.zero()});
      CHECK(witt_equal(F9, restriction(F9, w3), w2));
    }
}

TEST_CASE("ring axioms on random Witt vectors") {
  std::mt19937_64 rng(55);
  CoeffRing F9 = CoeffRing::finite_field(3, 2);
  CoeffRing A = CoeffRing::polynomial(2, {"x", "y"}, {1, 2}, 8);
  for (const CoeffRing* R : {&F9, &A}) {
    for (int trial = 0; trial < 10; ++trial) {
      WittVector a = random_witt(*R, 3, rng), b = random_witt(*R, 3, rng), c = random_witt(*R, 3, rng);
      CHECK(witt_equal(*R, witt_add(*R, witt_add(*R, a, b), c), witt_add(*R, a, witt_add(*R, b, c))));
      CHECK(witt_equal(*R, witt_mul(*R, witt_mul(*R, a, b), c), witt_mul(*R, a, witt_mul(*R, b, c))));
      CHECK(witt_equal(*R, witt_mul(*R, a, witt_add(*R, b, c)),
                       witt_add(*R, witt_mul(*R, a, b), witt_mul(*R, a, c))));
      CHECK(witt_equal(*R, witt_sub(*R, a, a), witt_zero(*R, 3)));
      CHECK(witt_equal(*R, witt_add(*R, a, b), witt_add_universal(*R, a, b)));
      CHECK(witt_equal(*R, witt_mul(*R, a, b), witt_mul_universal(*R, a, b)));
    }
  }
}

TEST_CASE("W_r(F_p) is cyclic of order p^r") {
  for (std::int64_t p : {2, 3, 5})
    for (int r = 1; r <= 4; ++r) {
      CoeffRing F = CoeffRing::finite_field(p, 1);
      CHECK(witt_additive_invariants(F, r) == InvariantFactors{p, {r}, 0});
    }
  CoeffRing F4 = CoeffRing::finite_field(2, 2);
  CHECK(witt_additive_invariants(F4, 2) == InvariantFactors{2, {2, 2}, 0});
}

TEST_CASE("coefficient ring parsing") {
  CoeffRing A = CoeffRing::polynomial(3, {"x", "y"}, {1, 1}, 10);
  auto f = A.parse("x^2*y + 4*x - (y - 1)^2");
  CHECK(A.to_string(f) == "x^2*y + x + 2*y^2 + 2*y + 2");
  CHECK_THROWS_AS(A.parse("x + z"), Error);
  CoeffRing F4 = CoeffRing::finite_field(2, 2);
  CHECK(F4.modulus() == std::vector<Int>{1, 1, 1});
  CHECK(F4.is_zero(F4.parse("t^2 + t + 1")));
}
