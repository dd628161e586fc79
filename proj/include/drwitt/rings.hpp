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

// Coefficient rings for the linear algebra engine: the integers and the
// local rings Z/p^R. Both are principal ideal rings, so one Howell/Smith
// implementation serves both.

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "drwitt/error.hpp"

namespace drw {

using Int = mpz_class;
using Rat = mpq_class;

bool is_prime(std::int64_t n);
std::int64_t ipow(std::int64_t base, int exp);
/// p-adic valuation of a nonzero integer.
int valuation(const Int& x, std::int64_t p);
int valuation(const Rat& x, std::int64_t p);

/// Result of a unimodular 2x2 combination: [s t; u v] * (a, b)^T = (g, 0)^T.
template <class E>
struct Xgcd {
  E g, s, t, u, v;
};

struct IntRing {
  using Elem = Int;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t x) const { return Elem(static_cast<long>(x)); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }

  Xgcd<Elem> xgcd(const Elem& a, const Elem& b) const {
    Xgcd<Elem> r;
    if (is_zero(a) && is_zero(b)) {
      r.g = 0; r.s = 1; r.t = 0; r.u = 0; r.v = 1;
      return r;
    }
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    r.u = -b / r.g;
    r.v = a / r.g;
    return r;
  }

  Elem ann(const Elem&) const { return 0; }

  /// unit * a is the canonical associate (nonnegative).
  Elem normalizing_unit(const Elem& a) const { return sgn(a) < 0 ? Elem(-1) : Elem(1); }

  /// Writes x = q * pivot + rem with rem canonical modulo the pivot.
  void divrem(const Elem& x, const Elem& pivot, Elem& q, Elem& rem) const {
    if (is_zero(pivot)) {
      q = 0;
      rem = x;
      return;
    }
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), x.get_mpz_t(), pivot.get_mpz_t());
  }

  /// Pivot preference in Smith diagonalization (smaller is better).
  Int size(const Elem& a) const { return abs(a); }

  std::string to_string(const Elem& a) const { return a.get_str(); }
};

/// Z/p^R with elements stored as reduced representatives in [0, p^R).
struct ModRing {
  using Elem = std::int64_t;

  std::int64_t p = 2;
  int R = 1;
  std::int64_t mod = 2;

  ModRing() = default;
  ModRing(std::int64_t prime, int precision);

  Elem zero() const { return 0; }
  Elem one() const { return mod == 1 ? 0 : 1; }
  Elem from_int(std::int64_t x) const {
    x %= mod;
    return x < 0 ? x + mod : x;
  }
  Elem from_int(const Int& x) const;
  /// Maps a p-integral rational; throws InexactDivision when p divides the denominator.
  Elem from_rat(const Rat& x) const;
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= mod ? s - mod : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + mod - b; }
  Elem mul(Elem a, Elem b) const {
    return static_cast<Elem>((static_cast<__int128>(a) * b) % mod);
  }
  Elem neg(Elem a) const { return a == 0 ? 0 : mod - a; }
  bool is_zero(Elem a) const { return a == 0; }

  /// Valuation with v(0) = R.
  int val(Elem a) const;
  Elem inverse_unit(Elem a) const;

  Xgcd<Elem> xgcd(Elem a, Elem b) const;
  Elem ann(Elem a) const;
  Elem normalizing_unit(Elem a) const;
  void divrem(Elem x, Elem pivot, Elem& q, Elem& rem) const;
  Int size(Elem a) const { return val(a); }
  std::string to_string(Elem a) const { return std::to_string(a); }
  /// Signed representative in (-mod/2, mod/2].
  std::int64_t centered(Elem a) const { return a > mod / 2 ? a - mod : a; }
};

}  // namespace drw
