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

// Concrete commutative rings used as Witt-vector coefficients:
//   (Z/p^N)[x_1..x_k] / (monomials above a weight cap) [t] / (g(t))
// with N = 0 meaning the integers. Finite fields F_q are the case k = 0 with
// g irreducible mod p and N = 1.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drwitt/poly.hpp"

namespace drw {

class CoeffRing {
 public:
  using Elem = ZPoly;

  /// The integers (N = 0) or Z/p^N, optionally with polynomial variables.
  static CoeffRing integers(std::int64_t p, std::vector<std::string> vars = {},
                            std::vector<int> weights = {}, int weight_cap = -1);
  static CoeffRing polynomial(std::int64_t p, std::vector<std::string> vars, std::vector<int> weights,
                              int weight_cap);
  /// (Z/p^N)[vars] (truncated above weight_cap when >= 0), extended by
  /// F_p[t]/(g) with g of degree f when f > 1.
  static CoeffRing general(std::int64_t p, int N, std::vector<std::string> vars, std::vector<int> weights,
                           int weight_cap, int f);
  /// F_{p^f} as F_p[t]/(g) with g the lexicographically first monic irreducible of degree f.
  static CoeffRing finite_field(std::int64_t p, int f);

  std::int64_t p() const { return p_; }
  /// Coefficients live in Z/p^N; N = 0 means Z.
  int precision() const { return N_; }
  bool char_p() const { return N_ == 1; }
  bool torsion_free() const { return N_ == 0; }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  int weight_cap() const { return cap_; }
  /// Degree of the extension variable modulus, 1 when absent.
  int ext_degree() const { return gen_.empty() ? 1 : static_cast<int>(gen_.size()) - 1; }
  const std::vector<Int>& modulus() const { return gen_; }

  /// Same presentation with coefficients in Z/p^N.
  CoeffRing with_precision(int N) const;

  Elem zero() const { return Elem(nvars()); }
  Elem one() const { return from_int(1); }
  Elem from_int(const Int& c) const;
  Elem var(std::size_t i) const;
  Elem reduce(Elem a) const;
  Elem add(const Elem& a, const Elem& b) const { return reduce(a + b); }
  Elem sub(const Elem& a, const Elem& b) const { return reduce(a - b); }
  Elem neg(const Elem& a) const { return reduce(-a); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem scale(const Int& c, const Elem& a) const { return reduce(a.scaled(c)); }
  Elem pow(const Elem& a, long e) const;
  bool is_zero(const Elem& a) const { return reduce(a).is_zero(); }
  bool equal(const Elem& a, const Elem& b) const { return is_zero(a - b); }
  /// a / p^k, requiring every coefficient to be divisible; the result is
  /// known modulo p^{N-k}, and is returned reduced in this ring.
  Elem divide_p_power(const Elem& a, int k) const;

  Elem parse(const std::string& text) const;
  std::string to_string(const Elem& a) const;

  /// Number of elements when finite (char p, no polynomial variables).
  std::int64_t finite_size() const;
  /// Enumerates all elements of a finite coefficient ring.
  std::vector<Elem> elements() const;

 private:
  std::int64_t p_ = 2;
  int N_ = 1;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  int cap_ = -1;
  std::vector<Int> gen_;  // monic modulus in the last variable, low to high

  bool has_gen() const { return !gen_.empty(); }
};

/// Lexicographically first monic irreducible polynomial of degree f over F_p,
/// coefficients low to high.
std::vector<Int> first_irreducible(std::int64_t p, int f);

}  // namespace drw
