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

// p-typical Witt vectors of finite length.

#pragma once

#include <memory>
#include <vector>

#include "drwitt/coeffring.hpp"
#include "drwitt/linalg.hpp"

namespace drw {

/// Integral polynomials S_k, P_k, N_k (k <= depth) in X_0..X_n, Y_0..Y_n
/// (variable index i for X_i, n+1+i for Y_i; N_k uses only the X block), and
/// Frobenius polynomials F_k in X_0..X_{n+1} for k < n+1.
struct UniversalWittLaw {
  std::int64_t p = 2;
  int depth = 0;
  std::vector<ZPoly> add;
  std::vector<ZPoly> mul;
  std::vector<ZPoly> neg;
  std::vector<ZPoly> frob;
};

/// Default maximal depth for universal laws.
constexpr int kDefaultWittDepthCap = 5;

/// Synthesizes (or fetches from the process-wide cache) the universal laws up
/// to depth n. Throws DepthCap if n > cap.
std::shared_ptr<const UniversalWittLaw> synthesize_law(std::int64_t p, int n,
                                                       int cap = kDefaultWittDepthCap);

/// w_m(T) = sum_{i<=m} p^i T_i^{p^{m-i}} as a polynomial in T_0..T_{nvars-1}.
QPoly ghost_polynomial(std::int64_t p, int m, std::size_t nvars, std::size_t offset = 0);

struct WittVector {
  std::vector<CoeffRing::Elem> comps;

  std::size_t length() const { return comps.size(); }
};

WittVector witt_zero(const CoeffRing& A, int r);
WittVector witt_one(const CoeffRing& A, int r);
WittVector teichmuller(const CoeffRing& A, const CoeffRing::Elem& a, int r);
WittVector witt_from_components(const CoeffRing& A, const std::vector<CoeffRing::Elem>& comps);
bool witt_equal(const CoeffRing& A, const WittVector& a, const WittVector& b);

WittVector witt_add(const CoeffRing& A, const WittVector& a, const WittVector& b);
WittVector witt_sub(const CoeffRing& A, const WittVector& a, const WittVector& b);
WittVector witt_mul(const CoeffRing& A, const WittVector& a, const WittVector& b);
WittVector witt_neg(const CoeffRing& A, const WittVector& a);
/// n * a for an integer n.
WittVector witt_int_multiple(const CoeffRing& A, const Int& n, const WittVector& a);

/// Same operations by evaluating the universal laws (oracle path).
WittVector witt_add_universal(const CoeffRing& A, const WittVector& a, const WittVector& b);
WittVector witt_mul_universal(const CoeffRing& A, const WittVector& a, const WittVector& b);
WittVector frobenius_universal(const CoeffRing& A, const WittVector& a);

/// Ghost components; requires a p-torsion-free coefficient ring.
std::vector<CoeffRing::Elem> ghost(const CoeffRing& A, const WittVector& a);

/// F: W_r -> W_{r-1}.
WittVector frobenius(const CoeffRing& A, const WittVector& a);
/// V: W_r -> W_{r+1}.
WittVector verschiebung(const CoeffRing& A, const WittVector& a);
/// R: W_r -> W_{r-1}.
WittVector restriction(const CoeffRing& A, const WittVector& a);

std::string witt_to_string(const CoeffRing& A, const WittVector& a);

/// Invariant factors of (W_r(A), +) for a finite coefficient ring, computed
/// from the orders of elements.
InvariantFactors witt_additive_invariants(const CoeffRing& A, int r);

}  // namespace drw
