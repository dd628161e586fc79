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

// Full-rank integer lattices in Z^k, given by row bases, and rational maps
// between them. Everything is exact; p-adic questions reduce to integer ones
// because all denominators that occur are powers of p.

#pragma once

#include <vector>

#include "drwitt/linalg.hpp"

namespace drw {

/// The rational matrix num / den.
struct ScaledMat {
  IntMat num;
  Int den = 1;

  std::size_t rows() const { return num.rows(); }
  std::size_t cols() const { return num.cols(); }
};

ScaledMat scaled_identity(std::size_t n, const Int& c = 1);
ScaledMat scaled_matmul(const ScaledMat& a, const ScaledMat& b);
bool scaled_is_zero(const ScaledMat& a);

/// Canonical row basis (Hermite form) of the span of the rows.
IntMat lattice_basis(const IntMat& gens);
IntMat lattice_identity(std::size_t n);
IntMat lattice_scale(const IntMat& basis, const Int& c);
IntMat lattice_sum(const IntMat& a, const IntMat& b);
bool lattice_contains(const IntMat& super, const IntMat& sub);
bool lattice_equal(const IntMat& a, const IntMat& b);

/// {x in L : x M in T} for L and T given by bases.
IntMat lattice_preimage(const IntMat& L, const ScaledMat& M, const IntMat& T);

/// Rows of `vectors` (over den) expressed in the basis: X with X * basis = vectors / den.
/// Throws InexactDivision when some row is outside the lattice.
IntMat lattice_coordinates(const IntMat& basis, const IntMat& vectors, const Int& den = 1);

/// Matrix of v |-> v M from L to T in the bases of L and T.
IntMat restricted_matrix(const IntMat& L, const ScaledMat& M, const IntMat& T);

/// Image of L under M as a lattice (requires integral image).
IntMat lattice_image(const IntMat& L, const ScaledMat& M);

/// Kronecker product with the f x f matrix `block` (coefficients in W(F_q)).
IntMat kron(const IntMat& a, const IntMat& block);
/// The cyclic shift e_k -> e_{k+1 mod f}.
IntMat cyclic_shift(std::size_t f);

}  // namespace drw
