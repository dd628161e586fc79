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

#include "drwitt/lattice.hpp"

#include "drwitt/error.hpp"

namespace drw {

namespace {

const IntRing kZ;

}  // namespace

ScaledMat scaled_identity(std::size_t n, const Int& c) {
  ScaledMat m{IntMat::zeros(kZ, n, n), 1};
  for (std::size_t i = 0; i < n; ++i) m.num(i, i) = c;
  return m;
}

ScaledMat scaled_matmul(const ScaledMat& a, const ScaledMat& b) {
  return ScaledMat{matmul(kZ, a.num, b.num), a.den * b.den};
}

bool scaled_is_zero(const ScaledMat& a) { return is_zero_matrix(kZ, a.num); }

IntMat lattice_basis(const IntMat& gens) {
  if (gens.cols() == 0) return IntMat::zeros(kZ, 0, 0);
  return howell_form(kZ, gens);
}

IntMat lattice_identity(std::size_t n) { return IntMat::identity(kZ, n); }

IntMat lattice_scale(const IntMat& basis, const Int& c) { return lattice_basis(matscale(kZ, c, basis)); }

IntMat lattice_sum(const IntMat& a, const IntMat& b) {
  return lattice_basis(vcat(kZ, a, b, std::max(a.cols(), b.cols())));
}

bool lattice_contains(const IntMat& super, const IntMat& sub) {
  if (sub.rows() == 0) return true;
  return contains(kZ, super, sub);
}

bool lattice_equal(const IntMat& a, const IntMat& b) { return lattice_basis(a) == lattice_basis(b); }

IntMat lattice_preimage(const IntMat& L, const ScaledMat& M, const IntMat& T) {
  if (L.rows() == 0) return L;
  if (M.cols() == 0) return lattice_basis(L);
  // x = y L with y (L M.num) in den * T.
  IntMat image = matmul(kZ, L, M.num);
  IntMat target = matscale(kZ, M.den, T);
  IntMat y = preimage(kZ, image, target);
  if (y.rows() == 0) return IntMat::zeros(kZ, 0, L.cols());
  return lattice_basis(matmul(kZ, y, L));
}

IntMat lattice_coordinates(const IntMat& basis, const IntMat& vectors, const Int& den) {
  IntMat scaled = matscale(kZ, den, basis);
  IntMat out = IntMat::zeros(kZ, 0, basis.rows());
  for (std::size_t i = 0; i < vectors.rows(); ++i) {
    auto x = solve_row(kZ, scaled, vectors.row(i));
    if (!x) throw Error(ErrorKind::InexactDivision, "vector is not in the lattice");
    out.append_row(*x);
  }
  if (vectors.rows() == 0) return IntMat::zeros(kZ, 0, basis.rows());
  return out;
}

IntMat restricted_matrix(const IntMat& L, const ScaledMat& M, const IntMat& T) {
  if (L.rows() == 0 || T.rows() == 0) return IntMat::zeros(kZ, L.rows(), T.rows());
  return lattice_coordinates(T, matmul(kZ, L, M.num), M.den);
}

IntMat lattice_image(const IntMat& L, const ScaledMat& M) {
  IntMat v = matmul(kZ, L, M.num);
  for (std::size_t i = 0; i < v.rows(); ++i)
    for (std::size_t j = 0; j < v.cols(); ++j) {
      if (!mpz_divisible_p(v(i, j).get_mpz_t(), M.den.get_mpz_t()))
        throw Error(ErrorKind::InexactDivision, "image is not integral");
      v(i, j) /= M.den;
    }
  return lattice_basis(v);
}

IntMat kron(const IntMat& a, const IntMat& block) {
  const std::size_t f = block.rows(), g = block.cols();
  IntMat out = IntMat::zeros(kZ, a.rows() * f, a.cols() * g);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t k = 0; k < f; ++k)
        for (std::size_t l = 0; l < g; ++l) out(i * f + k, j * g + l) = a(i, j) * block(k, l);
    }
  return out;
}

IntMat cyclic_shift(std::size_t f) {
  IntMat s = IntMat::zeros(kZ, f, f);
  for (std::size_t k = 0; k < f; ++k) s(k, (k + 1) % f) = 1;
  return s;
}

}  // namespace drw
