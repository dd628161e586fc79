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

#include "drwitt/linalg.hpp"

#include <sstream>

namespace drw {

std::string InvariantFactors::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int e : torsion) {
    if (!first) os << " + ";
    os << "Z/" << p << "^" << e;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << " + ";
    os << "Z_" << p << "^" << free_rank;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

bool invariants_isomorphic(const InvariantFactors& a, const InvariantFactors& b) {
  InvariantFactors x = a, y = b;
  x.normalize();
  y.normalize();
  return x == y;
}

InvariantFactors direct_sum(const InvariantFactors& a, const InvariantFactors& b) {
  if (a.p != b.p) throw Error(ErrorKind::InvalidArgument, "direct sum of groups at different primes");
  InvariantFactors out = a;
  out.torsion.insert(out.torsion.end(), b.torsion.begin(), b.torsion.end());
  out.free_rank += b.free_rank;
  out.normalize();
  return out;
}

ModMat to_mod(const ModRing& ring, const IntMat& m) {
  ModMat out = ModMat::zeros(ring, m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = ring.from_int(m(i, j));
  return out;
}

}  // namespace drw
