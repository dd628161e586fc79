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

#include "drwitt/kpredict.hpp"

#include <algorithm>

namespace drw {

namespace {

InvariantFactors zero_group(std::int64_t p) {
  InvariantFactors z;
  z.p = p;
  return z;
}

std::string pow_text(std::int64_t p, int e) { return std::to_string(p) + "^" + std::to_string(e); }

}  // namespace

const KRow* KTable::find(int degree, const std::string& modulus) const {
  for (const auto& row : rows)
    if (row.degree == degree && row.modulus == modulus) return &row;
  return nullptr;
}

KTable quillen_table(std::int64_t p, int i_lo, int i_hi, int r, int f) {
  if (i_lo < 0 || i_hi < i_lo || r < 1 || f < 1)
    throw Error(ErrorKind::InvalidArgument, "quillen_table needs 0 <= i_lo <= i_hi and r, f >= 1");
  KTable t;
  t.p = p;
  t.ring = f == 1 ? "F_" + std::to_string(p) : "F_" + pow_text(p, f);
  const std::string q = f == 1 ? std::to_string(p) : "(" + pow_text(p, f) + ")";
  const std::string note = f == 1 ? "" : "Quillen's orders for F_q; background beyond the prime field";
  for (int i = i_lo; i <= i_hi; ++i) {
    KRow integral{i, "Z", 0, "0", zero_group(p), "quillen", note};
    KRow modp{i, "p^r", r, "0", zero_group(p), "quillen", note};
    KRow padic{i, "Z_p", 0, "0", zero_group(p), "quillen", note};
    if (i == 0) {
      integral.group = "Z";
      integral.p_part.free_rank = 1;
      modp.group = "Z/" + pow_text(p, r);
      modp.p_part.torsion = {r};
      padic.group = "Z_p";
      padic.p_part.free_rank = 1;
    } else if (i % 2 == 1) {
      // q^j - 1 is prime to p, so only the integral row is nonzero.
      integral.group = "Z/(" + q + "^" + std::to_string((i + 1) / 2) + " - 1)";
    }
    t.rows.push_back(integral);
    t.rows.push_back(modp);
    t.rows.push_back(padic);
  }
  return t;
}

KTable k_predict(const RingSpec& s, int i_lo, int i_hi, int r) {
  if (i_lo < 0 || i_hi < i_lo || r < 1)
    throw Error(ErrorKind::InvalidArgument, "k_predict needs 0 <= i_lo <= i_hi and r >= 1");
  if (s.kind == RingKind::Quotient)
    throw Error(ErrorKind::NotLocalType, "quotient rings are outside the predicted family");
  KTable t;
  t.p = s.p;
  t.ring = s.describe();
  t.sheaf_caveat = s.kind == RingKind::Poly || s.kind == RingKind::Laurent;
  const std::string note = t.sheaf_caveat ? "sheaf-level caveat: the ring is not local" : "";
  for (int i = i_lo; i <= i_hi; ++i) {
    const InvariantFactors g = log_lattice(s, i, r).invariants;
    const bool free = std::all_of(g.torsion.begin(), g.torsion.end(), [&](int e) { return e == r; });
    if (!free) t.p_torsion_free = false;
    t.rows.push_back(KRow{i, "p^r", r, g.is_zero() ? "0" : g.to_string(), g, "log-forms", note});
    if (free) {
      InvariantFactors zp = zero_group(s.p);
      zp.free_rank = static_cast<int>(g.torsion.size());
      std::string text = zp.free_rank == 0 ? "0" : zp.free_rank == 1 ? "Z_p" : "Z_p^" + std::to_string(zp.free_rank);
      t.rows.push_back(KRow{i, "Z_p", 0, text, zp, "log-forms", note});
    }
  }
  return t;
}

bool hiller_check(const RingSpec& s, int i_lo, int i_hi, int r) {
  if (s.kind != RingKind::Perfection && s.kind != RingKind::FiniteField)
    throw Error(ErrorKind::InvalidArgument, "hiller_check needs a perfect ring");
  for (int i = std::max(1, i_lo); i <= i_hi; ++i)
    for (int level : {1, r})
      if (!log_lattice(s, i, level).invariants.is_zero()) return false;
  return true;
}

}  // namespace drw
