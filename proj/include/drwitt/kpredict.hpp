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

// K-theory tables of the curated rings: Quillen's groups for finite fields
// and the predictions K_i(S)/p^r = W_r Omega^i_log, K_i(S; Z_p) = W Omega^i_log
// read off the log lattices. These are predictions with provenance, not an
// independent K-theory computation.

#pragma once

#include <string>
#include <vector>

#include "drwitt/synlog.hpp"

namespace drw {

struct KRow {
  int degree = 0;
  std::string modulus;      // "Z", "p^r" or "Z_p"
  int r = 0;                // for "p^r"
  std::string group;        // printed group, e.g. "Z/(3^2 - 1)" or "Z/3^2"
  InvariantFactors p_part;  // p-primary part (Z_p counted as free rank)
  std::string provenance;   // quillen, log-forms or hiller
  std::string note;
};

struct KTable {
  std::string ring;
  std::int64_t p = 2;
  std::vector<KRow> rows;
  bool sheaf_caveat = false;     // poly and laurent kinds are not local
  bool p_torsion_free = true;    // every mod p^r log group is free over Z/p^r

  const KRow* find(int degree, const std::string& modulus) const;
};

/// K_i(F_q) for i in [i_lo, i_hi]: integral, mod p^r and p-adic rows.
/// f > 1 uses Quillen's orders q^j - 1 and carries a background note.
KTable quillen_table(std::int64_t p, int i_lo, int i_hi, int r, int f = 1);

/// mod p^r rows from the log lattices and p-adic rows when they are free.
/// NotLocalType for quotients; poly and laurent kinds get the sheaf caveat.
KTable k_predict(const RingSpec& s, int i_lo, int i_hi, int r);

/// K_i(S)/p = 0 for i >= 1 in range, for perfect S (perfections and finite fields).
bool hiller_check(const RingSpec& s, int i_lo, int i_hi, int r);

}  // namespace drw
