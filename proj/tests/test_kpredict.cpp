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

#include "doctest.h"
#include "drwitt/kpredict.hpp"

using namespace drw;

namespace {

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

TEST_CASE("Quillen's table for F_p") {
  for (std::int64_t p : {2, 3, 5}) {
    KTable t = quillen_table(p, 0, 6, 2);
    CHECK(t.find(0, "Z")->group == "Z");
    CHECK(t.find(0, "p^r")->p_part == cyclic(p, {2}));
    CHECK(t.find(0, "Z_p")->p_part == cyclic(p, {}, 1));
    CHECK(t.find(3, "Z")->group == "Z/(" + std::to_string(p) + "^2 - 1)");
    CHECK(t.find(3, "p^r")->p_part.is_zero());
    for (int i = 1; i <= 6; ++i) {
      CHECK(t.find(i, "Z_p")->p_part.is_zero());
      if (i % 2 == 0) CHECK(t.find(i, "Z")->group == "0");
    }
    for (const auto& row : t.rows) CHECK(row.provenance == "quillen");
  }
  KTable q = quillen_table(3, 1, 1, 1, 2);
  CHECK(q.find(1, "Z")->group == "Z/((3^2)^1 - 1)");
  CHECK_FALSE(q.find(1, "Z")->note.empty());
}

TEST_CASE("predictions for F_p agree with Quillen and with syntomic cohomology") {
  for (std::int64_t p : {2, 3, 5})
    for (int r = 1; r <= 2; ++r) {
      KTable k = k_predict(make_finite_field(p), 0, 6, r);
      KTable q = quillen_table(p, 0, 6, r);
      CHECK_FALSE(k.sheaf_caveat);
      CHECK(k.p_torsion_free);
      for (int i = 0; i <= 6; ++i) {
        CHECK(k.find(i, "p^r")->p_part == q.find(i, "p^r")->p_part);
        CHECK(k.find(i, "Z_p")->p_part == q.find(i, "Z_p")->p_part);
        CHECK(k.find(i, "p^r")->provenance == "log-forms");
        if (i <= 3) CHECK(syntomic(make_finite_field(p), i, r, 2).cohomology(i) == k.find(i, "p^r")->p_part);
      }
    }
}

TEST_CASE("predictions for F_q and perfections") {
  KTable q = k_predict(make_finite_field(2, 3), 0, 4, 2);
  CHECK(q.find(0, "p^r")->p_part == cyclic(2, {2}));
  for (int i = 1; i <= 4; ++i) CHECK(q.find(i, "p^r")->p_part.is_zero());
  KTable perf = k_predict(make_perfection(make_poly(3, {"x"})), 0, 3, 2);
  for (int i = 1; i <= 3; ++i) CHECK(perf.find(i, "p^r")->p_part.is_zero());
}

TEST_CASE("Hiller: positive K-groups of perfect rings are p-divisible") {
  CHECK(hiller_check(make_finite_field(3, 2), 0, 4, 2));
  CHECK(hiller_check(make_finite_field(2, 3), 0, 4, 1));
  CHECK(hiller_check(make_perfection(make_poly(2, {"x"})), 0, 4, 2));
  CHECK(hiller_check(make_perfection(make_laurent(3, {"x"})), 0, 4, 2));
  CHECK(hiller_check(make_perfection(make_laurent(2, {"x", "y"})), 0, 3, 1));
  CHECK_THROWS_AS(hiller_check(make_poly(2, {"x"}), 0, 2, 1), Error);
}

TEST_CASE("non-local rings") {
  KTable t = k_predict(make_laurent(2, {"x"}), 0, 2, 2);
  CHECK(t.sheaf_caveat);
  CHECK(t.find(1, "p^r")->p_part == cyclic(2, {2}));
  CHECK_FALSE(t.find(1, "p^r")->note.empty());
  try {
    k_predict(make_quotient(2, {"x"}, {1}, {"x^2"}), 0, 1, 1);
    FAIL("expected NotLocalType");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotLocalType);
  }
}
