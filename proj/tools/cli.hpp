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

// Shared pieces of the drwitt command-line tool.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "drwitt/linalg.hpp"
#include "drwitt/ringspec.hpp"
#include "json.hpp"

namespace drw::cli {

using Json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr const char* kToolVersion = "0.1.0";

/// What a verb produced: a JSON payload, its plain-text rendering, and
/// whether a verification step came out false (exit code 2).
struct Output {
  Json payload = Json::object();
  std::string text;
  bool check_failed = false;
};

struct RingArgs {
  std::string ring_file;
  long weight_cap = -1;  // -1: a per-verb default
};

RingSpec load_ring(const std::string& path);
std::string read_file(const std::string& path);

/// {"group": "Z/3^2", "p": 3, "torsion": [2], "free_rank": 0, "stability": ...}
Json group_json(const InvariantFactors& g, const std::string& stability);
std::string group_text(const InvariantFactors& g);

/// Guard band for the syntomic orbit windows: DRWITT_PRECISION_GUARD when set, else -1 (automatic).
int precision_guard();

/// 64-bit FNV-1a, printed as 16 hex digits.
std::string digest(const std::string& data);

struct WittArgs {
  std::string op;
  std::int64_t p = 2;
  int len = 2;
  int f = 1;
  bool integral = false;
  std::string a, b;
};
Output run_witt(const WittArgs& args);

struct TableArgs {
  RingArgs ring;
  int maxdeg = 2;
  int level = 1;
};
Output run_derham_table(const TableArgs& args);
Output run_cartier_check(const TableArgs& args);
Output run_drw_table(const TableArgs& args);

struct SyntomicArgs {
  RingArgs ring;
  int twist = 0;
  int modp = 1;
  int depth = 2;
};
Output run_syntomic(const SyntomicArgs& args);
Output run_logforms(const SyntomicArgs& args);
/// what: fundamental-seq, nygaard-graded or nygaard-complete.
Output run_check(const std::string& what, const SyntomicArgs& args);

struct KArgs {
  RingArgs ring;
  std::string range = "0..3";
  int modp = 1;
  bool markdown = false;
};
Output run_kpredict(const KArgs& args);

struct SpecSeqArgs {
  std::string input;
  int pages = 0;
};
Output run_specseq(const SpecSeqArgs& args);

}  // namespace drw::cli
