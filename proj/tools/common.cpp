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

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "drwitt/error.hpp"

namespace drw::cli {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RingSpec load_ring(const std::string& path) { return parse_ring_spec(read_file(path)); }

std::string group_text(const InvariantFactors& g) { return g.is_zero() ? "0" : g.to_string(); }

Json group_json(const InvariantFactors& g, const std::string& stability) {
  Json j = Json::object();
  j["group"] = group_text(g);
  j["p"] = g.p;
  j["torsion"] = g.torsion;
  j["free_rank"] = g.free_rank;
  j["stability"] = stability;
  return j;
}

int precision_guard() {
  const char* env = std::getenv("DRWITT_PRECISION_GUARD");
  if (env == nullptr || *env == '\0') return -1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 0 || v > 64)
    throw Error(ErrorKind::InvalidArgument, "DRWITT_PRECISION_GUARD must be an integer in [0, 64]");
  return static_cast<int>(v);
}

std::string digest(const std::string& data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace drw::cli
