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

#include <chrono>
#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "cli.hpp"
#include "drwitt/error.hpp"

namespace {

using namespace drw::cli;

void add_ring(CLI::App* app, RingArgs& r) {
  app->add_option("--ring", r.ring_file, "ring-spec file")->required();
  app->add_option("--weight-cap", r.weight_cap, "largest weight kept");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Witt vectors, de Rham-Witt complexes, syntomic cohomology and K-theory tables"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string manifest;
  app.add_flag("--json", json, "print JSON");
  app.add_option("--manifest", manifest, "write a run manifest to this file");

  Output out;
  std::string command;
  std::function<Output()> action;
  std::string ring_file;
  std::string precision;
  long cap = -1;

  WittArgs wa;
  auto* witt = app.add_subcommand("witt", "Witt vector arithmetic");
  witt->add_option("op", wa.op, "add, mul, teich, frob, versch or ghost")
      ->required()
      ->check(CLI::IsMember({"add", "mul", "teich", "frob", "versch", "ghost"}));
  witt->add_option("--p", wa.p)->required();
  witt->add_option("--len", wa.len)->required();
  witt->add_option("--f", wa.f, "coefficients in F_{p^f}");
  witt->add_flag("--integral", wa.integral, "coefficients in Z instead of F_q");
  witt->add_option("--a", wa.a, "components, comma separated")->required();
  witt->add_option("--b", wa.b, "second operand for add and mul");
  witt->callback([&] { action = [&] { return run_witt(wa); }; precision = std::to_string(wa.len); });

  TableArgs ta;
  auto* derham = app.add_subcommand("derham", "de Rham cohomology tables");
  auto* derham_table = derham->add_subcommand("table", "H^i per grade");
  add_ring(derham_table, ta.ring);
  derham_table->add_option("--maxdeg", ta.maxdeg);
  derham_table->callback([&] { action = [&] { return run_derham_table(ta); }; });
  derham->require_subcommand(1);

  auto* cartier = app.add_subcommand("cartier-check", "inverse Cartier isomorphism on a weight window");
  add_ring(cartier, ta.ring);
  cartier->add_option("--maxdeg", ta.maxdeg);
  cartier->callback([&] { action = [&] { return run_cartier_check(ta); }; });

  auto* drw_cmd = app.add_subcommand("drw", "de Rham-Witt groups");
  auto* drw_table = drw_cmd->add_subcommand("table", "W_r Omega^n per grade");
  add_ring(drw_table, ta.ring);
  drw_table->add_option("--maxdeg", ta.maxdeg);
  drw_table->add_option("--level", ta.level)->required();
  drw_table->callback([&] {
    action = [&] { return run_drw_table(ta); };
    precision = std::to_string(ta.level);
  });
  drw_cmd->require_subcommand(1);

  SyntomicArgs sa;
  auto* syn = app.add_subcommand("syntomic", "cohomology of Z/p^r(i)");
  add_ring(syn, sa.ring);
  syn->add_option("--twist", sa.twist)->required();
  syn->add_option("--modp", sa.modp)->required();
  syn->add_option("--depth", sa.depth, "orbit indices kept below 0");
  syn->callback([&] {
    action = [&] { return run_syntomic(sa); };
    precision = std::to_string(sa.modp);
  });

  auto* logf = app.add_subcommand("logforms", "the log lattice W_r Omega^i_log");
  add_ring(logf, sa.ring);
  logf->add_option("--deg", sa.twist)->required();
  logf->add_option("--modp", sa.modp)->required();
  logf->callback([&] {
    action = [&] { return run_logforms(sa); };
    precision = std::to_string(sa.modp);
  });

  std::string check_what;
  auto* check = app.add_subcommand("check", "verification reports");
  check->add_option("what", check_what)
      ->required()
      ->check(CLI::IsMember({"fundamental-seq", "nygaard-graded", "nygaard-complete"}));
  add_ring(check, sa.ring);
  check->add_option("--twist", sa.twist);
  check->add_option("--modp", sa.modp);
  check->add_option("--depth", sa.depth);
  check->callback([&] {
    action = [&] { return run_check(check_what, sa); };
    precision = std::to_string(sa.modp);
  });

  SpecSeqArgs ssa;
  auto* ss = app.add_subcommand("specseq", "spectral sequence of a filtered complex");
  auto* ss_run = ss->add_subcommand("run", "compute pages from a JSON description");
  ss_run->add_option("--input", ssa.input)->required();
  ss_run->add_option("--pages", ssa.pages, "last page (default: until stable)");
  ss_run->callback([&] { action = [&] { return run_specseq(ssa); }; });
  ss->require_subcommand(1);

  KArgs ka;
  auto* kp = app.add_subcommand("kpredict", "K-theory predictions");
  add_ring(kp, ka.ring);
  kp->add_option("--range", ka.range, "degrees a..b");
  kp->add_option("--modp", ka.modp)->required();
  kp->add_flag("--markdown", ka.markdown, "print a markdown table");
  kp->callback([&] {
    action = [&] { return run_kpredict(ka); };
    precision = std::to_string(ka.modp);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);
  for (const RingArgs* r : {&ta.ring, &sa.ring, &ka.ring})
    if (!r->ring_file.empty()) {
      ring_file = r->ring_file;
      cap = r->weight_cap;
    }

  const auto start = std::chrono::steady_clock::now();
  try {
    out = action();
  } catch (const drw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  Json doc = Json::object();
  doc["schema_version"] = kSchemaVersion;
  for (auto& [k, v] : out.payload.items()) doc[k] = v;
  const std::string rendered = doc.dump(2) + "\n";
  if (json)
    std::cout << rendered;
  else
    std::cout << out.text;

  if (!manifest.empty()) {
    Json m = Json::object();
    m["command"] = command;
    m["ring_spec_hash"] = ring_file.empty() ? "" : digest(read_file(ring_file));
    m["precision"] = precision;
    m["weight_cap"] = cap;
    m["tool_version"] = kToolVersion;
    m["wall_time_s"] = seconds;
    m["outputs_digest"] = digest(rendered);
    std::ofstream(manifest) << m.dump(2) << "\n";
  }
  return out.check_failed ? 2 : 0;
}
