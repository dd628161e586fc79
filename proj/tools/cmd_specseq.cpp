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

#include <sstream>

#include "cli.hpp"
#include "drwitt/error.hpp"
#include "drwitt/filtspec.hpp"

namespace drw::cli {

namespace {

template <class Ring>
Mat<Ring> read_matrix(const Ring& ring, const Json& j, std::size_t rows, std::size_t cols) {
  Mat<Ring> m = Mat<Ring>::zeros(ring, rows, cols);
  if (j.is_null() || (j.is_array() && j.empty())) return m;
  if (!j.is_array() || j.size() != rows) throw Error(ErrorKind::ParseError, "matrix needs " + std::to_string(rows) + " rows");
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols)
      throw Error(ErrorKind::ParseError, "matrix row needs " + std::to_string(cols) + " entries");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = ring.from_int(j[r][c].get<std::int64_t>());
  }
  return m;
}

template <class Ring>
Complex<Ring> read_complex(const Ring& ring, const Json& j) {
  Complex<Ring> c;
  c.lo = j.value("lo", 0);
  for (const auto& m : j.at("modules")) {
    const std::size_t gens = m.at("gens").get<std::size_t>();
    Presentation<Ring> pm = Presentation<Ring>::free(ring, gens);
    if (m.contains("relations"))
      for (const auto& row : m["relations"]) pm.relations.append_rows(read_matrix(ring, Json::array({row}), 1, gens));
    c.modules.push_back(pm);
  }
  const Json diffs = j.value("diffs", Json::array());
  for (std::size_t k = 0; k + 1 < c.modules.size(); ++k)
    c.diffs.push_back(read_matrix(ring, k < diffs.size() ? diffs[k] : Json(), c.modules[k].gens, c.modules[k + 1].gens));
  return c;
}

template <class Ring>
Output run_with(const Ring& ring, const Json& doc, std::int64_t p, int pages_wanted) {
  FilteredComplex<Ring> f;
  f.lo = doc.at("window").at(0).get<int>();
  f.hi = doc.at("window").at(1).get<int>();
  std::map<int, Json> by_n;
  for (const auto& lvl : doc.at("levels")) by_n[lvl.at("n").get<int>()] = lvl;
  for (int n = f.lo; n <= f.hi; ++n) {
    if (!by_n.count(n)) throw Error(ErrorKind::ParseError, "missing level n = " + std::to_string(n));
    f.levels.push_back(read_complex(ring, by_n[n].at("complex")));
  }
  for (int n = f.lo + 1; n <= f.hi; ++n) {
    const auto& src = f.levels[static_cast<std::size_t>(n - f.lo)];
    const auto& dst = f.levels[static_cast<std::size_t>(n - f.lo - 1)];
    const Json maps = by_n[n].value("map_to_prev", Json::array());
    std::vector<Mat<Ring>> t;
    for (std::size_t k = 0; k < src.modules.size(); ++k)
      t.push_back(read_matrix(ring, k < maps.size() ? maps[k] : Json(), src.modules[k].gens,
                              k < dst.modules.size() ? dst.modules[k].gens : 0));
    f.transitions.push_back(t);
  }
  const auto pages = spectral_sequence(ring, f, pages_wanted, p);
  Output out;
  out.payload["command"] = "specseq run";
  out.payload["window"] = {f.lo, f.hi};
  std::ostringstream text;
  Json pj = Json::array();
  for (const auto& page : pages) {
    Json entries = Json::array();
    text << "E_" << page.r << ":";
    bool any = false;
    for (const auto& [key, e] : page.entries) {
      if (e.invariants.is_zero()) continue;
      Json ej = Json::object();
      ej["k"] = key.first;
      ej["l"] = key.second;
      ej["group"] = group_json(e.invariants, "exact");
      entries.push_back(ej);
      text << " (" << key.first << "," << key.second << ")=" << group_text(e.invariants);
      any = true;
    }
    if (!any) text << " 0";
    text << "\n";
    Json page_json = Json::object();
    page_json["r"] = page.r;
    page_json["entries"] = entries;
    pj.push_back(page_json);
  }
  out.payload["pages"] = pj;
  const bool consistent = pages_consistent(ring, pages, p);
  out.payload["consistent"] = consistent;
  out.check_failed = !consistent;
  Json tc = Json::object();
  try {
    Json seqs = Json::array();
    for (const auto& s : two_column_extract(ring, pages, p)) {
      Json sj = Json::object();
      sj["degree"] = s.degree;
      sj["left"] = group_text(s.left);
      sj["right"] = group_text(s.right);
      sj["middle_log_order"] = s.middle_log_order;
      seqs.push_back(sj);
      text << "degree " << s.degree << ": 0 -> " << group_text(s.left) << " -> H -> " << group_text(s.right)
           << " -> 0\n";
    }
    tc["sequences"] = seqs;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerationFailed) throw;
    tc["error"] = e.what();
    text << "no two-column degeneration: " << e.what() << "\n";
  }
  out.payload["two_column"] = tc;
  out.text = text.str();
  return out;
}

}  // namespace

Output run_specseq(const SpecSeqArgs& args) {
  Json doc;
  try {
    doc = Json::parse(read_file(args.input));
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  try {
    const std::int64_t p = doc.at("ring").at("p").get<std::int64_t>();
    const int R = doc.at("ring").value("precision", 0);
    if (R == 0) return run_with(IntRing{}, doc, p, args.pages);
    return run_with(ModRing(p, R), doc, p, args.pages);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace drw::cli
