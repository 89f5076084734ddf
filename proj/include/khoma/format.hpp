#pragma once

// Text and JSON renderings of tables and reports.

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "khoma/homology.hpp"
#include "khoma/invariants.hpp"
#include "khoma/lee.hpp"

namespace khoma {

using Json = nlohmann::ordered_json;

/// `Q`, `Z^2`, `Z + Z/2`, `(Z/3)^2`; empty string for the zero group.
inline std::string format_group(const HomologyGroup& g, const RingSpec& ring) {
  std::string base = ring.name();
  std::vector<std::string> parts;
  if (g.betti == 1) parts.push_back(base);
  else if (g.betti > 1)
    parts.push_back((ring.kind == RingKind::IntegersMod ? "(" + base + ")" : base) + "^" + std::to_string(g.betti));
  std::map<std::int64_t, int> tors;
  for (auto t : g.torsion) tors[t]++;
  for (auto [t, n] : tors) {
    const std::string z = "Z/" + std::to_string(t);
    parts.push_back(n == 1 ? z : "(" + z + ")^" + std::to_string(n));
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? " + " : "") + parts[k];
  return out;
}

/// Rows j descending, columns i ascending.
inline std::string format_table(const HomologyTable& t) {
  if (t.entries.empty()) return "0\n";
  std::set<int> is, js;
  for (const auto& [k, g] : t.entries) is.insert(k.first), js.insert(k.second);
  const int lo = *is.begin(), hi = *is.rbegin();
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> header{"j\\i"};
  for (int i = lo; i <= hi; ++i) header.push_back(std::to_string(i));
  rows.push_back(header);
  for (auto it = js.rbegin(); it != js.rend(); ++it) {
    std::vector<std::string> row{std::to_string(*it)};
    for (int i = lo; i <= hi; ++i) {
      std::string cell = format_group(t.at(i, *it), t.ring);
      row.push_back(cell.empty() ? "." : cell);
    }
    rows.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& r : rows)
    for (std::size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
  std::ostringstream os;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c) line += "  ";
      line += std::string(width[c] - r[c].size(), ' ') + r[c];
    }
    os << line << "\n";
  }
  return os.str();
}

inline Json table_to_json(const HomologyTable& t, const std::string& invariant = "kh") {
  Json entries = Json::array();
  for (const auto& [k, g] : t.entries)
    entries.push_back({{"i", k.first}, {"j", k.second}, {"betti", g.betti}, {"torsion", g.torsion}});
  return {{"invariant", invariant}, {"ring", t.ring.name()}, {"entries", entries}};
}

inline HomologyTable table_from_json(const Json& j) {
  try {
    HomologyTable t{RingSpec::parse(j.at("ring").get<std::string>()), {}};
    for (const auto& e : j.at("entries")) {
      HomologyGroup g{e.at("betti").get<std::int64_t>(), e.value("torsion", std::vector<std::int64_t>{})};
      if (g.betti < 0) fail(ErrorCode::Malformed, "negative Betti number");
      std::sort(g.torsion.begin(), g.torsion.end());
      t.set(e.at("i").get<int>(), e.at("j").get<int>(), std::move(g));
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Malformed, std::string("bad table JSON: ") + e.what());
  }
}

inline Json les_to_json(const LESReport& r) {
  Json strands = Json::array();
  for (const auto& s : r.strands)
    strands.push_back({{"j", s.j}, {"alternating_sum", s.alternating_sum}, {"pass", s.pass()}});
  return {{"case", std::string(to_string(r.kind))}, {"c", r.c}, {"pass", r.pass()}, {"split", r.split()}, {"strands", strands}};
}

inline Json s_to_json(const SInvariantResult& s) {
  return {{"invariant", "s"}, {"s_min", s.s_min}, {"s_max", s.s_max}, {"s", s.s}};
}

inline Json dims_to_json(const std::map<int, std::int64_t>& dims, const std::string& invariant) {
  Json entries = Json::array();
  for (auto [i, v] : dims) entries.push_back({{"i", i}, {"dimension", v}});
  return {{"invariant", invariant}, {"ring", "Q"}, {"entries", entries}};
}

}  // namespace khoma
