#pragma once

// Loading the JSON corpus under fixtures/ (schema in fixtures/SCHEMA.md).

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "khoma/format.hpp"
#include "khoma/graph.hpp"
#include "khoma/linkdiag.hpp"

namespace khoma {

struct DiagramFixture {
  std::string name;
  std::string pd;
  std::string knot;  // isotopy class tag; fixtures sharing it are diagrams of the same link
  int crossings = 0;
  int components = 0;
  std::optional<int> s;
  std::optional<std::pair<int, int>> torus;
  std::optional<std::string> jones_hat;
  std::map<std::string, HomologyTable> kh;  // ring name -> expected table

  LinkDiagram diagram() const { return parse_pd(pd); }
};

struct GraphFixture {
  std::string name;
  std::string text;
  std::optional<std::string> chromatic;

  Graph graph() const { return parse_graph(text); }
};

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::InvalidArgument, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Malformed, path + ": " + e.what());
  }
}

inline std::vector<DiagramFixture> diagram_fixtures_from_json(const Json& j) {
  std::vector<DiagramFixture> out;
  try {
    for (const auto& e : j) {
      DiagramFixture f;
      f.name = e.at("name").get<std::string>();
      f.pd = e.at("pd").get<std::string>();
      f.knot = e.value("knot", f.name);
      f.crossings = e.at("crossings").get<int>();
      f.components = e.at("components").get<int>();
      if (e.contains("s")) f.s = e["s"].get<int>();
      if (e.contains("torus")) f.torus = std::pair{e["torus"][0].get<int>(), e["torus"][1].get<int>()};
      if (e.contains("jones_hat")) f.jones_hat = e["jones_hat"].get<std::string>();
      if (e.contains("kh"))
        for (const auto& [ring, entries] : e["kh"].items())
          f.kh[ring] = table_from_json(Json{{"ring", ring}, {"entries", entries}});
      out.push_back(std::move(f));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Malformed, std::string("bad diagram fixture: ") + e.what());
  }
  return out;
}

inline std::vector<GraphFixture> graph_fixtures_from_json(const Json& j) {
  std::vector<GraphFixture> out;
  try {
    for (const auto& e : j) {
      GraphFixture f;
      f.name = e.at("name").get<std::string>();
      f.text = e.at("graph").get<std::string>();
      if (e.contains("chromatic")) f.chromatic = e["chromatic"].get<std::string>();
      out.push_back(std::move(f));
    }
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::Malformed, std::string("bad graph fixture: ") + e.what());
  }
  return out;
}

inline std::vector<DiagramFixture> load_diagram_fixtures(const std::string& dir) {
  return diagram_fixtures_from_json(read_json_file(dir + "/diagrams.json"));
}

inline std::vector<GraphFixture> load_graph_fixtures(const std::string& dir) {
  return graph_fixtures_from_json(read_json_file(dir + "/graphs.json"));
}

}  // namespace khoma
