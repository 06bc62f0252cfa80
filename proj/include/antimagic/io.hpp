#pragma once

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "antimagic/errors.hpp"
#include "antimagic/graph.hpp"
#include "antimagic/pipeline.hpp"

#include "json.hpp"

namespace antimagic::io {

// Instance file: first line the vertex count, then one "u v" pair per line.
struct Instance {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Instance read_instance(std::istream& in) {
  Instance inst;
  std::string line;
  bool have_count = false;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line);
    std::string first;
    if (!(ss >> first)) continue;            // blank line
    if (first[0] == '#') continue;           // comment
    if (!have_count) {
      try {
        inst.vertex_count = std::stoi(first);
      } catch (const std::exception&) {
        fail(errc::malformed, "line " + std::to_string(lineno) + ": expected vertex count");
      }
      have_count = true;
      continue;
    }
    int u = 0, v = 0;
    try {
      u = std::stoi(first);
    } catch (const std::exception&) {
      fail(errc::malformed, "line " + std::to_string(lineno) + ": bad edge");
    }
    if (!(ss >> v)) fail(errc::malformed, "line " + std::to_string(lineno) + ": bad edge");
    inst.edges.emplace_back(u, v);
  }
  if (!have_count) fail(errc::malformed, "empty instance file");
  return inst;
}

inline Instance read_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::malformed, "cannot open " + path.string());
  return read_instance(in);
}

inline void write_instance(std::ostream& out, const Instance& inst) {
  out << inst.vertex_count << '\n';
  for (const auto& [u, v] : inst.edges) out << u << ' ' << v << '\n';
}

struct ResultArc {
  int from = 0;
  int to = 0;
  int label = 0;
};

// Result file: key-value header, then the arc and sum sections.
struct ResultFile {
  int vertices = 0;
  int edges = 0;
  int d = 0;
  int q = 0;
  int k = 0;
  std::optional<int> x0;
  std::uint64_t seed = 0;
  int retry_budget = 0;
  bool antimagic = false;
  std::vector<std::pair<int, std::string>> gapspecs;  // circuit index, rendered constraints
  std::vector<ResultArc> arcs;
  std::vector<std::pair<int, long long>> sums;
};

inline std::string render_gap_spec(const GapSpec& spec) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [name, len] : spec.exact) {
    out << (first ? "" : " ") << to_string(name) << "=" << len;
    first = false;
  }
  for (const auto& [name, len] : spec.minimum) {
    out << (first ? "" : " ") << to_string(name) << ">=" << len;
    first = false;
  }
  return out.str();
}

inline ResultFile build_result(const Graph& g, const RunResult& run, int retry_budget) {
  ResultFile rf;
  rf.vertices = g.vertex_count;
  rf.edges = g.edge_count();
  rf.d = run.d;
  rf.q = run.q;
  rf.k = run.k;
  if (run.x0) rf.x0 = run.x0->x0;
  rf.seed = run.seed;
  rf.retry_budget = retry_budget;
  rf.antimagic = run.report.all_ok();
  for (const ComponentRun& cr : run.comps)
    if (!cr.spec.empty()) rf.gapspecs.emplace_back(cr.info.index, render_gap_spec(cr.spec));
  rf.arcs.reserve(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e)
    rf.arcs.push_back({run.dstar.arcs[e].first, run.dstar.arcs[e].second, run.edge_labels[e]});
  rf.sums.reserve(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) rf.sums.emplace_back(v, run.graph_sums[v]);
  return rf;
}

inline void write_result(std::ostream& out, const ResultFile& rf) {
  out << "antimagic-result v1\n";
  out << "vertices " << rf.vertices << '\n';
  out << "edges " << rf.edges << '\n';
  out << "d " << rf.d << '\n';
  out << "q " << rf.q << '\n';
  out << "k " << rf.k << '\n';
  out << "x0 " << (rf.x0 ? std::to_string(*rf.x0) : "none") << '\n';
  out << "seed " << rf.seed << '\n';
  out << "retry-budget " << rf.retry_budget << '\n';
  out << "antimagic " << (rf.antimagic ? "true" : "false") << '\n';
  for (const auto& [index, rendered] : rf.gapspecs)
    out << "gapspec " << index << ' ' << rendered << '\n';
  out << "arcs " << rf.arcs.size() << '\n';
  for (const auto& a : rf.arcs) out << a.from << ' ' << a.to << ' ' << a.label << '\n';
  out << "sums " << rf.sums.size() << '\n';
  for (const auto& [v, s] : rf.sums) out << v << ' ' << s << '\n';
  out << "end\n";
}

inline ResultFile read_result_text(std::istream& in) {
  ResultFile rf;
  std::string line;
  if (!std::getline(in, line) || line != "antimagic-result v1")
    fail(errc::malformed, "missing result header");
  long long arcs_expected = -1;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::string key;
    if (!(ss >> key)) continue;
    if (key == "arcs") {
      if (!(ss >> arcs_expected) || arcs_expected < 0) fail(errc::malformed, "bad arcs count");
      break;
    } else if (key == "vertices") {
      if (!(ss >> rf.vertices)) fail(errc::malformed, "bad vertices");
    } else if (key == "edges") {
      if (!(ss >> rf.edges)) fail(errc::malformed, "bad edges");
    } else if (key == "d") {
      if (!(ss >> rf.d)) fail(errc::malformed, "bad d");
    } else if (key == "q") {
      if (!(ss >> rf.q)) fail(errc::malformed, "bad q");
    } else if (key == "k") {
      if (!(ss >> rf.k)) fail(errc::malformed, "bad k");
    } else if (key == "x0") {
      std::string value;
      if (!(ss >> value)) fail(errc::malformed, "bad x0");
      if (value != "none") {
        try {
          rf.x0 = std::stoi(value);
        } catch (const std::exception&) {
          fail(errc::malformed, "bad x0");
        }
      }
    } else if (key == "seed") {
      if (!(ss >> rf.seed)) fail(errc::malformed, "bad seed");
    } else if (key == "retry-budget") {
      if (!(ss >> rf.retry_budget)) fail(errc::malformed, "bad retry-budget");
    } else if (key == "antimagic") {
      std::string value;
      if (!(ss >> value) || (value != "true" && value != "false"))
        fail(errc::malformed, "bad antimagic flag");
      rf.antimagic = value == "true";
    } else if (key == "gapspec") {
      int index = 0;
      if (!(ss >> index)) fail(errc::malformed, "bad gapspec");
      std::string rest;
      std::getline(ss, rest);
      if (!rest.empty() && rest.front() == ' ') rest.erase(rest.begin());
      rf.gapspecs.emplace_back(index, rest);
    } else {
      fail(errc::malformed, "unknown header key '" + key + "'");
    }
  }
  if (arcs_expected < 0) fail(errc::malformed, "missing arcs section");
  for (long long i = 0; i < arcs_expected; ++i) {
    if (!std::getline(in, line)) fail(errc::malformed, "truncated arcs section");
    std::istringstream ss(line);
    ResultArc a;
    if (!(ss >> a.from >> a.to >> a.label)) fail(errc::malformed, "bad arc line");
    rf.arcs.push_back(a);
  }
  if (!std::getline(in, line)) fail(errc::malformed, "missing sums section");
  {
    std::istringstream ss(line);
    std::string key;
    long long count = 0;
    if (!(ss >> key >> count) || key != "sums" || count < 0)
      fail(errc::malformed, "missing sums section");
    for (long long i = 0; i < count; ++i) {
      if (!std::getline(in, line)) fail(errc::malformed, "truncated sums section");
      std::istringstream vs(line);
      int v = 0;
      long long s = 0;
      if (!(vs >> v >> s)) fail(errc::malformed, "bad sum line");
      rf.sums.emplace_back(v, s);
    }
  }
  if (!std::getline(in, line) || line != "end") fail(errc::malformed, "missing end marker");
  return rf;
}

inline nlohmann::json result_to_json(const ResultFile& rf) {
  nlohmann::json j;
  j["format"] = "antimagic-result";
  j["version"] = 1;
  j["vertices"] = rf.vertices;
  j["edges"] = rf.edges;
  j["d"] = rf.d;
  j["q"] = rf.q;
  j["k"] = rf.k;
  if (rf.x0)
    j["x0"] = *rf.x0;
  else
    j["x0"] = nullptr;
  j["seed"] = rf.seed;
  j["retry_budget"] = rf.retry_budget;
  j["antimagic"] = rf.antimagic;
  auto specs = nlohmann::json::array();
  for (const auto& [index, rendered] : rf.gapspecs)
    specs.push_back({{"circuit", index}, {"constraints", rendered}});
  j["gapspecs"] = specs;
  auto arcs = nlohmann::json::array();
  for (const auto& a : rf.arcs) arcs.push_back({a.from, a.to, a.label});
  j["arcs"] = arcs;
  auto sums = nlohmann::json::array();
  for (const auto& [v, s] : rf.sums) sums.push_back({v, s});
  j["sums"] = sums;
  return j;
}

inline ResultFile result_from_json(const nlohmann::json& j) {
  ResultFile rf;
  try {
    rf.vertices = j.at("vertices").get<int>();
    rf.edges = j.at("edges").get<int>();
    rf.d = j.at("d").get<int>();
    rf.q = j.at("q").get<int>();
    rf.k = j.at("k").get<int>();
    if (!j.at("x0").is_null()) rf.x0 = j.at("x0").get<int>();
    rf.seed = j.at("seed").get<std::uint64_t>();
    rf.retry_budget = j.at("retry_budget").get<int>();
    rf.antimagic = j.at("antimagic").get<bool>();
    for (const auto& spec : j.at("gapspecs"))
      rf.gapspecs.emplace_back(spec.at("circuit").get<int>(),
                               spec.at("constraints").get<std::string>());
    for (const auto& a : j.at("arcs"))
      rf.arcs.push_back({a.at(0).get<int>(), a.at(1).get<int>(), a.at(2).get<int>()});
    for (const auto& s : j.at("sums"))
      rf.sums.emplace_back(s.at(0).get<int>(), s.at(1).get<long long>());
  } catch (const nlohmann::json::exception& e) {
    fail(errc::malformed, std::string("bad json result: ") + e.what());
  }
  return rf;
}

// Reads either the text or the json form, sniffing the first character.
inline ResultFile read_result(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(errc::malformed, "cannot open " + path.string());
  const int first = in.peek();
  if (first == '{') {
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      fail(errc::malformed, std::string("bad json: ") + e.what());
    }
    return result_from_json(j);
  }
  return read_result_text(in);
}

inline void write_dot(std::ostream& out, const ResultFile& rf) {
  out << "digraph antimagic {\n";
  out << "  node [shape=circle];\n";
  for (const auto& [v, s] : rf.sums)
    out << "  " << v << " [label=\"" << v << "\\ns=" << s << "\"];\n";
  for (const auto& a : rf.arcs)
    out << "  " << a.from << " -> " << a.to << " [label=\"" << a.label << "\"];\n";
  out << "}\n";
}

// Writes through a temp file so readers never observe a partial file.
template <class WriteFn>
inline void write_atomic(const std::filesystem::path& path, WriteFn&& fn) {
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) fail(errc::malformed, "cannot write " + tmp.string());
    fn(out);
    out.flush();
    if (!out) fail(errc::malformed, "write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace antimagic::io
