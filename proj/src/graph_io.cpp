#include "linkinv/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "linkinv/errors.hpp"

namespace linkinv::graphio {

using plumbing::Vertex;

namespace {

long long parse_number(const std::string& token, long long min, long long max,
                       const char* what) {
  long long value = 0;
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc() || ptr != end)
    throw Error("parse-error", std::string("bad ") + what + " '" + token + "'");
  if (value < min || value > max)
    throw Error("parse-error", std::string(what) + " out of range: " + token);
  return value;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::istringstream in(line);
  std::string tok;
  while (in >> tok) fields.push_back(tok);
  return fields;
}

}  // namespace

GraphDocument parse(std::istream& in) {
  GraphDocument doc;
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<bool> seen_ids;
  bool any_directive = false;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    const std::vector<std::string> fields = split_fields(line);
    const std::string& keyword = fields[0];
    const std::string where = " (line " + std::to_string(line_no) + ")";

    if (keyword == "graph") {
      if (any_directive)
        throw Error("parse-error", "'graph' must be the first directive" + where);
      if (fields.size() != 2)
        throw Error("parse-error", "expected 'graph <name>'" + where);
      doc.name = fields[1];
      any_directive = true;
      continue;
    }
    any_directive = true;

    if (keyword == "vertex") {
      if (fields.size() != 4)
        throw Error("parse-error", "expected 'vertex <id> <weight> <genus>'" + where);
      Vertex v;
      v.id = static_cast<int>(parse_number(fields[1], 0, 1'000'000, "vertex id"));
      v.weight = parse_number(fields[2], -1'000'000'000'000LL, 1'000'000'000'000LL,
                              "weight");
      v.genus = static_cast<int>(parse_number(fields[3], 0, 1'000'000, "genus"));
      if (v.id < static_cast<int>(seen_ids.size()) && seen_ids[v.id])
        throw Error("bad-ids", "duplicate vertex id " + fields[1] + where);
      if (v.id >= static_cast<int>(seen_ids.size())) seen_ids.resize(v.id + 1);
      seen_ids[v.id] = true;
      vertices.push_back(v);
    } else if (keyword == "edge") {
      if (fields.size() != 3)
        throw Error("parse-error", "expected 'edge <id> <id>'" + where);
      const int u = static_cast<int>(parse_number(fields[1], 0, 1'000'000, "vertex id"));
      const int v = static_cast<int>(parse_number(fields[2], 0, 1'000'000, "vertex id"));
      if (u == v)
        throw Error("loops-forbidden", "edge joins a vertex to itself" + where);
      edges.emplace_back(u, v);
    } else {
      throw Error("parse-error", "unknown directive '" + keyword + "'" + where);
    }
  }
  const int r = static_cast<int>(vertices.size());
  for (const auto& [u, v] : edges)
    if (u >= r || v >= r)
      throw Error("bad-ids", "edge references a vertex that was never declared");

  doc.graph = plumbing::build_graph(std::move(vertices), std::move(edges));
  return doc;
}

GraphDocument parse_string(const std::string& text) {
  std::istringstream in(text);
  return parse(in);
}

GraphDocument parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("parse-error", "cannot open '" + path + "'");
  return parse(in);
}

std::string emit(const GraphDocument& doc) {
  std::ostringstream out;
  if (!doc.name.empty()) out << "graph " << doc.name << "\n";
  for (const Vertex& v : doc.graph.vertices)
    out << "vertex " << v.id << ' ' << v.weight << ' ' << v.genus << "\n";
  for (const auto& [u, v] : doc.graph.edges) out << "edge " << u << ' ' << v << "\n";
  return out.str();
}

}  // namespace linkinv::graphio
