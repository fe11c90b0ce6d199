// Line-oriented text format for plumbing graphs.
//
//   # comment
//   graph <name>              (optional, at most once, first directive)
//   vertex <id> <weight> <genus>
//   edge <id> <id>
//
// Blank lines are ignored.  The emitter is canonical: vertices ascending by
// id, edges sorted with the smaller id first, single space separators, one
// trailing newline; parse(emit(g)) and emit(parse(f)) round-trip
// byte-identically on canonical files.

#pragma once

#include <iosfwd>
#include <string>

#include "linkinv/plumbing.hpp"

namespace linkinv::graphio {

struct GraphDocument {
  std::string name;  // empty when the file has no "graph" line
  plumbing::PlumbingGraph graph;
};

// Throws "parse-error" for malformed lines, "bad-ids" for duplicate or
// non-contiguous ids and unknown edge endpoints, "loops-forbidden" for
// self-edges, and whatever plumbing::build_graph raises (e.g.
// "not-connected").
GraphDocument parse(std::istream& in);
GraphDocument parse_string(const std::string& text);
GraphDocument parse_file(const std::string& path);  // "parse-error" if unreadable

std::string emit(const GraphDocument& doc);

}  // namespace linkinv::graphio
