// Embedded acceptance suite: every check the project must satisfy, runnable
// from the CLI (`linkinv selftest`) and from the dedicated acceptance test
// binary.  All randomized checks use fixed seeds and are bit-reproducible.

#pragma once

#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "linkinv/plumbing.hpp"

namespace linkinv::selftest {

struct Result {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // first failure, empty when passing
};

// Criteria 1..10: Todd fidelity, genus normalization, the Brieskorn sweep
// checks, named values, torsor axioms, reduction diagram, e_R route
// agreement, plumbing robustness, enumeration.
std::vector<Result> run_core();

// Criterion 11, library side: canonical fixtures and 100 random graphs
// round-trip byte-identically through the graph file format.
Result run_roundtrip();

// Prints one line per criterion to `out`; returns true iff all pass.
bool run_embedded(std::ostream& out);

// Canonical graph-file fixtures (byte-exact emitter output).
extern const char* const kFixtureE8;
extern const char* const kFixtureA2;
extern const char* const kFixtureSingleMinus3;
extern const char* const kFixturePath2;

// Random connected loop-free multigraph on min_r..max_r vertices; used by
// the robustness and round-trip criteria and reusable from tests.
plumbing::PlumbingGraph random_connected_graph(std::mt19937_64& rng, int min_r,
                                               int max_r, int extra_edges,
                                               long long weight_lo,
                                               long long weight_hi,
                                               int genus_max);

}  // namespace linkinv::selftest
