// Empirical sweeps over plumbing data: how often negative weight vectors
// give negative-definite intersection matrices, and which genus vectors make
// a fixed weighted graph numerically Gorenstein (integral canonical cycle).

#pragma once

#include <cstdint>
#include <vector>

#include "linkinv/plumbing.hpp"
#include "linkinv/rational.hpp"

namespace linkinv::enumerate {

inline constexpr std::uint64_t kExhaustiveGuard = 10'000'000;

struct SweepMode {
  bool sampled = false;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;

  static SweepMode exhaustive() { return SweepMode{}; }
  static SweepMode sample(std::uint64_t samples, std::uint64_t seed) {
    return SweepMode{true, samples, seed};
  }
};

struct WeightSweepReport {
  int r = 0;
  long long weight_bound = 0;  // weights swept over {-N, ..., -1}
  SweepMode mode;
  std::uint64_t total = 0;
  std::uint64_t negative_definite = 0;
};

struct GenusSolutionSet {
  int g_max = 0;
  std::vector<std::vector<int>> solutions;  // lexicographically sorted
  Int lattice_period;                       // |det I|
};

// Tests every w in {-N,...,-1}^r (exhaustive mode; guard N^r <= 10^7, throws
// "too-large-use-sampling" beyond it) or `samples` seeded draws, against
// plumbing::is_negative_definite on the given topology.  Weights and genera
// of the input graph are ignored; only its shape enters.
WeightSweepReport sweep_weights(const plumbing::PlumbingGraph& topology,
                                long long weight_bound, SweepMode mode);

// All genus vectors g in {0,...,g_max}^r whose canonical cycle on the fixed
// weighted graph is integral.  Solutions are re-verified through
// plumbing::canonical_cycle before being returned.  Throws
// "singular-intersection-form" when det I = 0.
GenusSolutionSet gorenstein_genera(const plumbing::PlumbingGraph& graph,
                                   int g_max);

}  // namespace linkinv::enumerate
