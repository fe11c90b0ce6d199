// The set of homotopy classes of SU(2)-frames on a closed oriented
// 3-manifold is a Z-torsor: frames differ by a map into SU(2) ~ S^3,
// classified by its degree.  FrameClass models a class symbolically by its
// torsor coordinate relative to a base frame.
//
// With the Milnor-fiber base frame (coordinate 0), the canonical frame of a
// smoothable Gorenstein germ sits at mu + 1; that coordinate is the integral
// e-invariant ehat, reducing to e_R in Z_24 and e_c in Z_12.

#pragma once

#include <string>
#include <utility>

#include "linkinv/rational.hpp"

namespace linkinv::frames {

enum class Basepoint { kMilnorBase, kAbstract };

struct FrameClass {
  std::string manifold_label;
  long long offset = 0;  // torsor coordinate relative to the base frame
  Basepoint basepoint = Basepoint::kAbstract;
};

struct InvariantBundle {
  long long ehat = 0;
  int e_r = 0;  // ehat mod 24, representative 0..23
  int e_c = 0;  // ehat mod 12, representative 0..11
};

// Twist by a degree-n map into SU(2): shifts the torsor coordinate by n.
FrameClass act(const FrameClass& f, long long n);

// Degree difference of two frames on the same manifold with the same
// basepoint.  Throws "incomparable-frames" otherwise.
long long diff(const FrameClass& f, const FrameClass& g);

// Canonical SU(2)-frame of a germ with Milnor number mu: coordinate mu + 1
// over the Milnor-fiber base frame.
FrameClass canonical_frame(const std::string& manifold_label, long long mu);

// The integral e-invariant of a frame measured against the Milnor-fiber
// base.  Throws "ehat-undefined" for an abstract basepoint.
long long ehat(const FrameClass& f);

// ehat together with its reductions mod 24 and mod 12.
InvariantBundle reduce(long long ehat);

// e_R as 12*(Td + Arf) mod 24.  12*td must be an integer
// ("invalid-todd-value" otherwise); arf must be 0 or 1.
int e_r_from_td_arf(const Rat& td, int arf);

// e_c as (c1^2 + c2) mod 12 in relative Chern numbers.
int e_c_from_chern(long long c1_sq, long long c2);

// Rochlin invariant: signature of a Spin coboundary mod 16.
int rochlin(long long sigma);

// Characteristic-pair invariants (sigma, (sigma - C^2)/8); requires
// sigma = C^2 (mod 8), throws "not-characteristic" otherwise.
std::pair<long long, long long> characteristic_pair(long long sigma,
                                                    long long c_sq);

}  // namespace linkinv::frames
