#include "linkinv/frames.hpp"

#include "linkinv/errors.hpp"

namespace linkinv::frames {

FrameClass act(const FrameClass& f, long long n) {
  return FrameClass{f.manifold_label, f.offset + n, f.basepoint};
}

long long diff(const FrameClass& f, const FrameClass& g) {
  if (f.manifold_label != g.manifold_label || f.basepoint != g.basepoint)
    throw Error("incomparable-frames",
                "frames live on different manifolds or basepoints");
  return f.offset - g.offset;
}

FrameClass canonical_frame(const std::string& manifold_label, long long mu) {
  return FrameClass{manifold_label, mu + 1, Basepoint::kMilnorBase};
}

long long ehat(const FrameClass& f) {
  if (f.basepoint != Basepoint::kMilnorBase)
    throw Error("ehat-undefined",
                "ehat needs the Milnor-fiber base frame as the origin");
  return f.offset;
}

InvariantBundle reduce(long long ehat) {
  return InvariantBundle{ehat, static_cast<int>(mod_nonneg(ehat, 24)),
                         static_cast<int>(mod_nonneg(ehat, 12))};
}

int e_r_from_td_arf(const Rat& td, int arf) {
  if (arf != 0 && arf != 1)
    throw Error("invalid-argument", "Arf invariant must be 0 or 1");
  const Rat twelve_td = td * 12;
  if (!is_integer(twelve_td))
    throw Error("invalid-todd-value", "12*Td must be an integer");
  Int value = twelve_td.get_num() + 12 * arf;
  Int r = value % 24;
  if (r < 0) r += 24;
  return static_cast<int>(r.get_si());
}

int e_c_from_chern(long long c1_sq, long long c2) {
  Int sum = make_int(c1_sq) + make_int(c2);
  Int r = sum % 12;
  if (r < 0) r += 12;
  return static_cast<int>(r.get_si());
}

int rochlin(long long sigma) {
  return static_cast<int>(mod_nonneg(sigma, 16));
}

std::pair<long long, long long> characteristic_pair(long long sigma,
                                                    long long c_sq) {
  if (mod_nonneg(sigma - c_sq, 8) != 0)
    throw Error("not-characteristic", "sigma and C^2 must agree mod 8");
  return {sigma, (sigma - c_sq) / 8};
}

}  // namespace linkinv::frames
