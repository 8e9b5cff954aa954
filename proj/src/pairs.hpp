#pragma once

#include <optional>

#include "bands.hpp"

namespace stralg {

// An i-left valid pair (b, y): a band b together with a string y such that
// b_y . y is a string for some cyclic permutation b_y of b with
// theta(b_y) = i.  The permutation is unique for each sign.
struct Lvp {
  int band = -1;              // index into the catalog
  int i = 0;                  // theta of the rotation
  Str y;
  std::vector<Syllable> rot;  // b_y, traversal order
  Str by_y;                   // b_y . y
};

// The i-LVP for (bands[band], y) if it exists.  Throws if the rotation with
// the requested sign is not unique.
std::optional<Lvp> find_lvp(const Presentation& p, const BandCatalog& cat,
                            int band, const Str& y, int i);

// y and z admit exactly the same left extension sequences, so the hammocks
// H_l(y) and H_l(z) are isomorphic via the obvious prefix swap.  Obstructions
// to a left extension are confined to a relation-length window around the
// junction, so extension sequences up to that length decide the relation.
bool equiv_H(const Presentation& p, const Str& y, const Str& z);

// Does some extension sequence x with theta(x) = i and |x| <= depth extend a
// but not b?  With depth >= max relation length this decides whether the
// prefix-swap map H^i_l(a) -> H^i_l(b) is total/surjective.
bool map_witness(const Presentation& p, const Str& a, const Str& b, int i,
                 size_t depth);

struct PairClass {
  std::vector<Syllable> wbar;  // longest common right substring of y, b_y y
  std::vector<Syllable> wl;    // rho_r of the above
  bool tight = false;          // |wbar| == 0
  bool short_pair = false;     // y equiv_H b_y y
  // s-long: x y -> x b_y y is an injective non-surjective map
  // H^i_l(y) -> H^i_l(b_y y) for i = delta(rho_r(y)); b-long dually for
  // i = delta(rho_r(b_y)).
  bool s_long = false;
  int s_sign = 0;  // delta(rho_r(y))
  bool b_long = false;
  int b_sign = 0;  // delta(rho_r(b_y))
};

PairClass classify_lvp(const Presentation& p, const Lvp& v);

}  // namespace stralg
