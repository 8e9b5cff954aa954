#pragma once

#include <vector>

#include "presentation.hpp"
#include "strings.hpp"

namespace stralg {

// A band: a primitive cyclic string of mixed sign all of whose powers are
// strings.  rep is the lexicographically least rotation (traversal order).
struct Band {
  std::vector<Syllable> rep;
  std::vector<std::vector<Syllable>> rotations() const;
  bool operator==(const Band&) const = default;
};

struct BandCatalog {
  std::vector<Band> bands;       // closed under inversion
  std::vector<int> inverse_of;   // bands[i]^{-1} == bands[inverse_of[i]]
  // True when every band found has length <= max_len/2, i.e. the search
  // window closed with a clear margin; false means bands near the cap were
  // found and longer ones cannot be ruled out.
  bool complete = true;
  bool domestic = true;          // false: two bands commute

  int find_rotation(const std::vector<Syllable>& rot) const;  // band index or -1
};

// Enumerates all bands of length <= max_len (default 2 * number of syllables
// = 4 * number of arrows).  If some relation-free cyclic walk escapes the
// cap, complete is set to false.  Also decides domesticity.
BandCatalog enumerate_bands(const Presentation& p, size_t max_len = 0);

// Do two bands commute: some rotations r1, r2 (distinct when b1 == b2) with
// both concatenations r1.r2 and r2.r1 strings?
bool bands_commute(const Presentation& p, const Band& b1, const Band& b2);

// N(b, y): largest m >= 0 such that the syllable vector of y ends (at the
// written-left, growing end) with m contiguous copies of some rotation of b.
size_t band_power_at_top(const Presentation& p, const Band& b, const Str& y);

}  // namespace stralg
