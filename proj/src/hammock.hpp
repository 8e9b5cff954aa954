#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bands.hpp"
#include "presentation.hpp"
#include "strings.hpp"

namespace stralg {

// Working context for the hammock H_l(x0): all strings having x0 as a left
// substring, ordered by <_l.
struct HammockCtx {
  const Presentation* p = nullptr;
  const BandCatalog* bands = nullptr;
  Str x0;

  size_t base_len() const { return x0.size(); }
};

bool in_hammock(const HammockCtx& ctx, const Str& x);

// Side of x: theta of the first syllable past x0 (+1 inverse, -1 direct),
// 0 for x0 itself.
int side_of(const HammockCtx& ctx, const Str& x);

// Total order <_l: -1 if x <_l y, 0 if equal, +1 if x >_l y.  At the first
// divergence an inverse syllable scores +1, "string ends" scores 0, a direct
// syllable scores -1; bigger score = bigger element.
int cmp_l(const HammockCtx& ctx, const Str& x, const Str& y);

// Immediate successor / predecessor in (H_l(x0), <_l); nullopt at the ends.
std::optional<Str> succ_l(const HammockCtx& ctx, const Str& x);
std::optional<Str> pred_l(const HammockCtx& ctx, const Str& x);

// The operators l (j = +1) and lbar (j = -1): the immediate neighbour on
// side j, defined only when that neighbour is strictly longer.
std::optional<Str> op_l(const HammockCtx& ctx, const Str& x, int j);

// Greedy theta = i closure of x: repeatedly apply the unique extension of
// sign i while it exists.  max_string(ctx, i) = closure of x0 = the extreme
// element m_i(x0) of the hammock (maximum for i = +1, minimum for i = -1).
Str greedy_closure(const HammockCtx& ctx, Str x, int i);
Str max_string(const HammockCtx& ctx, int i);

// Depth-first enumeration of all hammock elements with at most max_len
// syllables, in <_l order; visit returns false to stop early.
void enumerate_hammock(const HammockCtx& ctx, size_t max_len,
                       const std::function<bool(const Str&)>& visit);

// ---- limits of operator iteration -----------------------------------------

struct IterLimit {
  enum Kind { Periodic, Torsion, Diverged } kind = Diverged;
  NString limit;  // Periodic: the N-string the iterates converge to
  Str endpoint;   // Torsion: the last value reached before the step failed
  size_t steps = 0;
};

// Iterates step() from x: x, step(x), step(step(x)), ... where each defined
// step yields a proper extension of its argument.  Returns Torsion with the
// last value once a step is undefined, Periodic once band-periodic growth is
// certified (the appended segments repeat with a period that is a power of a
// band rotation, witnessed twice and confirmed by one extra step), Diverged
// if the iteration cap is hit.  step_cap 0 uses 10 * (2 * #arrows)^2.
IterLimit iterate_limit(const HammockCtx& ctx, const Str& x,
                        const std::function<std::optional<Str>(const Str&)>& step,
                        size_t step_cap = 0);

// iterate_limit for the basic operator l*j  (j=+1: l, j=-1: lbar).
IterLimit iterate_op(const HammockCtx& ctx, const Str& x, int j, size_t step_cap = 0);

}  // namespace stralg
