#include "hammock.hpp"

#include <algorithm>
#include <stdexcept>

namespace stralg {

bool in_hammock(const HammockCtx& ctx, const Str& x) {
  const Presentation& p = *ctx.p;
  if (!is_string(p, x)) return false;
  if (ctx.x0.trivial()) {
    if (x.trivial())
      return x.triv_vertex == ctx.x0.triv_vertex && x.triv_marker == ctx.x0.triv_marker;
    if (start_vertex(p, x) != ctx.x0.triv_vertex) return false;
    // The first syllable must be admissible for the root's marker.
    auto exts = left_extensions(p, ctx.x0);
    return std::find(exts.begin(), exts.end(), x.syls.front()) != exts.end();
  }
  if (x.size() < ctx.x0.size()) return false;
  return std::equal(ctx.x0.syls.begin(), ctx.x0.syls.end(), x.syls.begin());
}

int side_of(const HammockCtx& ctx, const Str& x) {
  if (x.size() <= ctx.base_len()) return 0;
  return x.syls[ctx.base_len()].theta();
}

int cmp_l(const HammockCtx& ctx, const Str& x, const Str& y) {
  (void)ctx;
  size_t n = std::max(x.size(), y.size());
  for (size_t k = 0; k < n; ++k) {
    int sx = k < x.size() ? x.syls[k].theta() : 0;
    int sy = k < y.size() ? y.syls[k].theta() : 0;
    if (sx != sy) return sx < sy ? -1 : +1;
  }
  return 0;
}

namespace {

std::optional<Syllable> ext_of_sign(const HammockCtx& ctx, const Str& x, int i) {
  for (Syllable s : left_extensions(*ctx.p, x))
    if (s.theta() == i) return s;
  return std::nullopt;
}

}  // namespace

Str greedy_closure(const HammockCtx& ctx, Str x, int i) {
  size_t guard = 0;
  while (auto s = ext_of_sign(ctx, x, i)) {
    x.syls.push_back(*s);
    if (++guard > 1000000) throw std::runtime_error("greedy_closure: no termination");
  }
  return x;
}

Str max_string(const HammockCtx& ctx, int i) { return greedy_closure(ctx, ctx.x0, i); }

std::optional<Str> succ_l(const HammockCtx& ctx, const Str& x) {
  if (auto s = ext_of_sign(ctx, x, +1)) {
    Str y = x;
    y.syls.push_back(*s);
    return greedy_closure(ctx, y, -1);
  }
  for (size_t k = x.size(); k > ctx.base_len(); --k)
    if (!x.syls[k - 1].inv) return x.prefix(k - 1);
  return std::nullopt;
}

std::optional<Str> pred_l(const HammockCtx& ctx, const Str& x) {
  if (auto s = ext_of_sign(ctx, x, -1)) {
    Str y = x;
    y.syls.push_back(*s);
    return greedy_closure(ctx, y, +1);
  }
  for (size_t k = x.size(); k > ctx.base_len(); --k)
    if (x.syls[k - 1].inv) return x.prefix(k - 1);
  return std::nullopt;
}

std::optional<Str> op_l(const HammockCtx& ctx, const Str& x, int j) {
  auto y = j > 0 ? succ_l(ctx, x) : pred_l(ctx, x);
  if (!y || y->size() <= x.size()) return std::nullopt;
  return y;
}

void enumerate_hammock(const HammockCtx& ctx, size_t max_len,
                       const std::function<bool(const Str&)>& visit) {
  std::function<bool(Str&)> rec = [&](Str& x) -> bool {
    std::optional<Syllable> dir = ext_of_sign(ctx, x, -1), inv = ext_of_sign(ctx, x, +1);
    if (dir && x.size() < max_len) {
      x.syls.push_back(*dir);
      bool go = rec(x);
      x.syls.pop_back();
      if (!go) return false;
    }
    if (!visit(x)) return false;
    if (inv && x.size() < max_len) {
      x.syls.push_back(*inv);
      bool go = rec(x);
      x.syls.pop_back();
      if (!go) return false;
    }
    return true;
  };
  Str root = ctx.x0;
  rec(root);
}

namespace {

// Primitive root of a nonempty word.
std::vector<Syllable> primitive_root(const std::vector<Syllable>& w) {
  for (size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool rep = true;
    for (size_t i = d; i < w.size() && rep; ++i) rep = (w[i] == w[i - d]);
    if (rep) return std::vector<Syllable>(w.begin(), w.begin() + static_cast<long>(d));
  }
  return w;
}

bool is_prefix_extension(const Str& shorter, const Str& longer) {
  return longer.size() > shorter.size() &&
         std::equal(shorter.syls.begin(), shorter.syls.end(), longer.syls.begin());
}

}  // namespace

IterLimit iterate_limit(const HammockCtx& ctx, const Str& x,
                        const std::function<std::optional<Str>(const Str&)>& step,
                        size_t step_cap) {
  if (step_cap == 0) {
    size_t syls = 2 * ctx.p->arrows.size();
    step_cap = 10 * syls * syls;
  }
  IterLimit out;
  const size_t maxrel = ctx.p->max_relation_len();
  Str cur = x;
  std::vector<size_t> lens{cur.size()};
  for (size_t k = 1; k <= step_cap; ++k) {
    std::optional<Str> nxt = step(cur);
    if (!nxt) {
      out.kind = IterLimit::Torsion;
      out.endpoint = cur;
      out.steps = k - 1;
      return out;
    }
    if (!is_prefix_extension(cur, *nxt)) {
      // Non-extension steps void all periodicity evidence gathered so far.
      cur = *nxt;
      lens.assign(1, cur.size());
      continue;
    }
    cur = *nxt;
    lens.push_back(cur.size());
    // Look for an earlier iterate v_j with cur = q . v_j where q = r^t for a
    // band rotation r, carrying two full periods and enough margin that every
    // relation window at the growing end lies inside the periodic zone.  The
    // step functions used here only ever look at a bounded window at the
    // growing end, so such a recurrence certifies periodic growth forever.
    for (size_t ji = lens.size() - 1; ji-- > 0;) {
      size_t lj = lens[ji];
      std::vector<Syllable> q(cur.syls.begin() + static_cast<long>(lj), cur.syls.end());
      if (q.empty()) continue;
      auto r = primitive_root(q);
      size_t t = q.size() / r.size();
      if (t < 2 || t * r.size() < r.size() + maxrel) continue;
      if (ctx.bands->find_rotation(r) < 0) continue;
      out.kind = IterLimit::Periodic;
      out.limit = canonical_nstring(cur.prefix(lj).syls, r);
      out.steps = k;
      return out;
    }
  }
  out.kind = IterLimit::Diverged;
  out.endpoint = cur;
  out.steps = step_cap;
  return out;
}

IterLimit iterate_op(const HammockCtx& ctx, const Str& x, int j, size_t step_cap) {
  return iterate_limit(
      ctx, x, [&](const Str& v) { return op_l(ctx, v, j); }, step_cap);
}

}  // namespace stralg
