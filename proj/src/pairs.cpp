#include "pairs.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace stralg {

namespace {

std::optional<Str> append_seq(const Presentation& p, const Str& base,
                              const std::vector<Syllable>& seq) {
  Str cur = base;
  for (Syllable s : seq) {
    auto nxt = extend(p, cur, s);
    if (!nxt) return std::nullopt;
    cur = std::move(*nxt);
  }
  return cur;
}

}  // namespace

std::optional<Lvp> find_lvp(const Presentation& p, const BandCatalog& cat,
                            int band, const Str& y, int i) {
  std::optional<Lvp> found;
  for (const auto& rot : cat.bands[static_cast<size_t>(band)].rotations()) {
    if (rot.front().theta() != i) continue;
    auto by = append_seq(p, y, rot);
    if (!by) continue;
    if (found) throw std::runtime_error("find_lvp: rotation is not unique");
    found = Lvp{band, i, y, rot, std::move(*by)};
  }
  return found;
}

bool equiv_H(const Presentation& p, const Str& y, const Str& z) {
  if (end_vertex(p, y) != end_vertex(p, z)) return false;
  size_t depth = p.max_relation_len();
  std::function<bool(const Str&, const Str&, size_t)> go =
      [&](const Str& a, const Str& b, size_t d) -> bool {
    auto ea = left_extensions(p, a);
    auto eb = left_extensions(p, b);
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    if (ea != eb) return false;
    if (d == 0) return true;
    for (Syllable s : ea)
      if (!go(*extend(p, a, s), *extend(p, b, s), d - 1)) return false;
    return true;
  };
  return go(y, z, depth);
}

bool map_witness(const Presentation& p, const Str& a, const Str& b, int i,
                 size_t depth) {
  // DFS over sequences extending a whose first syllable has theta == i.
  std::function<bool(const Str&, const Str&, bool, size_t)> go =
      [&](const Str& ca, const Str& cb, bool started, size_t d) -> bool {
    if (d == 0) return false;
    for (Syllable s : left_extensions(p, ca)) {
      if (!started && s.theta() != i) continue;
      auto nb = extend(p, cb, s);
      if (!nb) return true;
      if (go(*extend(p, ca, s), *nb, true, d - 1)) return true;
    }
    return false;
  };
  return go(a, b, false, depth);
}

PairClass classify_lvp(const Presentation& p, const Lvp& v) {
  PairClass out;
  const auto& ys = v.y.syls;
  const auto& bs = v.by_y.syls;
  size_t k = 0;
  while (k < ys.size() && ys[ys.size() - 1 - k] == bs[bs.size() - 1 - k]) ++k;
  out.wbar.assign(ys.end() - static_cast<long>(k), ys.end());
  out.tight = out.wbar.empty();

  Str wbar_str;
  wbar_str.syls = out.wbar;
  if (out.wbar.empty()) wbar_str.triv_vertex = end_vertex(p, v.y);
  out.wl = rho_r(p, wbar_str).syls;

  out.short_pair = equiv_H(p, v.y, v.by_y);

  Str rot_str;
  rot_str.syls = v.rot;
  out.s_sign = delta(rho_r(p, v.y));
  out.b_sign = delta(rho_r(p, rot_str));

  size_t depth = p.max_relation_len();
  if (out.s_sign != 0)
    out.s_long = !map_witness(p, v.y, v.by_y, out.s_sign, depth) &&
                 map_witness(p, v.by_y, v.y, out.s_sign, depth);
  if (out.b_sign != 0)
    out.b_long = !map_witness(p, v.by_y, v.y, out.b_sign, depth) &&
                 map_witness(p, v.y, v.by_y, out.b_sign, depth);
  if (!out.s_long) out.s_sign = 0;
  if (!out.b_long) out.b_sign = 0;
  return out;
}

}  // namespace stralg
