#include "tree.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace stralg {

namespace {

std::vector<Syllable> slice(const std::vector<Syllable>& v, size_t from,
                            size_t to) {
  return {v.begin() + static_cast<long>(from), v.begin() + static_cast<long>(to)};
}

bool is_prefix(const std::vector<Syllable>& pre,
               const std::vector<Syllable>& v) {
  return pre.size() <= v.size() && std::equal(pre.begin(), pre.end(), v.begin());
}

bool ends_with(const std::vector<Syllable>& v,
               const std::vector<Syllable>& suf) {
  return suf.size() <= v.size() &&
         std::equal(suf.begin(), suf.end(), v.end() - static_cast<long>(suf.size()));
}

Str with_syls(const Str& like, std::vector<Syllable> syls) {
  Str out;
  out.triv_vertex = like.triv_vertex;
  out.triv_marker = like.triv_marker;
  out.syls = std::move(syls);
  return out;
}

// append syllables one extension at a time, so the trivial-marker and
// relation rules are enforced at every junction
std::optional<Str> append_seq(const Presentation& p, Str w,
                              const std::vector<Syllable>& v) {
  for (Syllable s : v) {
    auto e = extend(p, w, s);
    if (!e) return std::nullopt;
    w = std::move(*e);
  }
  return w;
}

}  // namespace

// ---- rays -------------------------------------------------------------------

Syllable Ray::at(size_t k) const {
  if (k < base.syls.size()) return base.syls[k];
  if (period.empty()) throw std::runtime_error("Ray::at: past a finite ray");
  return period[(k - base.syls.size()) % period.size()];
}

Str Ray::expand(size_t len) const {
  if (period.empty() && len > base.syls.size())
    throw std::runtime_error("Ray::expand: past a finite ray");
  Str out = base;
  out.syls.resize(0);
  out.syls.reserve(len);
  for (size_t k = 0; k < len; ++k) out.syls.push_back(at(k));
  return out;
}

NString Ray::nstring() const {
  if (period.empty()) throw std::runtime_error("Ray::nstring: finite ray");
  return canonical_nstring(base.syls, period);
}

Str ray_meet(const Presentation& p, const Ray& a, const Ray& b) {
  size_t bound = std::max(a.known_size(), b.known_size()) +
                 2 * (a.period.size() + b.period.size()) +
                 p.max_relation_len() + 8;
  size_t lima = a.finite() ? a.known_size() : bound;
  size_t limb = b.finite() ? b.known_size() : bound;
  size_t k = 0;
  while (k < lima && k < limb && a.at(k) == b.at(k)) ++k;
  if (k == bound)
    throw std::runtime_error("ray_meet: no divergence within the window");
  return a.expand(std::min(k, a.finite() ? a.known_size() : k));
}

// ---- small band helpers -------------------------------------------------------

std::vector<Syllable> band_word(const Presentation& p, const Band& b) {
  (void)p;
  std::vector<Syllable> best;
  for (const auto& r : b.rotations()) {
    if (!r.front().inv || r.back().inv) continue;
    if (best.empty() || r < best) best = r;
  }
  if (best.empty()) throw std::runtime_error("band_word: no mixed-cut rotation");
  return best;
}

int n_substring(const Presentation& p, const Band& b, const Str& y) {
  (void)p;
  for (const auto& r : b.rotations()) {
    if (r.size() > y.syls.size()) continue;
    for (size_t at = 0; at + r.size() <= y.syls.size(); ++at)
      if (std::equal(r.begin(), r.end(), y.syls.begin() + static_cast<long>(at)))
        return 1;
  }
  return 0;
}

const std::vector<int>& Tree::children(int id, int j) const {
  const TreeNode& n = nodes[static_cast<size_t>(id)];
  if (id == 0) return n.kids_pos;
  return j > 0 ? n.kids_pos : n.kids_neg;
}

// ---- builder ------------------------------------------------------------------

namespace {

struct Builder {
  const Presentation& p;
  const BandCatalog& cat;
  Tree t;
  size_t maxrel;
  size_t maxband = 0;
  size_t cap = 0;
  // dedup: band nodes by canonical N-string, torsion by the finite f
  using NKey = std::pair<std::vector<Syllable>, std::vector<Syllable>>;
  static NKey nkey(const NString& n) { return {n.tail, n.period}; }

  Builder(const Presentation& pr, const BandCatalog& c, const Str& x0, int i)
      : p(pr), cat(c) {
    t.p = &pr;
    t.cat = &c;
    t.x0 = x0;
    t.i = i;
    t.ctx = HammockCtx{&pr, &c, x0};
    maxrel = pr.max_relation_len();
    for (const auto& b : cat.bands) maxband = std::max(maxband, b.rep.size());
    cap = x0.size() + (cat.bands.size() + 2) * (maxrel + 2 * maxband + 8) + 16;
  }

  // ---- discovery --------------------------------------------------------
  //
  // Phase 1 discovers candidate f-rays: walks from x0 branch at every fork,
  // stop at a dead end (torsion candidates) or when the top spells a band
  // rotation twice (band candidates).  Each band candidate contributes the
  // forks along one period of its line.  Pumped duplicates are normalised by
  // deleting whole band copies along an already known line (a walk follows
  // the line of u for a full copy past the band-word alignment q(u) exactly
  // when it is a pump of a shorter walk).  Phase 2 assigns parents by the
  // meet rule: v is a child of the band node u with the deepest
  // f(v) /\ f(u) reaching at least q(u).

  struct BCand {
    Ray ray;
    Ray raw;                      // as discovered, before pump removal
    int band = -1;                // -1: torsion
    size_t q = 0;                 // |h| before the parent constraint
    std::vector<Syllable> arot;   // band word, aligned at q
  };
  std::vector<BCand> cands;
  std::map<NKey, size_t> band_idx;     // canonical N-string -> cands index
  std::set<NKey> explored;
  std::vector<Str> pending;
  std::set<std::vector<Syllable>> seen_walks;
  size_t walk_budget = 1 << 18;

  void run() {
    TreeNode root;
    root.id = 0;
    root.parent = -1;
    root.height = 0;
    root.cls = NodeClass::Root;
    root.h = t.x0;
    root.f = Ray{t.x0, {}};
    root.c = t.x0;
    root.label = with_syls(t.x0, {});
    t.nodes.push_back(root);
    t.m = max_string(t.ctx, t.i);

    std::vector<Str> dead_ends;
    for (Syllable a : left_extensions(p, t.x0))
      if (a.theta() == t.i) push_walk(*extend(p, t.x0, a));
    for (;;) {
      while (!pending.empty()) {
        Str y = std::move(pending.back());
        pending.pop_back();
        process_walk(std::move(y), dead_ends);
      }
      stabilise();
      bool queued = false;
      for (const auto& c : cands) {
        if (c.band < 0) continue;
        NKey k = nkey(c.ray.nstring());
        if (explored.insert(k).second) {
          queue_window(c);
          queued = true;
        }
      }
      if (!queued) break;
    }

    make_nodes(dead_ends);
    for (auto& n : t.nodes) sort_children(n);
  }

  void push_walk(Str y) {
    // every vertex lies on side i: the first syllable past x0 decides
    if (y.syls.size() > t.x0.size() && y.syls[t.x0.size()].theta() != t.i)
      return;
    if (seen_walks.insert(y.syls).second) pending.push_back(std::move(y));
  }

  void process_walk(Str y, std::vector<Str>& dead_ends) {
    for (;;) {
      if (walk_budget-- == 0)
        throw std::runtime_error("tree: walk budget exceeded");
      if (y.size() > cap)
        throw std::runtime_error("tree: walk exceeded the safety cap");
      bool banded = false;
      for (size_t k = 1; k <= maxband && 2 * k <= y.syls.size(); ++k) {
        std::vector<Syllable> rot = slice(y.syls, y.syls.size() - k, y.syls.size());
        if (!ends_with(slice(y.syls, 0, y.syls.size() - k), rot)) continue;
        if (cat.find_rotation(rot) < 0) continue;
        Str base = y;
        base.syls.resize(y.syls.size() - 2 * k);
        handle_band(Ray{std::move(base), rot});
        banded = true;
        break;
      }
      if (banded) return;
      auto exts = left_extensions(p, y);
      if (exts.empty()) {
        dead_ends.push_back(std::move(y));
        return;
      }
      if (exts.size() == 1) {
        y = *extend(p, y, exts[0]);
        continue;
      }
      for (Syllable a : exts) push_walk(*extend(p, y, a));
      return;
    }
  }

  void handle_band(Ray r) {
    Ray raw = r;
    r = reduce(r);
    NKey key = nkey(r.nstring());
    if (band_idx.count(key)) return;
    BCand c;
    c.ray = std::move(r);
    c.raw = std::move(raw);
    c.band = cat.find_rotation(c.ray.period);
    auto [q, bw] = align(c.ray, c.band);
    c.q = q;
    c.arot = bw;
    band_idx.emplace(key, cands.size());
    cands.push_back(std::move(c));
  }

  // band-word alignment: the least q >= |x0| from which f spells the band
  // word forever
  std::pair<size_t, std::vector<Syllable>> align(const Ray& f, int band) const {
    auto bw = band_word(p, cat.bands[static_cast<size_t>(band)]);
    size_t need = 2 * bw.size() + maxrel + 2;
    for (size_t q = t.x0.size(); q <= f.base.size() + bw.size(); ++q) {
      bool ok = true;
      for (size_t k = 0; k < need && ok; ++k) ok = f.at(q + k) == bw[k % bw.size()];
      if (ok) return {q, bw};
    }
    throw std::runtime_error("tree: band word does not align");
  }

  size_t meet_size(const Ray& a, const Ray& b) const {
    return ray_meet(p, a, b).size();
  }

  // max-meet parent among the current band candidates: the candidate with
  // the deepest meet reaching its own alignment point; ties go to the
  // larger q
  int parent_cand(const Ray& r, size_t qv) const {
    int best = -1;
    size_t best_mt = 0;
    NKey rkey;
    if (!r.finite()) rkey = nkey(r.nstring());
    for (size_t u = 0; u < cands.size(); ++u) {
      const auto& c = cands[u];
      if (c.band < 0) continue;
      if (!r.finite() && nkey(c.ray.nstring()) == rkey) continue;
      size_t mt = meet_size(r, c.ray);
      if (mt < c.q || qv <= c.q) continue;
      if (best < 0 || mt > best_mt ||
          (mt == best_mt && c.q > cands[static_cast<size_t>(best)].q)) {
        best = static_cast<int>(u);
        best_mt = mt;
      }
    }
    return best;
  }

  // is the candidate `target` on the ancestor chain of the walk (r, qv)?
  // the chain iterates the parent rule; q strictly decreases, so it ends.
  bool in_chain(Ray r, size_t qv, size_t target) const {
    for (;;) {
      int pu = parent_cand(r, qv);
      if (pu < 0) return false;
      if (static_cast<size_t>(pu) == target) return true;
      r = cands[static_cast<size_t>(pu)].ray;
      qv = cands[static_cast<size_t>(pu)].q;
    }
  }

  // delete whole copies of known bands along their lines (pump removal):
  // a walk is a pump of a shorter walk exactly when removing the copy of u
  // leaves a legal walk that still has u on its ancestor chain
  Ray reduce(Ray r) const {
    bool changed = true;
    while (changed) {
      changed = false;
      NKey rkey;
      if (!r.finite()) rkey = nkey(r.nstring());
      for (size_t ui = 0; ui < cands.size(); ++ui) {
        const auto& u = cands[ui];
        if (u.band < 0) continue;
        if (!r.finite() && nkey(u.ray.nstring()) == rkey) continue;
        size_t mt = meet_size(r, u.ray);
        size_t cut = u.q + u.arot.size();
        if (mt < cut) continue;
        Str exp = r.expand(std::max(r.base.size(), cut));
        std::vector<Syllable> red = exp.syls;
        red.erase(red.begin() + static_cast<long>(u.q),
                  red.begin() + static_cast<long>(cut));
        // the reduced walk must still be legal end to end
        auto leg = append_seq(p, t.x0, slice(red, t.x0.size(), red.size()));
        if (!leg) continue;
        if (!r.finite()) {
          auto top = append_seq(p, *leg, r.period);
          if (!top || !append_seq(p, *top, r.period)) continue;
        } else if (!left_extensions(p, *leg).empty()) {
          continue;  // a torsion walk must stay maximal
        }
        Ray rr{with_syls(t.x0, std::move(red)), r.period};
        // only copies along the walk's own ancestor chain are pumps
        size_t qv;
        if (rr.finite()) {
          qv = rr.base.size();
        } else {
          try {
            qv = align(rr, cat.find_rotation(rr.period)).first;
          } catch (const std::exception&) {
            continue;
          }
        }
        if (!in_chain(rr, qv, ui)) continue;
        r = std::move(rr);
        changed = true;
        break;
      }
    }
    return r;
  }

  // re-reduce all band candidates against each other until stable
  void stabilise() {
    for (;;) {
      bool changed = false;
      for (size_t k = 0; k < cands.size(); ++k) {
        if (cands[k].band < 0) continue;
        Ray red = reduce(cands[k].raw);
        NKey nk = nkey(red.nstring()), ok = nkey(cands[k].ray.nstring());
        if (nk == ok) continue;
        changed = true;
        band_idx.erase(ok);
        if (band_idx.count(nk)) {
          cands.erase(cands.begin() + static_cast<long>(k));
          for (auto& e : band_idx)
            if (e.second > k) --e.second;
          --k;
        } else {
          cands[k].ray = std::move(red);
          auto [q, bw] = align(cands[k].ray, cands[k].band);
          cands[k].q = q;
          cands[k].arot = bw;
          band_idx.emplace(nk, k);
        }
      }
      if (!changed) return;
    }
  }

  // forks along one period of the band line, plus the relation window
  void queue_window(const BCand& c) {
    size_t lo = c.q, hi = c.q + maxrel + 2 * c.arot.size() + 2;
    for (size_t pos = lo; pos < hi; ++pos) {
      Str pre = c.ray.expand(pos);
      Syllable on_line = c.ray.at(pos);
      for (Syllable a : left_extensions(p, pre))
        if (a != on_line) push_walk(*extend(p, pre, a));
    }
  }

  // ---- tree assembly ------------------------------------------------------

  void make_nodes(std::vector<Str>& dead_ends) {
    // torsion candidates, reduced and deduplicated
    std::map<std::vector<Syllable>, Ray> torsion;
    for (Str& y : dead_ends) {
      Ray r = reduce(Ray{std::move(y), {}});
      torsion.emplace(r.base.syls, std::move(r));
    }
    struct Raw {
      Ray ray;
      int band;
      size_t q;
    };
    std::vector<Raw> raw;
    for (auto& c : cands) raw.push_back({c.ray, c.band, c.q});
    for (auto& [k, r] : torsion) {
      size_t qv = r.base.size();
      raw.push_back({std::move(r), -1, qv});
    }

    // parents by the meet rule: v attaches to the band node u whose line it
    // follows the longest, i.e. the deepest f(v) /\ f(u) reaching q(u);
    // ties go to the deeper h
    std::vector<int> parent(raw.size(), -1);  // -1: root
    for (size_t v = 0; v < raw.size(); ++v) {
      size_t best_mt = 0;
      for (size_t u = 0; u < raw.size(); ++u) {
        if (u == v || raw[u].band < 0) continue;
        size_t mt = meet_size(raw[v].ray, raw[u].ray);
        if (mt < raw[u].q || raw[v].q <= raw[u].q) continue;
        if (parent[v] < 0 || mt > best_mt ||
            (mt == best_mt && raw[u].q > raw[static_cast<size_t>(parent[v])].q)) {
          parent[v] = static_cast<int>(u);
          best_mt = mt;
        }
      }
    }
    std::vector<int> height(raw.size(), -1);
    auto height_of = [&](auto&& self, size_t v) -> int {
      if (height[v] >= 0) return height[v];
      height[v] = 0;  // cycle guard
      int h = parent[v] < 0 ? 1 : self(self, static_cast<size_t>(parent[v])) + 1;
      if (h > static_cast<int>(raw.size()) + 1)
        throw std::runtime_error("tree: parent assignment is cyclic");
      height[v] = h;
      return h;
    };
    for (size_t v = 0; v < raw.size(); ++v) height_of(height_of, v);

    // create nodes in height order
    std::vector<size_t> order(raw.size());
    for (size_t k = 0; k < raw.size(); ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return height[a] < height[b]; });
    std::vector<int> id_of(raw.size(), -1);
    for (size_t v : order) {
      TreeNode n;
      n.id = static_cast<int>(t.nodes.size());
      n.parent = parent[v] < 0 ? 0 : id_of[static_cast<size_t>(parent[v])];
      n.height = height[v];
      n.f = raw[v].ray;
      n.band = raw[v].band;
      n.cls = n.band < 0 ? (n.height == 1 ? NodeClass::Z : NodeClass::R)
                         : (n.height == 1 ? NodeClass::H : NodeClass::U);
      natq[n.id] = raw[v].q;
      fill_h_label(n);
      fill_data(n);
      t.nodes.push_back(n);
      id_of[v] = n.id;
      auto& par = t.nodes[static_cast<size_t>(n.parent)];
      (n.height == 1 || n.phi > 0 ? par.kids_pos : par.kids_neg).push_back(n.id);
    }
  }

  std::map<int, size_t> natq;

  // h = prefix of f up to the start of the canonical band-word tail; the
  // bridge word (label) is what h adds over h(parent).
  void fill_h_label(TreeNode& n) {
    const TreeNode& par = t.nodes[static_cast<size_t>(n.parent)];
    size_t q;
    if (n.band < 0) {
      q = n.f.base.size();
    } else {
      auto bw = band_word(p, cat.bands[static_cast<size_t>(n.band)]);
      size_t need = 2 * bw.size() + maxrel + 2;
      size_t hi = n.f.base.size() + bw.size();
      bool found = false;
      q = 0;
      for (size_t cand = std::max(t.x0.size(), par.h.size()); cand <= hi; ++cand) {
        bool ok = true;
        for (size_t k = 0; k < need && ok; ++k)
          ok = n.f.at(cand + k) == bw[k % bw.size()];
        if (ok) {
          q = cand;
          found = true;
          break;
        }
      }
      if (!found) throw std::runtime_error("tree: band word does not align");
    }
    if (natq.count(n.id) && natq.at(n.id) != q)
      throw std::runtime_error("tree: discovery and alignment disagree on |h|");
    if (q < par.h.size() || !is_prefix(par.h.syls, n.f.expand(q).syls))
      throw std::runtime_error("tree: h(parent) is not a prefix of f");
    n.h = n.f.expand(q);
    if (n.band >= 0) n.rot = rot_aligned_at(n.f, q);
    Str lab = with_syls(t.x0, slice(n.h.syls, par.h.size(), n.h.size()));
    if (lab.syls.empty()) {
      lab.triv_vertex = end_vertex(p, par.h);
      lab.triv_marker = 0;
    } else {
      lab.triv_vertex = -1;
      lab.triv_marker = 0;
    }
    n.label = lab;
    // junction check of the derived bridge-word rule: the bridge leaves the
    // parent band at the cut vertex of its band word
    if (n.height >= 2 && !n.label.syls.empty()) {
      const TreeNode& pp = t.nodes[static_cast<size_t>(n.parent)];
      auto sw = band_word(p, cat.bands[static_cast<size_t>(pp.band)]);
      if (src_of(p, n.label.syls.front()) != end_vertex(p, with_syls(t.x0, sw)))
        throw std::runtime_error("tree: bridge word fails the junction rule");
    }
  }

  static std::vector<Syllable> rot_aligned_at(const Ray& f, size_t pos) {
    std::vector<Syllable> out;
    out.reserve(f.period.size());
    for (size_t k = 0; k < f.period.size(); ++k) out.push_back(f.at(pos + k));
    return out;
  }

  void fill_data(TreeNode& n) {
    const TreeNode& par = t.nodes[static_cast<size_t>(n.parent)];
    // c: longest left substring of f whose last syllable is outside t(u)
    if (n.band < 0) {
      n.c = n.f.base;
    } else {
      std::set<Syllable> bandsyl(n.rot.begin(), n.rot.end());
      size_t k = n.h.size();
      while (k > t.x0.size() && bandsyl.count(n.f.at(k - 1))) --k;
      n.c = n.f.expand(k);
      // b^{f alpha}: the rotation of t(u) attachable on top of c
      for (const auto& r : cat.bands[static_cast<size_t>(n.band)].rotations()) {
        if (!append_seq(p, n.c, r)) continue;
        if (!n.bfa.empty())
          throw std::runtime_error("tree: b^{f alpha} is not unique");
        n.bfa = r;
      }
      if (n.bfa.empty()) throw std::runtime_error("tree: b^{f alpha} not found");
    }

    n.fmeet_parent = ray_meet(p, n.f, par.f);
    n.beta = n.f.at(n.fmeet_parent.size());  // throws if f(u) sits inside f(parent)
    n.phi = n.height == 1 ? -t.i : n.beta.theta();

    if (n.height >= 2) {
      if (!is_prefix(par.c.syls, n.fmeet_parent.syls))
        throw std::runtime_error("tree: c(parent) not below the parent meet");
      n.w = slice(n.fmeet_parent.syls, par.c.size(), n.fmeet_parent.size());
      const Band& sband = cat.bands[static_cast<size_t>(par.band)];
      for (const auto& r : sband.rotations()) {
        auto s1 = append_seq(p, n.fmeet_parent, r);
        if (!s1 || !append_seq(p, *s1, r)) continue;
        if (!n.bfb.empty())
          throw std::runtime_error("tree: b^{f beta} is not unique");
        n.bfb = r;
      }
      if (n.bfb.empty()) throw std::runtime_error("tree: b^{f beta} not found");
      // longness: u is long exactly when the bridge winds one aligned copy
      // of s(u), i.e. w ends with b^{f beta}
      n.is_long = ends_with(n.w, n.bfb);
      n.wtilde =
          n.is_long ? slice(n.w, 0, n.w.size() - n.bfb.size()) : n.w;
      if (par.h.size() > t.x0.size() &&
          (n_substring(p, sband, n.h) == 1) != n.is_long)
        throw std::runtime_error(
            "tree: longness disagrees with the copy count: h=" +
            print_string(p, n.h) + " parh=" + print_string(p, par.h) +
            " parc=" + print_string(p, par.c) + " fmeet=" +
            print_string(p, n.fmeet_parent) + " w=" +
            print_string(p, with_syls(t.x0, n.w)) + " bfb=" +
            print_string(p, with_syls(t.x0, n.bfb)) + " is_long=" +
            std::to_string(n.is_long) + " copies=" +
            std::to_string(n_substring(p, sband, n.h)));
      // LVP (s(u), wtilde . c(parent)) classifies longness
      Str y = par.c;
      y.syls.insert(y.syls.end(), n.wtilde.begin(), n.wtilde.end());
      Str by = y;
      by.syls.insert(by.syls.end(), n.bfb.begin(), n.bfb.end());
      Lvp v{par.band, n.bfb.front().theta(), y, n.bfb, by};
      n.sw_cls = classify_lvp(p, v);
    }

    if (n.band >= 0) {
      Str by = n.c;
      by.syls.insert(by.syls.end(), n.bfa.begin(), n.bfa.end());
      Lvp v{n.band, n.bfa.front().theta(), n.c, n.bfa, by};
      n.tc_cls = classify_lvp(p, v);
      n.tc_valid = true;
      if (n.tc_cls.s_long) n.rs = r_data(n, /*s_side=*/true);
      if (n.tc_cls.b_long) n.rb = r_data(n, /*s_side=*/false);
    }

    // upsilon and normality
    if (n.c.syls == par.c.syls)
      n.upsilon = 0;
    else if (is_prefix(par.c.syls, n.c.syls))
      n.upsilon = 1;
    else if (is_prefix(n.c.syls, par.c.syls))
      n.upsilon = -1;
    else
      throw std::runtime_error("tree: c(u) and c(parent) incomparable");
    if (n.fmeet_parent.size() < n.c.size() &&
        is_prefix(n.fmeet_parent.syls, n.c.syls)) {
      n.normal = true;
      n.u_o = slice(n.c.syls, n.fmeet_parent.size(), n.c.size());
    } else {
      n.normal = false;
      if (!is_prefix(n.c.syls, n.fmeet_parent.syls))
        throw std::runtime_error("tree: abnormal node with incomparable c");
    }
  }

  RData r_data(const TreeNode& n, bool s_side) const {
    RData out;
    out.defined = true;
    Syllable gbar = s_side ? n.c.syls.back() : n.bfa.back();
    size_t k = 0;
    while (k < n.bfa.size() && n.bfa[k].theta() == gbar.theta()) ++k;
    out.r1 = slice(n.bfa, 0, k);
    if (out.r1.empty()) return out;
    Str carrier = n.c;
    if (!s_side)
      carrier.syls.insert(carrier.syls.end(), n.bfa.begin(), n.bfa.end());
    carrier.syls.insert(carrier.syls.end(), out.r1.begin(), out.r1.end());
    std::vector<Syllable> z = rho_r(p, carrier).syls;
    if (!ends_with(z, out.r1))
      throw std::runtime_error("tree: rho_r does not close over r1");
    out.rtilde = slice(z, 0, z.size() - out.r1.size());
    // the unique relation (or inverse relation) with z as a proper prefix
    std::vector<std::vector<Syllable>> rels;
    for (const auto& rel : p.relations) {
      std::vector<Syllable> d, inv;
      for (int a : rel) d.push_back({a, false});
      for (auto it = rel.rbegin(); it != rel.rend(); ++it)
        inv.push_back({*it, true});
      rels.push_back(d);
      rels.push_back(inv);
    }
    bool found = false;
    for (const auto& R : rels) {
      if (R.size() <= z.size() || !is_prefix(z, R)) continue;
      if (found) throw std::runtime_error("tree: relation over r1 not unique");
      out.r2 = slice(R, z.size(), R.size());
      found = true;
    }
    if (!found) throw std::runtime_error("tree: no relation extends rho_r(r1 ...)");
    std::vector<Syllable> v = out.r1;
    v.insert(v.end(), out.r2.begin(), out.r2.end());
    out.beta_tilde = v.back();
    out.r = slice(v, 0, v.size() - 1);
    return out;
  }

  void sort_children(TreeNode& n) {
    auto order = [&](std::vector<int>& kids, int target) {
      auto before = [&](int a, int b) {
        if (a == b) return false;
        const TreeNode& na = t.nodes[static_cast<size_t>(a)];
        const TreeNode& nb = t.nodes[static_cast<size_t>(b)];
        Str meet = ray_meet(p, na.f, nb.f);
        return nb.f.at(meet.size()).theta() == target;  // a ⊏ b
      };
      std::sort(kids.begin(), kids.end(), before);
      for (size_t a = 0; a < kids.size(); ++a)
        for (size_t b = a + 1; b < kids.size(); ++b)
          if (before(kids[b], kids[a]))
            throw std::runtime_error("tree: child order is not total");
    };
    if (n.id == 0) {
      order(n.kids_pos, t.i);
      return;
    }
    order(n.kids_pos, -1);
    order(n.kids_neg, +1);
  }
};

}  // namespace

Tree build_tree(const Presentation& p, const BandCatalog& cat, const Str& x0,
                int i) {
  Builder b(p, cat, x0, i);
  b.run();
  return std::move(b.t);
}

// ---- pumped vertices -----------------------------------------------------------

static std::vector<int> ancestor_chain(const Tree& t, int id) {
  std::vector<int> chain;  // height-1 ancestor first, node last
  for (int cur = id; cur != 0; cur = t.node(cur).parent) chain.push_back(cur);
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Str pumped_h(const Tree& t, const Pumped& u) {
  auto chain = ancestor_chain(t, u.node);
  if (u.coords.size() + 1 != chain.size() && !(chain.empty() && u.coords.empty()))
    throw std::runtime_error("pumped_h: wrong number of coordinates");
  if (chain.empty()) return t.x0;
  Str out = t.node(chain[0]).h;
  for (size_t k = 1; k < chain.size(); ++k) {
    const TreeNode& below = t.node(chain[k - 1]);
    const TreeNode& here = t.node(chain[k]);
    for (long s = 0; s < u.coords[k - 1]; ++s)
      out.syls.insert(out.syls.end(), below.rot.begin(), below.rot.end());
    out.syls.insert(out.syls.end(),
                    here.h.syls.begin() + static_cast<long>(below.h.size()),
                    here.h.syls.end());
  }
  return out;
}

Ray pumped_f(const Tree& t, const Pumped& u) {
  return Ray{pumped_h(t, u), t.node(u.node).rot};
}

Pumped pumped_parent(const Tree& t, const Pumped& u) {
  Pumped out{t.node(u.node).parent, u.coords};
  if (!out.coords.empty()) out.coords.pop_back();
  return out;
}

// a pumped vertex exists only when the copy insertion yields a hammock
// element; invalidity is monotone in each coordinate
bool pumped_valid(const Tree& t, const Pumped& u) {
  Str ph = pumped_h(t, u);
  if (!append_seq(*t.p, t.x0, slice(ph.syls, t.x0.size(), ph.syls.size())))
    return false;
  return in_hammock(t.ctx, ph);
}

// sibling order within a phi-group: a before b when the syllable of f(b)
// right above f(a) /\ f(b) has theta == -group
static bool pumped_before(const Tree& t, const Pumped& a, const Pumped& b) {
  Ray fa = pumped_f(t, a), fb = pumped_f(t, b);
  size_t mt = ray_meet(*t.p, fa, fb).size();
  return fb.at(mt).theta() == -t.node(a.node).phi;
}

// neighbours of u in the f-order over all valid pumped siblings of its
// group; the pump families of different bases interleave along the
// parent's line, so the scan walks every family
static std::optional<Pumped> pumped_neighbour(const Tree& t, const Pumped& u,
                                              bool above) {
  const TreeNode& n = t.node(u.node);
  const TreeNode& par = t.node(n.parent);
  const auto& kids = n.phi > 0 ? par.kids_pos : par.kids_neg;
  std::vector<long> base(u.coords.begin(), std::prev(u.coords.end()));
  std::optional<Pumped> best;
  size_t bound = static_cast<size_t>(u.coords.back()) + 16;
  for (int v : kids) {
    for (size_t s = 0; s <= bound; ++s) {
      Pumped cand{v, base};
      cand.coords.push_back(static_cast<long>(s));
      if (cand.node == u.node && cand.coords == u.coords) continue;
      if (!pumped_valid(t, cand)) break;
      if (above) {
        if (!pumped_before(t, u, cand)) continue;
        if (!best || pumped_before(t, cand, *best)) best = cand;
        break;  // within a family the order grows with the coordinate
      }
      if (pumped_before(t, cand, u) &&
          (!best || pumped_before(t, *best, cand)))
        best = cand;
      else if (pumped_before(t, u, cand))
        break;
    }
  }
  return best;
}

std::optional<Pumped> pumped_fminus(const Tree& t, const Pumped& u) {
  const TreeNode& n = t.node(u.node);
  if (n.height >= 2) return pumped_neighbour(t, u, /*above=*/false);
  if (n.height == 1) {
    const auto& kids = t.children(0, 0);
    auto it = std::find(kids.begin(), kids.end(), u.node);
    if (it == kids.begin()) return std::nullopt;
    return Pumped{*std::prev(it), {}};
  }
  return std::nullopt;
}

Pumped pumped_fplus(const Tree& t, const Pumped& u) {
  const TreeNode& n = t.node(u.node);
  if (n.height >= 2) {
    auto up = pumped_neighbour(t, u, /*above=*/true);
    if (!up) throw std::runtime_error("pumped_fplus: no successor");
    return *up;
  }
  const auto& kids = t.children(0, 0);
  auto it = std::find(kids.begin(), kids.end(), u.node);
  if (it == kids.end() || std::next(it) == kids.end())
    throw std::runtime_error("pumped_fplus: no successor");
  return Pumped{*std::next(it), {}};
}

Pumped kappa(const Tree& t, Pumped u, int j) {
  while (t.node(u.node).phi == -j && !pumped_fminus(t, u))
    u = pumped_parent(t, u);
  return u;
}

Str fundamental_fork(const Tree& t, const Pumped& u, int j) {
  Pumped k = kappa(t, u, j);
  const TreeNode& n = t.node(k.node);
  if (n.phi == 0) return t.x0;
  if (n.phi == -j) {
    auto fm = pumped_fminus(t, k);
    if (!fm) throw std::runtime_error("fundamental_fork: missing f-");
    return ray_meet(*t.p, pumped_f(t, k), pumped_f(t, *fm));
  }
  // phi == j
  const auto& roots = t.children(0, 0);
  if (j == -t.i && n.height == 1 && !roots.empty() && roots.back() == k.node)
    return t.m;
  if (n.height >= 2) {
    auto up = pumped_neighbour(t, k, /*above=*/true);
    if (!up) {
      // k is the maximal valid pumped vertex of its sibling group: the next
      // vertex along the order lies on the parent's line, so the fork is the
      // meet with that line.
      return ray_meet(*t.p, pumped_f(t, k), pumped_f(t, pumped_parent(t, k)));
    }
    return ray_meet(*t.p, pumped_f(t, k), pumped_f(t, *up));
  }
  return ray_meet(*t.p, pumped_f(t, k), pumped_f(t, pumped_fplus(t, k)));
}

Str fork_of(const Tree& t, const Pumped& u) {
  if (u.node == 0) return t.x0;
  return fundamental_fork(t, u, t.node(u.node).phi);
}

std::vector<std::pair<Str, Pumped>> fork_set(const Tree& t, size_t max_len) {
  std::map<Str, Pumped> found;
  found.emplace(t.x0, Pumped{0, {}});
  if (t.m.size() <= max_len) found.emplace(t.m, Pumped{0, {}});
  size_t budget = 200000;
  for (size_t id = 1; id < t.nodes.size(); ++id) {
    const TreeNode& n = t.node(static_cast<int>(id));
    size_t dims = static_cast<size_t>(n.height) - 1;
    std::set<std::vector<long>> seen;
    std::vector<std::vector<long>> work{std::vector<long>(dims, 0)};
    seen.insert(work.front());
    while (!work.empty()) {
      if (budget-- == 0) throw std::runtime_error("fork_set: budget exceeded");
      std::vector<long> cur = std::move(work.back());
      work.pop_back();
      Pumped u{static_cast<int>(id), cur};
      if (!pumped_valid(t, u)) continue;
      Str fork = fork_of(t, u);
      if (fork.size() > max_len) continue;  // growth is coordinatewise monotone
      found.emplace(fork, u);
      for (size_t d = 0; d < dims; ++d) {
        std::vector<long> nxt = cur;
        ++nxt[d];
        if (seen.insert(nxt).second) work.push_back(std::move(nxt));
      }
    }
  }
  std::vector<std::pair<Str, Pumped>> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return cmp_l(t.ctx, a.first, b.first) < 0;
  });
  return out;
}

// ---- q-strings and signatures ----------------------------------------------------

static std::optional<Str> q_rhs(const Tree& t, int id, int group_sign) {
  const TreeNode& n = t.node(id);
  const auto& kids = t.children(id, group_sign);
  if (!kids.empty())
    return ray_meet(*t.p, n.f, t.node(kids.front()).f);
  if (n.f.finite()) return n.f.base;
  return std::nullopt;
}

static std::optional<std::pair<Str, Str>> q_pair(const Tree& t, const Str& base,
                                                 std::optional<Str> rhs) {
  if (!rhs) return std::nullopt;
  if (base.size() > rhs->size() ||
      !std::equal(base.syls.begin(), base.syls.end(), rhs->syls.begin()))
    throw std::runtime_error("q-string: base is not below the right-hand side");
  return std::make_pair(base, *rhs);
}

std::optional<std::pair<Str, Str>> q_zero(const Tree& t, int id) {
  if (id == 0) return std::nullopt;
  const TreeNode& n = t.node(id);
  return q_pair(t, n.fmeet_parent, q_rhs(t, id, n.phi));
}

static std::optional<int> real_sibling(const Tree& t, int id, int dir) {
  const TreeNode& n = t.node(id);
  const auto& group = n.parent == 0
                          ? t.children(0, 0)
                          : t.children(n.parent, n.beta.theta());
  auto it = std::find(group.begin(), group.end(), id);
  if (it == group.end()) throw std::runtime_error("q: node missing from group");
  if (dir < 0) {
    if (it == group.begin()) return std::nullopt;
    return *std::prev(it);
  }
  if (std::next(it) == group.end()) return std::nullopt;
  return *std::next(it);
}

std::optional<std::pair<Str, Str>> q_phi(const Tree& t, int id) {
  if (id == 0) return std::nullopt;
  const TreeNode& n = t.node(id);
  auto sib = real_sibling(t, id, -1);
  if (!sib) return std::nullopt;
  Str base = ray_meet(*t.p, n.f, t.node(*sib).f);
  return q_pair(t, base, q_rhs(t, id, n.phi));
}

std::optional<std::pair<Str, Str>> q_mphi(const Tree& t, int id) {
  if (id == 0) return std::nullopt;
  const TreeNode& n = t.node(id);
  auto sib = real_sibling(t, id, +1);
  if (!sib) return std::nullopt;
  Str base = ray_meet(*t.p, n.f, t.node(*sib).f);
  return q_pair(t, base, q_rhs(t, id, -n.phi));
}

std::vector<int> theta_signature(const HammockCtx& ctx, const Str& base,
                                 const Str& y) {
  if (base.size() >= y.size()) return {};
  std::vector<int> out;
  size_t piece_start = base.size();
  for (size_t k = base.size() + 1; k < y.size(); ++k) {
    Str pre = base;
    pre.syls = {y.syls.begin(), y.syls.begin() + static_cast<long>(k)};
    if (left_extensions(*ctx.p, pre).size() >= 2) {
      out.push_back(y.syls[piece_start].theta());
      piece_start = k;
    }
  }
  out.push_back(y.syls[piece_start].theta());
  return out;
}

}  // namespace stralg
