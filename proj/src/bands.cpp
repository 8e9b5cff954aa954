#include "bands.hpp"

#include <algorithm>
#include <set>

namespace stralg {

std::vector<std::vector<Syllable>> Band::rotations() const {
  std::vector<std::vector<Syllable>> out;
  for (size_t k = 0; k < rep.size(); ++k) {
    std::vector<Syllable> r(rep.begin() + static_cast<long>(k), rep.end());
    r.insert(r.end(), rep.begin(), rep.begin() + static_cast<long>(k));
    out.push_back(std::move(r));
  }
  return out;
}

int BandCatalog::find_rotation(const std::vector<Syllable>& rot) const {
  for (size_t i = 0; i < bands.size(); ++i) {
    if (bands[i].rep.size() != rot.size()) continue;
    for (const auto& r : bands[i].rotations())
      if (r == rot) return static_cast<int>(i);
  }
  return -1;
}

namespace {

std::vector<Syllable> lex_min_rotation(const std::vector<Syllable>& w) {
  std::vector<Syllable> best = w;
  std::vector<Syllable> cur = w;
  for (size_t k = 1; k < w.size(); ++k) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    if (cur < best) best = cur;
  }
  return best;
}

bool primitive(const std::vector<Syllable>& w) {
  for (size_t d = 1; d < w.size(); ++d) {
    if (w.size() % d != 0) continue;
    bool rep = true;
    for (size_t i = d; i < w.size() && rep; ++i) rep = (w[i] == w[i - d]);
    if (rep) return false;
  }
  return true;
}

bool cyclic_string(const Presentation& p, const std::vector<Syllable>& w) {
  size_t need = std::max<size_t>(2 * w.size(), w.size() + p.max_relation_len());
  size_t copies = (need + w.size() - 1) / w.size();
  Str pw;
  for (size_t c = 0; c < copies; ++c) pw.syls.insert(pw.syls.end(), w.begin(), w.end());
  return is_string(p, pw);
}

std::vector<Syllable> inverse_word(const std::vector<Syllable>& w) {
  std::vector<Syllable> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

}  // namespace

BandCatalog enumerate_bands(const Presentation& p, size_t max_len) {
  if (max_len == 0) max_len = 4 * p.arrows.size();
  BandCatalog cat;
  std::set<std::vector<Syllable>> found;

  // DFS over strings grown at the written-left end.
  std::vector<Syllable> stack;
  std::function<void(Str&)> dfs = [&](Str& w) {
    if (w.size() == max_len) return;
    for (Syllable s : left_extensions(p, w)) {
      w.syls.push_back(s);
      if (w.size() >= 2 && start_vertex(p, w) == end_vertex(p, w) && delta(w) == 0 &&
          primitive(w.syls) && cyclic_string(p, w.syls))
        found.insert(lex_min_rotation(w.syls));
      dfs(w);
      w.syls.pop_back();
    }
  };
  for (int a = 0; a < static_cast<int>(p.arrows.size()); ++a) {
    for (bool inv : {false, true}) {
      Str w;
      w.syls.push_back({a, inv});
      if (is_string(p, w)) dfs(w);
    }
  }

  for (const auto& rep : found) {
    if (2 * rep.size() > max_len) cat.complete = false;
    cat.bands.push_back(Band{rep});
  }
  cat.inverse_of.assign(cat.bands.size(), -1);
  for (size_t i = 0; i < cat.bands.size(); ++i) {
    auto inv = lex_min_rotation(inverse_word(cat.bands[i].rep));
    for (size_t j = 0; j < cat.bands.size(); ++j)
      if (cat.bands[j].rep == inv) cat.inverse_of[i] = static_cast<int>(j);
  }

  cat.domestic = true;
  for (size_t i = 0; i < cat.bands.size() && cat.domestic; ++i)
    for (size_t j = i; j < cat.bands.size() && cat.domestic; ++j)
      if (bands_commute(p, cat.bands[i], cat.bands[j])) cat.domestic = false;
  return cat;
}

bool bands_commute(const Presentation& p, const Band& b1, const Band& b2) {
  auto r1s = b1.rotations();
  auto r2s = b2.rotations();
  bool same = (b1 == b2);
  for (const auto& r1 : r1s) {
    for (const auto& r2 : r2s) {
      if (same && r1 == r2) continue;
      // written r1.r2 traverses r2 first; both products must be strings.
      Str a, b;
      a.syls = r2;
      a.syls.insert(a.syls.end(), r1.begin(), r1.end());
      b.syls = r1;
      b.syls.insert(b.syls.end(), r2.begin(), r2.end());
      if (is_string(p, a) && is_string(p, b)) return true;
    }
  }
  return false;
}

size_t band_power_at_top(const Presentation& p, const Band& b, const Str& y) {
  (void)p;
  size_t best = 0;
  for (const auto& r : b.rotations()) {
    size_t m = 0;
    size_t n = r.size();
    while ((m + 1) * n <= y.syls.size()) {
      bool ok = true;
      for (size_t i = 0; i < n && ok; ++i)
        ok = y.syls[y.syls.size() - (m + 1) * n + i] == r[i];
      if (!ok) break;
      ++m;
    }
    best = std::max(best, m);
  }
  return best;
}

}  // namespace stralg
