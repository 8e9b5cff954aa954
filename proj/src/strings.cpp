#include "strings.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace stralg {

int src_of(const Presentation& p, Syllable s) {
  const Arrow& a = p.arrow(s.arrow);
  return s.inv ? a.dst : a.src;
}

int tgt_of(const Presentation& p, Syllable s) {
  const Arrow& a = p.arrow(s.arrow);
  return s.inv ? a.src : a.dst;
}

Str Str::prefix(size_t k) const {
  Str out = *this;
  out.syls.resize(std::min(k, syls.size()));
  return out;
}

int start_vertex(const Presentation& p, const Str& w) {
  return w.trivial() ? w.triv_vertex : src_of(p, w.syls.front());
}

int end_vertex(const Presentation& p, const Str& w) {
  return w.trivial() ? w.triv_vertex : tgt_of(p, w.syls.back());
}

int theta(const Str& w) { return w.trivial() ? 0 : w.syls.front().theta(); }

int delta(const Str& w) {
  if (w.trivial()) return 0;
  bool all_inv = true, all_dir = true;
  for (auto s : w.syls) (s.inv ? all_dir : all_inv) = false;
  return all_inv ? +1 : (all_dir ? -1 : 0);
}

namespace {

// Does the traversal-final segment of syls complete a relation or an inverse
// relation?  Only windows ending at the last syllable are inspected.
bool forbidden_suffix(const Presentation& p, const std::vector<Syllable>& syls) {
  for (const auto& r : p.relations) {
    size_t k = r.size();
    if (k > syls.size()) continue;
    bool dir = true, inv = true;
    for (size_t i = 0; i < k && (dir || inv); ++i) {
      const Syllable& s = syls[syls.size() - k + i];
      if (s.inv || s.arrow != r[i]) dir = false;
      if (!s.inv || s.arrow != r[k - 1 - i]) inv = false;
    }
    if (dir || inv) return true;
  }
  return false;
}

}  // namespace

bool is_string(const Presentation& p, const Str& w) {
  if (w.trivial())
    return w.triv_vertex >= 0 && w.triv_vertex < static_cast<int>(p.vertices.size()) &&
           (w.triv_marker == +1 || w.triv_marker == -1);
  for (const auto& s : w.syls)
    if (s.arrow < 0 || s.arrow >= static_cast<int>(p.arrows.size())) return false;
  for (size_t i = 0; i + 1 < w.syls.size(); ++i) {
    if (tgt_of(p, w.syls[i]) != src_of(p, w.syls[i + 1])) return false;
    if (w.syls[i + 1] == w.syls[i].inverse()) return false;
  }
  for (size_t k = 2; k <= w.syls.size(); ++k) {
    std::vector<Syllable> head(w.syls.begin(), w.syls.begin() + static_cast<long>(k));
    if (forbidden_suffix(p, head)) return false;
  }
  return true;
}

std::vector<Syllable> left_extensions(const Presentation& p, const Str& w) {
  std::vector<Syllable> out;
  int at = end_vertex(p, w);
  if (!w.trivial()) {
    for (int a = 0; a < static_cast<int>(p.arrows.size()); ++a) {
      for (bool inv : {false, true}) {
        Syllable s{a, inv};
        if (src_of(p, s) != at) continue;
        if (s == w.syls.back().inverse()) continue;
        std::vector<Syllable> ext = w.syls;
        ext.push_back(s);
        if (!forbidden_suffix(p, ext)) out.push_back(s);
      }
    }
    return out;
  }
  // Trivial string: split competing candidates of equal theta by the marker.
  for (bool inv : {false, true}) {
    std::vector<Syllable> cands;
    for (int a = 0; a < static_cast<int>(p.arrows.size()); ++a) {
      Syllable s{a, inv};
      if (src_of(p, s) == at) cands.push_back(s);
    }
    std::sort(cands.begin(), cands.end(), [&](Syllable x, Syllable y) {
      return p.arrow(x.arrow).name < p.arrow(y.arrow).name;
    });
    if (cands.size() == 1) {
      out.push_back(cands[0]);
    } else if (cands.size() >= 2) {
      // Lexicographically smaller arrow extends the '-' trivial string.
      out.push_back(w.triv_marker < 0 ? cands[0] : cands[1]);
    }
  }
  return out;
}

std::optional<Str> extend(const Presentation& p, const Str& w, Syllable alpha) {
  auto exts = left_extensions(p, w);
  if (std::find(exts.begin(), exts.end(), alpha) == exts.end()) return std::nullopt;
  Str out = w;
  out.syls.push_back(alpha);
  return out;
}

size_t rho_r_len(const Presentation& p, const Str& w) {
  size_t best = 0;
  for (size_t m = 1; m <= w.syls.size(); ++m) {
    auto z = std::vector<Syllable>(w.syls.end() - static_cast<long>(m), w.syls.end());
    bool dir = std::all_of(z.begin(), z.end(), [](Syllable s) { return !s.inv; });
    bool inv = std::all_of(z.begin(), z.end(), [](Syllable s) { return s.inv; });
    if (!dir && !inv) break;
    for (const auto& r : p.relations) {
      if (r.size() <= m) continue;
      bool ok = true;
      for (size_t i = 0; i < m && ok; ++i)
        ok = dir ? (z[i].arrow == r[i]) : (z[i].arrow == r[r.size() - 1 - i]);
      if (ok) {
        best = std::max(best, m);
        break;
      }
    }
  }
  return best;
}

Str rho_r(const Presentation& p, const Str& w) {
  size_t m = rho_r_len(p, w);
  Str out;
  out.syls.assign(w.syls.end() - static_cast<long>(m), w.syls.end());
  if (out.syls.empty()) out.triv_vertex = end_vertex(p, w);
  return out;
}

NString canonical_nstring(std::vector<Syllable> tail, std::vector<Syllable> period) {
  if (period.empty()) throw std::invalid_argument("NString with empty period");
  // Primitive period.
  for (size_t d = 1; d < period.size(); ++d) {
    if (period.size() % d != 0) continue;
    bool rep = true;
    for (size_t i = d; i < period.size() && rep; ++i) rep = (period[i] == period[i - d]);
    if (rep) {
      period.resize(d);
      break;
    }
  }
  // Shortest tail: absorb matching syllables into a rotated period.
  while (!tail.empty() && tail.back() == period.back()) {
    tail.pop_back();
    std::rotate(period.rbegin(), period.rbegin() + 1, period.rend());
  }
  return NString{std::move(tail), std::move(period)};
}

namespace {

std::string syllable_text(const Presentation& p, Syllable s, bool compact) {
  const std::string& n = p.arrow(s.arrow).name;
  if (compact) {
    char c = n[0];
    return std::string(1, s.inv ? static_cast<char>(std::toupper(c)) : c);
  }
  return s.inv ? n + "'" : n;
}

std::string word_text(const Presentation& p, const std::vector<Syllable>& syls, bool compact) {
  compact = compact && p.compact_names();
  std::string out;
  for (auto it = syls.rbegin(); it != syls.rend(); ++it) {
    if (!out.empty() && !compact) out += ".";
    out += syllable_text(p, *it, compact);
  }
  return out;
}

}  // namespace

Str parse_string(const Presentation& p, const std::string& text) {
  if (text.rfind("1(", 0) == 0) {
    if (text.back() != ')') throw std::runtime_error("bad trivial string literal: " + text);
    std::string body = text.substr(2, text.size() - 3);
    auto comma = body.rfind(',');
    if (comma == std::string::npos) throw std::runtime_error("bad trivial string literal: " + text);
    std::string v = body.substr(0, comma), sign = body.substr(comma + 1);
    Str out;
    out.triv_vertex = p.vertex_id(v);
    if (out.triv_vertex < 0) throw std::runtime_error("unknown vertex in literal: " + text);
    if (sign == "+")
      out.triv_marker = +1;
    else if (sign == "-")
      out.triv_marker = -1;
    else
      throw std::runtime_error("bad marker in literal: " + text);
    return out;
  }
  std::vector<Syllable> written;  // leftmost-first
  if (text.find('.') != std::string::npos) {
    std::string cur;
    for (char ch : text + ".") {
      if (ch != '.') {
        cur += ch;
        continue;
      }
      if (cur.empty()) throw std::runtime_error("empty component in literal: " + text);
      bool inv = cur.back() == '\'';
      if (inv) cur.pop_back();
      int a = p.arrow_id(cur);
      if (a < 0) throw std::runtime_error("unknown arrow '" + cur + "' in literal: " + text);
      written.push_back({a, inv});
      cur.clear();
    }
  } else {
    if (!p.compact_names())
      throw std::runtime_error("compact literal needs single-letter arrow names: " + text);
    for (char ch : text) {
      bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
      int a = p.arrow_id(std::string(1, static_cast<char>(std::tolower(static_cast<unsigned char>(ch)))));
      if (a < 0) throw std::runtime_error(std::string("unknown arrow '") + ch + "' in literal: " + text);
      written.push_back({a, inv});
    }
  }
  Str out;
  out.syls.assign(written.rbegin(), written.rend());
  return out;
}

std::string print_string(const Presentation& p, const Str& w, bool compact) {
  if (w.trivial()) {
    std::string v = w.triv_vertex >= 0 ? p.vertices[static_cast<size_t>(w.triv_vertex)] : "?";
    return "1(" + v + "," + (w.triv_marker >= 0 ? "+" : "-") + ")";
  }
  return word_text(p, w.syls, compact);
}

std::string print_nstring(const Presentation& p, const NString& n, bool compact) {
  std::string out = "inf(" + word_text(p, n.period, compact) + ")";
  if (!n.tail.empty()) out += word_text(p, n.tail, compact);
  return out;
}

}  // namespace stralg
