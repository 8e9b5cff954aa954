#include "presentation.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace stralg {

int Presentation::vertex_id(const std::string& v) const {
  for (size_t i = 0; i < vertices.size(); ++i)
    if (vertices[i] == v) return static_cast<int>(i);
  return -1;
}

int Presentation::arrow_id(const std::string& a) const {
  for (size_t i = 0; i < arrows.size(); ++i)
    if (arrows[i].name == a) return static_cast<int>(i);
  return -1;
}

size_t Presentation::max_relation_len() const {
  size_t m = 0;
  for (const auto& r : relations) m = std::max(m, r.size());
  return m;
}

bool Presentation::compact_names() const {
  for (const auto& a : arrows)
    if (a.name.size() != 1 || !std::islower(static_cast<unsigned char>(a.name[0])))
      return false;
  return true;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

[[noreturn]] void fail(int lineno, const std::string& msg) {
  throw std::runtime_error("presentation:" + std::to_string(lineno) + ": " + msg);
}

}  // namespace

Presentation parse_presentation(const std::string& text) {
  Presentation p;
  std::istringstream is(text);
  std::string line;
  int lineno = 0;
  bool saw_algebra = false, saw_vertices = false;
  std::vector<std::pair<int, std::string>> relation_words;  // parsed after arrows
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& kw = toks[0];
    if (kw == "algebra") {
      if (toks.size() != 2) fail(lineno, "expected: algebra <name>");
      p.name = toks[1];
      saw_algebra = true;
    } else if (kw == "vertices") {
      if (toks.size() < 2) fail(lineno, "expected at least one vertex");
      for (size_t i = 1; i < toks.size(); ++i) {
        if (p.vertex_id(toks[i]) >= 0) fail(lineno, "duplicate vertex " + toks[i]);
        p.vertices.push_back(toks[i]);
      }
      saw_vertices = true;
    } else if (kw == "arrow") {
      if (toks.size() != 4) fail(lineno, "expected: arrow <name> <src> <dst>");
      if (p.arrow_id(toks[1]) >= 0) fail(lineno, "duplicate arrow " + toks[1]);
      int s = p.vertex_id(toks[2]), d = p.vertex_id(toks[3]);
      if (s < 0) fail(lineno, "unknown vertex " + toks[2]);
      if (d < 0) fail(lineno, "unknown vertex " + toks[3]);
      p.arrows.push_back(Arrow{toks[1], s, d});
    } else if (kw == "relations") {
      for (size_t i = 1; i < toks.size(); ++i)
        relation_words.emplace_back(lineno, toks[i]);
    } else {
      fail(lineno, "unknown keyword '" + kw + "'");
    }
  }
  if (!saw_algebra) throw std::runtime_error("presentation: missing 'algebra' line");
  if (!saw_vertices) throw std::runtime_error("presentation: missing 'vertices' line");

  for (auto& [ln, word] : relation_words) {
    // The word lists arrows target-side first ("c.b" = traverse b, then c);
    // undotted words are allowed when all arrow names are single characters.
    std::vector<std::string> parts;
    if (word.find('.') != std::string::npos) {
      std::string cur;
      for (char ch : word + ".") {
        if (ch == '.') {
          if (cur.empty()) fail(ln, "empty component in relation '" + word + "'");
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += ch;
        }
      }
    } else {
      for (char ch : word) parts.push_back(std::string(1, ch));
    }
    std::vector<int> rel;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      int a = p.arrow_id(*it);
      if (a < 0) fail(ln, "unknown arrow '" + *it + "' in relation '" + word + "'");
      rel.push_back(a);
    }
    for (size_t i = 0; i + 1 < rel.size(); ++i)
      if (p.arrow(rel[i]).dst != p.arrow(rel[i + 1]).src)
        fail(ln, "relation '" + word + "' is not a path");
    p.relations.push_back(std::move(rel));
  }
  return p;
}

std::string print_presentation(const Presentation& p) {
  std::ostringstream os;
  os << "algebra " << p.name << "\n";
  os << "vertices";
  for (const auto& v : p.vertices) os << " " << v;
  os << "\n";
  for (const auto& a : p.arrows)
    os << "arrow " << a.name << " " << p.vertices[static_cast<size_t>(a.src)] << " "
       << p.vertices[static_cast<size_t>(a.dst)] << "\n";
  if (!p.relations.empty()) {
    os << "relations";
    for (const auto& r : p.relations) {
      os << " ";
      for (auto it = r.rbegin(); it != r.rend(); ++it) {
        if (it != r.rbegin()) os << ".";
        os << p.arrow(*it).name;
      }
    }
    os << "\n";
  }
  return os.str();
}

namespace {

std::string rel_word(const Presentation& p, const std::vector<int>& r) {
  std::string w;
  for (auto it = r.rbegin(); it != r.rend(); ++it) {
    if (!w.empty()) w += ".";
    w += p.arrow(*it).name;
  }
  return w;
}

bool is_subpath(const std::vector<int>& small, const std::vector<int>& big) {
  if (small.size() > big.size()) return false;
  for (size_t off = 0; off + small.size() <= big.size(); ++off)
    if (std::equal(small.begin(), small.end(), big.begin() + static_cast<long>(off)))
      return true;
  return false;
}

}  // namespace

std::vector<ValidationIssue> validate_string_algebra(const Presentation& p) {
  std::vector<ValidationIssue> issues;
  auto add = [&](const std::string& m) { issues.push_back({m}); };

  for (const auto& r : p.relations)
    if (r.size() < 2) add("relation " + rel_word(p, r) + " has length < 2");
  for (size_t i = 0; i < p.relations.size(); ++i)
    for (size_t j = 0; j < p.relations.size(); ++j)
      if (i != j && is_subpath(p.relations[i], p.relations[j]) &&
          !(i > j && p.relations[i] == p.relations[j]))
        add("relation " + rel_word(p, p.relations[i]) + " is a subpath of " +
            rel_word(p, p.relations[j]));

  for (size_t v = 0; v < p.vertices.size(); ++v) {
    int in = 0, out = 0;
    for (const auto& a : p.arrows) {
      if (a.src == static_cast<int>(v)) ++out;
      if (a.dst == static_cast<int>(v)) ++in;
    }
    if (out > 2) add("vertex " + p.vertices[v] + " has more than 2 outgoing arrows");
    if (in > 2) add("vertex " + p.vertices[v] + " has more than 2 incoming arrows");
  }

  auto rel2 = [&](int first, int second) {  // path: first then second
    for (const auto& r : p.relations)
      if (r.size() == 2 && r[0] == first && r[1] == second) return true;
    return false;
  };
  int n = static_cast<int>(p.arrows.size());
  for (int b = 0; b < n; ++b) {
    int succ = 0, pred = 0;
    for (int c = 0; c < n; ++c) {
      if (p.arrow(c).src == p.arrow(b).dst && !rel2(b, c)) ++succ;
      if (p.arrow(c).dst == p.arrow(b).src && !rel2(c, b)) ++pred;
    }
    if (succ > 1)
      add("arrow " + p.arrow(b).name + " has more than one continuation c with cb not a relation");
    if (pred > 1)
      add("arrow " + p.arrow(b).name + " has more than one d with bd not a relation");
  }

  // Relation-free directed cycle detection: walk the graph of "recent arrow
  // windows" (the last maxrel-1 arrows of a direct path avoiding relations);
  // any cycle in it yields an infinite relation-free direct path and vice versa.
  size_t win = p.max_relation_len() == 0 ? 1 : p.max_relation_len() - 1;
  win = std::max<size_t>(win, 1);
  std::map<std::vector<int>, int> color;  // 0/absent = white, 1 = grey, 2 = black
  bool cycle = false;
  auto has_relation_suffix = [&](const std::vector<int>& path) {
    for (const auto& r : p.relations) {
      if (r.size() > path.size()) continue;
      if (std::equal(r.begin(), r.end(), path.end() - static_cast<long>(r.size())))
        return true;
    }
    return false;
  };
  std::function<void(const std::vector<int>&)> dfs = [&](const std::vector<int>& state) {
    if (cycle) return;
    color[state] = 1;
    for (int c = 0; c < n; ++c) {
      if (p.arrow(c).src != p.arrow(state.back()).dst) continue;
      std::vector<int> ext = state;
      ext.push_back(c);
      if (has_relation_suffix(ext)) continue;
      if (ext.size() > win) ext.erase(ext.begin());
      auto it = color.find(ext);
      if (it != color.end() && it->second == 1) {
        cycle = true;
        return;
      }
      if (it == color.end() || it->second == 0) dfs(ext);
    }
    color[state] = 2;
  };
  for (int a = 0; a < n && !cycle; ++a) {
    std::vector<int> s{a};
    if (!color.count(s)) dfs(s);
  }
  if (cycle) add("quiver has a directed cycle avoiding all relations");

  return issues;
}

}  // namespace stralg
