#include "term.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace stralg {

Term t_l() { return Term{TKind::L, {}}; }
Term t_lbar() { return Term{TKind::Lbar, {}}; }
Term t_br(Term first, Term second) { return Term{TKind::Br, {std::move(first), std::move(second)}}; }
Term t_sq(Term first, Term second) { return Term{TKind::Sq, {std::move(first), std::move(second)}}; }

Term t_cat(std::vector<Term> display_parts) {
  std::vector<Term> flat;
  for (auto& t : display_parts) {
    if (t.k == TKind::Cat)
      for (auto& s : t.args) flat.push_back(std::move(s));
    else
      flat.push_back(std::move(t));
  }
  if (flat.size() == 1) return flat[0];
  return Term{TKind::Cat, std::move(flat)};
}

namespace {

bool simple(TClass c) { return c == TClass::La || c == TClass::Lb; }

TClass opposite(TClass c) { return c == TClass::La ? TClass::Lb : TClass::La; }

}  // namespace

TClass class_of(const Term& t) {
  switch (t.k) {
    case TKind::L:
      return TClass::La;
    case TKind::Lbar:
      return TClass::Lb;
    case TKind::Sq:
    case TKind::Br: {
      if (t.args.size() != 2) return TClass::Invalid;
      TClass f = class_of(t.args[0]), s = class_of(t.args[1]);
      if (f == TClass::Lb && s == TClass::La) return TClass::La;
      if (f == TClass::La && s == TClass::Lb) return TClass::Lb;
      return TClass::Invalid;
    }
    case TKind::Cat: {
      if (t.args.size() < 2) return TClass::Invalid;
      // Group maximal same-class runs from the right (first applied).
      std::vector<TClass> groups;
      for (auto it = t.args.rbegin(); it != t.args.rend(); ++it) {
        TClass c = class_of(*it);
        if (!simple(c)) return TClass::Invalid;
        if (groups.empty() || groups.back() != c) groups.push_back(c);
      }
      for (size_t i = 1; i < groups.size(); ++i)
        if (groups[i] == groups[i - 1]) return TClass::Invalid;
      if (groups.size() == 1) return groups[0];
      return groups[0] == TClass::La ? TClass::MixedLa : TClass::MixedLb;
    }
  }
  return TClass::Invalid;
}

Term iota(const Term& t) {
  switch (t.k) {
    case TKind::L:
      return t_lbar();
    case TKind::Lbar:
      return t_l();
    case TKind::Sq:
      return t_sq(iota(t.args[0]), iota(t.args[1]));
    case TKind::Br:
      return t_br(iota(t.args[0]), iota(t.args[1]));
    case TKind::Cat: {
      std::vector<Term> parts;
      for (const auto& a : t.args) parts.push_back(iota(a));
      return t_cat(std::move(parts));
    }
  }
  return t;
}

Term star(const Term& t, int j) {
  if (j >= 0) return t;
  switch (t.k) {
    case TKind::L:
      return t_lbar();
    case TKind::Lbar:
      return t_l();
    case TKind::Sq:
      return t_sq(star(t.args[1], j), star(t.args[0], j));
    case TKind::Br:
      return t_br(star(t.args[1], j), star(t.args[0], j));
    case TKind::Cat: {
      std::vector<Term> parts;
      for (auto it = t.args.rbegin(); it != t.args.rend(); ++it) parts.push_back(star(*it, j));
      return t_cat(std::move(parts));
    }
  }
  return t;
}

namespace {

// One top-level rewrite pass; args are already in normal form.
Term rewrite_once(const Term& t, bool& changed) {
  if (t.k == TKind::Sq || t.k == TKind::Br) {
    Term out = t;
    for (Term& a : out.args) {
      // <mu, tau^m> ≈ <mu, tau>: collapse power arguments.
      if (a.k == TKind::Cat &&
          std::all_of(a.args.begin(), a.args.end(), [&](const Term& x) { return x == a.args[0]; })) {
        a = a.args[0];
        changed = true;
      }
      // <mu,[L,l]> ≈ <mu,l> etc.: a torsion bracket used as a bracket
      // argument collapses to its second (first-applied) component.
      if (t.k == TKind::Br && a.k == TKind::Sq) {
        a = a.args[1];
        changed = true;
      }
    }
    return out;
  }
  if (t.k == TKind::Cat) {
    std::vector<Term> parts = t.args;
    for (size_t i = 0; i + 1 < parts.size(); ++i) {
      const Term& A = parts[i];
      const Term& B = parts[i + 1];
      // <mu,tau> tau ≈ <mu,tau>: drop a factor equal to the bracket's
      // first-applied argument.
      if (A.k == TKind::Br && B == A.args[1]) {
        parts.erase(parts.begin() + static_cast<long>(i) + 1);
        changed = true;
        break;
      }
      // iota(mu) <mu,tau> ≈ <mu,tau>: drop the left factor.
      if (B.k == TKind::Br && A == iota(B.args[0])) {
        parts.erase(parts.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    return t_cat(std::move(parts));
  }
  return t;
}

}  // namespace

Term normal_form(const Term& t) {
  Term cur = t;
  if (!cur.args.empty()) {
    for (Term& a : cur.args) a = normal_form(a);
    if (cur.k == TKind::Cat) cur = t_cat(std::move(cur.args));
  }
  for (;;) {
    bool changed = false;
    Term nxt = rewrite_once(cur, changed);
    if (nxt.k != cur.k || changed) {
      // Renormalize children after structural change, then continue.
      if (!nxt.args.empty())
        for (Term& a : nxt.args) a = normal_form(a);
      cur = std::move(nxt);
      if (!changed) break;
    } else {
      break;
    }
  }
  return cur;
}

bool equiv(const Term& a, const Term& b) { return normal_form(a) == normal_form(b); }

bool valid_concat(const Term& left, const Term& right) {
  TClass cl = class_of(left), cr = class_of(right);
  if (!simple(cl) || !simple(cr)) return false;
  if (cl == cr) return true;
  Term probe = t_cat({left, iota(right)});
  return equiv(probe, iota(right));
}

// ---- parser / printer ------------------------------------------------------

namespace {

struct TermParser {
  const std::string& s;
  size_t i = 0;

  void ws() {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
  }
  [[noreturn]] void die(const std::string& m) {
    throw std::runtime_error("term: " + m + " at position " + std::to_string(i));
  }
  Term factor() {
    ws();
    if (i >= s.size()) die("unexpected end");
    char c = s[i];
    if (c == 'l') {
      ++i;
      return t_l();
    }
    if (c == 'L') {
      ++i;
      return t_lbar();
    }
    if (c == '<' || c == '[') {
      char close = c == '<' ? '>' : ']';
      ++i;
      Term a = term();
      ws();
      if (i >= s.size() || s[i] != ',') die("expected ','");
      ++i;
      Term b = term();
      ws();
      if (i >= s.size() || s[i] != close) die(std::string("expected '") + close + "'");
      ++i;
      return c == '<' ? t_br(std::move(a), std::move(b)) : t_sq(std::move(a), std::move(b));
    }
    die("unexpected character");
  }
  Term term() {
    std::vector<Term> parts{factor()};
    for (;;) {
      ws();
      if (i < s.size() && s[i] == '*') {
        ++i;
        parts.push_back(factor());
      } else {
        break;
      }
    }
    return t_cat(std::move(parts));
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  TermParser p{text};
  Term t = p.term();
  p.ws();
  if (p.i != text.size()) p.die("trailing input");
  return t;
}

std::string print_term(const Term& t) {
  switch (t.k) {
    case TKind::L:
      return "l";
    case TKind::Lbar:
      return "L";
    case TKind::Br:
      return "<" + print_term(t.args[0]) + "," + print_term(t.args[1]) + ">";
    case TKind::Sq:
      return "[" + print_term(t.args[0]) + "," + print_term(t.args[1]) + "]";
    case TKind::Cat: {
      std::string out;
      for (const auto& a : t.args) {
        if (!out.empty()) out += "*";
        out += print_term(a);
      }
      return out;
    }
  }
  return "?";
}

// ---- order types -----------------------------------------------------------

LinOrd lo_fin(long n) { return LinOrd{LinOrd::Fin, n, {}}; }
LinOrd lo_w(LinOrd inner) { return LinOrd{LinOrd::W, 0, {std::move(inner)}}; }
LinOrd lo_wstar(LinOrd inner) { return LinOrd{LinOrd::Wstar, 0, {std::move(inner)}}; }

LinOrd lo_sum(std::vector<LinOrd> parts) {
  std::vector<LinOrd> flat;
  for (auto& p : parts) {
    if (p.k == LinOrd::Sum)
      for (auto& q : p.parts) flat.push_back(std::move(q));
    else
      flat.push_back(std::move(p));
  }
  std::vector<LinOrd> merged;
  for (auto& p : flat) {
    if (p.k == LinOrd::Fin && p.n == 0) continue;
    if (p.k == LinOrd::Fin && !merged.empty() && merged.back().k == LinOrd::Fin)
      merged.back().n += p.n;
    else
      merged.push_back(std::move(p));
  }
  if (merged.empty()) return lo_fin(0);
  if (merged.size() == 1) return merged[0];
  return LinOrd{LinOrd::Sum, 0, std::move(merged)};
}

LinOrd order_type(const Term& t) {
  switch (t.k) {
    case TKind::L:
    case TKind::Lbar:
    case TKind::Sq:
      return lo_fin(1);
    case TKind::Br:
      // OT(<first,second>) = w x OT(second) + w* x OT(first).
      return lo_sum({lo_w(order_type(t.args[1])), lo_wstar(order_type(t.args[0]))});
    case TKind::Cat: {
      // Rightmost maximal same-class group; same-class concatenation sums
      // from the first-applied factor upward, a mixed term keeps only the
      // order type of its first group.
      TClass c0 = class_of(t.args.back());
      std::vector<LinOrd> acc;
      for (auto it = t.args.rbegin(); it != t.args.rend(); ++it) {
        if (class_of(*it) != c0) break;
        acc.push_back(order_type(*it));
      }
      return lo_sum(std::move(acc));
    }
  }
  return lo_fin(0);
}

std::string print_linord(const LinOrd& L) {
  switch (L.k) {
    case LinOrd::Fin:
      return std::to_string(L.n);
    case LinOrd::W:
      return "w{" + print_linord(L.parts[0]) + "}";
    case LinOrd::Wstar:
      return "w*{" + print_linord(L.parts[0]) + "}";
    case LinOrd::Sum: {
      std::string out;
      for (const auto& p : L.parts) {
        if (!out.empty()) out += " + ";
        out += print_linord(p);
      }
      return out;
    }
  }
  return "?";
}

namespace {

struct LinOrdParser {
  const std::string& s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && s[i] == ' ') ++i;
  }
  [[noreturn]] void die(const std::string& m) {
    throw std::runtime_error("linord: " + m + " at position " + std::to_string(i));
  }
  LinOrd atom() {
    ws();
    if (i < s.size() && s[i] == 'w') {
      ++i;
      bool star = i < s.size() && s[i] == '*';
      if (star) ++i;
      if (i >= s.size() || s[i] != '{') die("expected '{'");
      ++i;
      LinOrd inner = sum();
      ws();
      if (i >= s.size() || s[i] != '}') die("expected '}'");
      ++i;
      return star ? lo_wstar(std::move(inner)) : lo_w(std::move(inner));
    }
    size_t j = i;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i) die("expected number or w");
    long n = std::stol(s.substr(i, j - i));
    i = j;
    return lo_fin(n);
  }
  LinOrd sum() {
    std::vector<LinOrd> parts{atom()};
    for (;;) {
      ws();
      if (i < s.size() && s[i] == '+') {
        ++i;
        parts.push_back(atom());
      } else {
        break;
      }
    }
    return lo_sum(std::move(parts));
  }
};

}  // namespace

LinOrd parse_linord(const std::string& text) {
  LinOrdParser p{text};
  LinOrd L = p.sum();
  p.ws();
  if (p.i != text.size()) p.die("trailing input");
  return L;
}

bool lo_nonempty(const LinOrd& L) {
  switch (L.k) {
    case LinOrd::Fin:
      return L.n > 0;
    case LinOrd::W:
    case LinOrd::Wstar:
      return lo_nonempty(L.parts[0]);
    case LinOrd::Sum:
      return std::any_of(L.parts.begin(), L.parts.end(), lo_nonempty);
  }
  return false;
}

bool lo_has_least(const LinOrd& L) {
  switch (L.k) {
    case LinOrd::Fin:
      return L.n > 0;
    case LinOrd::W:
      return lo_has_least(L.parts[0]);
    case LinOrd::Wstar:
      return false;
    case LinOrd::Sum:
      for (const auto& p : L.parts)
        if (lo_nonempty(p)) return lo_has_least(p);
      return false;
  }
  return false;
}

bool lo_has_greatest(const LinOrd& L) {
  switch (L.k) {
    case LinOrd::Fin:
      return L.n > 0;
    case LinOrd::W:
      return false;
    case LinOrd::Wstar:
      return lo_has_greatest(L.parts[0]);
    case LinOrd::Sum:
      for (auto it = L.parts.rbegin(); it != L.parts.rend(); ++it)
        if (lo_nonempty(*it)) return lo_has_greatest(*it);
      return false;
  }
  return false;
}

namespace {

// Internal discreteness: every element has an immediate successor or is the
// top, and dually.  At a junction A then B this holds iff A having a greatest
// element is equivalent to B having a least one.
bool lo_discrete(const LinOrd& L) {
  switch (L.k) {
    case LinOrd::Fin:
      return true;
    case LinOrd::W:
    case LinOrd::Wstar: {
      const LinOrd& I = L.parts[0];
      if (!lo_nonempty(I)) return true;
      return lo_discrete(I) && lo_has_least(I) == lo_has_greatest(I);
    }
    case LinOrd::Sum: {
      const LinOrd* prev = nullptr;
      for (const auto& p : L.parts) {
        if (!lo_nonempty(p)) continue;
        if (!lo_discrete(p)) return false;
        if (prev && lo_has_greatest(*prev) != lo_has_least(p)) return false;
        prev = &p;
      }
      return true;
    }
  }
  return true;
}

}  // namespace

bool is_bounded_discrete(const LinOrd& L) {
  return lo_nonempty(L) && lo_has_least(L) && lo_has_greatest(L) && lo_discrete(L);
}

size_t lo_count_from(const LinOrd& L, bool bottom, size_t K) {
  (void)bottom;  // cardinality of the prefix is end-independent
  switch (L.k) {
    case LinOrd::Fin:
      return std::min<size_t>(K, static_cast<size_t>(std::max(0L, L.n)));
    case LinOrd::W:
    case LinOrd::Wstar:
      return lo_nonempty(L.parts[0]) ? K : 0;
    case LinOrd::Sum: {
      size_t total = 0;
      for (const auto& p : L.parts) {
        total += lo_count_from(p, bottom, K - total);
        if (total >= K) return K;
      }
      return total;
    }
  }
  return 0;
}

namespace {

void linearize_into(const LinOrd& L, bool bottom, size_t K, const std::string& pre,
                    std::vector<std::string>& out) {
  if (out.size() >= K || !lo_nonempty(L)) return;
  switch (L.k) {
    case LinOrd::Fin:
      for (long t = 0; t < L.n && out.size() < K; ++t)
        out.push_back(pre + std::to_string(bottom ? t : L.n - 1 - t));
      return;
    case LinOrd::W:
    case LinOrd::Wstar: {
      bool from_open_end = (L.k == LinOrd::W) != bottom;
      if (from_open_end)
        throw std::runtime_error("linearize: enumeration from an open end");
      for (size_t c = 0; out.size() < K; ++c)
        linearize_into(L.parts[0], bottom, K, pre + "c" + std::to_string(c) + ".", out);
      return;
    }
    case LinOrd::Sum: {
      for (size_t idx = 0; idx < L.parts.size() && out.size() < K; ++idx) {
        const LinOrd& p = L.parts[bottom ? idx : L.parts.size() - 1 - idx];
        linearize_into(p, bottom, K, pre + "p" + std::to_string(idx) + ".", out);
      }
      return;
    }
  }
}

}  // namespace

std::vector<std::string> linearize(const LinOrd& L, bool bottom, size_t K) {
  std::vector<std::string> out;
  linearize_into(L, bottom, K, "", out);
  return out;
}

}  // namespace stralg
