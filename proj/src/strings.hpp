#pragma once

#include <optional>
#include <string>
#include <vector>

#include "presentation.hpp"

namespace stralg {

// One letter of a string: an arrow traversed forwards (direct, theta = -1)
// or backwards (inverse, theta = +1).
struct Syllable {
  int arrow = -1;
  bool inv = false;
  int theta() const { return inv ? +1 : -1; }
  Syllable inverse() const { return {arrow, !inv}; }
  bool operator==(const Syllable&) const = default;
  auto operator<=>(const Syllable&) const = default;
};

int src_of(const Presentation& p, Syllable s);  // vertex the syllable departs
int tgt_of(const Presentation& p, Syllable s);  // vertex the syllable reaches

// A finite string.  Syllables are kept in traversal order: index 0 is the
// first syllable, i.e. the written-rightmost one (the x0 end); appending to
// the vector extends the string at its written-left (growing) end.
// A trivial string has no syllables and carries its vertex and a marker sign.
struct Str {
  int triv_vertex = -1;
  int triv_marker = 0;  // +1 or -1 for genuine trivial strings, else 0
  std::vector<Syllable> syls;

  bool trivial() const { return syls.empty(); }
  size_t size() const { return syls.size(); }

  // First k syllables (the left substring of length k); keeps trivial info.
  Str prefix(size_t k) const;

  bool operator==(const Str&) const = default;
  auto operator<=>(const Str&) const = default;
};

int start_vertex(const Presentation& p, const Str& w);
int end_vertex(const Presentation& p, const Str& w);

// theta(x): +1 if the first syllable is inverse, -1 if direct, 0 if trivial.
int theta(const Str& w);
// delta(w): +1 if all syllables inverse, -1 if all direct (w nonempty), else 0.
int delta(const Str& w);

// Word/reducedness/relation-avoidance checks.  A trivial string is a string
// iff its vertex id is valid and its marker is +1 or -1.
bool is_string(const Presentation& p, const Str& w);

// All syllables alpha such that alpha . w is again a string.  For a trivial
// w the marker governs admission: when two arrows compete for the same
// theta-slot at the vertex, the lexicographically smaller arrow name extends
// the marker '-' trivial string and the larger extends '+'; a lone candidate
// extends both.
std::vector<Syllable> left_extensions(const Presentation& p, const Str& w);

// alpha . w if that is a string.
std::optional<Str> extend(const Presentation& p, const Str& w, Syllable alpha);

// Longest homogeneous right substring z of w (a suffix of the syllable
// vector) such that x . z lies in rho or rho^{-1} for some nonempty x;
// returns the number of syllables of z (possibly 0).
size_t rho_r_len(const Presentation& p, const Str& w);
Str rho_r(const Presentation& p, const Str& w);

// An N-string (one-sided infinite string) ∞(b).u: the traversal reads the
// finite tail u first, then the period b repeated forever.  Canonical form
// has the shortest possible tail and a primitive period.
struct NString {
  std::vector<Syllable> tail;
  std::vector<Syllable> period;
  bool operator==(const NString&) const = default;
};
NString canonical_nstring(std::vector<Syllable> tail, std::vector<Syllable> period);

// --- literals -------------------------------------------------------------
//
// Dotted form, written order (leftmost = last syllable): e.d'.e.c.a where '
// marks an inverse arrow.  Compact form (single-letter arrow names only):
// eDeca, uppercase = inverse.  Trivial: 1(<vertex>,+) or 1(<vertex>,-).
Str parse_string(const Presentation& p, const std::string& text);
std::string print_string(const Presentation& p, const Str& w, bool compact = true);
std::string print_nstring(const Presentation& p, const NString& n, bool compact = true);

}  // namespace stralg
