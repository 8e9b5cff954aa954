#pragma once

#include <optional>
#include <string>
#include <vector>

namespace stralg {

struct Arrow {
  std::string name;
  int src = -1;  // vertex id
  int dst = -1;  // vertex id
};

// A presentation of a (candidate) string algebra: quiver plus monomial
// relations.  Relations are stored in traversal order: the relation written
// "c.b" (target-side arrow first, as paths compose right-to-left) is the path
// that traverses b first, then c, and is stored as the arrow-id vector [b, c].
struct Presentation {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<int>> relations;

  int vertex_id(const std::string& v) const;
  int arrow_id(const std::string& a) const;
  const Arrow& arrow(int id) const { return arrows[static_cast<size_t>(id)]; }

  size_t max_relation_len() const;

  // True when every arrow name is a single lowercase letter, which enables
  // the compact string literal syntax (uppercase letter = inverse arrow).
  bool compact_names() const;
};

// Parses the plain-text presentation format:
//   algebra <name>
//   vertices <v>+
//   arrow <name> <src> <dst>
//   relations <word>+          (words dotted, target-side arrow first)
// Blank lines and '#' comments are ignored; "relations" may recur or be absent.
// Throws std::runtime_error with a line-numbered message on malformed input.
Presentation parse_presentation(const std::string& text);

// Serializes back to the textual format above.
std::string print_presentation(const Presentation& p);

struct ValidationIssue {
  std::string message;
};

// Checks the string-algebra axioms:
//  - every relation is a path of length >= 2, with no relation a subpath of
//    another (relations form an antichain; duplicates rejected),
//  - at most 2 arrows in and at most 2 arrows out of each vertex,
//  - for each arrow b, at most one arrow c with cb not in rho, and at most
//    one arrow d with bd not in rho (only length-2 relations matter here),
//  - no directed cycle that can be traversed forever without completing a
//    relation (guarantees maximal direct/inverse extension terminates).
// Returns the empty vector iff the presentation is a string algebra.
std::vector<ValidationIssue> validate_string_algebra(const Presentation& p);

}  // namespace stralg
