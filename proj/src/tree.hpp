#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hammock.hpp"
#include "pairs.hpp"

namespace stralg {

// ---- rays ------------------------------------------------------------------

// The f-value of a tree node: a finite string (torsion) or the N-string
// base . period^inf with the period aligned at |base|.
struct Ray {
  Str base;
  std::vector<Syllable> period;  // empty: finite ray

  bool finite() const { return period.empty(); }
  Syllable at(size_t k) const;        // k-th syllable (k < |base| or periodic)
  size_t known_size() const { return base.syls.size(); }
  Str expand(size_t len) const;       // prefix of length len (>= |base| ok)
  NString nstring() const;            // canonical form; finite rays disallowed
  bool operator==(const Ray&) const = default;
};

// Longest common left substring of two rays; requires that they diverge
// within the explored window (guaranteed for f-values of distinct nodes).
Str ray_meet(const Presentation& p, const Ray& a, const Ray& b);

// ---- decorated tree ---------------------------------------------------------

enum class NodeClass { Root, H, U, Z, R };

// r-data of the LVP (t(u), c(x0;u)) on the s- or b-side.
struct RData {
  bool defined = false;
  std::vector<Syllable> r1, rtilde, r2;  // traversal order
  std::vector<Syllable> r;               // r2 r1 = beta_tilde . r
  Syllable beta_tilde;
};

struct TreeNode {
  int id = -1;
  int parent = -1;
  int height = 0;
  NodeClass cls = NodeClass::Root;
  int phi = 0;

  Str label;                      // bridge word of the node (may be empty)
  Str h;                          // h(x0; P(u)); x0 for the root
  Ray f;                          // f(x0; u)
  Str c;                          // c(x0; u)
  int band = -1;                  // t(u) in the catalog; -1 torsion/root
  std::vector<Syllable> rot;      // rotation of t(u) aligned at |h|

  Syllable beta;                  // divergence syllable (height >= 1)
  Str fmeet_parent;               // f(x0; u, pi(u))
  std::vector<Syllable> bfa;      // b^{f alpha}(u): rotation with bfa.c a string
  std::vector<Syllable> bfb;      // b^{f beta}(u): rotation of s(u) (height>=2)
  std::vector<Syllable> w;        // fmeet_parent = w . c(parent) (height >= 2)
  std::vector<Syllable> wtilde;   // long: w = bfb . wtilde; short: w

  bool is_long = false;           // N(s(u), h) = 1 (height >= 2)
  PairClass sw_cls;               // LVP (s(u), wtilde . c(parent)) (height >= 2)
  bool tc_valid = false;          // LVP (t(u), c(u)) exists (band nodes)
  PairClass tc_cls;               // its classification
  RData rs, rb;                   // r-data on the s-/b-side when long

  int upsilon = 0;                // c(parent) vs c(u): +1 proper prefix, ...
  bool normal = false;            // fmeet_parent proper prefix of c(u)
  std::vector<Syllable> u_o;      // normal: c(u) = u_o . fmeet_parent

  std::vector<int> kids_pos, kids_neg;  // groups by theta(beta), sorted by ⊏
};

struct Tree {
  const Presentation* p = nullptr;
  const BandCatalog* cat = nullptr;
  HammockCtx ctx;
  Str x0;
  int i = 0;
  Str m;                        // m_i(x0)
  std::vector<TreeNode> nodes;  // nodes[0] = root

  const TreeNode& node(int id) const { return nodes[id]; }
  // Child group of sign j; for the root both j give the single group.
  const std::vector<int>& children(int id, int j) const;
};

Tree build_tree(const Presentation& p, const BandCatalog& cat, const Str& x0,
                int i);

// The paper-name rotation of a band: first traversal syllable inverse, last
// direct, lexicographically least among such.
std::vector<Syllable> band_word(const Presentation& p, const Band& b);

// N(b, y): 1 if some rotation of b occurs as a contiguous block of y's
// syllable vector, else 0 (asserts no two disjoint occurrences).
int n_substring(const Presentation& p, const Band& b, const Str& y);

// ---- pumped vertices ---------------------------------------------------------

// (u, (s_1..s_{h-1})): s_k copies of the height-k ancestor's band inserted
// above its h-string.  Height <= 1 nodes have no coordinates.
struct Pumped {
  int node = 0;
  std::vector<long> coords;
  bool operator==(const Pumped&) const = default;
};

Str pumped_h(const Tree& t, const Pumped& u);
Ray pumped_f(const Tree& t, const Pumped& u);
Pumped pumped_parent(const Tree& t, const Pumped& u);

// A pumped vertex exists only when its walk is a hammock element.
bool pumped_valid(const Tree& t, const Pumped& u);

// Neighbours in the b-tree sibling order: the pump families of all sibling
// bases interleave along the parent's line, ordered by their f-values.
std::optional<Pumped> pumped_fminus(const Tree& t, const Pumped& u);
Pumped pumped_fplus(const Tree& t, const Pumped& u);

// kappa_j: walk to the parent while phi(cur) == -j and cur has no f-.
Pumped kappa(const Tree& t, Pumped u, int j);

// The fundamental solution u^{l*j} and the fundamental fork u^{l*phi(u)}.
Str fundamental_fork(const Tree& t, const Pumped& u, int j);
Str fork_of(const Tree& t, const Pumped& u);

// All fundamental forks of length <= max_len (plus x0, plus m_i if short
// enough), sorted by <_l, with a witness pumped vertex for each.
std::vector<std::pair<Str, Pumped>> fork_set(const Tree& t, size_t max_len);

// ---- q-strings and signatures -------------------------------------------------

// Each q-string is returned as the pair (base, rhs) with base a left
// substring of rhs and q the difference; nullopt when the right-hand side is
// infinite (band node without the needed child group) or the base neighbour
// is missing.
// q_0: base = f(u, pi(u)), rhs = f(u, fmin-child of sign phi(u)) or f(x0;u).
std::optional<std::pair<Str, Str>> q_zero(const Tree& t, int id);
// q_phi: base = f(u, u^{f-}), same rhs as q_0; needs a real sibling f-.
std::optional<std::pair<Str, Str>> q_phi(const Tree& t, int id);
// q_{-phi}: base = f(u, u^{f+}), rhs from the group of sign -phi(u).
std::optional<std::pair<Str, Str>> q_mphi(const Tree& t, int id);

// Theta(base; y): theta of each piece of y cut above base at every proper
// left forking substring.
std::vector<int> theta_signature(const HammockCtx& ctx, const Str& base,
                                 const Str& y);

}  // namespace stralg
