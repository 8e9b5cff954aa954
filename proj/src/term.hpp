#pragma once

#include <string>
#include <vector>

namespace stralg {

// Terms of the label calculus.  Concrete syntax:
//   l                    successor operator (class T_la)
//   L                    predecessor operator l-bar (class T_lb)
//   <a,b> / [a,b]        bracket / torsion bracket, args in display order
//   a*b*c                concatenation, the rightmost factor applies first
enum class TKind { L, Lbar, Sq, Br, Cat };

struct Term {
  TKind k = TKind::L;
  std::vector<Term> args;  // Sq/Br: exactly 2; Cat: >= 2 in display order
  bool operator==(const Term&) const = default;
};

Term t_l();
Term t_lbar();
Term t_br(Term first, Term second);
Term t_sq(Term first, Term second);
Term t_cat(std::vector<Term> display_parts);  // flattens nested Cats

// Simple-term classes La (T_la, contains l) and Lb (T_lb, contains l-bar);
// mixed terms alternate maximal same-class groups and are classified by the
// class of their rightmost (first-applied) group.
enum class TClass { La, Lb, MixedLa, MixedLb, Invalid };
TClass class_of(const Term& t);

// The involution: swaps l and l-bar componentwise; exchanges La and Lb.
Term iota(const Term& t);

// t * j: identity for j = +1; for j = -1 swaps l/l-bar and the two bracket
// arguments (and reverses concatenations).
Term star(const Term& t, int j);

// Normal form under the ≈-rewrites: bracket argument collapses
// (torsion-bracket arguments, powers) and concatenation absorptions.
Term normal_form(const Term& t);
bool equiv(const Term& a, const Term& b);

// Validity of the two-factor concatenation "left right" (right applies
// first), for factors of opposite simple class: left right is valid iff
// appending left's order type onto iota(right) absorbs, i.e.
// left . iota(right) ≈ iota(right).  Same-class factors are always valid.
bool valid_concat(const Term& left, const Term& right);

Term parse_term(const std::string& text);
std::string print_term(const Term& t);

// ---- order types -----------------------------------------------------------

// Finitely presented bounded discrete linear orders: n | w{L} | w*{L} | sums.
struct LinOrd {
  enum Kind { Fin, W, Wstar, Sum } k = Fin;
  long n = 0;                // Fin
  std::vector<LinOrd> parts; // W/Wstar: 1; Sum: bottom-to-top
  bool operator==(const LinOrd&) const = default;
};

LinOrd lo_fin(long n);
LinOrd lo_w(LinOrd inner);
LinOrd lo_wstar(LinOrd inner);
LinOrd lo_sum(std::vector<LinOrd> parts);  // flattens, merges adjacent Fin

LinOrd order_type(const Term& t);

std::string print_linord(const LinOrd& L);
LinOrd parse_linord(const std::string& text);

bool lo_nonempty(const LinOrd& L);
bool lo_has_least(const LinOrd& L);
bool lo_has_greatest(const LinOrd& L);
bool is_bounded_discrete(const LinOrd& L);

// Number of elements among the first K from the bottom/top: min(K, |L|).
size_t lo_count_from(const LinOrd& L, bool bottom, size_t K);

// Addresses of the first K elements from one end of a bounded discrete
// order, in order from that end.
std::vector<std::string> linearize(const LinOrd& L, bool bottom, size_t K);

}  // namespace stralg
