#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "term.hpp"

using namespace stralg;

static Term P(const std::string& s) { return parse_term(s); }
static std::string NF(const std::string& s) { return print_term(normal_form(P(s))); }

TEST_CASE("parser and printer round trip") {
  for (const char* s : {"l", "L", "<l,L>", "[L,l]", "<<L,l>,L>",
                        "L*<L,l>", "l*<l,L>*[l,L]", "<L*l,l>",
                        "L*<L,l>*<<L,l>,L>"}) {
    CAPTURE(s);
    CHECK(print_term(P(s)) == s);
    CHECK(P(print_term(P(s))) == P(s));
  }
  CHECK_THROWS(parse_term("<l>"));
  CHECK_THROWS(parse_term("l**l"));
  CHECK_THROWS(parse_term("x"));
}

TEST_CASE("classes") {
  CHECK(class_of(P("l")) == TClass::La);
  CHECK(class_of(P("L")) == TClass::Lb);
  CHECK(class_of(P("<L,l>")) == TClass::La);
  CHECK(class_of(P("<l,L>")) == TClass::Lb);
  CHECK(class_of(P("[L,l]")) == TClass::La);
  CHECK(class_of(P("<l,l>")) == TClass::Invalid);
  CHECK(class_of(P("l*<L,l>")) == TClass::La);        // same-class group
  CHECK(class_of(P("L*<L,l>")) == TClass::MixedLa);   // Lb group above La group
  CHECK(class_of(P("<L,l>*L")) == TClass::MixedLb);
  CHECK(class_of(P("L*<L,l>*<<L,l>,L>")) == TClass::MixedLb);
}

TEST_CASE("iota is a class-swapping involution") {
  for (const char* s : {"l", "L", "<L,l>", "[l,L]", "<<L,l>,L>",
                        "L*<L,l>", "L*<L,l>*<<L,l>,L>"}) {
    CAPTURE(s);
    Term t = P(s);
    CHECK(iota(iota(t)) == t);
    TClass c = class_of(t), ci = class_of(iota(t));
    if (c == TClass::La) CHECK(ci == TClass::Lb);
    if (c == TClass::Lb) CHECK(ci == TClass::La);
    if (c == TClass::MixedLa) CHECK(ci == TClass::MixedLb);
    // iota preserves order type
    CHECK(order_type(iota(t)) == order_type(t));
  }
  CHECK(print_term(iota(P("<l,L>"))) == "<L,l>");
  CHECK(print_term(iota(P("<L,l>"))) == "<l,L>");
}

TEST_CASE("star") {
  CHECK(star(P("<L,l>"), +1) == P("<L,l>"));
  CHECK(print_term(star(P("<L,l>"), -1)) == "<L,l>");  // args swapped, l/L swapped
  CHECK(print_term(star(P("<l,L>"), -1)) == "<l,L>");
  CHECK(print_term(star(P("<<L,l>,L>"), -1)) == "<l,<L,l>>");
  CHECK(print_term(star(P("L*<L,l>"), -1)) == "<L,l>*l");
}

TEST_CASE("rewrite collapses") {
  // generator absorptions (right factor applies first)
  CHECK(NF("<L,l>*l") == "<L,l>");          // bracket absorbs its second arg
  CHECK(NF("l*<L,l>") == "<L,l>");          // iota(first arg) before the bracket
  // no absorption rules for torsion brackets in concatenations
  CHECK(NF("[L,l]*l") == "[L,l]*l");
  CHECK(NF("l*[L,l]") == "l*[L,l]");
  // l-bar mirrors
  CHECK(NF("<l,L>*L") == "<l,L>");
  CHECK(NF("L*<l,L>") == "<l,L>");
  // torsion-bracket generators collapse inside an angle bracket
  CHECK(NF("<L,[L,l]>") == "<L,l>");
  CHECK(NF("<[l,L],l>") == "<L,l>");
  // powers inside a bracket argument collapse
  CHECK(NF("<L,l*l*l>") == "<L,l>");
  CHECK(NF("<L*L,l>") == "<L,l>");
  // angle brackets as arguments do not collapse, nor do torsion outers
  CHECK(NF("<L,<L,l>>") == "<L,<L,l>>");
  CHECK(NF("[L,[L,l]]") == "[L,[L,l]]");
  // no spurious collapses
  CHECK(NF("<<L,l>,L>") == "<<L,l>,L>");
  CHECK(NF("L*<L,l>*<<L,l>,L>") == "L*<L,l>*<<L,l>,L>");
  CHECK(NF("l*l") == "l*l");
  // equiv
  CHECK(equiv(P("<L,l>*l*l"), P("<L,l>")));
  CHECK(!equiv(P("<L,l>"), P("<l,L>")));
}

TEST_CASE("valid_concat") {
  // same class: always valid
  CHECK(valid_concat(P("l"), P("l")));
  CHECK(valid_concat(P("<L,l>"), P("l")));
  // opposite class, valid: L after <L,l>   (display "L*<L,l>")
  CHECK(valid_concat(P("L"), P("<L,l>")));
  // opposite class, valid: <L,l> after <<L,l>,L>
  CHECK(valid_concat(P("<L,l>"), P("<<L,l>,L>")));
  // opposite class, invalid: L after l
  CHECK(!valid_concat(P("L"), P("l")));
  CHECK(!valid_concat(P("l"), P("L")));
  // invalid: <l,L> after l  (iota(right)=L, <l,L>*L ≈ <l,L> != L)
  CHECK(!valid_concat(P("<l,L>"), P("l")));
}

TEST_CASE("order types") {
  CHECK(print_linord(order_type(P("l"))) == "1");
  CHECK(print_linord(order_type(P("<L,l>"))) == "w{1} + w*{1}");
  CHECK(print_linord(order_type(P("<<L,l>,L>"))) == "w{1} + w*{w{1} + w*{1}}");
  CHECK(print_linord(order_type(P("l*l*l"))) == "3");
  CHECK(print_linord(order_type(P("[L,l]"))) == "1");
  // mixed term: order type of the rightmost (first-applied) group
  CHECK(print_linord(order_type(P("L*<L,l>"))) == "w{1} + w*{1}");
  CHECK(print_linord(order_type(P("L*<L,l>*<<L,l>,L>")))
        == "w{1} + w*{w{1} + w*{1}}");
  CHECK(print_linord(order_type(P("L*l*<L,l>"))) == "w{1} + w*{1} + 1");
}

TEST_CASE("linord parse/print round trip") {
  for (const char* s : {"1", "5", "w{1}", "w*{1}", "w{1} + w*{w{1} + w*{1}}",
                        "2 + w{3} + w*{1} + 4"}) {
    CAPTURE(s);
    CHECK(print_linord(parse_linord(s)) == s);
  }
}

TEST_CASE("bounded discrete") {
  CHECK(is_bounded_discrete(parse_linord("1")));
  CHECK(is_bounded_discrete(parse_linord("w{1} + w*{1}")));
  CHECK(is_bounded_discrete(parse_linord("w{1} + w*{w{1} + w*{1}}")));
  CHECK(is_bounded_discrete(parse_linord("1 + w{1} + w*{1} + 1")));
  CHECK(!is_bounded_discrete(parse_linord("1 + w{w{1} + w*{1}} + 1")));
  CHECK(!is_bounded_discrete(parse_linord("w{1}")));           // no greatest
  CHECK(!is_bounded_discrete(parse_linord("w{1} + 1")));       // non-discrete junction
  CHECK(!is_bounded_discrete(parse_linord("w*{1} + w{1}")));   // gap in the middle
  CHECK(!is_bounded_discrete(parse_linord("1 + w{1 + w*{1}} + 1")));  // inner gap
}

TEST_CASE("counting and linearization") {
  LinOrd L = parse_linord("w{1} + w*{1}");
  CHECK(lo_count_from(L, true, 25) == 25);
  CHECK(lo_count_from(parse_linord("3"), true, 25) == 3);
  auto bot = linearize(L, true, 4);
  auto top = linearize(L, false, 4);
  REQUIRE(bot.size() == 4);
  REQUIRE(top.size() == 4);
  CHECK(bot[0] != bot[1]);
  // from the bottom the first elements lie in the w part, from the top in w*
  CHECK(bot[0].rfind("p0.c0.", 0) == 0);
  CHECK(top[0].rfind("p0.c0.", 0) == 0);
  // open-end enumeration of a bare w from the top throws
  CHECK_THROWS(linearize(parse_linord("w{1}"), false, 3));
  // finite order linearizes fully and stops
  CHECK(linearize(parse_linord("3"), true, 25).size() == 3);
}
