#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "bands.hpp"
#include "fixtures.hpp"
#include "hammock.hpp"
#include "strings.hpp"

using namespace stralg;

namespace {

struct Fx {
  Presentation p;
  BandCatalog cat;
  HammockCtx ctx;
  Fx(const std::string& name, const std::string& x0lit) : p(fixture(name)), cat(enumerate_bands(p)) {
    ctx.p = &p;
    ctx.bands = &cat;
    ctx.x0 = parse_string(p, x0lit);
  }
};

}  // namespace

TEST_CASE("Lambda2 golden order facts") {
  Fx f("Lambda2", "1(v1,-)");
  const auto& p = f.p;
  const auto& ctx = f.ctx;

  CHECK(print_string(p, max_string(ctx, -1)) == "eca");
  CHECK(print_string(p, max_string(ctx, +1)) == "1(v1,-)");

  Str x0 = ctx.x0, eca = parse_string(p, "eca"), a = parse_string(p, "a");
  CHECK(cmp_l(ctx, eca, x0) < 0);
  CHECK(cmp_l(ctx, parse_string(p, "Ba"), x0) < 0);
  CHECK(cmp_l(ctx, eca, a) < 0);
  CHECK(cmp_l(ctx, parse_string(p, "ca"), a) < 0);

  // succ/pred goldens from Example 2.x.
  REQUIRE(succ_l(ctx, eca));
  CHECK(print_string(p, *succ_l(ctx, eca)) == "eDeca");
  REQUIRE(pred_l(ctx, x0));
  CHECK(print_string(p, *pred_l(ctx, x0)) == "Ba");
  REQUIRE(pred_l(ctx, parse_string(p, "Ba")));
  CHECK(print_string(p, *pred_l(ctx, parse_string(p, "Ba"))) == "BaBa");
  CHECK(!succ_l(ctx, x0));  // x0 is the maximum here

  // l is the successor only when strictly longer.
  CHECK(op_l(ctx, eca, +1).has_value());
  REQUIRE(op_l(ctx, a, +1));
  CHECK(print_string(p, *op_l(ctx, a, +1)) == "ecaBa");
  CHECK(!op_l(ctx, parse_string(p, "ca"), +1));  // succ(ca) = a is shorter
  REQUIRE(op_l(ctx, a, -1));
  CHECK(print_string(p, *op_l(ctx, a, -1)) == "ca");
  REQUIRE(op_l(ctx, x0, -1));
  CHECK(print_string(p, *op_l(ctx, x0, -1)) == "Ba");
}

TEST_CASE("succ/pred agree with the brute-force order on truncations") {
  for (auto [name, x0lit] : std::vector<std::pair<std::string, std::string>>{
           {"Lambda2", "1(v1,-)"},
           {"Lambda2", "1(v3,+)"},
           {"Gamma", "1(v1,-)"},
           {"Gamma_ii", "1(v1,+)"},
           {"Gamma_v", "1(v1,-)"}}) {
    Fx f(name, x0lit);
    const size_t L = 8;
    std::vector<Str> all;
    enumerate_hammock(f.ctx, L, [&](const Str& x) {
      all.push_back(x);
      return true;
    });
    INFO("fixture ", name, " x0 ", x0lit);
    CHECK(all.size() > 1);
    // enumerate_hammock must emit <_l increasing order.
    for (size_t i = 0; i + 1 < all.size(); ++i) CHECK(cmp_l(f.ctx, all[i], all[i + 1]) < 0);
    // succ/pred match adjacency whenever both elements are well inside the
    // truncation (a successor computation may leave the truncated region).
    for (size_t i = 0; i + 1 < all.size(); ++i) {
      if (all[i].size() + 1 >= L || all[i + 1].size() + 1 >= L) continue;
      auto s = succ_l(f.ctx, all[i]);
      REQUIRE(s);
      CHECK(*s == all[i + 1]);
      auto q = pred_l(f.ctx, all[i + 1]);
      REQUIRE(q);
      CHECK(*q == all[i]);
    }
    // Membership test agrees with enumeration.
    for (const auto& x : all) CHECK(in_hammock(f.ctx, x));
  }
}

TEST_CASE("limits of l iteration (Eq. 2.1 goldens)") {
  Fx f("Lambda2", "1(v1,-)");
  const auto& p = f.p;
  Str eca = parse_string(p, "eca"), a = parse_string(p, "a");

  auto r1 = iterate_op(f.ctx, eca, +1);
  REQUIRE(r1.kind == IterLimit::Periodic);
  CHECK(print_nstring(p, r1.limit) == "inf(De)ca");

  auto r2 = iterate_op(f.ctx, a, -1);  // lbar iterates a -> ca -> Deca -> ...
  REQUIRE(r2.kind == IterLimit::Periodic);
  CHECK(print_nstring(p, r2.limit) == "inf(De)ca");

  auto r3 = iterate_op(f.ctx, f.ctx.x0, -1);
  REQUIRE(r3.kind == IterLimit::Periodic);
  CHECK(print_nstring(p, r3.limit) == "inf(Ba)");

  // Torsion: iterating l from the maximal element of the direct side stops.
  auto r4 = iterate_op(f.ctx, max_string(f.ctx, +1), +1);
  CHECK(r4.kind == IterLimit::Torsion);
}

TEST_CASE("side and membership") {
  Fx f("Lambda2", "1(v1,-)");
  CHECK(side_of(f.ctx, parse_string(f.p, "eca")) == -1);
  CHECK(side_of(f.ctx, f.ctx.x0) == 0);
  CHECK(in_hammock(f.ctx, parse_string(f.p, "Ba")));
  CHECK(!in_hammock(f.ctx, parse_string(f.p, "b")));   // b belongs to 1(v1,+)
  CHECK(!in_hammock(f.ctx, parse_string(f.p, "cb")));  // not a string

  Fx g("Lambda2", "1(v1,+)");
  CHECK(in_hammock(g.ctx, parse_string(g.p, "b")));
  CHECK(!in_hammock(g.ctx, parse_string(g.p, "a")));
}
