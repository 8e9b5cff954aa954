#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <vector>

#include "bands.hpp"
#include "fixtures.hpp"
#include "strings.hpp"

using namespace stralg;

namespace {

// The bands each paper figure states, one representative per inverse pair.
const std::map<std::string, std::vector<std::string>>& expected_bands() {
  static const std::map<std::string, std::vector<std::string>> m = {
      {"Lambda2", {"aB", "eD"}},
      {"Gamma", {"dFCE"}},
      {"Gamma_i", {"hbdC", "dfE"}},
      {"Gamma_i_noae", {"hbdC", "dfE"}},
      {"Gamma_ii", {"icBD", "cfE"}},
      {"Gamma_ii_dbg", {"icBD", "cfE"}},
      {"Gamma_iii", {"icD", "cahG"}},
      {"Gamma_iii_de", {"icD", "cahG"}},
      {"Gamma_iv", {"acD", "eHG"}},
      {"Gamma_iv_nofeac", {"acD", "eHG"}},
      {"Gamma_v", {"aCB", "ihG"}},
      {"Gamma_v_jih", {"aCB", "ihG"}},
      {"Gamma_vi", {"bK", "feG"}},
      {"Gamma_vii", {"hbdC", "dfE"}},
      {"Gamma_vii_ag", {"hbdC", "dfE"}},
      {"Gamma_viii", {"bED", "fcH"}},
      {"Gamma_viii_ifcba", {"bED", "fcH"}},
  };
  return m;
}

}  // namespace

TEST_CASE("fixture band catalogs match the stated band lists") {
  for (const auto& [name, listed] : expected_bands()) {
    Presentation p = fixture(name);
    BandCatalog cat = enumerate_bands(p);
    INFO("fixture ", name);
    CHECK(cat.complete);
    CHECK(cat.domestic);
    CHECK(cat.bands.size() == 2 * listed.size());  // closed under inversion
    for (const auto& lit : listed) {
      Str b = parse_string(p, lit);
      int idx = cat.find_rotation(b.syls);
      CHECK(idx >= 0);
      if (idx >= 0) {
        int inv = cat.inverse_of[static_cast<size_t>(idx)];
        REQUIRE(inv >= 0);
        CHECK(cat.inverse_of[static_cast<size_t>(inv)] == idx);
        CHECK(inv != idx);
      }
    }
  }
}

TEST_CASE("band invariants hold for every catalog entry") {
  for (const auto& name : fixture_names()) {
    Presentation p = fixture(name);
    BandCatalog cat = enumerate_bands(p);
    for (const auto& b : cat.bands) {
      CHECK(b.rep.size() >= 2);
      Str once;
      once.syls = b.rep;
      CHECK(delta(once) == 0);  // mixed sign
      Str twice = once;
      twice.syls.insert(twice.syls.end(), b.rep.begin(), b.rep.end());
      CHECK(is_string(p, twice));
      CHECK(start_vertex(p, once) == end_vertex(p, once));
    }
  }
}

TEST_CASE("band powers at the top of a string") {
  Presentation p = fixture("Lambda2");
  BandCatalog cat = enumerate_bands(p);
  int idx = cat.find_rotation(parse_string(p, "aB").syls);
  REQUIRE(idx >= 0);
  const Band& aB = cat.bands[static_cast<size_t>(idx)];
  CHECK(band_power_at_top(p, aB, parse_string(p, "a")) == 0);
  CHECK(band_power_at_top(p, aB, parse_string(p, "aBa")) == 1);
  CHECK(band_power_at_top(p, aB, parse_string(p, "BaBa")) == 2);
  CHECK(band_power_at_top(p, aB, parse_string(p, "eDeca")) == 0);
}

TEST_CASE("commutation detection") {
  // Two loops with x^2 = y^2 = xyx = 0: the bands xY and Xy commute
  // (xY.Xy and Xy.xY are both strings), so the algebra is not domestic.
  Presentation p = parse_presentation(
      "algebra nd\nvertices v\narrow x v v\narrow y v v\nrelations x.x y.y x.y.x\n");
  auto issues = validate_string_algebra(p);
  CHECK(issues.empty());
  BandCatalog cat = enumerate_bands(p);
  CHECK(cat.bands.size() >= 2);
  CHECK(!cat.domestic);
}
