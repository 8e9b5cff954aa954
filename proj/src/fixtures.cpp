#include "fixtures.hpp"

#include <map>
#include <stdexcept>

namespace stralg {

namespace {

const std::map<std::string, const char*>& table() {
  static const std::map<std::string, const char*> t = {
      {"Lambda2", R"(algebra Lambda2
vertices v1 v2 v3 v4
arrow a v1 v2
arrow b v1 v2
arrow c v2 v3
arrow d v3 v4
arrow e v3 v4
relations c.b d.c
)"},
      {"Gamma", R"(algebra Gamma
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v1 v2
arrow b v2 v3
arrow c v4 v2
arrow d v5 v6
arrow e v2 v6
arrow f v5 v4
arrow g v7 v5
relations b.a e.a b.c d.g e.c.f.g
)"},
      {"Gamma_i", R"(algebra Gamma_i
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v1
arrow b v2 v5
arrow c v3 v6
arrow d v3 v2
arrow e v4 v2
arrow f v4 v3
arrow g v7 v5
arrow h v5 v6
relations a.e a.d b.e h.g c.f h.b.d.f
)"},
      {"Gamma_i_noae", R"(algebra Gamma_i_noae
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v1
arrow b v2 v5
arrow c v3 v6
arrow d v3 v2
arrow e v4 v2
arrow f v4 v3
arrow g v7 v5
arrow h v5 v6
relations a.d b.e h.g c.f h.b.d.f
)"},
      {"Gamma_ii", R"(algebra Gamma_ii
vertices v1 v2 v3 v4 v5 v6 v7 v8
arrow a v1 v2
arrow b v3 v2
arrow c v3 v4
arrow d v2 v5
arrow e v6 v4
arrow f v6 v3
arrow g v7 v3
arrow h v8 v7
arrow i v4 v5
relations d.a b.f c.g i.e i.c.f d.b.g.h
)"},
      {"Gamma_ii_dbg", R"(algebra Gamma_ii_dbg
vertices v1 v2 v3 v4 v5 v6 v7 v8
arrow a v1 v2
arrow b v3 v2
arrow c v3 v4
arrow d v2 v5
arrow e v6 v4
arrow f v6 v3
arrow g v7 v3
arrow h v8 v7
arrow i v4 v5
relations d.a b.f c.g i.e i.c.f d.b.g
)"},
      {"Gamma_iii", R"(algebra Gamma_iii
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9
arrow a v2 v3
arrow b v2 v1
arrow c v3 v4
arrow d v3 v5
arrow e v6 v3
arrow f v7 v6
arrow g v8 v4
arrow h v8 v2
arrow i v4 v5
arrow j v9 v2
relations b.h a.j d.a c.e i.g i.c.a.h d.e.f
)"},
      {"Gamma_iii_de", R"(algebra Gamma_iii_de
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9
arrow a v2 v3
arrow b v2 v1
arrow c v3 v4
arrow d v3 v5
arrow e v6 v3
arrow f v7 v6
arrow g v8 v4
arrow h v8 v2
arrow i v4 v5
arrow j v9 v2
relations b.h a.j d.a c.e i.g i.c.a.h d.e
)"},
      {"Gamma_iv", R"(algebra Gamma_iv
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v4
arrow b v2 v1
arrow c v3 v2
arrow d v3 v4
arrow e v4 v5
arrow f v5 v7
arrow g v6 v5
arrow h v4 v6
relations b.c h.a e.d f.g h.d f.e.a.c
)"},
      {"Gamma_iv_nofeac", R"(algebra Gamma_iv_nofeac
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v4
arrow b v2 v1
arrow c v3 v2
arrow d v3 v4
arrow e v4 v5
arrow f v5 v7
arrow g v6 v5
arrow h v4 v6
relations b.c h.a e.d f.g h.d
)"},
      {"Gamma_v", R"(algebra Gamma_v
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9 v10
arrow a v1 v2
arrow b v3 v2
arrow c v1 v3
arrow d v6 v4
arrow e v2 v4
arrow f v4 v5
arrow g v8 v7
arrow h v8 v6
arrow i v6 v7
arrow j v7 v9
arrow k v9 v10
relations e.b f.d d.h j.g k.j.i.h
)"},
      {"Gamma_v_jih", R"(algebra Gamma_v_jih
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9 v10
arrow a v1 v2
arrow b v3 v2
arrow c v1 v3
arrow d v6 v4
arrow e v2 v4
arrow f v4 v5
arrow g v8 v7
arrow h v8 v6
arrow i v6 v7
arrow j v7 v9
arrow k v9 v10
relations e.b f.d d.h j.g j.i.h
)"},
      {"Gamma_vi", R"(algebra Gamma_vi
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9 v10
arrow a v2 v3
arrow b v1 v2
arrow c v3 v5
arrow d v4 v3
arrow e v5 v6
arrow f v6 v8
arrow g v5 v8
arrow h v7 v6
arrow i v8 v9
arrow j v9 v10
arrow k v1 v2
relations a.k c.d g.c f.h i.g j.i.f.e.c.a
)"},
      {"Gamma_vii", R"(algebra Gamma_vii
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v1
arrow b v5 v2
arrow c v4 v3
arrow d v4 v5
arrow e v6 v5
arrow f v6 v4
arrow g v7 v2
arrow h v2 v3
relations b.e a.b h.g c.f h.b.d.f
)"},
      {"Gamma_vii_ag", R"(algebra Gamma_vii_ag
vertices v1 v2 v3 v4 v5 v6 v7
arrow a v2 v1
arrow b v5 v2
arrow c v4 v3
arrow d v4 v5
arrow e v6 v5
arrow f v6 v4
arrow g v7 v2
arrow h v2 v3
relations b.e a.b h.g c.f h.b.d.f a.g
)"},
      {"Gamma_viii", R"(algebra Gamma_viii
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9
arrow a v1 v2
arrow b v2 v3
arrow c v3 v4
arrow d v8 v3
arrow e v2 v8
arrow f v4 v6
arrow g v5 v4
arrow h v3 v6
arrow i v6 v7
arrow j v8 v9
relations e.a h.b c.d f.g i.h j.e h.d.e
)"},
      {"Gamma_viii_ifcba", R"(algebra Gamma_viii_ifcba
vertices v1 v2 v3 v4 v5 v6 v7 v8 v9
arrow a v1 v2
arrow b v2 v3
arrow c v3 v4
arrow d v8 v3
arrow e v2 v8
arrow f v4 v6
arrow g v5 v4
arrow h v3 v6
arrow i v6 v7
arrow j v8 v9
relations e.a h.b c.d f.g i.h j.e h.d.e i.f.c.b.a
)"},
  };
  return t;
}

}  // namespace

std::vector<std::string> fixture_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

bool has_fixture(const std::string& name) { return table().count(name) > 0; }

Presentation fixture(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::runtime_error("unknown fixture: " + name);
  return parse_presentation(it->second);
}

}  // namespace stralg
