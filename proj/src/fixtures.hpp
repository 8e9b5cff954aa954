#pragma once

#include <string>
#include <vector>

#include "presentation.hpp"

namespace stralg {

// Built-in catalog of the example algebras, keyed by ASCII names:
// Lambda2, Gamma, Gamma_i (+ Gamma_i_noae), Gamma_ii (+ Gamma_ii_dbg),
// Gamma_iii (+ Gamma_iii_de), Gamma_iv (+ Gamma_iv_nofeac), Gamma_v
// (+ Gamma_v_jih), Gamma_vi, Gamma_vii (+ Gamma_vii_ag), Gamma_viii
// (+ Gamma_viii_ifcba).
std::vector<std::string> fixture_names();
bool has_fixture(const std::string& name);
Presentation fixture(const std::string& name);

}  // namespace stralg
