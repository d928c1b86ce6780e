// The builtin scenario catalog.  Parameterized names:
//   drinfeld(n)       split GL_n, nu = 0, regular-at-the-edge mu
//   lubin_tate(n)     GL_n with the basic slope 1/n (anisotropic J)
//   weil_restriction_gl2   two GL_2 blocks swapped by a Galois involution
//   gsp4_siegel       explicit symplectic-similitude datum, nonsplit J
//   gl_n_basic(n,k)   GL_n with the basic slope k/n
#pragma once

#include <string>
#include <vector>

#include "perdomcoh/config_io.hpp"

namespace pdc {

// Throws ConfigError for unknown names or out-of-range parameters.
ScenarioConfig catalog(const std::string& name);

// The shipped regression set (each entry has an expected-output fixture).
std::vector<std::string> catalog_names();

// "drinfeld(3)" -> "drinfeld_3" (fixture file stem).
std::string catalog_file_stem(const std::string& name);

}  // namespace pdc
