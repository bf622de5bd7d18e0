#pragma once

#include "vdc/perm.hpp"

namespace vdc::catalog {

/// Faure's base-12 permutation with 0.375 < s < 0.38.
Permutation sigma12_extreme();
/// Faure's other base-12 permutation, used with the swap schedule A.
Permutation sigma12_star();
/// Faure 1992, base 36: s = 46/(35 log 36).
Permutation sigma36();
/// Ostromoukhov 2009, base 60: psi^- vanishes; the star-discrepancy record.
Permutation sigma60();
/// Ostromoukhov 2009, base 84: s = 130/(83 log 84).
Permutation sigma84();
/// Chaix & Faure 1993, base 19 (diaphony record of its time).
Permutation sigma19();
/// Pausinger & Schmid 2010, base 57 (diaphony record).
Permutation sigma57();

/// Lookup by name ("sigma36", "sigma60", ...); throws validation_error.
Permutation by_name(const std::string& name);

}  // namespace vdc::catalog
