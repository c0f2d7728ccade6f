#pragma once

#include <cstdint>
#include <vector>

#include "artin/intpoly.hpp"

namespace artin {

// Degrees (with multiplicity, ascending) of the irreducible factors of the
// monic f modulo p, by distinct-degree factorization. Only degrees are ever
// produced; the factors themselves are never split further. Throws
// RamifiedPrimeError when f mod p is not squarefree (equivalently p | disc f).
std::vector<int> factor_degrees(const IntPoly& f, uint64_t p);

} // namespace artin
