#ifndef DYNDEG_FACTOR_HPP
#define DYNDEG_FACTOR_HPP

#include <vector>

#include "dyndeg/int_poly.hpp"

namespace dyndeg {

struct FactorCaps {
    int degree_cap = 64;
    int height_bits_cap = 256; // reject heights >= 2^256
};

// Complete factorization of a monic integer polynomial into monic
// irreducible factors with multiplicities, sorted. Squarefree decomposition,
// Berlekamp modulo a suitable small prime, linear Hensel lifting to above the
// Mignotte bound, subset recombination.
std::vector<std::pair<IntPoly, int>> factor_int(const IntPoly& p, const FactorCaps& caps = {});

bool is_irreducible(const IntPoly& p, const FactorCaps& caps = {});

} // namespace dyndeg

#endif
