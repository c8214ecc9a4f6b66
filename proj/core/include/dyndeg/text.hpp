#ifndef DYNDEG_TEXT_HPP
#define DYNDEG_TEXT_HPP

#include <string>
#include <vector>

#include "dyndeg/int_matrix.hpp"
#include "dyndeg/int_poly.hpp"

namespace dyndeg {

// Accepts either human syntax ("x^10 + x^9 - x^7 - ... + 1", '*' optional)
// or a comma-separated coefficient list, constant term first ("1,1,0,-1").
// Throws ParseError.
IntPoly parse_poly(const std::string& s);

// Constant-first coefficient list, e.g. "1,-3,1".
std::string poly_coeff_list(const IntPoly& p);

// Rows separated by ';', entries by ',': "0,1;-1,3". Throws ParseError.
IntMatrix parse_matrix(const std::string& s);

std::string matrix_to_text(const IntMatrix& m);

// Integer, fraction "a/b", or decimal/scientific ("0.001", "1e-6").
// Throws ParseError.
Rat parse_rat(const std::string& s);

} // namespace dyndeg

#endif
