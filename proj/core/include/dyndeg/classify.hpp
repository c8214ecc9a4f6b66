#ifndef DYNDEG_CLASSIFY_HPP
#define DYNDEG_CLASSIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "dyndeg/int_poly.hpp"
#include "dyndeg/rational_interval.hpp"
#include "dyndeg/root_counting.hpp"

namespace dyndeg {

enum class Kind { CyclotomicProduct, Pisot, Salem, Other };

const char* kind_name(Kind k);

// Certified verdict for a monic integer polynomial with nonzero constant
// term, together with the exact counting evidence that justifies it.
struct Classification {
    Kind kind = Kind::Other;
    bool pisot_unit = false;        // |constant term| = 1 (Pisot only)
    bool salem_flag = false;        // reciprocal quadratic: Pisot and Salem at once
    bool negative_dominant = false; // dominant root < -1; `dominant` encloses |root|
    RationalInterval dominant;      // Pisot/Salem; [1,1] for cyclotomic products
    DiskCounts counts;
    bool irreducible = false;
    bool palindromic = false;
    std::vector<std::pair<unsigned, int>> cyclotomic_factors; // CyclotomicProduct only
};

// Exact classification: cyclotomic product / Pisot / Salem / other.
// Throws NotMonic, ZeroConstantTerm.
Classification classify(const IntPoly& p, const Rat& tol = Rat(1, 1000000));

// Decomposition of an isometry characteristic polynomial into cyclotomic
// factors and at most one Salem factor.
struct IsometryStructure {
    std::vector<std::pair<unsigned, int>> cyclotomic_part;
    std::optional<std::pair<IntPoly, RationalInterval>> salem_part;
};

// Requires monic p with constant term +-1. Throws StructureViolation when the
// non-cyclotomic part is not exactly one Salem polynomial of multiplicity 1.
IsometryStructure isometry_structure(const IntPoly& p, const Rat& tol = Rat(1, 1000000));

// All monic degree-d polynomials with coefficients in [-height, height]
// classified Pisot (|constant| = 1 when units_only), paired with dominant
// enclosures, sorted by dominant ascending (ties: lexicographic).
// Caps: degree <= 16, height <= 64. Throws CapExceeded.
std::vector<std::pair<IntPoly, RationalInterval>>
pisot_search(int degree, int height, bool units_only,
             const Rat& tol = Rat(1, 1000000), int threads = 1);

} // namespace dyndeg

#endif
