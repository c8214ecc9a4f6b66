#ifndef DYNDEG_ROOT_COUNTING_HPP
#define DYNDEG_ROOT_COUNTING_HPP

#include <utility>
#include <vector>

#include "dyndeg/int_poly.hpp"
#include "dyndeg/rational_interval.hpp"

namespace dyndeg {

struct DiskCounts {
    int inside = 0;
    int on = 0;
    int outside = 0;

    bool operator==(const DiskCounts&) const = default;
};

// Number of distinct real roots of p in (a, b]. Takes the squarefree part
// internally. Requires a < b and p != 0.
int sturm_count(const IntPoly& p, const Rat& a, const Rat& b);

// Exact root counts (with multiplicity) of an arbitrary nonzero integer
// polynomial with nonzero constant term, relative to the unit circle.
// The on-circle part is split off as gcd(p, reciprocal(p)); the rest is
// counted by the Schur-Cohn form evaluated in exact integer arithmetic.
DiskCounts disk_counts(const IntPoly& p);

// Spec entry point: same as disk_counts but requires monic input.
DiskCounts unit_disk_count(const IntPoly& p);

// Counts (with multiplicity) of roots with |root| < r and |root| = r.
std::pair<int, int> count_moduli_at(const IntPoly& p, const Rat& r);

// For palindromic p of even degree 2d returns the degree-d q with
// z^d q(z + 1/z) = p(z). Throws NotPalindromic.
IntPoly trace_transform(const IntPoly& p);

// n-th cyclotomic polynomial (memoized).
IntPoly cyclotomic(unsigned n);

unsigned euler_phi(unsigned n);

struct CyclotomicPeel {
    std::vector<std::pair<unsigned, int>> factors; // (n, multiplicity)
    IntPoly remainder;                             // no cyclotomic factor
};

// Splits off every cyclotomic factor of a monic p with p(0) != 0.
CyclotomicPeel peel_cyclotomic(const IntPoly& p);

// Enclosure of the largest real root (> 1) with width <= tol.
// Throws NoRootAboveOne when sturm_count(p, 1, cauchy) == 0.
RationalInterval dominant_real_root(const IntPoly& p, const Rat& tol);

struct RootProfile {
    std::vector<RationalInterval> moduli; // non-increasing, with multiplicity
    DiskCounts disk_counts;
};

// Certified enclosures of all root moduli, each of width <= tol, seeded by a
// floating-point simultaneous iteration and certified by exact disk counting
// at rational radii. Throws CertificationFailed past the precision budget.
RootProfile root_moduli(const IntPoly& p, const Rat& tol);

// Precision budget for enclosure refinement, in bisection bits
// (overridden by the DYNDEG_MAX_PRECISION environment variable).
int max_precision_bits();
void set_max_precision_bits(int bits);

} // namespace dyndeg

#endif
