#ifndef DYNDEG_RATIONAL_INTERVAL_HPP
#define DYNDEG_RATIONAL_INTERVAL_HPP

#include <gmpxx.h>

#include <string>

#include "dyndeg/errors.hpp"

namespace dyndeg {

using Rat = mpq_class;

// Closed rational interval [lo, hi], lo <= hi.
struct RationalInterval {
    Rat lo;
    Rat hi;

    RationalInterval() : lo(0), hi(0) {}
    RationalInterval(Rat l, Rat h);
    static RationalInterval point(const Rat& v) { return RationalInterval(v, v); }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& v) const { return lo <= v && v <= hi; }
    bool contains(const RationalInterval& o) const { return lo <= o.lo && o.hi <= hi; }
    bool intersects(const RationalInterval& o) const { return lo <= o.hi && o.lo <= hi; }
    bool is_point() const { return lo == hi; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }

    // product of intervals with nonnegative endpoints
    RationalInterval mul_nonneg(const RationalInterval& o) const;
    RationalInterval pow_nonneg(int k) const;
    RationalInterval scaled(const Rat& s) const; // s >= 0
    RationalInterval hull(const RationalInterval& o) const;

    std::string to_string() const;
};

// Certified rational enclosure of ln(x), x > 0, of width <= tol.
RationalInterval log_enclosure(const Rat& x, const Rat& tol);

// Certified enclosure of ln over a positive interval, outward-rounded.
RationalInterval log_enclosure(const RationalInterval& x, const Rat& tol);

// Rounds q to the nearest fraction with denominator 2^bits (toward the given
// direction); used to keep bisection endpoints small.
Rat dyadic_round(const Rat& q, int bits, bool round_up);

} // namespace dyndeg

#endif
