#include "dyndeg/rational_interval.hpp"

#include <sstream>

namespace dyndeg {

using Int = mpz_class;

RationalInterval::RationalInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw Error("interval endpoints out of order");
}

RationalInterval RationalInterval::mul_nonneg(const RationalInterval& o) const {
    if (lo < 0 || o.lo < 0) throw Error("mul_nonneg on an interval with negative endpoint");
    return RationalInterval(lo * o.lo, hi * o.hi);
}

RationalInterval RationalInterval::pow_nonneg(int k) const {
    RationalInterval acc = point(1);
    for (int i = 0; i < k; ++i) acc = acc.mul_nonneg(*this);
    return acc;
}

RationalInterval RationalInterval::scaled(const Rat& s) const {
    if (s < 0) throw Error("scaled expects a nonnegative scalar");
    return RationalInterval(lo * s, hi * s);
}

RationalInterval RationalInterval::hull(const RationalInterval& o) const {
    return RationalInterval(std::min(lo, o.lo), std::max(hi, o.hi));
}

std::string RationalInterval::to_string() const {
    std::ostringstream os;
    os << "[" << lo.get_str() << ", " << hi.get_str() << "]";
    return os.str();
}

Rat dyadic_round(const Rat& q, int bits, bool round_up) {
    Int scale = 1;
    mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), static_cast<unsigned long>(bits));
    Rat s = q * Rat(scale);
    Int n;
    if (round_up)
        mpz_cdiv_q(n.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    else
        mpz_fdiv_q(n.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
    Rat out(n, scale);
    out.canonicalize();
    return out;
}

namespace {

// Enclosure of 2*atanh(u) = ln((1+u)/(1-u)) for 0 <= u < 1/2, width <= tol.
RationalInterval atanh2_enclosure(const Rat& u, const Rat& tol) {
    Rat u2 = u * u;
    Rat term = u; // u^(2k+1)
    Rat sum = 0;
    int k = 0;
    Rat one_minus = 1 - u2;
    for (;;) {
        sum += term / (2 * k + 1);
        term *= u2;
        ++k;
        // remaining tail <= term/(2k+1) * 1/(1-u^2)
        Rat tail = term / ((2 * k + 1) * one_minus);
        if (2 * tail <= tol) {
            return RationalInterval(2 * sum, 2 * (sum + tail));
        }
    }
}

RationalInterval ln2_enclosure(const Rat& tol) {
    return atanh2_enclosure(Rat(1, 3), tol);
}

} // namespace

RationalInterval log_enclosure(const Rat& x, const Rat& tol) {
    if (x <= 0) throw Error("log of a non-positive rational");
    if (tol <= 0) throw Error("log tolerance must be positive");
    if (x < 1) {
        RationalInterval r = log_enclosure(Rat(1) / x, tol);
        return RationalInterval(-r.hi, -r.lo);
    }
    // reduce to y in [1, 2)
    Rat y = x;
    long m = 0;
    while (y >= 2) {
        y /= 2;
        ++m;
    }
    RationalInterval acc = atanh2_enclosure((y - 1) / (y + 1), tol / 2);
    if (m > 0) {
        RationalInterval l2 = ln2_enclosure(tol / (2 * m));
        acc = RationalInterval(acc.lo + m * l2.lo, acc.hi + m * l2.hi);
    }
    return acc;
}

RationalInterval log_enclosure(const RationalInterval& x, const Rat& tol) {
    if (x.lo <= 0) throw Error("log of an interval touching zero");
    return RationalInterval(log_enclosure(x.lo, tol / 2).lo, log_enclosure(x.hi, tol / 2).hi);
}

} // namespace dyndeg
