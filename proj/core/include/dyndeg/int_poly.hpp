#ifndef DYNDEG_INT_POLY_HPP
#define DYNDEG_INT_POLY_HPP

#include <gmpxx.h>

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "dyndeg/errors.hpp"

namespace dyndeg {

using Int = mpz_class;
using Rat = mpq_class;

// Dense monic-friendly integer polynomial, coefficients constant-term first.
// The zero polynomial is the empty coefficient vector; otherwise the leading
// coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Int> coeffs);
    IntPoly(std::initializer_list<long> coeffs);

    static IntPoly zero() { return IntPoly{}; }
    static IntPoly one() { return IntPoly{1}; }
    static IntPoly x() { return IntPoly{0, 1}; }
    // c * x^k
    static IntPoly monomial(int k, Int c = 1);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Int>& coeffs() const { return c_; }
    // coefficient of x^k (0 beyond the degree)
    const Int& coeff(int k) const;
    const Int& leading() const;
    const Int& constant() const;

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    bool is_palindromic() const;

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& q) const;
    IntPoly operator-(const IntPoly& q) const;
    IntPoly operator*(const IntPoly& q) const;
    IntPoly operator*(const Int& s) const;
    bool operator==(const IntPoly& q) const { return c_ == q.c_; }

    // lexicographic on (degree, coefficients constant-first); total order
    std::strong_ordering operator<=>(const IntPoly& q) const;

    IntPoly derivative() const;
    // x^deg * p(1/x)
    IntPoly reciprocal() const;
    // p(-x)
    IntPoly reflect() const;
    // p(s*x) cleared to integer coefficients: den^deg * p((num/den) x)
    IntPoly scale_arg(const Rat& s) const;

    Int eval(const Int& t) const;
    Rat eval(const Rat& t) const;
    int sign_at(const Rat& t) const;

    Int content() const;           // gcd of coefficients, >= 0 (0 for zero poly)
    IntPoly primitive_part() const; // content 1, leading coefficient > 0

    // Throws DivisionNotExact unless q divides *this over Q with an integer
    // primitive quotient; exact over Z when q is monic.
    IntPoly divide_exact(const IntPoly& q) const;
    // True (and sets quot) iff q | *this over Q[x].
    bool try_divide(const IntPoly& q, IntPoly* quot = nullptr) const;

    // Height: max |coefficient|.
    Int height() const;
    // 1 + height/|lc|, an upper bound for all root moduli. Exact rational.
    Rat cauchy_bound() const;

    std::string to_string() const; // human syntax, highest power first

private:
    void trim();
    std::vector<Int> c_;
};

// gcd over Q returned primitive with positive leading coefficient;
// gcd(0,0) = 0.
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

// Yun squarefree decomposition: p = lc * prod f_i ^ m_i with f_i monic
// squarefree pairwise coprime, m_i strictly increasing. Requires p != 0.
std::vector<std::pair<IntPoly, int>> squarefree_decomposition(const IntPoly& p);

// p with gcd(p, p') divided out, primitive, positive leading coefficient.
IntPoly squarefree_part(const IntPoly& p);

} // namespace dyndeg

#endif
