#ifndef DYNDEG_PROFILE_HPP
#define DYNDEG_PROFILE_HPP

#include <optional>
#include <string>
#include <vector>

#include "dyndeg/int_matrix.hpp"
#include "dyndeg/rational_interval.hpp"

namespace dyndeg {

enum class ProfileModel { Abelian, Monomial, Hyperkahler };

const char* profile_model_name(ProfileModel m);

// Certified dynamical-degree profile d_0 ... d_l with the entropy enclosure
// log max_p d_p. For the birational monomial model the entropy field is the
// first-dynamical-degree logarithm (reported under the same name).
struct DegreeProfile {
    ProfileModel model = ProfileModel::Monomial;
    std::vector<RationalInterval> degrees;
    RationalInterval entropy;
};

// d_k = product of the top-k squared root-modulus enclosures of charpoly(M);
// entropy = 2 log(dominant modulus). Throws NotUnimodular.
DegreeProfile abelian_profile(const IntMatrix& M, const Rat& tol = Rat(1, 1000000));

// d_k = product of the top-k root-modulus enclosures of charpoly(A).
// Throws NotUnimodular.
DegreeProfile monomial_profile(const IntMatrix& A, const Rat& tol = Rat(1, 1000000));

// Coordinate i of the image = prod_j t_j^(a_ji), evaluated exactly.
// Throws ZeroCoordinate.
std::vector<Rat> monomial_eval(const IntMatrix& A, const std::vector<Rat>& t);

// Mirror-symmetric profile d_p = d1^p (p <= m), d_p = d_(2m-p) above;
// entropy = m log d1. Requires d1.lo >= 1.
DegreeProfile hk_profile(const RationalInterval& d1, int m, const Rat& tol = Rat(1, 1000000));

// True iff d1 is exactly [1,1] or is not certifiably below the dominant root
// of the degree-10 polynomial x^10+x^9-x^7-x^6-x^5-x^4-x^3+x+1 (the smallest
// known Salem number); the threshold is computed from that polynomial, never
// from a hard-coded decimal.
bool lehmer_floor_check(const RationalInterval& d1);

// Machine-checkable primitivity evidence.
struct PrimitivityCertificate {
    enum class Criterion { DegreeDrop, IrreduciblePicard };
    Criterion criterion = Criterion::DegreeDrop;
    RationalInterval d1;
    RationalInterval d2;              // DegreeDrop only
    IntPoly charpoly;                 // IrreduciblePicard only
    std::vector<int> word;            // IrreduciblePicard only
    std::string justification;
};

// Certificate iff d_1.lo > d_2.hi and d_1.lo > 1, comparing opposite
// interval endpoints. Absence of a certificate is a valid outcome.
std::optional<PrimitivityCertificate> primitivity_by_degree_drop(const DegreeProfile& profile);

// Per-degree consistency report for a block-triangular monomial map against
// the max-over-splits product formula.
struct ProductFormulaReport {
    struct Entry {
        int p = 0;
        RationalInterval total;
        RationalInterval best_split;
        int best_j = 0;
        bool pass = false;
    };
    std::vector<Entry> entries;
    bool all_pass = false;
};

// A must be unimodular with zero lower-left (d-b) x b block; 1 <= b <= d-1.
// Throws NotBlockTriangular, NotUnimodular.
ProductFormulaReport product_formula_check(const IntMatrix& A, int b, const Rat& tol = Rat(1, 1000000));

} // namespace dyndeg

#endif
