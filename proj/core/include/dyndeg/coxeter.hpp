#ifndef DYNDEG_COXETER_HPP
#define DYNDEG_COXETER_HPP

#include <optional>
#include <string>
#include <vector>

#include "dyndeg/classify.hpp"
#include "dyndeg/int_matrix.hpp"
#include "dyndeg/profile.hpp"

namespace dyndeg {

// Word in the generators 1..n+1 of the universal Coxeter group.
struct CoxeterWord {
    std::vector<int> letters;

    bool is_reduced() const; // no two adjacent letters equal
};

// Rank-(n+1) reflection representation acting on the lattice spanned by
// h_1..h_(n+1), together with the invariant symmetric form.
struct WehlerRep {
    int n = 0;
    std::vector<IntMatrix> generators; // index k-1 holds generator k
    IntMatrix gram{1};

    int rank() const { return n + 1; }
};

// Generator k maps h_k -> -h_k + 2 sum_{j != k} h_j and fixes the other h_j.
// The gram matrix is the unique-up-to-scale invariant symmetric form, solved
// from the invariance equations and normalized to off-diagonal 1, diagonal
// -(n-2); signature (1, n). All invariants are validated before returning.
WehlerRep wehler_generators(int n);

// Ordered product of generator matrices. Throws NotReduced.
IntMatrix word_to_matrix(const WehlerRep& rep, const CoxeterWord& w);

// Enclosure of the spectral radius of word_to_matrix: the dominant root of
// the Salem factor, or exactly [1,1] for a cyclotomic product.
RationalInterval d1_of_word(const WehlerRep& rep, const CoxeterWord& w,
                            const Rat& tol = Rat(1, 1000000));

struct SalemHit {
    CoxeterWord word;
    IntPoly charpoly;
    IntPoly salem;
    RationalInterval dominant;
};

// Enumerates canonical cyclically-reduced words up to max_len (canonical =
// lexicographically minimal over cyclic rotations of the word and of its
// reversal) and returns those with a full-degree irreducible Salem
// characteristic polynomial (or any nontrivial Salem factor when
// full_degree_only is false), sorted by dominant root.
// Throws OddRankFullDegree when full_degree_only is requested at odd rank.
std::vector<SalemHit> salem_element_search(const WehlerRep& rep, int max_len,
                                           bool full_degree_only,
                                           const Rat& tol = Rat(1, 1000000),
                                           int threads = 1);

// Canonical form of a word: cyclic reduction, then the lexicographic minimum
// over rotations of the word and of its reversal. Exposed for the search
// oracle tests.
std::vector<int> canonical_word(const std::vector<int>& letters);

struct CertificateOrRefusal {
    std::optional<PrimitivityCertificate> certificate;
    std::string refusal_reason; // set iff no certificate
};

// IrreduciblePicard certificate iff charpoly(word_to_matrix) is irreducible
// Salem of full degree n+1; otherwise a refusal naming the failing condition.
CertificateOrRefusal picard_primitivity_certificate(const WehlerRep& rep, const CoxeterWord& w,
                                                    const Rat& tol = Rat(1, 1000000));

} // namespace dyndeg

#endif
