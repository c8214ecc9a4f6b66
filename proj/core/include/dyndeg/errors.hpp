#ifndef DYNDEG_ERRORS_HPP
#define DYNDEG_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dyndeg {

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DivisionNotExact : Error {
    explicit DivisionNotExact(const std::string& w = "exact division left a remainder") : Error(w) {}
};
struct ZeroConstantTerm : Error {
    explicit ZeroConstantTerm(const std::string& w = "polynomial has zero constant term; peel x-factors first") : Error(w) {}
};
struct NotPalindromic : Error {
    explicit NotPalindromic(const std::string& w = "polynomial is not palindromic of even degree") : Error(w) {}
};
struct NoRootAboveOne : Error {
    explicit NoRootAboveOne(const std::string& w = "polynomial has no real root above 1") : Error(w) {}
};
struct CertificationFailed : Error {
    explicit CertificationFailed(const std::string& w = "precision budget exceeded while certifying enclosures") : Error(w) {}
};
struct NotMonic : Error {
    explicit NotMonic(const std::string& w = "monic polynomial required") : Error(w) {}
};
struct NotSymmetric : Error {
    explicit NotSymmetric(const std::string& w = "symmetric matrix required") : Error(w) {}
};
struct NotUnimodular : Error {
    explicit NotUnimodular(const std::string& w = "matrix is not in GL_d(Z)") : Error(w) {}
};
struct ZeroCoordinate : Error {
    explicit ZeroCoordinate(const std::string& w = "monomial map evaluated at a zero coordinate") : Error(w) {}
};
struct NotBlockTriangular : Error {
    explicit NotBlockTriangular(const std::string& w = "matrix is not block-triangular at the requested split") : Error(w) {}
};
struct StructureViolation : Error {
    explicit StructureViolation(const std::string& w) : Error(w) {}
};
struct NotReduced : Error {
    explicit NotReduced(const std::string& w = "word is not reduced (adjacent equal letters)") : Error(w) {}
};
struct OddRankFullDegree : Error {
    explicit OddRankFullDegree(const std::string& w = "full-degree Salem search requires even rank n+1") : Error(w) {}
};
struct CapExceeded : Error {
    explicit CapExceeded(const std::string& w = "configured degree/height cap exceeded") : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

} // namespace dyndeg

#endif
