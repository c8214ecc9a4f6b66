#ifndef DYNDEG_INT_MATRIX_HPP
#define DYNDEG_INT_MATRIX_HPP

#include <vector>

#include "dyndeg/int_poly.hpp"

namespace dyndeg {

// Square integer matrix, row-major.
class IntMatrix {
public:
    explicit IntMatrix(int dim);
    IntMatrix(int dim, std::vector<Int> entries);

    static IntMatrix identity(int dim);

    int dim() const { return dim_; }
    Int& at(int i, int j) { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * dim_ + j]; }
    const std::vector<Int>& entries() const { return e_; }

    IntMatrix operator*(const IntMatrix& o) const;
    std::vector<Int> operator*(const std::vector<Int>& v) const;
    bool operator==(const IntMatrix& o) const { return dim_ == o.dim_ && e_ == o.e_; }

    IntMatrix transpose() const;
    bool is_symmetric() const;

    // principal submatrix rows/cols [r0, r0+k)
    IntMatrix block(int r0, int k) const;

private:
    int dim_;
    std::vector<Int> e_;
};

// det(xI - M), division-free (Samuelson-Berkowitz).
IntPoly charpoly(const IntMatrix& M);

Int determinant(const IntMatrix& M);
bool is_unimodular(const IntMatrix& M);

// Companion matrix with superdiagonal ones and last row (-a_1, ..., -a_d)
// for p = x^d + a_d x^(d-1) + ... + a_1. Throws NotMonic.
IntMatrix companion(const IntPoly& p);

struct Inertia {
    int pos = 0;
    int neg = 0;
    int zero = 0;
};

// Exact inertia of a symmetric integer matrix (real spectrum), via Sturm
// counts on the characteristic polynomial. Throws NotSymmetric.
Inertia signature(const IntMatrix& G);

} // namespace dyndeg

#endif
