#include "dyndeg/int_matrix.hpp"

#include "dyndeg/root_counting.hpp"

namespace dyndeg {

IntMatrix::IntMatrix(int dim) : dim_(dim), e_(static_cast<size_t>(dim) * dim, Int(0)) {
    if (dim < 1) throw Error("matrix dimension must be >= 1");
}

IntMatrix::IntMatrix(int dim, std::vector<Int> entries) : dim_(dim), e_(std::move(entries)) {
    if (dim < 1) throw Error("matrix dimension must be >= 1");
    if (e_.size() != static_cast<size_t>(dim) * dim) throw Error("entry count does not match dimension");
}

IntMatrix IntMatrix::identity(int dim) {
    IntMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
    if (dim_ != o.dim_) throw Error("dimension mismatch in matrix product");
    IntMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < dim_; ++k) {
            const Int& a = at(i, k);
            if (a == 0) continue;
            for (int j = 0; j < dim_; ++j) r.at(i, j) += a * o.at(k, j);
        }
    return r;
}

std::vector<Int> IntMatrix::operator*(const std::vector<Int>& v) const {
    if (static_cast<int>(v.size()) != dim_) throw Error("dimension mismatch in matrix-vector product");
    std::vector<Int> r(v.size(), Int(0));
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r[static_cast<size_t>(i)] += at(i, j) * v[static_cast<size_t>(j)];
    return r;
}

IntMatrix IntMatrix::transpose() const {
    IntMatrix r(dim_);
    for (int i = 0; i < dim_; ++i)
        for (int j = 0; j < dim_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool IntMatrix::is_symmetric() const {
    for (int i = 0; i < dim_; ++i)
        for (int j = i + 1; j < dim_; ++j)
            if (at(i, j) != at(j, i)) return false;
    return true;
}

IntMatrix IntMatrix::block(int r0, int k) const {
    if (r0 < 0 || k < 1 || r0 + k > dim_) throw Error("block out of range");
    IntMatrix r(k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) r.at(i, j) = at(r0 + i, r0 + j);
    return r;
}

IntPoly charpoly(const IntMatrix& M) {
    const int n = M.dim();
    // Samuelson-Berkowitz: iterate over leading principal submatrices.
    std::vector<Int> vec{1}; // leading-first coefficients
    for (int r = 0; r < n; ++r) {
        // s_k = u . (M_r)^k . v for the border row u and column v
        std::vector<Int> s(static_cast<size_t>(r));
        if (r > 0) {
            std::vector<Int> w(static_cast<size_t>(r));
            for (int i = 0; i < r; ++i) w[static_cast<size_t>(i)] = M.at(i, r);
            for (int k = 0; k < r; ++k) {
                Int dot = 0;
                for (int i = 0; i < r; ++i) dot += M.at(r, i) * w[static_cast<size_t>(i)];
                s[static_cast<size_t>(k)] = dot;
                if (k + 1 < r) {
                    std::vector<Int> w2(static_cast<size_t>(r), Int(0));
                    for (int i = 0; i < r; ++i)
                        for (int j = 0; j < r; ++j) w2[static_cast<size_t>(i)] += M.at(i, j) * w[static_cast<size_t>(j)];
                    w = std::move(w2);
                }
            }
        }
        // Toeplitz column (1, -a, -s_0, -s_1, ...)
        std::vector<Int> col(static_cast<size_t>(r) + 2);
        col[0] = 1;
        col[1] = -M.at(r, r);
        for (int k = 0; k < r; ++k) col[static_cast<size_t>(k) + 2] = -s[static_cast<size_t>(k)];
        std::vector<Int> next(static_cast<size_t>(r) + 2, Int(0));
        for (size_t i = 0; i < next.size(); ++i)
            for (size_t j = 0; j < vec.size() && j <= i; ++j)
                if (i - j < col.size()) next[i] += col[i - j] * vec[j];
        vec = std::move(next);
    }
    std::vector<Int> coeffs(vec.rbegin(), vec.rend()); // constant first
    return IntPoly(std::move(coeffs));
}

Int determinant(const IntMatrix& M) {
    IntPoly cp = charpoly(M);
    Int c0 = cp.constant();
    return (M.dim() % 2 == 0) ? c0 : -c0;
}

bool is_unimodular(const IntMatrix& M) {
    Int d = determinant(M);
    return d == 1 || d == -1;
}

IntMatrix companion(const IntPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw NotMonic("companion requires a monic polynomial of degree >= 1");
    const int d = p.degree();
    IntMatrix m(d);
    for (int i = 0; i + 1 < d; ++i) m.at(i, i + 1) = 1;
    for (int j = 0; j < d; ++j) m.at(d - 1, j) = -p.coeff(j);
    return m;
}

Inertia signature(const IntMatrix& G) {
    if (!G.is_symmetric()) throw NotSymmetric();
    IntPoly cp = charpoly(G);
    Inertia out;
    const Rat bound = cp.cauchy_bound();
    for (const auto& [f, mult] : squarefree_decomposition(cp)) {
        if (f.constant() == 0) out.zero += mult;
        int pos = sturm_count(f, Rat(0), bound);
        int total = sturm_count(f, -bound, bound); // all roots real (symmetric G)
        int zero = (f.constant() == 0) ? 1 : 0;
        out.pos += mult * pos;
        out.neg += mult * (total - pos - zero);
    }
    return out;
}

} // namespace dyndeg
