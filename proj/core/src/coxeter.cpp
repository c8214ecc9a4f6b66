#include "dyndeg/coxeter.hpp"

#include <algorithm>
#include <thread>

namespace dyndeg {

bool CoxeterWord::is_reduced() const {
    for (size_t i = 0; i + 1 < letters.size(); ++i)
        if (letters[i] == letters[i + 1]) return false;
    return true;
}

namespace {

// Nullspace basis of a rational matrix (rows = equations).
std::vector<std::vector<Rat>> nullspace(std::vector<std::vector<Rat>> rows, size_t cols) {
    std::vector<size_t> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows.size(); ++c) {
        size_t sel = r;
        while (sel < rows.size() && rows[sel][c] == 0) ++sel;
        if (sel == rows.size()) continue;
        std::swap(rows[r], rows[sel]);
        Rat inv = rows[r][c];
        for (size_t j = c; j < cols; ++j) rows[r][j] /= inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rat f = rows[i][c];
            for (size_t j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(cols, false);
    for (size_t c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<Rat>> basis;
    for (size_t fc = 0; fc < cols; ++fc) {
        if (is_pivot[fc]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[fc] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -rows[i][fc];
        basis.push_back(std::move(v));
    }
    return basis;
}

size_t sym_index(int i, int j, int m) {
    if (i > j) std::swap(i, j);
    // row-major upper triangle
    return static_cast<size_t>(i) * m - static_cast<size_t>(i) * (i - 1) / 2 + (j - i);
}

IntMatrix solve_invariant_gram(int n, const std::vector<IntMatrix>& gens) {
    const int m = n + 1;
    const size_t unknowns = static_cast<size_t>(m) * (m + 1) / 2;
    std::vector<std::vector<Rat>> rows;
    for (const IntMatrix& G : gens) {
        for (int p = 0; p < m; ++p)
            for (int q = p; q < m; ++q) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (int i = 0; i < m; ++i)
                    for (int j = i; j < m; ++j) {
                        Int coeff = G.at(i, p) * G.at(j, q);
                        if (i != j) coeff += G.at(j, p) * G.at(i, q);
                        row[sym_index(i, j, m)] += Rat(coeff);
                    }
                row[sym_index(p, q, m)] -= 1;
                rows.push_back(std::move(row));
            }
    }
    auto basis = nullspace(std::move(rows), unknowns);
    if (basis.size() != 1)
        throw StructureViolation("invariant form solution space is not one-dimensional");
    std::vector<Rat>& v = basis[0];
    Rat scale = v[sym_index(0, 1, m)];
    if (scale == 0) throw StructureViolation("invariant form has zero off-diagonal entry");
    IntMatrix gram(m);
    for (int i = 0; i < m; ++i)
        for (int j = i; j < m; ++j) {
            Rat e = v[sym_index(i, j, m)] / scale;
            if (e.get_den() != 1)
                throw StructureViolation("invariant form is not integral after normalization");
            gram.at(i, j) = e.get_num();
            gram.at(j, i) = e.get_num();
        }
    return gram;
}

bool preserves_form(const IntMatrix& G, const IntMatrix& B) {
    return G.transpose() * B * G == B;
}

} // namespace

WehlerRep wehler_generators(int n) {
    if (n < 2) throw Error("wehler_generators requires n >= 2");
    const int m = n + 1;
    WehlerRep rep;
    rep.n = n;
    for (int k = 0; k < m; ++k) {
        IntMatrix G = IntMatrix::identity(m);
        for (int i = 0; i < m; ++i) G.at(i, k) = (i == k) ? Int(-1) : Int(2);
        rep.generators.push_back(std::move(G));
    }
    rep.gram = solve_invariant_gram(n, rep.generators);

    const IntMatrix id = IntMatrix::identity(m);
    for (const IntMatrix& G : rep.generators) {
        if (!(G * G == id)) throw StructureViolation("generator is not an involution");
        if (!preserves_form(G, rep.gram)) throw StructureViolation("generator does not preserve the form");
    }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Int expect = (i == j) ? Int(-(n - 2)) : Int(1);
            if (rep.gram.at(i, j) != expect)
                throw StructureViolation("invariant form has unexpected normalized entries");
        }
    Inertia sig = signature(rep.gram);
    if (sig.pos != 1 || sig.neg != n || sig.zero != 0)
        throw StructureViolation("invariant form does not have signature (1, n)");
    return rep;
}

IntMatrix word_to_matrix(const WehlerRep& rep, const CoxeterWord& w) {
    if (!w.is_reduced()) throw NotReduced();
    const int m = rep.rank();
    for (int letter : w.letters)
        if (letter < 1 || letter > m) throw Error("word letter out of range 1..rank");
    IntMatrix out = IntMatrix::identity(m);
    for (int letter : w.letters) out = out * rep.generators[static_cast<size_t>(letter - 1)];
    return out;
}

RationalInterval d1_of_word(const WehlerRep& rep, const CoxeterWord& w, const Rat& tol) {
    IntPoly cp = charpoly(word_to_matrix(rep, w));
    if (disk_counts(cp).outside == 0) return RationalInterval::point(Rat(1));
    IsometryStructure is = isometry_structure(cp, tol);
    if (!is.salem_part) return RationalInterval::point(Rat(1));
    return is.salem_part->second;
}

std::vector<int> canonical_word(const std::vector<int>& letters) {
    std::vector<int> w = letters;
    // cyclic reduction: peel equal first/last letters (generators square to 1)
    while (w.size() >= 2 && w.front() == w.back()) {
        w.erase(w.begin());
        w.pop_back();
    }
    if (w.empty()) return w;
    std::vector<int> best = w;
    auto consider_rotations = [&best](std::vector<int> v) {
        for (size_t r = 0; r < v.size(); ++r) {
            if (v < best) best = v;
            std::rotate(v.begin(), v.begin() + 1, v.end());
        }
    };
    consider_rotations(w);
    std::vector<int> rev(w.rbegin(), w.rend());
    consider_rotations(rev);
    return best;
}

namespace {

// All canonical cyclically-reduced words of length 1..max_len, by length
// then lexicographic order.
std::vector<std::vector<int>> canonical_words(int rank, int max_len) {
    std::vector<std::vector<int>> out;
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> cur;
        auto dfs = [&](auto&& self) -> void {
            if (static_cast<int>(cur.size()) == len) {
                if ((len == 1 || cur.front() != cur.back()) && canonical_word(cur) == cur)
                    out.push_back(cur);
                return;
            }
            for (int letter = 1; letter <= rank; ++letter) {
                if (!cur.empty() && cur.back() == letter) continue;
                cur.push_back(letter);
                self(self);
                cur.pop_back();
            }
        };
        dfs(dfs);
    }
    return out;
}

} // namespace

std::vector<SalemHit> salem_element_search(const WehlerRep& rep, int max_len,
                                           bool full_degree_only, const Rat& tol, int threads) {
    if (max_len < 1) throw Error("salem_element_search requires max_len >= 1");
    if (full_degree_only && rep.rank() % 2 != 0) throw OddRankFullDegree();
    if (threads < 1) threads = 1;

    const std::vector<std::vector<int>> words = canonical_words(rep.rank(), max_len);

    auto test_word = [&](const std::vector<int>& letters) -> std::optional<SalemHit> {
        CoxeterWord w{letters};
        IntPoly cp = charpoly(word_to_matrix(rep, w));
        if (full_degree_only) {
            if (!cp.is_palindromic()) return std::nullopt;
            if (cp.eval(Int(1)) == 0 || cp.eval(Int(-1)) == 0) return std::nullopt;
            Classification c = classify(cp, tol);
            if (c.kind != Kind::Salem) return std::nullopt;
            return SalemHit{std::move(w), cp, cp, c.dominant};
        }
        if (disk_counts(cp).outside == 0) return std::nullopt;
        IsometryStructure is = isometry_structure(cp, tol);
        if (!is.salem_part) return std::nullopt;
        return SalemHit{std::move(w), cp, is.salem_part->first, is.salem_part->second};
    };

    std::vector<std::optional<SalemHit>> results(words.size());
    if (threads == 1 || words.size() < 64) {
        for (size_t i = 0; i < words.size(); ++i) results[i] = test_word(words[i]);
    } else {
        std::vector<std::thread> workers;
        const size_t chunk = (words.size() + static_cast<size_t>(threads) - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            size_t lo = static_cast<size_t>(t) * chunk;
            size_t hi = std::min(words.size(), lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back([&, lo, hi] {
                for (size_t i = lo; i < hi; ++i) results[i] = test_word(words[i]);
            });
        }
        for (auto& th : workers) th.join();
    }

    std::vector<SalemHit> hits;
    for (auto& r : results)
        if (r) hits.push_back(std::move(*r));
    std::sort(hits.begin(), hits.end(), [](const SalemHit& a, const SalemHit& b) {
        if (a.dominant.lo != b.dominant.lo) return a.dominant.lo < b.dominant.lo;
        if (a.dominant.hi != b.dominant.hi) return a.dominant.hi < b.dominant.hi;
        if (a.word.letters.size() != b.word.letters.size())
            return a.word.letters.size() < b.word.letters.size();
        return a.word.letters < b.word.letters;
    });
    return hits;
}

CertificateOrRefusal picard_primitivity_certificate(const WehlerRep& rep, const CoxeterWord& w,
                                                    const Rat& tol) {
    CertificateOrRefusal out;
    IntPoly cp = charpoly(word_to_matrix(rep, w));
    Classification c = classify(cp, tol);
    if (c.kind != Kind::Salem) {
        if (c.counts.outside == 0)
            out.refusal_reason = "spectral radius is 1 (no root outside the unit circle)";
        else
            out.refusal_reason = "characteristic polynomial is not an irreducible full-degree Salem polynomial";
        return out;
    }
    PrimitivityCertificate cert;
    cert.criterion = PrimitivityCertificate::Criterion::IrreduciblePicard;
    cert.d1 = c.dominant;
    cert.charpoly = cp;
    cert.word = w.letters;
    cert.justification =
        "the characteristic polynomial on the rank-(n+1) lattice is an irreducible Salem "
        "polynomial of full degree, so the action admits no nontrivial invariant rational "
        "subspace and hence no equivariant fibration; its dominant root exceeds 1";
    out.certificate = std::move(cert);
    return out;
}

} // namespace dyndeg
