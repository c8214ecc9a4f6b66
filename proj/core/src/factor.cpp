#include "dyndeg/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>

namespace dyndeg {

namespace {

// ---------------------------------------------------------------------------
// Arithmetic in F_p[x], p a small odd prime. Coefficients in [0, p).

using PolyP = std::vector<int64_t>;

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const PolyP& a) { return static_cast<int>(a.size()) - 1; }

int64_t inv_mod(int64_t a, int64_t p) {
    int64_t t = 0, nt = 1, r = p, nr = a % p;
    while (nr != 0) {
        int64_t q = r / nr;
        std::swap(t -= q * nt, nt);
        std::swap(r -= q * nr, nr);
    }
    return ((t % p) + p) % p;
}

PolyP mul(const PolyP& a, const PolyP& b, int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    trim(c);
    return c;
}

// a mod b, b nonzero
PolyP rem(PolyP a, const PolyP& b, int64_t p) {
    int64_t linv = inv_mod(b.back(), p);
    while (deg(a) >= deg(b)) {
        int64_t f = a.back() * linv % p;
        int shift = deg(a) - deg(b);
        for (size_t j = 0; j < b.size(); ++j) {
            a[j + static_cast<size_t>(shift)] = ((a[j + static_cast<size_t>(shift)] - f * b[j]) % p + p) % p;
        }
        trim(a);
    }
    return a;
}

PolyP divq(PolyP a, const PolyP& b, int64_t p) {
    PolyP q(std::max<int>(deg(a) - deg(b) + 1, 0), 0);
    int64_t linv = inv_mod(b.back(), p);
    while (deg(a) >= deg(b)) {
        int64_t f = a.back() * linv % p;
        int shift = deg(a) - deg(b);
        q[static_cast<size_t>(shift)] = f;
        for (size_t j = 0; j < b.size(); ++j)
            a[j + static_cast<size_t>(shift)] = ((a[j + static_cast<size_t>(shift)] - f * b[j]) % p + p) % p;
        trim(a);
    }
    trim(q);
    return q;
}

PolyP gcd(PolyP a, PolyP b, int64_t p) {
    while (!b.empty()) {
        PolyP r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        int64_t linv = inv_mod(a.back(), p);
        for (auto& x : a) x = x * linv % p;
    }
    return a;
}

PolyP deriv(const PolyP& a, int64_t p) {
    if (a.size() <= 1) return {};
    PolyP d(a.size() - 1);
    for (size_t i = 1; i < a.size(); ++i) d[i - 1] = (a[i] * static_cast<int64_t>(i % static_cast<size_t>(p))) % p;
    trim(d);
    return d;
}

PolyP powmod_x(int64_t e, const PolyP& f, int64_t p) {
    // x^e mod f by square-and-multiply
    PolyP base{0, 1};
    PolyP acc{1};
    while (e > 0) {
        if (e & 1) acc = rem(mul(acc, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return acc;
}

// extended gcd: returns (g, s) with s*a = g mod b, g monic = gcd(a, b)
std::pair<PolyP, PolyP> half_xgcd(PolyP a, PolyP b, int64_t p) {
    PolyP s{1}, ns{};
    while (!b.empty()) {
        PolyP q = divq(a, b, p);
        PolyP r = rem(a, b, p);
        PolyP nns = s;
        PolyP qs = mul(q, ns, p);
        // nns = s - q*ns
        nns.resize(std::max(nns.size(), qs.size()), 0);
        for (size_t i = 0; i < qs.size(); ++i) nns[i] = ((nns[i] - qs[i]) % p + p) % p;
        trim(nns);
        a = std::move(b);
        b = std::move(r);
        s = std::move(ns);
        ns = std::move(nns);
    }
    if (!a.empty()) {
        int64_t linv = inv_mod(a.back(), p);
        for (auto& x : a) x = x * linv % p;
        for (auto& x : s) x = x * linv % p;
    }
    return {a, s};
}

// Berlekamp factorization of a monic squarefree f over F_p.
std::vector<PolyP> berlekamp(const PolyP& f, int64_t p) {
    const int n = deg(f);
    if (n <= 1) return {f};
    // Q[i] = coefficients of x^{p*i} mod f
    std::vector<PolyP> Q(static_cast<size_t>(n));
    PolyP xp = powmod_x(p, f, p);
    PolyP cur{1};
    for (int i = 0; i < n; ++i) {
        Q[static_cast<size_t>(i)] = cur;
        cur = rem(mul(cur, xp, p), f, p);
    }
    // nullspace of (Q - I)^T: vectors v with v(x)^p = v(x) mod f
    // build matrix A[r][c] = Q[c][r] - delta(r,c)
    std::vector<std::vector<int64_t>> A(static_cast<size_t>(n), std::vector<int64_t>(static_cast<size_t>(n), 0));
    for (int c = 0; c < n; ++c) {
        const PolyP& q = Q[static_cast<size_t>(c)];
        for (int r = 0; r < n; ++r) {
            int64_t v = (r < static_cast<int>(q.size())) ? q[static_cast<size_t>(r)] : 0;
            if (r == c) v = (v - 1 + p) % p;
            A[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
        }
    }
    // Gaussian elimination, collect nullspace basis
    std::vector<int> pivot_col(static_cast<size_t>(n), -1);
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = -1;
        for (int r = row; r < n; ++r)
            if (A[static_cast<size_t>(r)][static_cast<size_t>(col)] != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(A[static_cast<size_t>(pr)], A[static_cast<size_t>(row)]);
        int64_t linv = inv_mod(A[static_cast<size_t>(row)][static_cast<size_t>(col)], p);
        for (int c = 0; c < n; ++c) A[static_cast<size_t>(row)][static_cast<size_t>(c)] = A[static_cast<size_t>(row)][static_cast<size_t>(c)] * linv % p;
        for (int r = 0; r < n; ++r) {
            if (r == row) continue;
            int64_t f2 = A[static_cast<size_t>(r)][static_cast<size_t>(col)];
            if (f2 == 0) continue;
            for (int c = 0; c < n; ++c)
                A[static_cast<size_t>(r)][static_cast<size_t>(c)] =
                    ((A[static_cast<size_t>(r)][static_cast<size_t>(c)] - f2 * A[static_cast<size_t>(row)][static_cast<size_t>(c)]) % p + p) % p;
        }
        pivot_col[static_cast<size_t>(row)] = col;
        ++row;
    }
    std::vector<PolyP> basis;
    std::vector<bool> is_pivot(static_cast<size_t>(n), false);
    for (int r = 0; r < row; ++r) is_pivot[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] = true;
    for (int free_col = 0; free_col < n; ++free_col) {
        if (is_pivot[static_cast<size_t>(free_col)]) continue;
        PolyP v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(free_col)] = 1;
        for (int r = 0; r < row; ++r) {
            int pc = pivot_col[static_cast<size_t>(r)];
            v[static_cast<size_t>(pc)] = (p - A[static_cast<size_t>(r)][static_cast<size_t>(free_col)] % p) % p;
        }
        trim(v);
        basis.push_back(std::move(v));
    }
    const size_t r_factors = basis.size();
    std::vector<PolyP> factors{f};
    for (const auto& v : basis) {
        if (factors.size() == r_factors) break;
        if (deg(v) < 1) continue; // the constants split nothing
        std::vector<PolyP> next;
        for (const auto& w : factors) {
            if (deg(w) <= 1) {
                next.push_back(w);
                continue;
            }
            PolyP rest = w;
            for (int64_t c = 0; c < p && deg(rest) > 0; ++c) {
                PolyP vc = v;
                if (vc.empty()) vc = {0};
                vc[0] = (vc[0] - c % p + p) % p;
                trim(vc);
                PolyP g = vc.empty() ? PolyP{} : gcd(rest, vc, p);
                if (deg(g) >= 1 && deg(g) < deg(rest)) {
                    next.push_back(g);
                    rest = divq(rest, g, p);
                }
            }
            if (deg(rest) >= 1) next.push_back(rest);
        }
        factors = std::move(next);
    }
    // make monic
    for (auto& w : factors) {
        int64_t linv = inv_mod(w.back(), p);
        for (auto& x : w) x = x * linv % p;
    }
    return factors;
}

// ---------------------------------------------------------------------------
// Hensel lifting (linear, multi-factor)

PolyP to_mod_p(const IntPoly& f, int64_t p) {
    PolyP out(static_cast<size_t>(f.degree()) + 1);
    for (int i = 0; i <= f.degree(); ++i) {
        Int r = f.coeff(i) % p;
        if (r < 0) r += p;
        out[static_cast<size_t>(i)] = r.get_si();
    }
    trim(out);
    return out;
}

// big-integer polynomials reduced mod m, coefficients in [0, m)
using PolyM = std::vector<Int>;

PolyM lift_of(const PolyP& a) {
    PolyM out(a.size());
    for (size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    return out;
}

PolyM mul_mod(const PolyM& a, const PolyM& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    PolyM c(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    for (auto& x : c) {
        x %= m;
        if (x < 0) x += m;
    }
    while (!c.empty() && c.back() == 0) c.pop_back();
    return c;
}

// Lift f = prod g_i from mod p to mod p^k >= target (f monic, g_i monic).
std::vector<PolyM> hensel_lift(const IntPoly& f, const std::vector<PolyP>& gs, int64_t p, const Int& target,
                               Int* modulus_out) {
    const size_t r = gs.size();
    // Bezout data in F_p: s_i * prod_{j != i} g_j = 1 mod g_i
    std::vector<PolyP> s(r);
    for (size_t i = 0; i < r; ++i) {
        PolyP prod{1};
        for (size_t j = 0; j < r; ++j)
            if (j != i) prod = rem(mul(prod, gs[j], p), gs[i], p);
        auto [g, inv] = half_xgcd(prod, gs[i], p);
        if (deg(g) != 0) throw Error("internal: modular factors not coprime in Hensel lift");
        s[i] = rem(inv, gs[i], p);
    }
    std::vector<PolyM> G(r);
    for (size_t i = 0; i < r; ++i) G[i] = lift_of(gs[i]);
    Int m = p;
    while (m < target) {
        Int m2 = m * p;
        // e = (f - prod G_i) / m  mod p
        PolyM prod{Int(1)};
        for (const auto& g : G) prod = mul_mod(prod, g, m2);
        PolyM e(static_cast<size_t>(f.degree()) + 1, Int(0));
        for (int i = 0; i <= f.degree(); ++i) e[static_cast<size_t>(i)] = f.coeff(i);
        for (size_t i = 0; i < prod.size(); ++i) e[i] -= prod[i];
        PolyP ep(e.size());
        for (size_t i = 0; i < e.size(); ++i) {
            Int q = e[i] % m2;
            if (q < 0) q += m2;
            if (q % m != 0) throw Error("internal: Hensel error not divisible by modulus");
            Int d = (q / m) % p;
            ep[i] = d.get_si();
        }
        trim(ep);
        // corrections d_i = (e * s_i) mod g_i in F_p
        for (size_t i = 0; i < r; ++i) {
            PolyP di = rem(mul(ep, s[i], p), gs[i], p);
            for (size_t c = 0; c < di.size(); ++c) {
                G[i].resize(std::max(G[i].size(), di.size()), Int(0));
                G[i][c] = (G[i][c] + m * di[c]) % m2;
            }
        }
        m = m2;
    }
    *modulus_out = m;
    return G;
}

// symmetric representative in (-m/2, m/2]
Int sym(const Int& a, const Int& m) {
    Int r = a % m;
    if (r < 0) r += m;
    if (2 * r > m) r -= m;
    return r;
}

IntPoly from_mod_sym(const PolyM& a, const Int& m) {
    std::vector<Int> v(a.size());
    for (size_t i = 0; i < a.size(); ++i) v[i] = sym(a[i], m);
    return IntPoly(std::move(v));
}

// ---------------------------------------------------------------------------
// Zassenhaus on a monic squarefree polynomial

Int mignotte_bound(const IntPoly& f) {
    Int norm2 = 0;
    for (const auto& c : f.coeffs()) norm2 += c * c;
    Int s;
    mpz_sqrt(s.get_mpz_t(), norm2.get_mpz_t());
    s += 1;
    Int b = s + f.height();
    mpz_mul_2exp(b.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(f.degree() + 1));
    return b;
}

const int64_t kPrimes[] = {3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73};

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
    const int n = f.degree();
    if (n == 1) return {f};

    // pick a prime keeping f squarefree, preferring few modular factors
    int64_t best_p = 0;
    std::vector<PolyP> best_factors;
    int tried = 0;
    for (int64_t p : kPrimes) {
        PolyP fp = to_mod_p(f, p);
        if (deg(fp) != n) continue; // cannot happen for monic f
        if (deg(gcd(fp, deriv(fp, p), p)) != 0) continue;
        auto factors = berlekamp(fp, p);
        if (best_p == 0 || factors.size() < best_factors.size()) {
            best_p = p;
            best_factors = std::move(factors);
        }
        if (best_factors.size() == 1) break;
        if (++tried >= 4) break;
    }
    if (best_p == 0) throw Error("no suitable small prime for factorization (unexpectedly large discriminant)");
    if (best_factors.size() == 1) return {f};

    std::sort(best_factors.begin(), best_factors.end());
    Int target = 2 * mignotte_bound(f) + 1;
    Int modulus;
    std::vector<PolyM> lifted = hensel_lift(f, best_factors, best_p, target, &modulus);

    // subset recombination
    std::vector<IntPoly> out;
    IntPoly remainder = f;
    std::vector<size_t> alive(lifted.size());
    std::iota(alive.begin(), alive.end(), size_t{0});
    bool progress = true;
    size_t subset_size = 1;
    while (alive.size() > 0 && subset_size <= alive.size() / 2) {
        progress = false;
        std::vector<bool> mask(alive.size(), false);
        std::fill(mask.end() - static_cast<long>(subset_size), mask.end(), true);
        // iterate all subsets of the current size
        std::vector<std::vector<size_t>> hits;
        do {
            std::vector<size_t> subset;
            for (size_t i = 0; i < alive.size(); ++i)
                if (mask[i]) subset.push_back(alive[i]);
            PolyM prod{Int(1)};
            for (size_t idx : subset) prod = mul_mod(prod, lifted[idx], modulus);
            IntPoly cand = from_mod_sym(prod, modulus);
            // quick test: the candidate constant must divide the remainder's
            Int c0 = cand.constant();
            if (c0 == 0) continue;
            Int q, r0;
            mpz_tdiv_qr(q.get_mpz_t(), r0.get_mpz_t(), remainder.constant().get_mpz_t(), c0.get_mpz_t());
            if (r0 != 0) continue;
            IntPoly quot;
            if (remainder.try_divide(cand, &quot)) {
                out.push_back(cand);
                remainder = quot;
                std::erase_if(alive, [&](size_t idx) { return std::find(subset.begin(), subset.end(), idx) != subset.end(); });
                progress = true;
                break;
            }
        } while (std::next_permutation(mask.begin(), mask.end()));
        if (!progress) ++subset_size;
    }
    if (remainder.degree() > 0) out.push_back(remainder);
    return out;
}

} // namespace

std::vector<std::pair<IntPoly, int>> factor_int(const IntPoly& p, const FactorCaps& caps) {
    if (!p.is_monic()) throw NotMonic("factor_int requires monic input");
    if (p.degree() > caps.degree_cap) throw CapExceeded("factorization degree cap exceeded");
    Int hcap = 1;
    mpz_mul_2exp(hcap.get_mpz_t(), hcap.get_mpz_t(), static_cast<unsigned long>(caps.height_bits_cap));
    if (p.height() >= hcap) throw CapExceeded("factorization height cap exceeded");

    std::vector<std::pair<IntPoly, int>> out;
    if (p.degree() == 0) return out;
    for (const auto& [f, mult] : squarefree_decomposition(p))
        for (const auto& irred : zassenhaus(f)) out.emplace_back(irred, mult);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && a.second < b.second); });
    return out;
}

bool is_irreducible(const IntPoly& p, const FactorCaps& caps) {
    if (p.degree() < 1) return false;
    auto f = factor_int(p, caps);
    return f.size() == 1 && f[0].second == 1;
}

} // namespace dyndeg
