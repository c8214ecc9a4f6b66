#include "dyndeg/root_counting.hpp"

#include <algorithm>
#include <atomic>
#include <complex>
#include <cstdlib>
#include <map>
#include <mutex>

#include "dyndeg/int_matrix.hpp"

namespace dyndeg {

namespace {

std::atomic<int> g_max_precision_bits{0}; // 0 = uninitialized

int default_precision_bits() {
    if (const char* env = std::getenv("DYNDEG_MAX_PRECISION")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 4096;
}

} // namespace

int max_precision_bits() {
    int v = g_max_precision_bits.load();
    if (v == 0) {
        v = default_precision_bits();
        g_max_precision_bits.store(v);
    }
    return v;
}

void set_max_precision_bits(int bits) {
    if (bits <= 0) throw Error("precision budget must be positive");
    g_max_precision_bits.store(bits);
}

// ---------------------------------------------------------------------------
// Sturm sequences

namespace {

// Sturm chain of a squarefree primitive polynomial. Integer members, each a
// positive-constant multiple of the rational chain, so sign variations match.
std::vector<IntPoly> sturm_chain(const IntPoly& f) {
    std::vector<IntPoly> chain;
    chain.push_back(f);
    chain.push_back(f.derivative().primitive_part());
    while (chain.back().degree() > 0) {
        const IntPoly& a = chain[chain.size() - 2];
        const IntPoly& b = chain.back();
        // pseudo-remainder with an even (positive) power of the leading
        // coefficient so the sign of the true remainder is preserved
        int delta = a.degree() - b.degree();
        const Int& lb = b.leading();
        Int mult = 1;
        int e = delta + 1;
        if ((e % 2) == 1) ++e;
        for (int i = 0; i < e; ++i) mult *= lb;
        std::vector<Int> rc((a * mult).coeffs());
        const int db = b.degree();
        for (int k = static_cast<int>(rc.size()) - 1 - db; k >= 0; --k) {
            Int f2 = rc[static_cast<size_t>(k + db)] / lb;
            if (f2 != 0)
                for (int j = 0; j <= db; ++j) rc[static_cast<size_t>(k + j)] -= f2 * b.coeff(j);
        }
        rc.resize(static_cast<size_t>(db));
        IntPoly rem = IntPoly(std::move(rc));
        if (rem.is_zero()) break; // gcd nontrivial; cannot happen for squarefree f
        // negate, then strip the (positive) content so signs are preserved
        IntPoly next = -rem;
        Int ct = next.content();
        std::vector<Int> nc(next.coeffs());
        for (auto& x : nc) x /= ct;
        chain.push_back(IntPoly(std::move(nc)));
    }
    return chain;
}

int sign_variations_at(const std::vector<IntPoly>& chain, const Rat& t) {
    int var = 0, prev = 0;
    for (const auto& f : chain) {
        int s = f.sign_at(t);
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++var;
        prev = s;
    }
    return var;
}

// deflate an exact rational root t = num/den: divide by primitive (den*x - num)
IntPoly deflate_rational_root(const IntPoly& f, const Rat& t) {
    IntPoly lin(std::vector<Int>{-t.get_num(), t.get_den()});
    return f.divide_exact(lin.primitive_part() * f.content());
}

} // namespace

int sturm_count(const IntPoly& p, const Rat& a, const Rat& b) {
    if (p.is_zero()) throw Error("sturm_count of the zero polynomial");
    if (!(a < b)) throw Error("sturm_count requires a < b");
    IntPoly f = squarefree_part(p);
    int extra = 0;
    while (f.degree() > 0 && f.sign_at(b) == 0) {
        f = deflate_rational_root(f, b);
        extra = 1; // b is a root, lies in (a, b]
    }
    while (f.degree() > 0 && f.sign_at(a) == 0) f = deflate_rational_root(f, a);
    if (f.degree() <= 0) return extra;
    auto chain = sturm_chain(f);
    return sign_variations_at(chain, a) - sign_variations_at(chain, b) + extra;
}

// ---------------------------------------------------------------------------
// Disk counting (Schur-Cohn form + reciprocal-gcd circle split)

namespace {

// Schur-Cohn symmetric matrix of f (degree n >= 1). For real f with no roots
// on the unit circle and no reciprocal root pairs it is nonsingular with
// negative inertia = #roots inside the open unit disk.
IntMatrix schur_cohn_matrix(const IntPoly& f) {
    const int n = f.degree();
    IntMatrix S(n);
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) {
            Int s = 0;
            for (int k = 0; k < std::min(i, j); ++k)
                s += f.coeff(i - 1 - k) * f.coeff(j - 1 - k) - f.coeff(n - i + 1 + k) * f.coeff(n - j + 1 + k);
            S.at(i - 1, j - 1) = s;
            S.at(j - 1, i - 1) = s;
        }
    return S;
}

// counts for a squarefree primitive factor (weight 1)
DiskCounts disk_counts_squarefree(const IntPoly& f) {
    DiskCounts out;
    if (f.degree() == 0) return out;
    IntPoly g = poly_gcd(f, f.reciprocal());
    IntPoly h = f.divide_exact(g);

    // g: self-inversive part. Roots on the circle, plus reciprocal pairs
    // splitting evenly inside/outside.
    if (g.degree() > 0) {
        IntPoly g0 = g;
        int on = 0;
        if (g0.sign_at(Rat(1)) == 0) {
            g0 = deflate_rational_root(g0, Rat(1));
            ++on;
        }
        if (g0.degree() > 0 && g0.sign_at(Rat(-1)) == 0) {
            g0 = deflate_rational_root(g0, Rat(-1));
            ++on;
        }
        if (g0.degree() > 0) {
            if (g0.degree() % 2 != 0 || !g0.is_palindromic())
                throw Error("internal: self-inversive part not palindromic after removing roots at +-1");
            IntPoly q = trace_transform(g0);
            on += 2 * sturm_count(q, Rat(-2), Rat(2));
        }
        out.on += on;
        int pairs = (g.degree() - on) / 2;
        out.inside += pairs;
        out.outside += pairs;
    }

    if (h.degree() > 0) {
        Inertia in = signature(schur_cohn_matrix(h));
        if (in.zero != 0)
            throw Error("internal: singular Schur-Cohn form after circle split");
        out.inside += in.neg;
        out.outside += in.pos;
    }
    return out;
}

} // namespace

DiskCounts disk_counts(const IntPoly& p) {
    if (p.is_zero()) throw Error("disk count of the zero polynomial");
    if (p.constant() == 0) throw ZeroConstantTerm();
    DiskCounts out;
    for (const auto& [f, mult] : squarefree_decomposition(p)) {
        DiskCounts c = disk_counts_squarefree(f);
        out.inside += mult * c.inside;
        out.on += mult * c.on;
        out.outside += mult * c.outside;
    }
    return out;
}

DiskCounts unit_disk_count(const IntPoly& p) {
    if (!p.is_monic()) throw NotMonic("unit_disk_count requires monic input");
    return disk_counts(p);
}

std::pair<int, int> count_moduli_at(const IntPoly& p, const Rat& r) {
    if (r <= 0) throw Error("radius must be positive");
    DiskCounts c = disk_counts(p.scale_arg(r).primitive_part());
    return {c.inside, c.on};
}

// ---------------------------------------------------------------------------
// Trace transform

IntPoly trace_transform(const IntPoly& p) {
    if (p.is_zero() || p.degree() % 2 != 0 || p.degree() == 0 || !p.is_palindromic())
        throw NotPalindromic();
    const int d = p.degree() / 2;
    // p(z)/z^d = a_d + sum_{k>=1} a_{d+k} (z^k + z^-k); z^k + z^-k = P_k(t)
    IntPoly q = IntPoly{1} * p.coeff(d);
    IntPoly pk_prev = IntPoly{2};
    IntPoly pk = IntPoly::x();
    for (int k = 1; k <= d; ++k) {
        q = q + pk * p.coeff(d + k);
        IntPoly next = IntPoly::x() * pk - pk_prev;
        pk_prev = pk;
        pk = next;
    }
    return q;
}

// ---------------------------------------------------------------------------
// Cyclotomic polynomials

unsigned euler_phi(unsigned n) {
    unsigned result = n;
    for (unsigned q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            while (n % q == 0) n /= q;
            result -= result / q;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

IntPoly cyclotomic(unsigned n) {
    if (n == 0) throw Error("cyclotomic index must be >= 1");
    static std::mutex mu;
    static std::map<unsigned, IntPoly> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return it->second;
    }
    // x^n - 1 divided by all proper-divisor cyclotomics
    IntPoly num = IntPoly::monomial(static_cast<int>(n)) - IntPoly::one();
    for (unsigned d = 1; d < n; ++d)
        if (n % d == 0) num = num.divide_exact(cyclotomic(d));
    {
        std::lock_guard<std::mutex> lock(mu);
        cache.emplace(n, num);
    }
    return num;
}

CyclotomicPeel peel_cyclotomic(const IntPoly& p) {
    if (!p.is_monic()) throw NotMonic("peel_cyclotomic requires monic input");
    if (p.constant() == 0) throw ZeroConstantTerm();
    CyclotomicPeel out;
    out.remainder = p;
    // Any cyclotomic factor Phi_m of the remainder satisfies
    // phi(m) <= deg, hence m <= 2*deg^2 (phi(m) >= sqrt(m/2)).
    for (unsigned n = 1;; ++n) {
        int dr = out.remainder.degree();
        if (dr == 0 || n > 2u * static_cast<unsigned>(dr) * static_cast<unsigned>(dr)) break;
        if (static_cast<int>(euler_phi(n)) > dr) continue;
        IntPoly phi = cyclotomic(n);
        int mult = 0;
        IntPoly quot;
        while (out.remainder.try_divide(phi, &quot)) {
            out.remainder = quot;
            ++mult;
        }
        if (mult > 0) out.factors.emplace_back(n, mult);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Dominant real root

RationalInterval dominant_real_root(const IntPoly& p, const Rat& tol) {
    if (tol <= 0) throw Error("tolerance must be positive");
    if (p.is_zero() || p.degree() < 1) throw NoRootAboveOne();
    IntPoly f = squarefree_part(p);
    const Rat bound = f.cauchy_bound() + 1;
    if (sturm_count(f, Rat(1), bound) == 0) throw NoRootAboveOne();
    Rat lo = 1, hi = bound;
    int budget = max_precision_bits();
    while (hi - lo > tol) {
        if (--budget < 0) throw CertificationFailed();
        Rat mid = (lo + hi) / 2;
        if (f.sign_at(mid) == 0) return RationalInterval::point(mid);
        if (sturm_count(f, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    // shrink until the interval isolates a single sign change
    while (f.sign_at(lo) * f.sign_at(hi) > 0) {
        if (--budget < 0) throw CertificationFailed();
        Rat mid = (lo + hi) / 2;
        if (f.sign_at(mid) == 0) return RationalInterval::point(mid);
        if (sturm_count(f, mid, hi) >= 1)
            lo = mid;
        else
            hi = mid;
    }
    return RationalInterval(lo, hi);
}

// ---------------------------------------------------------------------------
// Certified root moduli

namespace {

// Durand-Kerner simultaneous iteration; guesses only, never trusted.
std::vector<double> approximate_moduli(const IntPoly& f) {
    const int n = f.degree();
    std::vector<std::complex<double>> c(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double v = f.coeff(i).get_d();
        if (!std::isfinite(v)) return {}; // coefficients exceed double range
        c[static_cast<size_t>(i)] = v;
    }
    double lc = std::abs(c.back());
    for (auto& x : c) x /= lc;
    std::vector<std::complex<double>> z(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        z[static_cast<size_t>(i)] = std::polar(1.3, 2.0 * M_PI * i / n + 0.41);
    auto eval = [&](std::complex<double> t) {
        std::complex<double> acc = 0;
        for (int i = n; i >= 0; --i) acc = acc * t + c[static_cast<size_t>(i)];
        return acc;
    };
    for (int iter = 0; iter < 400; ++iter) {
        double movement = 0;
        for (int i = 0; i < n; ++i) {
            std::complex<double> denom = 1;
            for (int j = 0; j < n; ++j)
                if (j != i) denom *= z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
            if (denom == std::complex<double>(0)) denom = 1e-30;
            std::complex<double> delta = eval(z[static_cast<size_t>(i)]) / denom;
            z[static_cast<size_t>(i)] -= delta;
            movement = std::max(movement, std::abs(delta));
        }
        if (movement < 1e-14) break;
    }
    std::vector<double> mods(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) mods[static_cast<size_t>(i)] = std::abs(z[static_cast<size_t>(i)]);
    std::sort(mods.begin(), mods.end());
    return mods;
}

struct ModulusGroup {
    RationalInterval enc;
    int count = 0;
};

class RadiusCounter {
public:
    explicit RadiusCounter(const IntPoly& p) : p_(p) {}

    // #roots with modulus <= r, and #roots with modulus == r
    std::pair<int, int> leq(const Rat& r) {
        if (r == 0) return {0, 0}; // constant term is nonzero
        auto it = cache_.find(r);
        if (it == cache_.end()) it = cache_.emplace(r, count_moduli_at(p_, r)).first;
        return {it->second.first + it->second.second, it->second.second};
    }

private:
    const IntPoly& p_;
    std::map<Rat, std::pair<int, int>> cache_;
};

} // namespace

RootProfile root_moduli(const IntPoly& p, const Rat& tol) {
    if (!p.is_monic()) throw NotMonic("root_moduli requires monic input");
    if (p.constant() == 0) throw ZeroConstantTerm();
    if (tol <= 0) throw Error("tolerance must be positive");
    const int d = p.degree();

    RootProfile out;
    out.disk_counts = disk_counts(p);

    RadiusCounter counter(p);
    const Rat bound = p.cauchy_bound() + 1;

    // Breakpoints: always split exactly at radius 1; seed the rest from the
    // floating approximation, verified (and refined) by exact counting.
    std::vector<Rat> cuts{Rat(1, 1 << 20), Rat(1), bound};
    {
        std::vector<double> approx;
        for (const auto& [f, mult] : squarefree_decomposition(p)) {
            auto mods = approximate_moduli(f);
            for (double m : mods)
                for (int k = 0; k < mult; ++k) approx.push_back(m);
        }
        std::sort(approx.begin(), approx.end());
        double margin = std::min(tol.get_d() * 0.4, 1e-7);
        for (double m : approx) {
            if (m <= margin) continue;
            cuts.push_back(dyadic_round(Rat(m - margin), 40, false));
            cuts.push_back(dyadic_round(Rat(m + margin), 40, true));
        }
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    std::erase_if(cuts, [&](const Rat& r) { return r <= 0 || r > bound; });
    if (cuts.empty() || cuts.back() != bound) cuts.push_back(bound);

    // groups between consecutive cuts, plus exact point hits at the cuts
    std::vector<ModulusGroup> groups;
    int budget = max_precision_bits();

    auto emit_point = [&](const Rat& r, int k) {
        if (k > 0) groups.push_back({RationalInterval::point(r), k});
    };

    // refine the open group (a, b) holding k moduli until width <= tol
    auto refine = [&](Rat a, Rat b, int k, auto&& self) -> void {
        if (k == 0) return;
        if (b - a <= tol) {
            groups.push_back({RationalInterval(a, b), k});
            return;
        }
        if (--budget < 0) throw CertificationFailed();
        Rat mid = dyadic_round((a + b) / 2, 80, false);
        if (mid <= a || mid >= b) mid = (a + b) / 2;
        auto [leq_mid, at_mid] = counter.leq(mid);
        auto [leq_a, at_a] = counter.leq(a);
        int left = leq_mid - at_mid - leq_a; // in (a, mid)
        emit_point(mid, at_mid);
        self(a, mid, left, self);
        self(mid, b, k - left - at_mid, self);
    };

    int prev_leq = 0;
    Rat prev = 0;
    {
        auto [leq0, at0] = counter.leq(cuts.front());
        // nothing below the smallest cut except possible exact hits
        if (leq0 - at0 != 0) {
            // tiny moduli: fall back to refining from zero
            refine(Rat(0), cuts.front(), leq0 - at0, refine);
        }
        emit_point(cuts.front(), at0);
        prev_leq = leq0;
        prev = cuts.front();
    }
    for (size_t i = 1; i < cuts.size(); ++i) {
        auto [leq_i, at_i] = counter.leq(cuts[i]);
        int between = leq_i - at_i - prev_leq; // in (prev, cuts[i])
        refine(prev, cuts[i], between, refine);
        emit_point(cuts[i], at_i);
        prev_leq = leq_i;
        prev = cuts[i];
    }

    // push enclosures strictly to their side of the unit circle
    for (auto& g : groups) {
        if (g.enc.is_point()) continue;
        if (g.enc.hi == 1) {
            // inside group: lower the right endpoint below 1
            Rat delta(1, 1 << 20);
            for (;;) {
                if (--budget < 0) throw CertificationFailed();
                Rat b = 1 - delta;
                if (b <= g.enc.lo) {
                    delta /= 2;
                    continue;
                }
                auto [leq_b, at_b] = counter.leq(b);
                auto [leq_a, at_a] = counter.leq(g.enc.lo);
                if (leq_b - at_b - leq_a == g.count) {
                    g.enc = RationalInterval(g.enc.lo, b);
                    break;
                }
                delta /= 2;
            }
        } else if (g.enc.lo == 1) {
            Rat delta(1, 1 << 20);
            for (;;) {
                if (--budget < 0) throw CertificationFailed();
                Rat a = 1 + delta;
                if (a >= g.enc.hi) {
                    delta /= 2;
                    continue;
                }
                auto [leq_hi, at_hi] = counter.leq(g.enc.hi);
                auto [leq_a, at_a] = counter.leq(a);
                if (leq_hi - at_hi - leq_a == g.count) {
                    g.enc = RationalInterval(a, g.enc.hi);
                    break;
                }
                delta /= 2;
            }
        }
    }

    // assemble, sorted non-increasing
    std::sort(groups.begin(), groups.end(), [](const ModulusGroup& a, const ModulusGroup& b) {
        return a.enc.mid() > b.enc.mid();
    });
    int total = 0;
    for (const auto& g : groups) {
        for (int k = 0; k < g.count; ++k) out.moduli.push_back(g.enc);
        total += g.count;
    }
    if (total != d) throw Error("internal: certified modulus count mismatch");

    // consistency with exact disk counts
    int in = 0, on = 0, outd = 0;
    for (const auto& m : out.moduli) {
        if (m.is_point() && m.lo == 1)
            ++on;
        else if (m.hi < 1)
            ++in;
        else if (m.lo > 1)
            ++outd;
        else
            throw CertificationFailed("modulus enclosure straddles the unit circle past the precision budget");
    }
    if (DiskCounts{in, on, outd} != out.disk_counts)
        throw Error("internal: certified moduli disagree with exact disk counts");
    return out;
}

} // namespace dyndeg
