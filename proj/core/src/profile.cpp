#include "dyndeg/profile.hpp"

#include <algorithm>

#include "dyndeg/root_counting.hpp"

namespace dyndeg {

const char* profile_model_name(ProfileModel m) {
    switch (m) {
        case ProfileModel::Abelian: return "Abelian";
        case ProfileModel::Monomial: return "Monomial";
        case ProfileModel::Hyperkahler: return "Hyperkahler";
    }
    return "Monomial";
}

namespace {

RationalInterval clamp_nonneg(RationalInterval v) {
    if (v.lo < 0) v.lo = 0;
    return v;
}

// degrees[k] = product of the top-k moduli enclosures (optionally squared);
// entropy = log of the degree at the exact count of outside-disk roots.
DegreeProfile profile_from_charpoly(ProfileModel model, const IntPoly& cp,
                                    const Rat& tol, bool squared) {
    const int d = cp.degree();
    DegreeProfile out;
    out.model = model;

    Rat inner = tol / (2 * d);
    for (int attempt = 0;; ++attempt) {
        RootProfile rp = root_moduli(cp, inner);
        out.degrees.assign(1, RationalInterval::point(Rat(1)));
        RationalInterval acc = RationalInterval::point(Rat(1));
        for (int k = 0; k < d; ++k) {
            RationalInterval m = clamp_nonneg(rp.moduli[static_cast<size_t>(k)]);
            if (squared) m = m.pow_nonneg(2);
            acc = acc.mul_nonneg(m);
            out.degrees.push_back(acc);
        }
        bool tight = true;
        for (const auto& deg : out.degrees)
            if (deg.width() > tol) { tight = false; break; }
        if (tight) {
            const int kstar = rp.disk_counts.outside;
            if (kstar == 0) {
                out.entropy = RationalInterval::point(Rat(0));
            } else {
                out.entropy = log_enclosure(out.degrees[static_cast<size_t>(kstar)], tol);
            }
            return out;
        }
        if (attempt >= 12) throw CertificationFailed("degree profile refinement stalled");
        inner /= 16;
    }
}

} // namespace

DegreeProfile abelian_profile(const IntMatrix& M, const Rat& tol) {
    if (!is_unimodular(M)) throw NotUnimodular();
    if (tol <= 0) throw Error("tolerance must be positive");
    return profile_from_charpoly(ProfileModel::Abelian, charpoly(M), tol, /*squared=*/true);
}

DegreeProfile monomial_profile(const IntMatrix& A, const Rat& tol) {
    if (!is_unimodular(A)) throw NotUnimodular();
    if (tol <= 0) throw Error("tolerance must be positive");
    return profile_from_charpoly(ProfileModel::Monomial, charpoly(A), tol, /*squared=*/false);
}

namespace {

Rat rat_pow(const Rat& base, const Int& e) {
    if (!e.fits_slong_p()) throw CapExceeded("monomial exponent does not fit a machine word");
    long k = e.get_si();
    if (k == 0) return Rat(1);
    unsigned long a = static_cast<unsigned long>(k < 0 ? -k : k);
    Int num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), a);
    mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), a);
    Rat r = (k > 0) ? Rat(num, den) : Rat(den, num);
    r.canonicalize();
    return r;
}

} // namespace

std::vector<Rat> monomial_eval(const IntMatrix& A, const std::vector<Rat>& t) {
    if (static_cast<int>(t.size()) != A.dim()) throw Error("point dimension does not match the matrix");
    for (const auto& v : t)
        if (v == 0) throw ZeroCoordinate();
    const int d = A.dim();
    std::vector<Rat> out(t.size(), Rat(1));
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            out[static_cast<size_t>(i)] *= rat_pow(t[static_cast<size_t>(j)], A.at(j, i));
    return out;
}

DegreeProfile hk_profile(const RationalInterval& d1, int m, const Rat& tol) {
    if (m < 1) throw Error("hk_profile requires m >= 1");
    if (d1.lo < 1) throw Error("hk_profile requires d1.lo >= 1");
    if (tol <= 0) throw Error("tolerance must be positive");
    DegreeProfile out;
    out.model = ProfileModel::Hyperkahler;
    out.degrees.resize(static_cast<size_t>(2 * m) + 1);
    for (int p = 0; p <= m; ++p) {
        RationalInterval v = d1.pow_nonneg(p);
        out.degrees[static_cast<size_t>(p)] = v;
        out.degrees[static_cast<size_t>(2 * m - p)] = v;
    }
    if (d1.hi == 1) {
        out.entropy = RationalInterval::point(Rat(0));
    } else {
        RationalInterval l = log_enclosure(d1, tol / m);
        out.entropy = RationalInterval(l.lo * m, l.hi * m);
    }
    return out;
}

bool lehmer_floor_check(const RationalInterval& d1) {
    static const RationalInterval lambda = [] {
        IntPoly lehmer({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1});
        return dominant_real_root(lehmer, Rat(1, Int("1000000000000")));
    }();
    if (d1.is_point() && d1.lo == 1) return true;
    // not certifiably below the threshold enclosure
    return d1.hi >= lambda.lo;
}

std::optional<PrimitivityCertificate> primitivity_by_degree_drop(const DegreeProfile& profile) {
    if (profile.degrees.size() < 3) throw Error("degree-drop check needs a profile of length >= 3");
    const RationalInterval& d1 = profile.degrees[1];
    const RationalInterval& d2 = profile.degrees[2];
    if (!(d1.lo > d2.hi) || !(d1.lo > 1)) return std::nullopt;
    PrimitivityCertificate cert;
    cert.criterion = PrimitivityCertificate::Criterion::DegreeDrop;
    cert.d1 = d1;
    cert.d2 = d2;
    cert.justification =
        "certified strict inequality d1.lo > d2.hi between opposite interval endpoints; "
        "a degree drop below the first dynamical degree rules out any equivariant "
        "fibration over a lower-dimensional base";
    return cert;
}

ProductFormulaReport product_formula_check(const IntMatrix& A, int b, const Rat& tol) {
    const int d = A.dim();
    if (b < 1 || b > d - 1) throw Error("split must satisfy 1 <= b <= dim-1");
    for (int i = b; i < d; ++i)
        for (int j = 0; j < b; ++j)
            if (A.at(i, j) != 0) throw NotBlockTriangular();
    if (!is_unimodular(A)) throw NotUnimodular();

    IntMatrix base = A.block(0, b);
    IntMatrix fiber = A.block(b, d - b);
    DegreeProfile total = monomial_profile(A, tol);
    DegreeProfile bp = monomial_profile(base, tol);
    DegreeProfile fp = monomial_profile(fiber, tol);

    ProductFormulaReport report;
    report.all_pass = true;
    for (int p = 0; p <= d; ++p) {
        ProductFormulaReport::Entry e;
        e.p = p;
        e.total = total.degrees[static_cast<size_t>(p)];
        int jlo = std::max(0, p - (d - b));
        int jhi = std::min(p, b);
        bool first = true;
        RationalInterval best;
        for (int j = jlo; j <= jhi; ++j) {
            RationalInterval v = bp.degrees[static_cast<size_t>(j)]
                                     .mul_nonneg(fp.degrees[static_cast<size_t>(p - j)]);
            if (first || v.mid() > best.mid()) {
                best = v;
                e.best_j = j;
                first = false;
            }
        }
        // enclosure of max_j: endpoint-wise maximum over the split range
        RationalInterval maxenv = best;
        for (int j = jlo; j <= jhi; ++j) {
            RationalInterval v = bp.degrees[static_cast<size_t>(j)]
                                     .mul_nonneg(fp.degrees[static_cast<size_t>(p - j)]);
            if (v.lo > maxenv.lo) maxenv.lo = v.lo;
            if (v.hi > maxenv.hi) maxenv.hi = v.hi;
        }
        e.best_split = maxenv;
        e.pass = e.total.intersects(maxenv);
        report.all_pass = report.all_pass && e.pass;
        report.entries.push_back(std::move(e));
    }
    return report;
}

} // namespace dyndeg
