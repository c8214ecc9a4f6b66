#include "dyndeg/classify.hpp"

#include <algorithm>
#include <thread>

#include "dyndeg/factor.hpp"

namespace dyndeg {

const char* kind_name(Kind k) {
    switch (k) {
        case Kind::CyclotomicProduct: return "CyclotomicProduct";
        case Kind::Pisot: return "Pisot";
        case Kind::Salem: return "Salem";
        case Kind::Other: return "Other";
    }
    return "Other";
}

namespace {

bool irreducible_via_factor(const IntPoly& p) {
    auto fac = factor_int(p);
    return fac.size() == 1 && fac[0].second == 1;
}

} // namespace

Classification classify(const IntPoly& p, const Rat& tol) {
    if (!p.is_monic() || p.degree() < 1) throw NotMonic("classify requires monic input of degree >= 1");
    if (p.constant() == 0) throw ZeroConstantTerm();
    if (tol <= 0) throw Error("tolerance must be positive");

    Classification out;
    out.counts = disk_counts(p);
    out.palindromic = p.is_palindromic();
    const int d = p.degree();

    if (out.counts.inside == 0 && out.counts.outside == 0) {
        // all roots on the unit circle: product of cyclotomics (Kronecker)
        auto peel = peel_cyclotomic(p);
        if (peel.remainder == IntPoly::one()) {
            out.kind = Kind::CyclotomicProduct;
            out.cyclotomic_factors = std::move(peel.factors);
            out.dominant = RationalInterval::point(Rat(1));
            return out;
        }
        out.kind = Kind::Other; // unreachable for integer input; defensive
        return out;
    }

    if (out.counts.inside == d - 1 && out.counts.on == 0 && out.counts.outside == 1) {
        out.irreducible = irreducible_via_factor(p);
        if (!out.irreducible) {
            out.kind = Kind::Other;
            return out;
        }
        // the single root outside the closed disk is real (conjugates pair up)
        if (sturm_count(p, Rat(1), p.cauchy_bound()) == 1) {
            out.dominant = dominant_real_root(p, tol);
        } else {
            out.negative_dominant = true;
            IntPoly q = p.reflect();
            if (d % 2 != 0) q = -q; // keep the leading coefficient positive
            out.dominant = dominant_real_root(q, tol);
        }
        out.kind = Kind::Pisot;
        out.pisot_unit = (p.constant() == 1 || p.constant() == -1);
        if (d == 2 && out.palindromic) out.salem_flag = true;
        return out;
    }

    if (d >= 4 && d % 2 == 0 && out.palindromic &&
        out.counts.inside == 1 && out.counts.on == d - 2 && out.counts.outside == 1) {
        out.irreducible = irreducible_via_factor(p);
        if (out.irreducible) {
            IntPoly q = trace_transform(p);
            Rat bound = std::max(q.cauchy_bound(), Rat(3));
            bool trace_ok = sturm_count(q, Rat(2), bound) == 1 &&
                            sturm_count(q, Rat(-2), Rat(2)) == d / 2 - 1;
            if (trace_ok) {
                out.kind = Kind::Salem;
                out.dominant = dominant_real_root(p, tol);
                return out;
            }
        }
        out.kind = Kind::Other;
        return out;
    }

    out.kind = Kind::Other;
    return out;
}

IsometryStructure isometry_structure(const IntPoly& p, const Rat& tol) {
    if (!p.is_monic() || p.degree() < 1) throw NotMonic("isometry_structure requires monic input of degree >= 1");
    if (p.constant() != 1 && p.constant() != -1)
        throw Error("isometry_structure requires constant term +-1");

    auto peel = peel_cyclotomic(p);
    IsometryStructure out;
    out.cyclotomic_part = std::move(peel.factors);
    if (peel.remainder == IntPoly::one()) return out;

    auto fac = factor_int(peel.remainder);
    if (fac.size() != 1 || fac[0].second != 1)
        throw StructureViolation("non-cyclotomic part is not a single power-free factor: " +
                                 peel.remainder.to_string());
    Classification c = classify(fac[0].first, tol);
    bool salem_like = c.kind == Kind::Salem ||
                      (c.kind == Kind::Pisot && c.salem_flag && !c.negative_dominant);
    if (!salem_like)
        throw StructureViolation("non-cyclotomic part is not a Salem polynomial: " +
                                 fac[0].first.to_string());
    out.salem_part = std::make_pair(fac[0].first, c.dominant);
    return out;
}

namespace {

// Decode the k-th coefficient vector of the search lattice.
IntPoly candidate_at(long index, int degree, int height, bool units_only) {
    const long span = 2L * height + 1;
    std::vector<Int> c(static_cast<size_t>(degree) + 1);
    c[static_cast<size_t>(degree)] = 1;
    if (units_only) {
        c[0] = (index % 2 == 0) ? 1 : -1;
        index /= 2;
    } else {
        long v = index % span;
        index /= span;
        c[0] = v - height;
    }
    for (int k = 1; k < degree; ++k) {
        long v = index % span;
        index /= span;
        c[static_cast<size_t>(k)] = v - height;
    }
    return IntPoly(std::move(c));
}

// Necessary conditions for a Pisot polynomial (dominant root of either
// sign): p(1) < 0 when the dominant root is > 1, (-1)^d p(-1) < 0 when it
// is < -1. Both follow from the root layout: exactly one simple real root
// beyond +-1 and everything else strictly inside the disk.
bool pisot_prefilter(const IntPoly& p) {
    if (p.sign_at(Rat(1)) < 0) return true;
    int s = p.sign_at(Rat(-1));
    if (p.degree() % 2 != 0) s = -s;
    return s < 0;
}

} // namespace

std::vector<std::pair<IntPoly, RationalInterval>>
pisot_search(int degree, int height, bool units_only, const Rat& tol, int threads) {
    if (degree < 2) throw Error("pisot_search requires degree >= 2");
    if (degree > 16 || height > 64) throw CapExceeded("pisot_search caps: degree <= 16, height <= 64");
    if (height < 1) throw Error("pisot_search requires height >= 1");
    if (threads < 1) threads = 1;

    const long span = 2L * height + 1;
    long total = units_only ? 2 : span;
    for (int k = 1; k < degree; ++k) total *= span;

    using Hit = std::pair<IntPoly, RationalInterval>;
    auto scan = [&](long lo, long hi, std::vector<Hit>* sink) {
        for (long i = lo; i < hi; ++i) {
            IntPoly p = candidate_at(i, degree, height, units_only);
            if (p.constant() == 0) continue;
            if (!pisot_prefilter(p)) continue;
            Classification c = classify(p, tol);
            if (c.kind == Kind::Pisot) sink->emplace_back(std::move(p), c.dominant);
        }
    };

    std::vector<Hit> hits;
    if (threads == 1 || total < 256) {
        scan(0, total, &hits);
    } else {
        std::vector<std::vector<Hit>> parts(static_cast<size_t>(threads));
        std::vector<std::thread> workers;
        long chunk = (total + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            long lo = t * chunk, hi = std::min(total, lo + chunk);
            if (lo >= hi) break;
            workers.emplace_back(scan, lo, hi, &parts[static_cast<size_t>(t)]);
        }
        for (auto& w : workers) w.join();
        for (auto& part : parts)
            for (auto& h : part) hits.push_back(std::move(h));
    }

    std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) {
        if (a.second.lo != b.second.lo) return a.second.lo < b.second.lo;
        if (a.second.hi != b.second.hi) return a.second.hi < b.second.hi;
        return a.first < b.first;
    });
    hits.erase(std::unique(hits.begin(), hits.end(),
                           [](const Hit& a, const Hit& b) { return a.first == b.first; }),
               hits.end());
    return hits;
}

} // namespace dyndeg
