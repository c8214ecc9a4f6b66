// Acceptance gate: ten end-to-end checks, one pass/fail line each.
// Exits nonzero if any check fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include <dyndeg/classify.hpp>
#include <dyndeg/coxeter.hpp>
#include <dyndeg/factor.hpp>
#include <dyndeg/profile.hpp>
#include <dyndeg/text.hpp>

using namespace dyndeg;

namespace {

int failures = 0;

using Clock = std::chrono::steady_clock;

class Criterion {
  public:
    Criterion(int number, const char* title) : number_(number), title_(title), start_(Clock::now()) {}

    void check(bool ok, const std::string& detail = "") {
        if (!ok && detail_.empty()) detail_ = detail.empty() ? "check failed" : detail;
        ok_ = ok_ && ok;
    }

    void fail(const std::string& detail) { check(false, detail); }

    ~Criterion() {
        double secs = std::chrono::duration<double>(Clock::now() - start_).count();
        std::printf("%s  %2d. %-58s (%.2f s)%s%s\n", ok_ ? "PASS" : "FAIL", number_, title_, secs,
                    ok_ ? "" : "  -- ", ok_ ? "" : detail_.c_str());
        if (!ok_) ++failures;
    }

  private:
    int number_;
    const char* title_;
    Clock::time_point start_;
    bool ok_ = true;
    std::string detail_;
};

bool within(const RationalInterval& v, const char* lo, const char* hi) {
    return v.lo >= parse_rat(lo) && v.hi <= parse_rat(hi);
}

// both intervals enclose the same point value, so they must overlap:
// entropy and s * log(root enclosure), checked in doubles with padding.
bool entropy_matches(const RationalInterval& entropy, const RationalInterval& root, int s) {
    double lo = static_cast<double>(s) * std::log(root.lo.get_d());
    double hi = static_cast<double>(s) * std::log(root.hi.get_d());
    return entropy.lo.get_d() <= hi + 1e-9 && entropy.hi.get_d() >= lo - 1e-9;
}

IntPoly lehmer_poly() { return IntPoly({1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1}); }

std::vector<int> random_reduced_word(std::mt19937& rng, int rank, int len) {
    std::uniform_int_distribution<int> letter(1, rank);
    std::vector<int> w;
    while (static_cast<int>(w.size()) < len) {
        int g = letter(rng);
        if (!w.empty() && w.back() == g) continue;
        w.push_back(g);
    }
    return w;
}

void criterion_1() {
    Criterion c(1, "Lehmer polynomial classifies as Salem in [1.17628, 1.17629]");
    auto v = classify(lehmer_poly());
    c.check(v.kind == Kind::Salem, "kind is not Salem");
    c.check(v.counts == DiskCounts{1, 8, 1}, "disk counts differ from 1/8/1");
    c.check(within(v.dominant, "1.17628", "1.17629"), "dominant enclosure escapes [1.17628, 1.17629]");
}

void criterion_2() {
    Criterion c(2, "Minimal Pisot polynomials per degree 3..5 at height 2");
    const struct {
        int degree;
        IntPoly minimal;
        const char* approx;
    } expected[] = {
        {3, IntPoly({-1, -1, 0, 1}), "1.324"},
        {4, IntPoly({-1, 0, 0, -1, 1}), "1.380"},
        {5, IntPoly({-1, 0, 1, -1, -1, 1}), "1.443"},
    };
    for (const auto& e : expected) {
        auto results = pisot_search(e.degree, 2, /*units_only=*/false);
        if (results.empty()) {
            c.fail("empty search at degree " + std::to_string(e.degree));
            continue;
        }
        c.check(results[0].first == e.minimal,
                "wrong minimal polynomial at degree " + std::to_string(e.degree));
        Rat target = parse_rat(e.approx);
        Rat tol(1, 1000);
        c.check(results[0].second.lo >= target - tol && results[0].second.hi <= target + Rat(1, 100),
                "dominant enclosure off target at degree " + std::to_string(e.degree));
    }
}

void criterion_3() {
    Criterion c(3, "Abelian entropy 2*log(alpha_d) with degree-drop certificate");
    Rat tol(1, 1000000);
    for (const IntPoly& p : {IntPoly({-1, -1, 0, 1}), IntPoly({-1, 0, 0, -1, 1}),
                             IntPoly({-1, 0, 1, -1, -1, 1})}) {
        auto v = classify(p, tol);
        auto prof = abelian_profile(companion(p), tol);
        c.check(entropy_matches(prof.entropy, v.dominant, 2), "entropy misses 2*log(alpha)");
        c.check(prof.degrees[1].intersects(v.dominant.pow_nonneg(2)), "d_1 misses alpha^2");
        auto cert = primitivity_by_degree_drop(prof);
        if (!cert) {
            c.fail("no degree-drop certificate");
            continue;
        }
        c.check(cert->d1.lo > cert->d2.hi, "certificate endpoints not separated");
    }
}

void criterion_4() {
    Criterion c(4, "Monomial profiles certify d_1 > max(1, d_2) for degrees 2..8");
    for (int d = 2; d <= 8; ++d) {
        auto units = pisot_search(d, 1, /*units_only=*/true);
        if (units.empty()) units = pisot_search(d, 2, true);
        if (units.empty()) {
            c.fail("no Pisot unit found at degree " + std::to_string(d));
            continue;
        }
        auto prof = monomial_profile(companion(units[0].first));
        c.check(prof.degrees[1].lo > 1, "d_1 not above 1 at degree " + std::to_string(d));
        c.check(prof.degrees[1].lo > prof.degrees[2].hi,
                "d_1 not above d_2 at degree " + std::to_string(d));
    }
}

void criterion_5() {
    Criterion c(5, "Reflection-group worked example at n = 2");
    WehlerRep rep = wehler_generators(2);
    IntPoly cp = charpoly(word_to_matrix(rep, CoxeterWord{{1, 2, 3}}));
    c.check(cp == IntPoly({1, -17, -17, 1}), "characteristic polynomial mismatch");
    auto s = isometry_structure(cp);
    c.check(s.salem_part && s.salem_part->first == IntPoly({1, -18, 1}), "Salem factor mismatch");
    auto d1 = d1_of_word(rep, CoxeterWord{{1, 2, 3}});
    c.check(d1.contains(parse_rat("17.944271909999158")) || d1.contains(parse_rat("17.94427190999916")),
            "d_1 misses 9 + 4*sqrt(5)");
    c.check(d1_of_word(rep, CoxeterWord{{1, 2}}) == RationalInterval::point(Rat(1)),
            "[1,2] should have d_1 exactly 1");
}

void criterion_6() {
    Criterion c(6, "Full-degree Salem words exist at n = 3 and n = 5, len <= 8");
    for (int n : {3, 5}) {
        WehlerRep rep = wehler_generators(n);
        auto hits = salem_element_search(rep, 8, /*full_degree_only=*/true, Rat(1, 1000000), 4);
        if (hits.empty()) {
            c.fail("no full-degree hit at n = " + std::to_string(n));
            continue;
        }
        const auto& h = hits.front();
        c.check(h.charpoly.degree() == n + 1, "hit is not full degree");
        c.check(is_irreducible(h.charpoly), "hit is not irreducible");
        auto cert = picard_primitivity_certificate(rep, h.word);
        c.check(cert.certificate.has_value(), "certificate refused: " + cert.refusal_reason);
        if (cert.certificate)
            c.check(cert.certificate->charpoly == h.charpoly, "certificate charpoly mismatch");
    }
}

void criterion_7() {
    Criterion c(7, "1000 random words: gram preserved, at most one Salem factor");
    std::mt19937 rng(90210);
    int violations = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int n = 2 + iter % 4; // n in 2..5
        WehlerRep rep = wehler_generators(n);
        int len = 1 + static_cast<int>(rng() % 12);
        CoxeterWord w{random_reduced_word(rng, n + 1, len)};
        IntMatrix m = word_to_matrix(rep, w);
        bool ok = (m.transpose() * rep.gram * m == rep.gram);
        try {
            auto s = isometry_structure(charpoly(m));
            if (s.salem_part && !(s.salem_part->second.lo > 1)) ok = false;
        } catch (const Error&) {
            ok = false;
        }
        if (!ok) ++violations;
    }
    c.check(violations == 0, std::to_string(violations) + " violation(s)");
}

void criterion_8() {
    Criterion c(8, "200 random block-triangular maps pass the product formula");
    std::mt19937 rng(112233);
    std::uniform_int_distribution<long> mix(-2, 2);
    std::uniform_int_distribution<int> half(1, 3);
    int violations = 0;
    for (int iter = 0; iter < 200; ++iter) {
        int b = half(rng), f = half(rng);
        int dim = b + f;
        IntMatrix A(dim);
        // unimodular diagonal blocks via integer shears, random upper block
        std::vector<dyndeg::IntMatrix> blocks;
        for (int which = 0; which < 2; ++which) {
            int sz = which == 0 ? b : f;
            IntMatrix U = IntMatrix::identity(sz);
            std::uniform_int_distribution<int> row(0, sz - 1);
            for (int s = 0; s < 8; ++s) {
                int i = row(rng), j = row(rng);
                long k = mix(rng);
                if (i == j || k == 0) continue;
                for (int col = 0; col < sz; ++col) U.at(j, col) += k * U.at(i, col);
            }
            blocks.push_back(U);
        }
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < b; ++j) A.at(i, j) = blocks[0].at(i, j);
        for (int i = 0; i < f; ++i)
            for (int j = 0; j < f; ++j) A.at(b + i, b + j) = blocks[1].at(i, j);
        for (int i = 0; i < b; ++i)
            for (int j = 0; j < f; ++j) A.at(i, b + j) = mix(rng);
        try {
            if (!product_formula_check(A, b).all_pass) ++violations;
        } catch (const Error&) {
            ++violations;
        }
    }
    c.check(violations == 0, std::to_string(violations) + " violation(s)");
}

void criterion_9() {
    Criterion c(9, "500 random polynomials: disk counts agree, verdicts tol-stable");
    std::mt19937 rng(60601);
    std::uniform_int_distribution<long> coef(-5, 5);
    int done = 0, violations = 0;
    while (done < 500) {
        int degree = 2 + static_cast<int>(rng() % 9);
        std::vector<Int> coeffs(static_cast<size_t>(degree) + 1);
        for (int k = 0; k < degree; ++k) coeffs[static_cast<size_t>(k)] = coef(rng);
        coeffs[static_cast<size_t>(degree)] = 1;
        IntPoly p(std::move(coeffs));
        if (p.constant() == 0) continue;
        ++done;
        auto dc = unit_disk_count(p);
        auto rp = root_moduli(p, Rat(1, 100000));
        bool ok = (rp.disk_counts == dc);
        auto a = classify(p, Rat(1, 10000));
        auto b = classify(p, Rat(1, Int("1000000000")));
        ok = ok && a.kind == b.kind && a.counts == b.counts && a.pisot_unit == b.pisot_unit;
        if (!ok) ++violations;
    }
    c.check(violations == 0, std::to_string(violations) + " violation(s)");
}

void criterion_10() {
    Criterion c(10, "Composition law holds exactly on 1000 random points");
    std::mt19937 rng(421);
    std::uniform_int_distribution<long> expo(-3, 3);
    std::uniform_int_distribution<long> pt(1, 9);
    int violations = 0;
    for (int iter = 0; iter < 1000; ++iter) {
        int dim = 1 + iter % 5;
        IntMatrix A(dim), B(dim);
        for (int i = 0; i < dim; ++i)
            for (int j = 0; j < dim; ++j) {
                A.at(i, j) = expo(rng);
                B.at(i, j) = expo(rng);
            }
        std::vector<Rat> t;
        for (int i = 0; i < dim; ++i) t.emplace_back(pt(rng), pt(rng));
        if (!(monomial_eval(A * B, t) == monomial_eval(B, monomial_eval(A, t)))) ++violations;
    }
    c.check(violations == 0, std::to_string(violations) + " violation(s)");
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    std::printf("%s\n", failures == 0 ? "ALL CRITERIA PASSED" : "SOME CRITERIA FAILED");
    return failures == 0 ? 0 : 1;
}
