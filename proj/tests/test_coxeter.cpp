#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include <dyndeg/coxeter.hpp>
#include <dyndeg/factor.hpp>

#include "test_util.hpp"

using namespace dyndeg;
using dyndeg::testutil::contains_decimal;

namespace {

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

// every reduced word over {1..rank} of exactly the given length
void all_reduced_words(int rank, int len, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(cur.size()) == len) {
        out.push_back(cur);
        return;
    }
    for (int g = 1; g <= rank; ++g) {
        if (!cur.empty() && cur.back() == g) continue;
        cur.push_back(g);
        all_reduced_words(rank, len, cur, out);
        cur.pop_back();
    }
}

} // namespace

TEST_CASE("wehler_generators structure") {
    for (int n = 2; n <= 6; ++n) {
        WehlerRep rep = wehler_generators(n);
        CHECK(rep.n == n);
        CHECK(rep.rank() == n + 1);
        REQUIRE(static_cast<int>(rep.generators.size()) == n + 1);
        // gram: off-diagonal 1, diagonal -(n-2), signature (1, n)
        for (int i = 0; i <= n; ++i)
            for (int j = 0; j <= n; ++j)
                CHECK(rep.gram.at(i, j) == (i == j ? Int(-(n - 2)) : Int(1)));
        Inertia sig = signature(rep.gram);
        CHECK(sig.pos == 1);
        CHECK(sig.neg == n);
        CHECK(sig.zero == 0);
        for (const IntMatrix& g : rep.generators) {
            CHECK(g * g == IntMatrix::identity(n + 1));
            CHECK(is_unimodular(g));
            CHECK(g.transpose() * rep.gram * g == rep.gram);
        }
    }
    CHECK_THROWS_AS(wehler_generators(1), Error);
}

TEST_CASE("generator columns match the stated action") {
    WehlerRep rep = wehler_generators(2);
    // iota_1 sends h_1 -> -h_1 + 2 h_2 + 2 h_3 and fixes h_2, h_3
    CHECK(rep.generators[0] == IntMatrix(3, {-1, 0, 0, 2, 1, 0, 2, 0, 1}));
    CHECK(rep.generators[1] == IntMatrix(3, {1, 2, 0, 0, -1, 0, 0, 2, 1}));
    CHECK(rep.generators[2] == IntMatrix(3, {1, 0, 2, 0, 1, 2, 0, 0, -1}));
}

TEST_CASE("word_to_matrix") {
    WehlerRep rep = wehler_generators(2);
    CHECK(word_to_matrix(rep, CoxeterWord{{}}) == IntMatrix::identity(3));
    CHECK(word_to_matrix(rep, CoxeterWord{{1}}) == rep.generators[0]);
    IntMatrix m123 = word_to_matrix(rep, CoxeterWord{{1, 2, 3}});
    CHECK(charpoly(m123) == IntPoly({1, -17, -17, 1}));
    CHECK(charpoly(word_to_matrix(rep, CoxeterWord{{1, 2}})) == IntPoly({-1, 3, -3, 1}));
    CHECK_THROWS_AS(word_to_matrix(rep, CoxeterWord{{1, 1, 2}}), NotReduced);
    CHECK_THROWS_AS(word_to_matrix(rep, CoxeterWord{{0, 1}}), Error);
    CHECK_THROWS_AS(word_to_matrix(rep, CoxeterWord{{1, 4}}), Error);
}

TEST_CASE("d1_of_word") {
    WehlerRep rep = wehler_generators(2);
    auto d = d1_of_word(rep, CoxeterWord{{1, 2, 3}});
    CHECK(contains_decimal(d, "17.94427190999916")); // 9 + 4 sqrt(5)
    CHECK(d1_of_word(rep, CoxeterWord{{1, 2}}) == RationalInterval::point(Rat(1)));
    CHECK(d1_of_word(rep, CoxeterWord{{}}) == RationalInterval::point(Rat(1)));
    // invariant under rotation and reversal of the word
    auto rot = d1_of_word(rep, CoxeterWord{{2, 3, 1}});
    auto rev = d1_of_word(rep, CoxeterWord{{3, 2, 1}});
    CHECK(d.intersects(rot));
    CHECK(d.intersects(rev));
}

TEST_CASE("canonical_word") {
    CHECK(canonical_word({2, 3, 1}) == std::vector<int>{1, 2, 3});
    CHECK(canonical_word({3, 2, 1}) == std::vector<int>{1, 2, 3}); // reversal
    CHECK(canonical_word({1, 2, 1}) == std::vector<int>{2});       // cyclic reduction
    CHECK(canonical_word({1, 2, 3, 2, 1}) == std::vector<int>{3});
    CHECK(canonical_word({}) == std::vector<int>{});
    CHECK(canonical_word({2, 1, 2, 1}) == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("canonical words are lossless for characteristic polynomials") {
    WehlerRep rep = wehler_generators(2);
    for (int len = 1; len <= 5; ++len) {
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        all_reduced_words(3, len, cur, words);
        std::set<std::vector<Int>> all_cps, canon_cps;
        for (const auto& w : words) {
            all_cps.insert(charpoly(word_to_matrix(rep, CoxeterWord{w})).coeffs());
            std::vector<int> c = canonical_word(w);
            if (c == w && !c.empty())
                canon_cps.insert(charpoly(word_to_matrix(rep, CoxeterWord{c})).coeffs());
        }
        // every charpoly arising at this length also arises from a canonical
        // word of length <= len (shorter after cyclic reduction is fine)
        std::set<std::vector<Int>> canon_upto = canon_cps;
        for (int l = 0; l < len; ++l) {
            std::vector<std::vector<int>> shorter;
            std::vector<int> c2;
            all_reduced_words(3, l, c2, shorter);
            for (const auto& w : shorter)
                if (canonical_word(w) == w)
                    canon_upto.insert(charpoly(word_to_matrix(rep, CoxeterWord{w})).coeffs());
        }
        for (const auto& cp : all_cps) CHECK(canon_upto.count(cp) == 1);
    }
}

TEST_CASE("the representation is faithful on short words") {
    WehlerRep rep = wehler_generators(2);
    std::set<std::vector<std::string>> seen;
    size_t total = 0;
    for (int len = 0; len <= 6; ++len) {
        std::vector<std::vector<int>> words;
        std::vector<int> cur;
        all_reduced_words(3, len, cur, words);
        for (const auto& w : words) {
            IntMatrix m = word_to_matrix(rep, CoxeterWord{w});
            std::vector<std::string> key;
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) key.push_back(m.at(i, j).get_str());
            seen.insert(std::move(key));
            ++total;
        }
    }
    CHECK(total == 190);
    CHECK(seen.size() == 190); // distinct reduced words give distinct matrices
}

TEST_CASE("random words preserve the form and have isometric structure") {
    std::mt19937 rng(1729);
    for (int iter = 0; iter < 200; ++iter) {
        int n = 2 + iter % 4; // ranks 3..6
        WehlerRep rep = wehler_generators(n);
        int len = 1 + static_cast<int>(rng() % 12);
        CoxeterWord w{random_reduced_word(rng, n + 1, len)};
        IntMatrix m = word_to_matrix(rep, w);
        CHECK(is_unimodular(m));
        CHECK(m.transpose() * rep.gram * m == rep.gram);
        // charpoly splits as cyclotomic x (at most one) Salem factor
        auto s = isometry_structure(charpoly(m));
        if (s.salem_part) CHECK(s.salem_part->second.lo > 1);
    }
}

TEST_CASE("salem_element_search at rank 3") {
    WehlerRep rep = wehler_generators(2);
    auto hits = salem_element_search(rep, 3, false);
    REQUIRE(!hits.empty());
    bool found = false;
    for (const auto& h : hits) {
        if (h.word.letters == std::vector<int>{1, 2, 3}) {
            found = true;
            CHECK(h.charpoly == IntPoly({1, -17, -17, 1}));
            CHECK(h.salem == IntPoly({1, -18, 1}));
            CHECK(contains_decimal(h.dominant, "17.94427190999916"));
        }
        CHECK(h.word.letters == canonical_word(h.word.letters));
        CHECK(h.dominant.lo > 1);
    }
    CHECK(found);
    // sorted by dominant root
    for (size_t i = 0; i + 1 < hits.size(); ++i)
        CHECK(hits[i].dominant.lo <= hits[i + 1].dominant.hi);
    // odd rank cannot carry a full-degree Salem polynomial
    CHECK_THROWS_AS(salem_element_search(rep, 3, true), OddRankFullDegree);
}

TEST_CASE("salem_element_search at rank 4, full degree") {
    WehlerRep rep = wehler_generators(3);
    auto hits = salem_element_search(rep, 6, true);
    REQUIRE(!hits.empty());
    for (const auto& h : hits) {
        CHECK(h.charpoly.degree() == 4);
        CHECK(h.salem == h.charpoly);
        CHECK(is_irreducible(h.charpoly));
        auto c = classify(h.charpoly);
        CHECK(c.kind == Kind::Salem);
    }
    bool found = false;
    for (const auto& h : hits)
        if (h.word.letters == std::vector<int>{1, 2, 3, 4}) {
            found = true;
            CHECK(h.charpoly == IntPoly({1, -68, -122, -68, 1}));
        }
    CHECK(found);
    // threading determinism
    auto threaded = salem_element_search(rep, 6, true, Rat(1, 1000000), 4);
    REQUIRE(threaded.size() == hits.size());
    for (size_t i = 0; i < hits.size(); ++i) {
        CHECK(threaded[i].word.letters == hits[i].word.letters);
        CHECK(threaded[i].charpoly == hits[i].charpoly);
    }
}

TEST_CASE("picard_primitivity_certificate") {
    WehlerRep rep3 = wehler_generators(3);
    auto ok = picard_primitivity_certificate(rep3, CoxeterWord{{1, 2, 3, 4}});
    REQUIRE(ok.certificate.has_value());
    CHECK(ok.refusal_reason.empty());
    CHECK(ok.certificate->criterion == PrimitivityCertificate::Criterion::IrreduciblePicard);
    CHECK(ok.certificate->charpoly == IntPoly({1, -68, -122, -68, 1}));
    CHECK(ok.certificate->word == std::vector<int>{1, 2, 3, 4});
    CHECK(ok.certificate->d1.lo > 1);
    CHECK(!ok.certificate->justification.empty());

    // reducible charpoly at rank 3: refusal, not an exception
    WehlerRep rep2 = wehler_generators(2);
    auto no = picard_primitivity_certificate(rep2, CoxeterWord{{1, 2, 3}});
    CHECK_FALSE(no.certificate.has_value());
    CHECK(!no.refusal_reason.empty());

    auto triv = picard_primitivity_certificate(rep3, CoxeterWord{{1, 2}});
    CHECK_FALSE(triv.certificate.has_value());
}

TEST_CASE("is_reduced") {
    CHECK(CoxeterWord{{1, 2, 1, 3}}.is_reduced());
    CHECK(CoxeterWord{{}}.is_reduced());
    CHECK_FALSE(CoxeterWord{{1, 1}}.is_reduced());
    CHECK_FALSE(CoxeterWord{{2, 3, 3, 1}}.is_reduced());
}
