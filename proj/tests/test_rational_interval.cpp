#include <doctest.h>

#include <dyndeg/rational_interval.hpp>
#include <dyndeg/text.hpp>

using namespace dyndeg;

TEST_CASE("interval basics") {
    RationalInterval v(Rat(1, 2), Rat(3, 4));
    CHECK(v.width() == Rat(1, 4));
    CHECK(v.mid() == Rat(5, 8));
    CHECK(v.contains(Rat(2, 3)));
    CHECK_FALSE(v.contains(Rat(1)));
    CHECK(v.intersects(RationalInterval(Rat(3, 4), Rat(1))));
    CHECK_FALSE(v.intersects(RationalInterval(Rat(7, 8), Rat(1))));
    CHECK_THROWS_AS(RationalInterval(Rat(1), Rat(0)), Error);
}

TEST_CASE("interval products") {
    RationalInterval a(Rat(1), Rat(2)), b(Rat(3), Rat(4));
    auto p = a.mul_nonneg(b);
    CHECK(p.lo == Rat(3));
    CHECK(p.hi == Rat(8));
    auto q = a.pow_nonneg(3);
    CHECK(q.lo == Rat(1));
    CHECK(q.hi == Rat(8));
    CHECK(a.pow_nonneg(0) == RationalInterval::point(Rat(1)));
    auto h = a.hull(RationalInterval(Rat(5), Rat(6)));
    CHECK(h.lo == Rat(1));
    CHECK(h.hi == Rat(6));
}

TEST_CASE("certified log enclosure") {
    Rat tol(1, Int("1000000000"));
    auto l2 = log_enclosure(Rat(2), tol);
    CHECK(l2.width() <= tol);
    CHECK(l2.contains(parse_rat("0.6931471805599453"))); // ln 2
    auto lhalf = log_enclosure(Rat(1, 2), tol);
    CHECK(lhalf.contains(parse_rat("-0.6931471805599453")));
    auto l1 = log_enclosure(Rat(1), tol);
    CHECK(l1.contains(Rat(0)));
    auto l10 = log_enclosure(Rat(10), tol);
    CHECK(l10.contains(parse_rat("2.302585092994046")));
    auto le = log_enclosure(RationalInterval(Rat(2), Rat(4)), tol);
    CHECK(le.contains(parse_rat("0.6931471805599453")));
    CHECK(le.contains(parse_rat("1.3862943611198906")));
    CHECK_THROWS_AS(log_enclosure(Rat(0), tol), Error);
}

TEST_CASE("dyadic rounding brackets the input") {
    Rat q(355, 113);
    Rat up = dyadic_round(q, 16, true);
    Rat down = dyadic_round(q, 16, false);
    CHECK(down <= q);
    CHECK(q <= up);
    CHECK(up - down <= Rat(2, 65536));
    CHECK(dyadic_round(Rat(3, 4), 4, true) == Rat(3, 4));
}
