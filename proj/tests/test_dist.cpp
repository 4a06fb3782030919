#include "evid/dist.hpp"
#include "evid/errors.hpp"

#include "generators.hpp"

#include <doctest.h>

using namespace evid;
using evid::testing::Rng;

namespace {

Rational r(long num, long den = 1) { return Rational(num, den); }

Dist coin(const Rational& heads) {
    return Dist::make({"heads", "tails"}, {heads, 1 - heads});
}

} // namespace

TEST_CASE("rational parsing and rendering") {
    CHECK(parse_rational("1/2") == r(1, 2));
    CHECK(parse_rational("7") == r(7));
    CHECK(parse_rational("-3/9") == r(-1, 3));
    CHECK(to_fraction_string(r(2, 4)) == "1/2");
    CHECK(to_fraction_string(r(5)) == "5");
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("a/b"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
}

TEST_CASE("decimal rendering rounds half to even") {
    CHECK(to_decimal_string(r(2, 3), 4) == "0.6667");
    CHECK(to_decimal_string(r(1, 8), 2) == "0.12");  // 0.125 ties to even
    CHECK(to_decimal_string(r(3, 8), 2) == "0.38");  // 0.375 ties to even
    CHECK(to_decimal_string(r(1, 2), 0) == "0");
    CHECK(to_decimal_string(r(3, 2), 0) == "2");
    CHECK(to_decimal_string(r(-1, 8), 2) == "-0.12");
    CHECK(to_decimal_string(r(1), 3) == "1.000");
}

TEST_CASE("make_dist validates") {
    Dist mu_a = Dist::make({"heads", "tails"}, {r(1), r(0)});
    CHECK(mu_a.mass("heads") == 1);
    CHECK(mu_a.mass("tails") == 0);

    Dist point = Dist::make({"x"}, {r(1)});
    CHECK(point.mass("x") == 1);
    CHECK(point == Dist::point({"x"}, "x"));

    CHECK_THROWS_AS(Dist::make({"heads", "tails"}, {r(1, 2), r(1, 3)}), NonNormalized);
    CHECK_THROWS_AS(Dist::make({"heads", "tails"}, {r(3, 2), r(-1, 2)}), NegativeMass);
    CHECK_THROWS_AS(Dist::make({"heads", "heads"}, {r(1, 2), r(1, 2)}), DuplicateLabel);
    CHECK_THROWS_AS(mu_a.mass("edge"), UnknownLabel);
}

TEST_CASE("labels are kept in lexicographic order") {
    Dist d = Dist::make({"tails", "heads"}, {r(1, 4), r(3, 4)});
    CHECK(d.labels() == std::vector<std::string>{"heads", "tails"});
    CHECK(d.mass_at(0) == r(3, 4));
}

TEST_CASE("dempster combination golden values") {
    Dist w = coin(r(2, 3));
    CHECK(dempster_combine(w, w) == coin(r(4, 5)));

    Dist prior = coin(r(1, 100));
    Dist naive = coin(r(7, 9));
    CHECK(dempster_combine(prior, naive) == coin(r(7, 205)));

    CHECK_THROWS_AS(dempster_combine(coin(r(1)), coin(r(0))), TotalConflict);
    CHECK_THROWS_AS(dempster_combine(coin(r(1, 2)), Dist::make({"x", "y"}, {r(1, 2), r(1, 2)})),
                    MismatchedSupport);
}

TEST_CASE("uniform is a two-sided identity for combination") {
    Rng rng(7);
    auto labels = evid::testing::make_labels("h", 4);
    Dist uniform = Dist::uniform(labels);
    for (int i = 0; i < 50; ++i) {
        Dist d = evid::testing::random_dist(rng, labels, /*allow_zero=*/true);
        CHECK(dempster_combine(uniform, d) == d);
        CHECK(dempster_combine(d, uniform) == d);
    }
}

TEST_CASE("combination is commutative and associative and normalized") {
    Rng rng(11);
    auto labels = evid::testing::make_labels("h", 3);
    for (int i = 0; i < 100; ++i) {
        Dist a = evid::testing::random_dist(rng, labels);
        Dist b = evid::testing::random_dist(rng, labels);
        Dist c = evid::testing::random_dist(rng, labels);
        CHECK(dempster_combine(a, b) == dempster_combine(b, a));
        CHECK(dempster_combine(dempster_combine(a, b), c) ==
              dempster_combine(a, dempster_combine(b, c)));

        Rational total = 0;
        Dist combined = dempster_combine(a, b);
        for (const auto& m : combined.masses())
            total += m;
        CHECK(total == 1);
    }
}
