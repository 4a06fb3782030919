#include "evid/generalized.hpp"
#include "evid/errors.hpp"
#include "evid/refinement.hpp"

#include "generators.hpp"

#include <doctest.h>

#include <algorithm>

using namespace evid;
using evid::testing::Rng;

namespace {

Rational r(long num, long den = 1) { return Rational(num, den); }

Dist coin(const Rational& heads) {
    return Dist::make({"heads", "tails"}, {heads, 1 - heads});
}

// Example 1.2 as a two-hypothesis generalized space: Alice's coin is either
// double-headed or biased 3/4 towards heads, Bob's is fair.
GeneralizedEvidenceSpace alice_two_coins() {
    return GeneralizedEvidenceSpace::make(
        {"A", "B"}, {"heads", "tails"},
        {{{"A", coin(r(1))}, {"B", coin(r(1, 2))}},
         {{"A", coin(r(3, 4))}, {"B", coin(r(1, 2))}}});
}

// Three hypotheses, each independently carrying P(X) = 1/3 or 2/3.
GeneralizedEvidenceSpace three_hyp() {
    Dist mu1 = Dist::make({"X", "Y"}, {r(1, 3), r(2, 3)});
    Dist mu2 = Dist::make({"X", "Y"}, {r(2, 3), r(1, 3)});
    std::vector<LikelihoodMapping> mappings;
    for (int d = 0; d < 2; ++d)
        for (int e = 0; e < 2; ++e)
            for (int f = 0; f < 2; ++f)
                mappings.push_back({{"D", d ? mu2 : mu1},
                                    {"E", e ? mu2 : mu1},
                                    {"F", f ? mu2 : mu1}});
    return GeneralizedEvidenceSpace::make({"D", "E", "F"}, {"X", "Y"}, mappings);
}

std::vector<Rational> masses_on(const WeightSet& set, const std::string& h) {
    std::vector<Rational> values;
    for (const auto& d : set.as_set())
        values.push_back(d.mass(h));
    std::sort(values.begin(), values.end());
    return values;
}

} // namespace

TEST_CASE("generalized weights for the two-coin space") {
    GeneralizedEvidenceSpace space = alice_two_coins();
    WeightSet weights = generalized_weights(space, "heads");
    CHECK(weights.tagged().size() == 2);
    CHECK(masses_on(weights, "A") == std::vector<Rational>{r(3, 5), r(2, 3)});

    // singleton mapping set degenerates to the classical weight
    GeneralizedEvidenceSpace single = GeneralizedEvidenceSpace::make(
        {"A", "B"}, {"heads", "tails"}, {{{"A", coin(r(1))}, {"B", coin(r(1, 2))}}});
    WeightSet sw = generalized_weights(single, "heads");
    CHECK(sw.as_set() == std::vector<Dist>{weight_of_evidence(single.induced(0), "heads")});

    CHECK_THROWS_AS(generalized_weights(space, "edge"), UnknownObservation);
}

TEST_CASE("duplicate mappings collapse") {
    GeneralizedEvidenceSpace space = GeneralizedEvidenceSpace::make(
        {"A", "B"}, {"heads", "tails"},
        {{{"A", coin(r(1))}, {"B", coin(r(1, 2))}},
         {{"A", coin(r(1))}, {"B", coin(r(1, 2))}}});
    CHECK(space.size() == 1);
}

TEST_CASE("posterior set closed forms at alpha = 1/2") {
    GeneralizedEvidenceSpace space = alice_two_coins();
    Dist prior = Dist::make({"A", "B"}, {r(1, 2), r(1, 2)});
    WeightSet posteriors = posterior_set(space, prior, "heads");
    CHECK(masses_on(posteriors, "A") == std::vector<Rational>{r(3, 5), r(2, 3)});
}

TEST_CASE("posterior set closed forms at random alpha") {
    GeneralizedEvidenceSpace space = alice_two_coins();
    Rng rng(41);
    for (int i = 0; i < 10; ++i) {
        Rational alpha = evid::testing::random_rational(rng, 30);
        if (alpha == 0 || alpha == 1)
            continue;
        Dist prior = Dist::make({"A", "B"}, {alpha, 1 - alpha});
        WeightSet posteriors = posterior_set(space, prior, "heads");
        std::vector<Rational> expected{3 * alpha / (alpha + 2), 2 * alpha / (alpha + 1)};
        std::sort(expected.begin(), expected.end());
        expected.erase(std::unique(expected.begin(), expected.end()), expected.end());
        CHECK(masses_on(posteriors, "A") == expected);
    }
}

TEST_CASE("uniform prior reduces the posterior set to the weight set") {
    GeneralizedEvidenceSpace space = three_hyp();
    Dist prior = Dist::uniform({"D", "E", "F"});
    CHECK(posterior_set(space, prior, "X").as_set() ==
          generalized_weights(space, "X").as_set());
}

TEST_CASE("upper and lower weights") {
    GeneralizedEvidenceSpace space = three_hyp();
    for (const auto& ob : {"X", "Y"})
        for (const auto& h : {"D", "E", "F"})
            CHECK(upper_lower_weight(space, ob, h) == std::pair{r(1, 5), r(1, 2)});

    CHECK(upper_lower_weight(alice_two_coins(), "heads", "A") ==
          std::pair{r(3, 5), r(2, 3)});
    CHECK_THROWS_AS(upper_lower_weight(space, "X", "edge"), UnknownHypothesis);
}

TEST_CASE("posterior bound formula: strict on three hypotheses, tight on two") {
    GeneralizedEvidenceSpace space = three_hyp();
    Dist prior = Dist::uniform({"D", "E", "F"});
    CHECK(posterior_bounds_formula(space, prior, "X", "D") == std::pair{r(1, 6), r(5, 9)});

    WeightSet posteriors = posterior_set(space, prior, "X");
    auto [lo, hi] = posteriors.bounds("D");
    CHECK(lo == r(1, 5));
    CHECK(hi == r(1, 2));
    CHECK(hi < r(5, 9)); // strictly inside the formula bounds
    CHECK(lo > r(1, 6));

    // two hypotheses: the formula is exact
    GeneralizedEvidenceSpace two = alice_two_coins();
    Dist half = Dist::make({"A", "B"}, {r(1, 2), r(1, 2)});
    CHECK(posterior_bounds_formula(two, half, "heads", "A") == std::pair{r(3, 5), r(2, 3)});
}

TEST_CASE("posterior bound formula rejects correlated spaces") {
    GeneralizedEvidenceSpace correlated = GeneralizedEvidenceSpace::make(
        {"A", "B"}, {"heads", "tails"},
        {{{"A", coin(r(1))}, {"B", coin(r(1, 2))}},
         {{"A", coin(r(3, 4))}, {"B", coin(r(1, 3))}}});
    Dist half = Dist::make({"A", "B"}, {r(1, 2), r(1, 2)});
    CHECK_THROWS_AS(posterior_bounds_formula(correlated, half, "heads", "A"), CorrelatedSpace);
    CHECK_THROWS_AS(upper_lower_weight_product_form(correlated, "heads", "A"),
                    CorrelatedSpace);
    // sup/inf weights remain available for correlated spaces
    CHECK(upper_lower_weight(correlated, "heads", "A") == std::pair{r(2, 3), r(9, 13)});
}

TEST_CASE("product form reproduces the upper and lower weights") {
    GeneralizedEvidenceSpace space = three_hyp();
    CHECK(upper_lower_weight_product_form(space, "X", "D") == std::pair{r(1, 5), r(1, 2)});

    Rng rng(43);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::size_t> sizes(2 + rng() % 3);
        for (auto& s : sizes)
            s = 1 + rng() % 3;
        GeneralizedEvidenceSpace g =
            evid::testing::random_uncorrelated_space(rng, sizes, 2 + rng() % 3);
        for (const auto& ob : g.observations())
            for (const auto& h : g.hypotheses())
                CHECK(upper_lower_weight_product_form(g, ob, h) ==
                      upper_lower_weight(g, ob, h));
    }
}

TEST_CASE("sandwich property on random uncorrelated spaces") {
    Rng rng(47);
    for (int i = 0; i < 40; ++i) {
        std::vector<std::size_t> sizes(2 + rng() % 3);
        for (auto& s : sizes)
            s = 1 + rng() % 3;
        GeneralizedEvidenceSpace g =
            evid::testing::random_uncorrelated_space(rng, sizes, 2 + rng() % 3);
        Dist prior = evid::testing::random_dist(rng, g.hypotheses());
        for (const auto& ob : g.observations()) {
            WeightSet posteriors = posterior_set(g, prior, ob);
            for (const auto& h : g.hypotheses()) {
                auto [lo, hi] = posteriors.bounds(h);
                auto [flo, fhi] = posterior_bounds_formula(g, prior, ob, h);
                CHECK(lo >= flo);
                CHECK(hi <= fhi);
                if (g.hypotheses().size() == 2) {
                    CHECK(lo == flo);
                    CHECK(hi == fhi);
                }
            }
        }
    }
}

TEST_CASE("posterior bounds are monotone under mapping-set enlargement") {
    Rng rng(53);
    for (int i = 0; i < 30; ++i) {
        GeneralizedEvidenceSpace big =
            evid::testing::random_generalized_space(rng, 3, 3, 4);
        std::vector<LikelihoodMapping> subset(big.mappings().begin(),
                                              big.mappings().begin() + 2);
        GeneralizedEvidenceSpace small = GeneralizedEvidenceSpace::make(
            big.hypotheses(), big.observations(), subset);
        Dist prior = evid::testing::random_dist(rng, big.hypotheses());
        for (const auto& ob : big.observations()) {
            WeightSet big_set = posterior_set(big, prior, ob);
            WeightSet small_set = posterior_set(small, prior, ob);
            for (const auto& h : big.hypotheses()) {
                auto [blo, bhi] = big_set.bounds(h);
                auto [slo, shi] = small_set.bounds(h);
                CHECK(blo <= slo);
                CHECK(bhi >= shi);
            }
        }
    }
}

TEST_CASE("every member of a weight set is normalized") {
    Rng rng(59);
    for (int i = 0; i < 20; ++i) {
        GeneralizedEvidenceSpace g = evid::testing::random_generalized_space(rng, 3, 3, 3);
        for (const auto& ob : g.observations()) {
            WeightSet weights = generalized_weights(g, ob);
            for (const auto& tw : weights.tagged()) {
                Rational total = 0;
                for (const auto& m : tw.weight.masses())
                    total += m;
                CHECK(total == 1);
            }
        }
    }
}
