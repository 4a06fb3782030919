#pragma once

#include "evid/generalized.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

namespace evid::testing {

using Rng = std::mt19937_64;

inline std::vector<std::string> make_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> labels;
    labels.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        labels.push_back(prefix + std::to_string(i + 1));
    return labels;
}

/// Random rational in [0, 1] with denominator at most max_den.
inline Rational random_rational(Rng& rng, unsigned max_den = 12) {
    std::uniform_int_distribution<unsigned> den_pick(1, max_den);
    unsigned den = den_pick(rng);
    std::uniform_int_distribution<unsigned> num_pick(0, den);
    return Rational(num_pick(rng), den);
}

/// Random distribution; strictly positive masses unless allow_zero is set.
inline Dist random_dist(Rng& rng, const std::vector<std::string>& labels,
                        bool allow_zero = false) {
    std::uniform_int_distribution<unsigned> pick(allow_zero ? 0 : 1, 9);
    while (true) {
        std::vector<Rational> masses;
        masses.reserve(labels.size());
        Rational total = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            masses.emplace_back(pick(rng));
            total += masses.back();
        }
        if (total == 0)
            continue;
        for (auto& m : masses)
            m /= total;
        return Dist::make(labels, std::move(masses));
    }
}

inline LikelihoodMapping random_mapping(Rng& rng, const std::vector<std::string>& hypotheses,
                                        const std::vector<std::string>& observations) {
    LikelihoodMapping mapping;
    for (const auto& h : hypotheses)
        mapping.emplace(h, random_dist(rng, observations));
    return mapping;
}

inline EvidenceSpace random_evidence_space(Rng& rng, std::size_t n_hyp, std::size_t n_obs) {
    auto hypotheses = make_labels("h", n_hyp);
    auto observations = make_labels("o", n_obs);
    return EvidenceSpace::make(hypotheses, observations,
                               random_mapping(rng, hypotheses, observations));
}

/// `set_sizes[i]` distinct likelihood functions for hypothesis i; the
/// mapping set is their full product, so the result is uncorrelated.
inline GeneralizedEvidenceSpace random_uncorrelated_space(
    Rng& rng, const std::vector<std::size_t>& set_sizes, std::size_t n_obs) {
    auto hypotheses = make_labels("h", set_sizes.size());
    auto observations = make_labels("o", n_obs);

    std::vector<std::vector<Dist>> sets;
    for (std::size_t size : set_sizes) {
        std::vector<Dist> set;
        while (set.size() < size) {
            Dist candidate = random_dist(rng, observations);
            if (std::find(set.begin(), set.end(), candidate) == set.end())
                set.push_back(std::move(candidate));
        }
        sets.push_back(std::move(set));
    }

    std::vector<LikelihoodMapping> mappings;
    std::vector<std::size_t> digits(sets.size(), 0);
    while (true) {
        LikelihoodMapping mapping;
        for (std::size_t i = 0; i < sets.size(); ++i)
            mapping.emplace(hypotheses[i], sets[i][digits[i]]);
        mappings.push_back(std::move(mapping));
        std::size_t pos = sets.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++digits[pos] < sets[pos].size()) {
                done = false;
                break;
            }
            digits[pos] = 0;
        }
        if (done)
            break;
    }
    return GeneralizedEvidenceSpace::make(hypotheses, observations, std::move(mappings));
}

inline GeneralizedEvidenceSpace random_generalized_space(Rng& rng, std::size_t n_hyp,
                                                         std::size_t n_obs,
                                                         std::size_t n_mappings) {
    auto hypotheses = make_labels("h", n_hyp);
    auto observations = make_labels("o", n_obs);
    std::vector<LikelihoodMapping> mappings;
    for (std::size_t i = 0; i < n_mappings; ++i)
        mappings.push_back(random_mapping(rng, hypotheses, observations));
    return GeneralizedEvidenceSpace::make(hypotheses, observations, std::move(mappings));
}

} // namespace evid::testing
