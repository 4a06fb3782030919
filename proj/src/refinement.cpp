#include "evid/refinement.hpp"

#include "evid/errors.hpp"

#include <algorithm>
#include <optional>

namespace evid {

namespace {

// Odometer over one choice per hypothesis. `visit` gets the current choice
// vector; returning false stops the enumeration.
template <typename Visit>
void for_each_combination(const std::vector<std::size_t>& radix, Visit visit) {
    std::vector<std::size_t> digits(radix.size(), 0);
    while (true) {
        if (!visit(digits))
            return;
        std::size_t pos = radix.size();
        while (pos > 0) {
            --pos;
            if (++digits[pos] < radix[pos])
                break;
            digits[pos] = 0;
            if (pos == 0)
                return;
        }
    }
}

} // namespace

FactorResult factor_uncorrelated(const GeneralizedEvidenceSpace& space) {
    Factorization factorization;
    factorization.hypotheses = space.hypotheses();
    factorization.observations = space.observations();

    for (const auto& h : space.hypotheses()) {
        auto& set = factorization.per_hypothesis[h];
        for (const auto& mapping : space.mappings()) {
            const Dist& mu = mapping.at(h);
            if (std::find(set.begin(), set.end(), mu) == set.end())
                set.push_back(mu);
        }
    }

    std::vector<std::size_t> radix;
    radix.reserve(space.hypotheses().size());
    for (const auto& h : space.hypotheses())
        radix.push_back(factorization.per_hypothesis.at(h).size());

    std::optional<LikelihoodMapping> witness;
    for_each_combination(radix, [&](const std::vector<std::size_t>& digits) {
        LikelihoodMapping candidate;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const auto& h = space.hypotheses()[i];
            candidate.emplace(h, factorization.per_hypothesis.at(h)[digits[i]]);
        }
        if (std::find(space.mappings().begin(), space.mappings().end(), candidate) ==
            space.mappings().end()) {
            witness = std::move(candidate);
            return false;
        }
        return true;
    });

    if (witness)
        return Correlated{std::move(*witness)};
    return factorization;
}

bool is_uncorrelated(const GeneralizedEvidenceSpace& space) {
    return std::holds_alternative<Factorization>(factor_uncorrelated(space));
}

Refinement::Refinement(EvidenceSpace refined, std::map<std::string, std::string> surjection)
    : refined_(std::move(refined)), surjection_(std::move(surjection)) {
    if (surjection_.size() != refined_.hypotheses().size())
        throw InvalidSpace("surjection must cover every refined hypothesis");
    for (const auto& h_prime : refined_.hypotheses()) {
        auto it = surjection_.find(h_prime);
        if (it == surjection_.end())
            throw InvalidSpace("no image for refined hypothesis '" + h_prime + "'");
        fibers_[it->second].push_back(h_prime);
    }
    for (auto& [h, fiber] : fibers_) {
        std::sort(fiber.begin(), fiber.end());
        source_hypotheses_.push_back(h);
    }
}

const std::vector<std::string>& Refinement::fiber(const std::string& h) const {
    auto it = fibers_.find(h);
    if (it == fibers_.end())
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");
    return it->second;
}

Refinement build_refinement(const Factorization& factorization) {
    std::vector<std::string> refined_hypotheses;
    std::map<std::string, std::string> surjection;
    LikelihoodMapping likelihood;

    for (const auto& h : factorization.hypotheses) {
        std::vector<Dist> set = factorization.per_hypothesis.at(h);
        std::sort(set.begin(), set.end());
        set.erase(std::unique(set.begin(), set.end()), set.end());
        for (std::size_t k = 0; k < set.size(); ++k) {
            std::string label = "(" + h + "," + std::to_string(k + 1) + ")";
            refined_hypotheses.push_back(label);
            surjection.emplace(label, h);
            likelihood.emplace(std::move(label), set[k]);
        }
    }

    return Refinement(EvidenceSpace::make(std::move(refined_hypotheses),
                                          factorization.observations, std::move(likelihood)),
                      std::move(surjection));
}

GeneralizedEvidenceSpace induced_generalized(const Refinement& refinement) {
    const auto& sources = refinement.source_hypotheses();
    std::vector<std::size_t> radix;
    radix.reserve(sources.size());
    for (const auto& h : sources)
        radix.push_back(refinement.fiber(h).size());

    std::vector<LikelihoodMapping> mappings;
    for_each_combination(radix, [&](const std::vector<std::size_t>& digits) {
        LikelihoodMapping mapping;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const auto& h_prime = refinement.fiber(sources[i])[digits[i]];
            mapping.emplace(sources[i], refinement.refined().likelihood(h_prime));
        }
        mappings.push_back(std::move(mapping));
        return true;
    });

    return GeneralizedEvidenceSpace::make(sources, refinement.refined().observations(),
                                          std::move(mappings));
}

bool verify_refinement(const Refinement& refinement, const GeneralizedEvidenceSpace& source) {
    if (refinement.source_hypotheses() != source.hypotheses())
        return false;
    if (refinement.refined().observations() != source.observations())
        return false;
    // distinct refined hypotheses within one fiber must carry distinct
    // likelihood functions
    for (const auto& h : source.hypotheses()) {
        const auto& fiber = refinement.fiber(h);
        for (std::size_t i = 0; i < fiber.size(); ++i)
            for (std::size_t j = i + 1; j < fiber.size(); ++j)
                if (refinement.refined().likelihood(fiber[i]) ==
                    refinement.refined().likelihood(fiber[j]))
                    return false;
    }

    GeneralizedEvidenceSpace product = induced_generalized(refinement);
    auto contains = [](const std::vector<LikelihoodMapping>& set,
                       const LikelihoodMapping& mapping) {
        return std::find(set.begin(), set.end(), mapping) != set.end();
    };
    for (const auto& mapping : product.mappings())
        if (!contains(source.mappings(), mapping))
            return false;
    for (const auto& mapping : source.mappings())
        if (!contains(product.mappings(), mapping))
            return false;
    return true;
}

std::vector<Dist> extension_vertices(const Refinement& refinement, const Dist& prior) {
    if (prior.labels() != refinement.source_hypotheses())
        throw MismatchedSupport("prior is not a distribution over the source hypotheses");
    const auto& sources = refinement.source_hypotheses();
    std::vector<std::size_t> radix;
    radix.reserve(sources.size());
    for (const auto& h : sources)
        radix.push_back(refinement.fiber(h).size());

    std::vector<Dist> vertices;
    for_each_combination(radix, [&](const std::vector<std::size_t>& digits) {
        std::vector<Rational> masses(refinement.refined().hypotheses().size(), Rational(0));
        for (std::size_t i = 0; i < digits.size(); ++i) {
            const auto& h_prime = refinement.fiber(sources[i])[digits[i]];
            auto it = std::lower_bound(refinement.refined().hypotheses().begin(),
                                       refinement.refined().hypotheses().end(), h_prime);
            masses[static_cast<std::size_t>(it - refinement.refined().hypotheses().begin())] =
                prior.mass_at(i);
        }
        vertices.push_back(Dist::make(refinement.refined().hypotheses(), std::move(masses)));
        return true;
    });
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return vertices;
}

std::pair<Rational, Rational> extension_posterior_bounds(const Refinement& refinement,
                                                         const Dist& prior,
                                                         const std::string& ob,
                                                         const std::string& h) {
    const auto& fiber = refinement.fiber(h); // validates h
    std::vector<Dist> vertices = extension_vertices(refinement, prior);

    std::optional<Rational> lo, hi;
    for (const auto& vertex : vertices) {
        Dist post = posterior(refinement.refined(), vertex, ob);
        Rational mass = post.mass_on(fiber);
        if (!lo || mass < *lo)
            lo = mass;
        if (!hi || mass > *hi)
            hi = mass;
    }
    return {*lo, *hi};
}

} // namespace evid
