#include "evid/generalized.hpp"

#include "evid/errors.hpp"
#include "evid/refinement.hpp"

#include <algorithm>

namespace evid {

GeneralizedEvidenceSpace GeneralizedEvidenceSpace::make(
    std::vector<std::string> hypotheses, std::vector<std::string> observations,
    std::vector<LikelihoodMapping> mappings) {
    if (mappings.empty())
        throw InvalidSpace("a generalized evidence space needs at least one likelihood mapping");

    GeneralizedEvidenceSpace space;
    for (auto& mapping : mappings) {
        if (std::find(space.mappings_.begin(), space.mappings_.end(), mapping) !=
            space.mappings_.end())
            continue; // set semantics
        space.spaces_.push_back(EvidenceSpace::make(hypotheses, observations, mapping));
        space.mappings_.push_back(std::move(mapping));
    }
    space.hypotheses_ = space.spaces_.front().hypotheses();
    space.observations_ = space.spaces_.front().observations();
    return space;
}

std::vector<Dist> WeightSet::as_set() const {
    std::vector<Dist> set;
    set.reserve(tagged_.size());
    for (const auto& tw : tagged_)
        set.push_back(tw.weight);
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

std::pair<Rational, Rational> WeightSet::bounds(const std::string& h) const {
    if (tagged_.empty())
        throw Error("bounds of an empty weight set");
    Rational lo = tagged_.front().weight.mass(h);
    Rational hi = lo;
    for (const auto& tw : tagged_) {
        const Rational& m = tw.weight.mass(h);
        lo = std::min(lo, m);
        hi = std::max(hi, m);
    }
    return {lo, hi};
}

WeightSet generalized_weights(const GeneralizedEvidenceSpace& space, const std::string& ob) {
    std::vector<TaggedWeight> tagged;
    tagged.reserve(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        tagged.push_back({{i}, weight_of_evidence(space.induced(i), ob)});
    return WeightSet(std::move(tagged));
}

WeightSet posterior_set(const GeneralizedEvidenceSpace& space, const Dist& prior,
                        const std::string& ob) {
    WeightSet weights = generalized_weights(space, ob);
    std::vector<TaggedWeight> tagged;
    tagged.reserve(weights.tagged().size());
    for (const auto& tw : weights.tagged()) {
        try {
            tagged.push_back({tw.tags, dempster_combine(prior, tw.weight)});
        } catch (const TotalConflict&) {
            throw TotalConflict("total conflict between prior and mapping " +
                                std::to_string(tw.tags.front() + 1) + " on observation '" +
                                ob + "'");
        }
    }
    return WeightSet(std::move(tagged));
}

std::pair<Rational, Rational> upper_lower_weight(const GeneralizedEvidenceSpace& space,
                                                 const std::string& ob, const std::string& h) {
    if (!std::binary_search(space.hypotheses().begin(), space.hypotheses().end(), h))
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");
    return generalized_weights(space, ob).bounds(h);
}

namespace {

void require_uncorrelated(const GeneralizedEvidenceSpace& space) {
    if (!is_uncorrelated(space))
        throw CorrelatedSpace("the likelihood mappings are correlated");
}

} // namespace

std::pair<Rational, Rational> posterior_bounds_formula(const GeneralizedEvidenceSpace& space,
                                                       const Dist& prior, const std::string& ob,
                                                       const std::string& h) {
    require_uncorrelated(space);
    if (prior.labels() != space.hypotheses())
        throw MismatchedSupport("prior is not a distribution over the hypothesis set");
    if (!std::binary_search(space.hypotheses().begin(), space.hypotheses().end(), h))
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");

    WeightSet weights = generalized_weights(space, ob);
    auto [w_lo, w_hi] = weights.bounds(h);

    Rational upper_num = w_hi * prior.mass(h);
    Rational upper_den = upper_num;
    Rational lower_num = w_lo * prior.mass(h);
    Rational lower_den = lower_num;
    for (const auto& other : space.hypotheses()) {
        if (other == h)
            continue;
        auto [o_lo, o_hi] = weights.bounds(other);
        upper_den += o_lo * prior.mass(other);
        lower_den += o_hi * prior.mass(other);
    }
    if (upper_den == 0 || lower_den == 0)
        throw ZeroDenominator("posterior bound formula has a zero denominator");
    return {lower_num / lower_den, upper_num / upper_den};
}

std::pair<Rational, Rational> upper_lower_weight_product_form(
    const GeneralizedEvidenceSpace& space, const std::string& ob, const std::string& h) {
    require_uncorrelated(space);
    if (!std::binary_search(space.observations().begin(), space.observations().end(), ob))
        throw UnknownObservation("unknown observation '" + ob + "'");
    if (!std::binary_search(space.hypotheses().begin(), space.hypotheses().end(), h))
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");

    // upper/lower probability of ob under the per-hypothesis likelihood set
    auto likelihood_bounds = [&](const std::string& hyp) {
        Rational lo = space.mappings().front().at(hyp).mass(ob);
        Rational hi = lo;
        for (const auto& mapping : space.mappings()) {
            const Rational& m = mapping.at(hyp).mass(ob);
            lo = std::min(lo, m);
            hi = std::max(hi, m);
        }
        return std::pair{lo, hi};
    };

    auto [h_lo, h_hi] = likelihood_bounds(h);
    Rational upper_den = h_hi;
    Rational lower_den = h_lo;
    for (const auto& other : space.hypotheses()) {
        if (other == h)
            continue;
        auto [o_lo, o_hi] = likelihood_bounds(other);
        upper_den += o_lo;
        lower_den += o_hi;
    }
    if (upper_den == 0 || lower_den == 0)
        throw ZeroDenominator("weight product form has a zero denominator");
    return {h_lo / lower_den, h_hi / upper_den};
}

} // namespace evid
