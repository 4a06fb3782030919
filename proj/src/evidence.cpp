#include "evid/evidence.hpp"

#include "evid/errors.hpp"

#include <algorithm>

namespace evid {

namespace {

std::vector<std::string> sorted_unique(std::vector<std::string> labels, const char* what) {
    if (labels.empty())
        throw InvalidSpace(std::string("empty ") + what + " set");
    std::sort(labels.begin(), labels.end());
    auto dup = std::adjacent_find(labels.begin(), labels.end());
    if (dup != labels.end())
        throw DuplicateLabel(std::string("duplicate ") + what + " '" + *dup + "'");
    return labels;
}

} // namespace

EvidenceSpace EvidenceSpace::make(std::vector<std::string> hypotheses,
                                  std::vector<std::string> observations,
                                  LikelihoodMapping likelihood) {
    EvidenceSpace space;
    space.hypotheses_ = sorted_unique(std::move(hypotheses), "hypothesis");
    space.observations_ = sorted_unique(std::move(observations), "observation");

    for (const auto& h : space.hypotheses_) {
        auto it = likelihood.find(h);
        if (it == likelihood.end())
            throw InvalidSpace("no likelihood function for hypothesis '" + h + "'");
        if (it->second.labels() != space.observations_)
            throw InvalidSpace("likelihood for '" + h +
                               "' is not a distribution over the observation set");
    }
    if (likelihood.size() != space.hypotheses_.size())
        throw InvalidSpace("likelihood mapping mentions unknown hypotheses");

    for (std::size_t j = 0; j < space.observations_.size(); ++j) {
        Rational total = 0;
        for (const auto& [h, mu] : likelihood)
            total += mu.mass_at(j);
        if (total == 0)
            throw InvalidSpace("observation '" + space.observations_[j] +
                               "' is impossible under every hypothesis");
    }

    space.likelihood_ = std::move(likelihood);
    return space;
}

const Dist& EvidenceSpace::likelihood(const std::string& h) const {
    auto it = likelihood_.find(h);
    if (it == likelihood_.end())
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");
    return it->second;
}

Dist weight_of_evidence(const EvidenceSpace& space, const std::string& ob) {
    if (!std::binary_search(space.observations().begin(), space.observations().end(), ob))
        throw UnknownObservation("unknown observation '" + ob + "'");
    std::vector<Rational> numerators;
    numerators.reserve(space.hypotheses().size());
    Rational total = 0;
    for (const auto& h : space.hypotheses()) {
        numerators.push_back(space.likelihood(h).mass(ob));
        total += numerators.back();
    }
    for (auto& n : numerators)
        n /= total;
    return Dist::make(space.hypotheses(), std::move(numerators));
}

Dist posterior(const EvidenceSpace& space, const Dist& prior, const std::string& ob) {
    if (prior.labels() != space.hypotheses())
        throw MismatchedSupport("prior is not a distribution over the hypothesis set");
    return dempster_combine(prior, weight_of_evidence(space, ob));
}

JointDistribution JointDistribution::make(std::vector<std::string> hypotheses,
                                          std::vector<std::string> observations,
                                          std::vector<std::vector<Rational>> mass) {
    JointDistribution joint;
    joint.hypotheses_ = sorted_unique(std::move(hypotheses), "hypothesis");
    joint.observations_ = sorted_unique(std::move(observations), "observation");
    if (mass.size() != joint.hypotheses_.size())
        throw Error("joint mass has wrong number of rows");
    Rational total = 0;
    for (const auto& row : mass) {
        if (row.size() != joint.observations_.size())
            throw Error("joint mass has a row of the wrong length");
        for (const auto& m : row) {
            if (m < 0)
                throw NegativeMass("negative joint mass " + to_fraction_string(m));
            total += m;
        }
    }
    if (total != 1)
        throw NonNormalized("joint masses sum to " + to_fraction_string(total) +
                            ", expected 1");
    joint.mass_ = std::move(mass);
    return joint;
}

const Rational& JointDistribution::mass(const std::string& h, const std::string& ob) const {
    auto hit = std::lower_bound(hypotheses_.begin(), hypotheses_.end(), h);
    if (hit == hypotheses_.end() || *hit != h)
        throw UnknownHypothesis("unknown hypothesis '" + h + "'");
    auto oit = std::lower_bound(observations_.begin(), observations_.end(), ob);
    if (oit == observations_.end() || *oit != ob)
        throw UnknownObservation("unknown observation '" + ob + "'");
    return mass_[static_cast<std::size_t>(hit - hypotheses_.begin())]
                [static_cast<std::size_t>(oit - observations_.begin())];
}

Dist JointDistribution::hypothesis_marginal() const {
    std::vector<Rational> masses;
    masses.reserve(hypotheses_.size());
    for (const auto& row : mass_) {
        Rational sum = 0;
        for (const auto& m : row)
            sum += m;
        masses.push_back(sum);
    }
    return Dist::make(hypotheses_, std::move(masses));
}

JointDistribution joint_from(const EvidenceSpace& space, const Dist& prior) {
    if (prior.labels() != space.hypotheses())
        throw MismatchedSupport("prior is not a distribution over the hypothesis set");
    std::vector<std::vector<Rational>> mass;
    mass.reserve(space.hypotheses().size());
    for (std::size_t i = 0; i < space.hypotheses().size(); ++i) {
        const Dist& mu = space.likelihood(space.hypotheses()[i]);
        std::vector<Rational> row;
        row.reserve(space.observations().size());
        for (std::size_t j = 0; j < space.observations().size(); ++j)
            row.push_back(prior.mass_at(i) * mu.mass_at(j));
        mass.push_back(std::move(row));
    }
    return JointDistribution::make(space.hypotheses(), space.observations(), std::move(mass));
}

Dist bayes_oracle(const JointDistribution& joint, const std::string& ob) {
    Rational denom = 0;
    std::vector<Rational> column;
    column.reserve(joint.hypotheses().size());
    for (const auto& h : joint.hypotheses()) {
        column.push_back(joint.mass(h, ob));
        denom += column.back();
    }
    if (denom == 0)
        throw ZeroProbabilityObservation("observation '" + ob + "' has probability 0");
    for (auto& m : column)
        m /= denom;
    return Dist::make(joint.hypotheses(), std::move(column));
}

} // namespace evid
