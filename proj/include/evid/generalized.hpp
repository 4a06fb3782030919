#pragma once

#include "evid/evidence.hpp"

#include <cstddef>
#include <utility>
#include <vector>

namespace evid {

/// A hypothesis set, an observation set, and a finite set of alternative
/// likelihood mappings, modeling uncertainty about which likelihood function
/// applies. Duplicate mappings are collapsed; each remaining mapping must
/// induce a valid evidence space.
class GeneralizedEvidenceSpace {
public:
    static GeneralizedEvidenceSpace make(std::vector<std::string> hypotheses,
                                         std::vector<std::string> observations,
                                         std::vector<LikelihoodMapping> mappings);

    const std::vector<std::string>& hypotheses() const { return hypotheses_; }
    const std::vector<std::string>& observations() const { return observations_; }
    const std::vector<LikelihoodMapping>& mappings() const { return mappings_; }
    std::size_t size() const { return mappings_.size(); }

    const EvidenceSpace& induced(std::size_t i) const { return spaces_[i]; }

private:
    GeneralizedEvidenceSpace() = default;
    std::vector<std::string> hypotheses_;
    std::vector<std::string> observations_;
    std::vector<LikelihoodMapping> mappings_;
    std::vector<EvidenceSpace> spaces_;
};

/// A weight vector together with the mapping indices that produced it. A
/// single index for one observation; one index per step for sequences
/// combined per observation.
struct TaggedWeight {
    std::vector<std::size_t> tags;
    Dist weight;

    bool operator==(const TaggedWeight&) const = default;
};

/// Finite set of weight vectors over the hypotheses, with provenance.
class WeightSet {
public:
    explicit WeightSet(std::vector<TaggedWeight> tagged) : tagged_(std::move(tagged)) {}

    const std::vector<TaggedWeight>& tagged() const { return tagged_; }

    /// Deduplicated, deterministically ordered set view.
    std::vector<Dist> as_set() const;

    /// (min, max) of the mass on one hypothesis across the set.
    std::pair<Rational, Rational> bounds(const std::string& h) const;

private:
    std::vector<TaggedWeight> tagged_;
};

/// One weight vector per likelihood mapping.
WeightSet generalized_weights(const GeneralizedEvidenceSpace& space, const std::string& ob);

/// Combines the prior with every member of the generalized weight of
/// evidence. A mapping whose combination is undefined raises TotalConflict
/// naming the offending mapping.
WeightSet posterior_set(const GeneralizedEvidenceSpace& space, const Dist& prior,
                        const std::string& ob);

/// (lower, upper) weight of evidence: exact min/max over the weight set.
std::pair<Rational, Rational> upper_lower_weight(const GeneralizedEvidenceSpace& space,
                                                 const std::string& ob, const std::string& h);

/// Right-hand sides of the posterior bound inequalities built from upper and
/// lower weights: (lower RHS, upper RHS). Requires an uncorrelated space.
std::pair<Rational, Rational> posterior_bounds_formula(const GeneralizedEvidenceSpace& space,
                                                       const Dist& prior, const std::string& ob,
                                                       const std::string& h);

/// Upper/lower weights expressed through the per-hypothesis likelihood sets
/// P_h = {mu(h) | mu in Delta}: the upper weight pairs the upper probability
/// of P_h with the lower probabilities of the competing hypotheses, and
/// dually for the lower weight. Equals upper_lower_weight exactly on
/// uncorrelated spaces. Returns (lower, upper).
std::pair<Rational, Rational> upper_lower_weight_product_form(
    const GeneralizedEvidenceSpace& space, const std::string& ob, const std::string& h);

} // namespace evid
