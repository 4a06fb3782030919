#pragma once

#include "evid/dist.hpp"

#include <map>
#include <string>
#include <vector>

namespace evid {

/// Assignment of one likelihood function (a distribution over observations)
/// to every hypothesis.
using LikelihoodMapping = std::map<std::string, Dist>;

/// A finite hypothesis set, a finite observation set, and a likelihood
/// function per hypothesis. Construction checks that every observation is
/// possible under at least one hypothesis.
class EvidenceSpace {
public:
    static EvidenceSpace make(std::vector<std::string> hypotheses,
                              std::vector<std::string> observations,
                              LikelihoodMapping likelihood);

    const std::vector<std::string>& hypotheses() const { return hypotheses_; }
    const std::vector<std::string>& observations() const { return observations_; }
    const LikelihoodMapping& mapping() const { return likelihood_; }
    const Dist& likelihood(const std::string& h) const;

    bool operator==(const EvidenceSpace& other) const = default;

private:
    EvidenceSpace() = default;
    std::vector<std::string> hypotheses_;
    std::vector<std::string> observations_;
    LikelihoodMapping likelihood_;
};

/// Normalized likelihoods of one observation across the hypotheses. Sums to
/// exactly 1 over the hypothesis set.
Dist weight_of_evidence(const EvidenceSpace& space, const std::string& ob);

/// Combines a prior over the hypotheses with the weight of evidence of an
/// observation.
Dist posterior(const EvidenceSpace& space, const Dist& prior, const std::string& ob);

/// A joint probability on hypotheses x observations. Kept independent of the
/// combination machinery so Bayes conditioning can serve as an oracle for it.
class JointDistribution {
public:
    /// `mass[i][j]` is the probability of (hypotheses[i], observations[j]);
    /// entries must be nonnegative and sum to exactly 1.
    static JointDistribution make(std::vector<std::string> hypotheses,
                                  std::vector<std::string> observations,
                                  std::vector<std::vector<Rational>> mass);

    const std::vector<std::string>& hypotheses() const { return hypotheses_; }
    const std::vector<std::string>& observations() const { return observations_; }
    const Rational& mass(const std::string& h, const std::string& ob) const;

    /// Marginal on the hypotheses.
    Dist hypothesis_marginal() const;

private:
    JointDistribution() = default;
    std::vector<std::string> hypotheses_;
    std::vector<std::string> observations_;
    std::vector<std::vector<Rational>> mass_;
};

/// The joint with P(h, ob) = prior(h) * likelihood_h(ob).
JointDistribution joint_from(const EvidenceSpace& space, const Dist& prior);

/// Bayes conditioning of the hypothesis marginal on one observation. Throws
/// ZeroProbabilityObservation when the observation has probability 0.
Dist bayes_oracle(const JointDistribution& joint, const std::string& ob);

} // namespace evid
