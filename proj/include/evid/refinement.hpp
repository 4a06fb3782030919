#pragma once

#include "evid/generalized.hpp"

#include <map>
#include <variant>
#include <vector>

namespace evid {

/// Per-hypothesis likelihood sets whose full product equals the mapping set.
/// Sets are deduplicated and kept in order of first appearance in Delta.
struct Factorization {
    std::vector<std::string> hypotheses;
    std::vector<std::string> observations;
    std::map<std::string, std::vector<Dist>> per_hypothesis;
};

/// Witness that the mapping set is correlated: a combination of
/// per-hypothesis likelihoods that the set does not contain.
struct Correlated {
    LikelihoodMapping witness;
};

using FactorResult = std::variant<Factorization, Correlated>;

/// Tests whether Delta factors as the full product of its per-hypothesis
/// likelihood sets. Exhaustive exact membership testing; intended for small
/// hypothesis sets.
FactorResult factor_uncorrelated(const GeneralizedEvidenceSpace& space);

bool is_uncorrelated(const GeneralizedEvidenceSpace& space);

/// A classical evidence space over a finer hypothesis set, with the
/// surjection onto the original hypotheses. The fiber over h carries the
/// alternative likelihood functions for h.
class Refinement {
public:
    Refinement(EvidenceSpace refined, std::map<std::string, std::string> surjection);

    const EvidenceSpace& refined() const { return refined_; }
    /// refined hypothesis -> source hypothesis
    const std::map<std::string, std::string>& surjection() const { return surjection_; }
    /// Source hypotheses, sorted.
    const std::vector<std::string>& source_hypotheses() const { return source_hypotheses_; }
    const std::vector<std::string>& fiber(const std::string& h) const;

private:
    EvidenceSpace refined_;
    std::map<std::string, std::string> surjection_;
    std::vector<std::string> source_hypotheses_;
    std::map<std::string, std::vector<std::string>> fibers_;
};

/// Splits every hypothesis into one refined hypothesis per member of its
/// likelihood set. Labels are "(h,k)" with k a 1-based index in
/// lexicographic order of the likelihood mass vectors.
Refinement build_refinement(const Factorization& factorization);

/// Checks the refinement definition: the product of the fiber likelihood
/// sets must equal the source mapping set.
bool verify_refinement(const Refinement& refinement, const GeneralizedEvidenceSpace& source);

/// Reconstructs the generalized space a refinement refines: Delta is the
/// full product of the fiber likelihood sets.
GeneralizedEvidenceSpace induced_generalized(const Refinement& refinement);

/// Priors on the refined hypotheses that push forward to `prior` and
/// concentrate each source mass on a single refined hypothesis. These are
/// the vertices of the extension polytope.
std::vector<Dist> extension_vertices(const Refinement& refinement, const Dist& prior);

/// Exact (min, max) over all extensions of `prior` of the refined posterior
/// mass on the fiber of h. The refined posterior mass is a ratio of
/// functions linear in the extension, so the extrema are attained at the
/// vertices enumerated above.
std::pair<Rational, Rational> extension_posterior_bounds(const Refinement& refinement,
                                                         const Dist& prior,
                                                         const std::string& ob,
                                                         const std::string& h);

} // namespace evid
