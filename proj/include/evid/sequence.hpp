#pragma once

#include "evid/generalized.hpp"

#include <string>
#include <vector>

namespace evid {

/// How a likelihood mapping is selected along an observation sequence:
/// either one mapping governs every observation, or the mapping may change
/// per observation.
enum class CombinationMode {
    FixedMapping,
    PerObservation,
};

/// Weight of evidence of an ordered observation sequence: the combination of
/// the per-observation weights. Observations are treated as independent
/// given the hypothesis, so this equals the normalized product likelihood of
/// the sequence.
Dist sequence_weight(const EvidenceSpace& space, const std::vector<std::string>& sequence);

/// Sequence weights for a generalized space. FixedMapping folds each mapping
/// over the whole sequence (tag: the mapping index). PerObservation folds
/// every tuple of per-step mapping indices (tag: the tuple).
WeightSet generalized_sequence_weights(const GeneralizedEvidenceSpace& space,
                                       const std::vector<std::string>& sequence,
                                       CombinationMode mode);

} // namespace evid
