#include "evid/sequence.hpp"

#include "evid/errors.hpp"

namespace evid {

namespace {

void require_nonempty(const std::vector<std::string>& sequence) {
    if (sequence.empty())
        throw Error("observation sequence must have length >= 1");
}

} // namespace

Dist sequence_weight(const EvidenceSpace& space, const std::vector<std::string>& sequence) {
    require_nonempty(sequence);
    Dist acc = weight_of_evidence(space, sequence.front());
    for (std::size_t t = 1; t < sequence.size(); ++t)
        acc = dempster_combine(acc, weight_of_evidence(space, sequence[t]));
    return acc;
}

WeightSet generalized_sequence_weights(const GeneralizedEvidenceSpace& space,
                                       const std::vector<std::string>& sequence,
                                       CombinationMode mode) {
    require_nonempty(sequence);
    std::vector<TaggedWeight> tagged;

    if (mode == CombinationMode::FixedMapping) {
        tagged.reserve(space.size());
        for (std::size_t i = 0; i < space.size(); ++i) {
            try {
                tagged.push_back({{i}, sequence_weight(space.induced(i), sequence)});
            } catch (const TotalConflict&) {
                throw TotalConflict("total conflict along mapping " + std::to_string(i + 1));
            }
        }
        return WeightSet(std::move(tagged));
    }

    // PerObservation: every |Delta|^n index tuple
    std::vector<std::size_t> tuple(sequence.size(), 0);
    while (true) {
        try {
            Dist acc = weight_of_evidence(space.induced(tuple[0]), sequence[0]);
            for (std::size_t t = 1; t < sequence.size(); ++t)
                acc = dempster_combine(acc,
                                       weight_of_evidence(space.induced(tuple[t]), sequence[t]));
            tagged.push_back({tuple, std::move(acc)});
        } catch (const TotalConflict&) {
            std::string path;
            for (std::size_t t = 0; t < tuple.size(); ++t)
                path += (t ? "," : "") + std::to_string(tuple[t] + 1);
            throw TotalConflict("total conflict along mapping path (" + path + ")");
        }
        std::size_t pos = tuple.size();
        bool done = true;
        while (pos > 0) {
            --pos;
            if (++tuple[pos] < space.size()) {
                done = false;
                break;
            }
            tuple[pos] = 0;
        }
        if (done)
            break;
    }
    return WeightSet(std::move(tagged));
}

} // namespace evid
