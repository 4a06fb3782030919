#pragma once

#include "evid/generalized.hpp"

#include <nlohmann/json_fwd.hpp>

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace evid {

/// Parsed model file: hypotheses, observations, one or more likelihood
/// mappings, and an optional prior. One mapping yields a classical evidence
/// space, two or more a generalized one.
struct Model {
    std::vector<std::string> hypotheses;
    std::vector<std::string> observations;
    std::vector<LikelihoodMapping> mappings;
    std::optional<Dist> prior;

    bool is_generalized() const { return mappings.size() > 1; }
    EvidenceSpace evidence_space() const;
    GeneralizedEvidenceSpace generalized_space() const;
};

/// Parses a model from JSON. Throws ParseError with a field-level diagnostic
/// on malformed input; space invariant violations surface as InvalidSpace.
Model parse_model(const nlohmann::json& doc);
Model load_model(const std::filesystem::path& path);

nlohmann::json model_to_json(const Model& model);

/// Parses a prior given as "h=p/q,h=p/q,..." against a hypothesis set.
Dist parse_prior_spec(const std::string& spec, const std::vector<std::string>& hypotheses);

} // namespace evid
