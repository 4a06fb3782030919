#include "evid/model_io.hpp"

#include "evid/errors.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

namespace evid {

namespace {

using nlohmann::json;

std::vector<std::string> parse_label_list(const json& doc, const std::string& field) {
    if (!doc.contains(field))
        throw ParseError("missing field '" + field + "'");
    const json& node = doc.at(field);
    if (!node.is_array() || node.empty())
        throw ParseError("field '" + field + "' must be a nonempty array of strings");
    std::vector<std::string> labels;
    labels.reserve(node.size());
    for (const auto& item : node) {
        if (!item.is_string())
            throw ParseError("field '" + field + "' must contain only strings");
        labels.push_back(item.get<std::string>());
    }
    return labels;
}

Rational parse_rational_field(const json& node, const std::string& where) {
    try {
        if (node.is_string())
            return parse_rational(node.get<std::string>());
        if (node.is_number_integer())
            return Rational(node.get<long long>());
    } catch (const ParseError& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a rational string \"p/q\" or an integer");
}

Dist parse_dist(const json& node, const std::vector<std::string>& labels,
                const std::string& where) {
    if (!node.is_object())
        throw ParseError(where + ": expected an object mapping labels to rationals");
    std::vector<Rational> masses;
    masses.reserve(labels.size());
    for (const auto& label : labels) {
        if (!node.contains(label)) {
            masses.push_back(Rational(0));
            continue;
        }
        masses.push_back(parse_rational_field(node.at(label), where + "." + label));
    }
    for (const auto& [key, value] : node.items()) {
        (void)value;
        if (std::find(labels.begin(), labels.end(), key) == labels.end())
            throw ParseError(where + ": unknown label '" + key + "'");
    }
    try {
        return Dist::make(labels, std::move(masses));
    } catch (const Error& e) {
        throw ParseError(where + ": " + e.what());
    }
}

} // namespace

EvidenceSpace Model::evidence_space() const {
    if (is_generalized())
        throw InvalidSpace("model has multiple likelihood mappings; use generalized_space()");
    return EvidenceSpace::make(hypotheses, observations, mappings.front());
}

GeneralizedEvidenceSpace Model::generalized_space() const {
    return GeneralizedEvidenceSpace::make(hypotheses, observations, mappings);
}

Model parse_model(const json& doc) {
    if (!doc.is_object())
        throw ParseError("model file must be a JSON object");

    Model model;
    model.hypotheses = parse_label_list(doc, "hypotheses");
    model.observations = parse_label_list(doc, "observations");

    if (!doc.contains("mappings"))
        throw ParseError("missing field 'mappings'");
    const json& mappings = doc.at("mappings");
    if (!mappings.is_array() || mappings.empty())
        throw ParseError("field 'mappings' must be a nonempty array");
    for (std::size_t i = 0; i < mappings.size(); ++i) {
        const json& node = mappings.at(i);
        std::string where = "mappings[" + std::to_string(i) + "]";
        if (!node.is_object())
            throw ParseError(where + ": expected an object keyed by hypothesis");
        LikelihoodMapping mapping;
        for (const auto& h : model.hypotheses) {
            if (!node.contains(h))
                throw ParseError(where + ": missing likelihood for hypothesis '" + h + "'");
            mapping.emplace(h, parse_dist(node.at(h), model.observations, where + "." + h));
        }
        for (const auto& [key, value] : node.items()) {
            (void)value;
            if (std::find(model.hypotheses.begin(), model.hypotheses.end(), key) ==
                model.hypotheses.end())
                throw ParseError(where + ": unknown hypothesis '" + key + "'");
        }
        model.mappings.push_back(std::move(mapping));
    }

    if (doc.contains("prior"))
        model.prior = parse_dist(doc.at("prior"), model.hypotheses, "prior");

    // validate the space invariants up front
    if (model.is_generalized())
        model.generalized_space();
    else
        model.evidence_space();
    return model;
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open model file '" + path.string() + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError("invalid JSON in '" + path.string() + "': " + e.what());
    }
    return parse_model(doc);
}

json model_to_json(const Model& model) {
    json doc;
    doc["hypotheses"] = model.hypotheses;
    doc["observations"] = model.observations;
    doc["mappings"] = json::array();
    for (const auto& mapping : model.mappings) {
        json node = json::object();
        for (const auto& [h, mu] : mapping) {
            json row = json::object();
            for (std::size_t j = 0; j < mu.size(); ++j)
                row[mu.labels()[j]] = to_fraction_string(mu.mass_at(j));
            node[h] = std::move(row);
        }
        doc["mappings"].push_back(std::move(node));
    }
    if (model.prior) {
        json row = json::object();
        for (std::size_t j = 0; j < model.prior->size(); ++j)
            row[model.prior->labels()[j]] = to_fraction_string(model.prior->mass_at(j));
        doc["prior"] = std::move(row);
    }
    return doc;
}

Dist parse_prior_spec(const std::string& spec, const std::vector<std::string>& hypotheses) {
    std::vector<std::string> labels;
    std::vector<Rational> masses;
    std::size_t start = 0;
    while (start <= spec.size()) {
        std::size_t end = spec.find(',', start);
        if (end == std::string::npos)
            end = spec.size();
        std::string item = spec.substr(start, end - start);
        std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw ParseError("prior entry '" + item + "' is not of the form h=p/q");
        std::string h = item.substr(0, eq);
        if (std::find(hypotheses.begin(), hypotheses.end(), h) == hypotheses.end())
            throw ParseError("prior names unknown hypothesis '" + h + "'");
        labels.push_back(std::move(h));
        masses.push_back(parse_rational(item.substr(eq + 1)));
        if (end == spec.size())
            break;
        start = end + 1;
    }
    // hypotheses omitted from the spec get mass 0
    for (const auto& h : hypotheses) {
        if (std::find(labels.begin(), labels.end(), h) == labels.end()) {
            labels.push_back(h);
            masses.push_back(Rational(0));
        }
    }
    try {
        return Dist::make(std::move(labels), std::move(masses));
    } catch (const Error& e) {
        throw ParseError(std::string("prior: ") + e.what());
    }
}

} // namespace evid
