#include "evid/errors.hpp"
#include "evid/model_io.hpp"
#include "evid/refinement.hpp"
#include "evid/sequence.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;

struct Options {
    std::string model_path;
    std::string obs_csv;
    std::string prior_spec;
    std::string mode;
    std::string format = "table";
    int decimal = -1;
};

std::string render(const evid::Rational& r, const Options& opts) {
    if (opts.decimal >= 0)
        return evid::to_decimal_string(r, static_cast<unsigned>(opts.decimal));
    return evid::to_fraction_string(r);
}

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> items;
    std::size_t start = 0;
    while (start <= csv.size()) {
        std::size_t end = csv.find(',', start);
        if (end == std::string::npos)
            end = csv.size();
        items.push_back(csv.substr(start, end - start));
        if (end == csv.size())
            break;
        start = end + 1;
    }
    return items;
}

std::string sequence_display(const std::vector<std::string>& obs) {
    if (obs.size() == 1)
        return obs.front();
    std::string out = "<";
    for (std::size_t i = 0; i < obs.size(); ++i)
        out += (i ? "," : "") + obs[i];
    return out + ">";
}

std::string tag_display(const std::vector<std::size_t>& tags) {
    std::string out;
    for (std::size_t i = 0; i < tags.size(); ++i)
        out += (i ? "," : "m") + std::to_string(tags[i] + 1);
    return out;
}

json tag_json(const std::vector<std::size_t>& tags) {
    json arr = json::array();
    for (std::size_t t : tags)
        arr.push_back(t + 1);
    return arr;
}

void print_table(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size())
            widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i)
            widths[i] = std::max(widths[i], row[i].size());
    }
    for (const auto& row : rows) {
        std::string line;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::string cell = row[i];
            if (i + 1 < row.size())
                cell.resize(widths[i], ' ');
            line += (i ? " | " : "") + cell;
        }
        std::cout << line << "\n";
    }
}

evid::CombinationMode parse_mode(const Options& opts, std::size_t sequence_length) {
    if (sequence_length <= 1)
        return evid::CombinationMode::FixedMapping; // irrelevant for one observation
    if (opts.mode == "fixed")
        return evid::CombinationMode::FixedMapping;
    if (opts.mode == "per-observation")
        return evid::CombinationMode::PerObservation;
    if (opts.mode.empty())
        throw evid::ParseError(
            "a generalized model with an observation sequence needs --mode fixed|per-observation");
    throw evid::ParseError("unknown mode '" + opts.mode + "'");
}

evid::WeightSet model_weight_set(const evid::GeneralizedEvidenceSpace& space,
                                 const std::vector<std::string>& obs, const Options& opts) {
    if (obs.size() == 1)
        return evid::generalized_weights(space, obs.front());
    return evid::generalized_sequence_weights(space, obs, parse_mode(opts, obs.size()));
}

int cmd_weights(const Options& opts) {
    evid::Model model = evid::load_model(opts.model_path);
    std::vector<std::string> obs = split_csv(opts.obs_csv);

    if (!model.is_generalized()) {
        evid::EvidenceSpace space = model.evidence_space();
        evid::Dist weights = obs.size() == 1 ? evid::weight_of_evidence(space, obs.front())
                                             : evid::sequence_weight(space, obs);
        if (opts.format == "json") {
            json doc;
            doc["command"] = "weights";
            doc["observations"] = obs;
            json values = json::object();
            for (std::size_t i = 0; i < weights.size(); ++i)
                values[weights.labels()[i]] = render(weights.mass_at(i), opts);
            doc["weights"] = std::move(values);
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"observation"};
        header.insert(header.end(), space.hypotheses().begin(), space.hypotheses().end());
        rows.push_back(std::move(header));
        std::vector<std::string> row{sequence_display(obs)};
        for (std::size_t i = 0; i < weights.size(); ++i)
            row.push_back(render(weights.mass_at(i), opts));
        rows.push_back(std::move(row));
        print_table(rows);
        return 0;
    }

    evid::GeneralizedEvidenceSpace space = model.generalized_space();
    evid::WeightSet weights = model_weight_set(space, obs, opts);

    if (opts.format == "json") {
        json doc;
        doc["command"] = "weights";
        doc["observations"] = obs;
        if (obs.size() > 1)
            doc["mode"] = opts.mode;
        doc["weights"] = json::array();
        for (const auto& tw : weights.tagged()) {
            json entry;
            entry["mapping"] = tag_json(tw.tags);
            json values = json::object();
            for (std::size_t i = 0; i < tw.weight.size(); ++i)
                values[tw.weight.labels()[i]] = render(tw.weight.mass_at(i), opts);
            entry["values"] = std::move(values);
            doc["weights"].push_back(std::move(entry));
        }
        json bounds = json::object();
        for (const auto& h : space.hypotheses()) {
            auto [lo, hi] = weights.bounds(h);
            bounds[h] = {{"lower", render(lo, opts)}, {"upper", render(hi, opts)}};
        }
        doc["bounds"] = std::move(bounds);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"mapping"};
    header.insert(header.end(), space.hypotheses().begin(), space.hypotheses().end());
    rows.push_back(std::move(header));
    for (const auto& tw : weights.tagged()) {
        std::vector<std::string> row{tag_display(tw.tags)};
        for (std::size_t i = 0; i < tw.weight.size(); ++i)
            row.push_back(render(tw.weight.mass_at(i), opts));
        rows.push_back(std::move(row));
    }
    print_table(rows);
    std::cout << "\n";
    std::vector<std::vector<std::string>> bounds{{"hypothesis", "lower", "upper"}};
    for (const auto& h : space.hypotheses()) {
        auto [lo, hi] = weights.bounds(h);
        bounds.push_back({h, render(lo, opts), render(hi, opts)});
    }
    print_table(bounds);
    return 0;
}

int cmd_posterior(const Options& opts) {
    evid::Model model = evid::load_model(opts.model_path);
    std::vector<std::string> obs = split_csv(opts.obs_csv);
    evid::Dist prior = !opts.prior_spec.empty()
                           ? evid::parse_prior_spec(opts.prior_spec, model.hypotheses)
                           : (model.prior ? *model.prior
                                          : throw evid::ParseError(
                                                "no prior given: pass --prior or add one to "
                                                "the model file"));

    if (!model.is_generalized()) {
        evid::EvidenceSpace space = model.evidence_space();
        evid::Dist weights = obs.size() == 1 ? evid::weight_of_evidence(space, obs.front())
                                             : evid::sequence_weight(space, obs);
        evid::Dist post = evid::dempster_combine(prior, weights);
        if (opts.format == "json") {
            json doc;
            doc["command"] = "posterior";
            doc["observations"] = obs;
            json values = json::object();
            for (std::size_t i = 0; i < post.size(); ++i)
                values[post.labels()[i]] = render(post.mass_at(i), opts);
            doc["posterior"] = std::move(values);
            std::cout << doc.dump(2) << "\n";
            return 0;
        }
        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"observation"};
        header.insert(header.end(), space.hypotheses().begin(), space.hypotheses().end());
        rows.push_back(std::move(header));
        std::vector<std::string> row{sequence_display(obs)};
        for (std::size_t i = 0; i < post.size(); ++i)
            row.push_back(render(post.mass_at(i), opts));
        rows.push_back(std::move(row));
        print_table(rows);
        return 0;
    }

    evid::GeneralizedEvidenceSpace space = model.generalized_space();
    evid::WeightSet weights = model_weight_set(space, obs, opts);
    std::vector<evid::TaggedWeight> posteriors;
    for (const auto& tw : weights.tagged()) {
        try {
            posteriors.push_back({tw.tags, evid::dempster_combine(prior, tw.weight)});
        } catch (const evid::TotalConflict&) {
            throw evid::TotalConflict("total conflict between the prior and mapping " +
                                      tag_display(tw.tags));
        }
    }
    evid::WeightSet posterior_set{std::move(posteriors)};

    // the bound formula applies to single observations on uncorrelated models
    bool with_formula = obs.size() == 1 && evid::is_uncorrelated(space);

    if (opts.format == "json") {
        json doc;
        doc["command"] = "posterior";
        doc["observations"] = obs;
        if (obs.size() > 1)
            doc["mode"] = opts.mode;
        doc["posteriors"] = json::array();
        for (const auto& tw : posterior_set.tagged()) {
            json entry;
            entry["mapping"] = tag_json(tw.tags);
            json values = json::object();
            for (std::size_t i = 0; i < tw.weight.size(); ++i)
                values[tw.weight.labels()[i]] = render(tw.weight.mass_at(i), opts);
            entry["values"] = std::move(values);
            doc["posteriors"].push_back(std::move(entry));
        }
        json bounds = json::object();
        for (const auto& h : space.hypotheses()) {
            auto [lo, hi] = posterior_set.bounds(h);
            json entry = {{"lower", render(lo, opts)}, {"upper", render(hi, opts)}};
            if (with_formula) {
                auto [flo, fhi] =
                    evid::posterior_bounds_formula(space, prior, obs.front(), h);
                entry["formula_lower"] = render(flo, opts);
                entry["formula_upper"] = render(fhi, opts);
            }
            bounds[h] = std::move(entry);
        }
        doc["bounds"] = std::move(bounds);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"mapping"};
    header.insert(header.end(), space.hypotheses().begin(), space.hypotheses().end());
    rows.push_back(std::move(header));
    for (const auto& tw : posterior_set.tagged()) {
        std::vector<std::string> row{tag_display(tw.tags)};
        for (std::size_t i = 0; i < tw.weight.size(); ++i)
            row.push_back(render(tw.weight.mass_at(i), opts));
        rows.push_back(std::move(row));
    }
    print_table(rows);
    std::cout << "\n";
    std::vector<std::vector<std::string>> bounds;
    if (with_formula)
        bounds.push_back({"hypothesis", "lower", "upper", "formula_lower", "formula_upper"});
    else
        bounds.push_back({"hypothesis", "lower", "upper"});
    for (const auto& h : space.hypotheses()) {
        auto [lo, hi] = posterior_set.bounds(h);
        std::vector<std::string> row{h, render(lo, opts), render(hi, opts)};
        if (with_formula) {
            auto [flo, fhi] = evid::posterior_bounds_formula(space, prior, obs.front(), h);
            row.push_back(render(flo, opts));
            row.push_back(render(fhi, opts));
        }
        bounds.push_back(std::move(row));
    }
    print_table(bounds);
    return 0;
}

int cmd_analyze(const Options& opts) {
    evid::Model model = evid::load_model(opts.model_path);
    evid::GeneralizedEvidenceSpace space = model.generalized_space();
    evid::FactorResult result = evid::factor_uncorrelated(space);

    auto dist_json = [&](const evid::Dist& d) {
        json row = json::object();
        for (std::size_t i = 0; i < d.size(); ++i)
            row[d.labels()[i]] = render(d.mass_at(i), opts);
        return row;
    };
    auto dist_display = [&](const evid::Dist& d) {
        std::string out;
        for (std::size_t i = 0; i < d.size(); ++i)
            out += (i ? " " : "") + d.labels()[i] + "=" + render(d.mass_at(i), opts);
        return out;
    };

    if (const auto* correlated = std::get_if<evid::Correlated>(&result)) {
        if (opts.format == "json") {
            json doc;
            doc["command"] = "analyze";
            doc["status"] = "correlated";
            json witness = json::object();
            for (const auto& [h, mu] : correlated->witness)
                witness[h] = dist_json(mu);
            doc["witness"] = std::move(witness);
            std::cout << doc.dump(2) << "\n";
        } else {
            std::cout << "status: correlated\n";
            std::cout << "missing combination:\n";
            for (const auto& [h, mu] : correlated->witness)
                std::cout << "  " << h << ": " << dist_display(mu) << "\n";
        }
        return 0;
    }

    const auto& factorization = std::get<evid::Factorization>(result);
    evid::Refinement refinement = evid::build_refinement(factorization);
    evid::Model refined_model{refinement.refined().hypotheses(),
                              refinement.refined().observations(),
                              {refinement.refined().mapping()},
                              std::nullopt};

    if (opts.format == "json") {
        json doc;
        doc["command"] = "analyze";
        doc["status"] = "uncorrelated";
        json fact = json::object();
        for (const auto& h : factorization.hypotheses) {
            json set = json::array();
            for (const auto& mu : factorization.per_hypothesis.at(h))
                set.push_back(dist_json(mu));
            fact[h] = std::move(set);
        }
        doc["factorization"] = std::move(fact);
        json ref;
        ref["surjection"] = refinement.surjection();
        ref["model"] = evid::model_to_json(refined_model);
        doc["refinement"] = std::move(ref);
        std::cout << doc.dump(2) << "\n";
        return 0;
    }

    std::cout << "status: uncorrelated\n";
    for (const auto& h : factorization.hypotheses) {
        std::cout << "P[" << h << "]:\n";
        for (const auto& mu : factorization.per_hypothesis.at(h))
            std::cout << "  " << dist_display(mu) << "\n";
    }
    std::cout << "refinement:\n";
    for (const auto& [h_prime, h] : refinement.surjection())
        std::cout << "  " << h_prime << " -> " << h << "\n";
    std::cout << "refined likelihoods:\n";
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> header{"observation"};
    header.insert(header.end(), refinement.refined().hypotheses().begin(),
                  refinement.refined().hypotheses().end());
    rows.push_back(std::move(header));
    for (const auto& ob : refinement.refined().observations()) {
        std::vector<std::string> row{ob};
        for (const auto& h_prime : refinement.refined().hypotheses())
            row.push_back(render(refinement.refined().likelihood(h_prime).mass(ob), opts));
        rows.push_back(std::move(row));
    }
    print_table(rows);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weights of evidence and posterior bounds for hypotheses with "
                 "uncertain likelihood functions"};
    app.require_subcommand(1);

    Options opts;
    auto add_common = [&](CLI::App* cmd, bool needs_obs) {
        cmd->add_option("--model", opts.model_path, "model file (JSON)")->required();
        if (needs_obs)
            cmd->add_option("--obs", opts.obs_csv,
                            "observation, or comma-separated observation sequence")
                ->required();
        cmd->add_option("--mode", opts.mode, "fixed|per-observation (generalized sequences)");
        cmd->add_option("--format", opts.format, "table|json")
            ->check(CLI::IsMember({"table", "json"}));
        cmd->add_option("--decimal", opts.decimal, "render rationals with N decimal digits")
            ->check(CLI::NonNegativeNumber);
    };

    CLI::App* weights = app.add_subcommand("weights", "weight of evidence of an observation");
    add_common(weights, true);
    CLI::App* posterior = app.add_subcommand("posterior", "posterior after an observation");
    add_common(posterior, true);
    posterior->add_option("--prior", opts.prior_spec, "prior as \"h=p/q,h=p/q,...\"");
    CLI::App* analyze =
        app.add_subcommand("analyze", "correlation analysis and refinement construction");
    add_common(analyze, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitUsage;
    }

    try {
        if (weights->parsed())
            return cmd_weights(opts);
        if (posterior->parsed())
            return cmd_posterior(opts);
        return cmd_analyze(opts);
    } catch (const evid::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const evid::UnknownLabel& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const evid::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
