#include "evid/dist.hpp"

#include "evid/errors.hpp"

#include <algorithm>
#include <numeric>

namespace evid {

Dist Dist::make(std::vector<std::string> labels, std::vector<Rational> masses) {
    if (labels.size() != masses.size())
        throw Error("label/mass lists differ in length");
    if (labels.empty())
        throw Error("empty support");

    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return labels[a] < labels[b]; });

    Dist d;
    d.labels_.reserve(labels.size());
    d.masses_.reserve(masses.size());
    Rational total = 0;
    for (std::size_t i : order) {
        if (!d.labels_.empty() && d.labels_.back() == labels[i])
            throw DuplicateLabel("duplicate label '" + labels[i] + "'");
        if (masses[i] < 0)
            throw NegativeMass("negative mass " + to_fraction_string(masses[i]) +
                               " for label '" + labels[i] + "'");
        total += masses[i];
        d.labels_.push_back(std::move(labels[i]));
        d.masses_.push_back(std::move(masses[i]));
    }
    if (total != 1)
        throw NonNormalized("masses sum to " + to_fraction_string(total) + ", expected 1");
    return d;
}

Dist Dist::uniform(std::vector<std::string> labels) {
    std::size_t n = labels.size();
    if (n == 0)
        throw Error("empty support");
    Rational share(1, static_cast<unsigned long>(n));
    return make(std::move(labels), std::vector<Rational>(n, share));
}

Dist Dist::point(std::vector<std::string> labels, const std::string& at) {
    std::vector<Rational> masses(labels.size(), Rational(0));
    auto it = std::find(labels.begin(), labels.end(), at);
    if (it == labels.end())
        throw UnknownLabel("label '" + at + "' not in support");
    masses[static_cast<std::size_t>(it - labels.begin())] = 1;
    return make(std::move(labels), std::move(masses));
}

std::size_t Dist::index_of(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label)
        throw UnknownLabel("label '" + std::string(label) + "' not in support");
    return static_cast<std::size_t>(it - labels_.begin());
}

Rational Dist::mass_on(const std::vector<std::string>& subset) const {
    Rational total = 0;
    for (const auto& label : subset)
        total += mass(label);
    return total;
}

bool Dist::operator<(const Dist& other) const {
    if (labels_ != other.labels_)
        return labels_ < other.labels_;
    for (std::size_t i = 0; i < masses_.size(); ++i) {
        if (masses_[i] != other.masses_[i])
            return masses_[i] < other.masses_[i];
    }
    return false;
}

Dist dempster_combine(const Dist& a, const Dist& b) {
    if (!a.same_support(b))
        throw MismatchedSupport("cannot combine distributions over different supports");
    std::vector<Rational> products(a.size());
    Rational normalizer = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        products[i] = a.mass_at(i) * b.mass_at(i);
        normalizer += products[i];
    }
    if (normalizer == 0)
        throw TotalConflict("total conflict: pointwise products all vanish");
    for (auto& p : products)
        p /= normalizer;
    return Dist::make(a.labels(), std::move(products));
}

} // namespace evid
