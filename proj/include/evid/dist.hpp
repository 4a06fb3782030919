#pragma once

#include "evid/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace evid {

/// Probability distribution over a finite label set. Labels are kept in
/// lexicographic order and masses sum to exactly 1.
class Dist {
public:
    /// Validates and builds a distribution. Throws DuplicateLabel,
    /// NegativeMass, or NonNormalized.
    static Dist make(std::vector<std::string> labels, std::vector<Rational> masses);

    static Dist uniform(std::vector<std::string> labels);
    static Dist point(std::vector<std::string> labels, const std::string& at);

    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<Rational>& masses() const { return masses_; }
    std::size_t size() const { return labels_.size(); }

    /// Index of a label; throws UnknownLabel.
    std::size_t index_of(std::string_view label) const;
    const Rational& mass(std::string_view label) const { return masses_[index_of(label)]; }
    const Rational& mass_at(std::size_t i) const { return masses_[i]; }

    /// Total mass on a subset of labels; unknown labels throw.
    Rational mass_on(const std::vector<std::string>& subset) const;

    bool same_support(const Dist& other) const { return labels_ == other.labels_; }

    bool operator==(const Dist& other) const = default;
    /// Total order: support first, then mass vector. Used for deterministic
    /// set views.
    bool operator<(const Dist& other) const;

private:
    Dist() = default;
    std::vector<std::string> labels_;
    std::vector<Rational> masses_;
};

/// Dempster's rule of combination for point functions: pointwise product,
/// renormalized. Throws TotalConflict when the normalizer vanishes and
/// MismatchedSupport when the supports differ.
Dist dempster_combine(const Dist& a, const Dist& b);

} // namespace evid
