#pragma once

#include <map>
#include <string>
#include <vector>

#include "vval/formula.hpp"
#include "vval/model.hpp"
#include "vval/rational.hpp"

namespace vval {

/// A prior over the states of one space: nonnegative exact weights summing
/// to exactly one.
class ProbabilityMeasure {
public:
    /// Weights in canonical state order. Throws ValidationError
    /// (NegativeWeight, BadSum) when they do not form a distribution.
    explicit ProbabilityMeasure(std::vector<Rational> weights);

    [[nodiscard]] std::size_t size() const noexcept { return weights_.size(); }
    [[nodiscard]] const Rational& weight(std::size_t state) const { return weights_.at(state); }
    [[nodiscard]] const std::vector<Rational>& weights() const noexcept { return weights_; }

    friend bool operator==(const ProbabilityMeasure&, const ProbabilityMeasure&) = default;

private:
    std::vector<Rational> weights_;
};

/// Builds a measure from named weights. Every state needs a weight
/// (MissingState) and every name must be declared (UndeclaredState).
[[nodiscard]] ProbabilityMeasure measure_from_weights(const StateSpace& space,
                                                      const std::map<std::string, Rational>& weights);

[[nodiscard]] Rational probability(const ProbabilityMeasure& prior, const StateSet& event);

/// x -> prior(x) / prior(given) on `given`, zero elsewhere. Throws
/// UndefinedError when prior(given) is zero.
[[nodiscard]] ProbabilityMeasure condition(const ProbabilityMeasure& prior, const StateSet& given);

/// prior(event & given) / prior(given), with the same zero-probability rule.
[[nodiscard]] Rational conditional_probability(const ProbabilityMeasure& prior, const StateSet& event,
                                               const StateSet& given);

/// Degree of belief in `of`: prior(truth_set(of)).
[[nodiscard]] Rational degree(const Model& model, const ProbabilityMeasure& prior, const Formula& of,
                              Mode mode = Mode::Strict);

/// Degree of belief in `of` given `given`: prior(truth_set(of) | truth_set(given)).
[[nodiscard]] Rational degree_given(const Model& model, const ProbabilityMeasure& prior, const Formula& of,
                                    const Formula& given, Mode mode = Mode::Strict);

} // namespace vval
