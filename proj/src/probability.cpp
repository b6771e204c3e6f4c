#include "vval/probability.hpp"

#include "vval/errors.hpp"
#include "vval/semantics.hpp"

namespace vval {

ProbabilityMeasure::ProbabilityMeasure(std::vector<Rational> weights) : weights_(std::move(weights))
{
    Rational total;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (weights_[i].sign() < 0) {
            throw ValidationError(ValidationError::Kind::NegativeWeight,
                                  "negative weight " + weights_[i].str() + " at state index " + std::to_string(i));
        }
        total += weights_[i];
    }
    if (total != Rational(1)) {
        throw ValidationError(ValidationError::Kind::BadSum, "weights sum to " + total.str() + ", not 1");
    }
}

ProbabilityMeasure measure_from_weights(const StateSpace& space, const std::map<std::string, Rational>& weights)
{
    for (const auto& [name, w] : weights) {
        if (!space.find(name)) {
            throw ValidationError(ValidationError::Kind::UndeclaredState, "weight for undeclared state '" + name + "'");
        }
    }
    std::vector<Rational> ordered;
    ordered.reserve(space.size());
    for (const auto& name : space.names()) {
        auto it = weights.find(name);
        if (it == weights.end()) {
            throw ValidationError(ValidationError::Kind::MissingState, "no weight for state '" + name + "'");
        }
        if (it->second.sign() < 0) {
            throw ValidationError(ValidationError::Kind::NegativeWeight,
                                  "negative weight " + it->second.str() + " for state '" + name + "'");
        }
        ordered.push_back(it->second);
    }
    return ProbabilityMeasure(std::move(ordered));
}

Rational probability(const ProbabilityMeasure& prior, const StateSet& event)
{
    if (event.universe() != prior.size()) {
        throw std::invalid_argument("event and measure are over different state spaces");
    }
    Rational total;
    for (std::size_t x : event.members()) {
        total += prior.weight(x);
    }
    return total;
}

namespace {

Rational require_positive(const ProbabilityMeasure& prior, const StateSet& given)
{
    Rational p = probability(prior, given);
    if (p.is_zero()) {
        throw UndefinedError(UndefinedError::Kind::Conditioning,
                             "conditioning is undefined: the conditioning event has probability zero");
    }
    return p;
}

} // namespace

ProbabilityMeasure condition(const ProbabilityMeasure& prior, const StateSet& given)
{
    const Rational norm = require_positive(prior, given);
    std::vector<Rational> out(prior.size());
    for (std::size_t x : given.members()) {
        out[x] = prior.weight(x) / norm;
    }
    return ProbabilityMeasure(std::move(out));
}

Rational conditional_probability(const ProbabilityMeasure& prior, const StateSet& event, const StateSet& given)
{
    const Rational norm = require_positive(prior, given);
    return probability(prior, event & given) / norm;
}

Rational degree(const Model& model, const ProbabilityMeasure& prior, const Formula& of, Mode mode)
{
    return probability(prior, truth_set(model, of, mode));
}

Rational degree_given(const Model& model, const ProbabilityMeasure& prior, const Formula& of, const Formula& given,
                      Mode mode)
{
    return conditional_probability(prior, truth_set(model, of, mode), truth_set(model, given, mode));
}

} // namespace vval
