#include "vval/belief.hpp"

#include "vval/errors.hpp"
#include "vval/semantics.hpp"

namespace vval {

MassFunction::MassFunction(std::size_t universe, Entries entries) : universe_(universe)
{
    Rational total;
    for (auto& [set, m] : entries) {
        if (set.universe() != universe_) {
            throw ValidationError(ValidationError::Kind::BadMass, "focal set over a different state space");
        }
        if (m.sign() < 0) {
            throw ValidationError(ValidationError::Kind::BadMass, "negative mass " + m.str());
        }
        if (m.is_zero()) {
            continue;
        }
        if (set.empty()) {
            throw ValidationError(ValidationError::Kind::BadMass, "nonzero mass on the empty set");
        }
        total += m;
        entries_.emplace(set, std::move(m));
    }
    if (total != Rational(1)) {
        throw ValidationError(ValidationError::Kind::BadMass, "masses sum to " + total.str() + ", not 1");
    }
}

MassFunction MassFunction::vacuous(std::size_t universe)
{
    return MassFunction(universe, {{StateSet::full(universe), Rational(1)}});
}

Rational MassFunction::mass(const StateSet& set) const
{
    if (auto it = entries_.find(set); it != entries_.end()) {
        return it->second;
    }
    return {};
}

namespace {

VariableValuation evidence_valuation(const Model& model, const Formula& evidence, Mode mode)
{
    if (mode == Mode::Strict && evidence.contains_meaning_imp()) {
        throw ModeError("evidence '" + format(evidence) + "' may not contain '=>' in strict mode");
    }
    return interpret_all(model, evidence, mode);
}

Rational evidence_probability(const ProbabilityMeasure& prior, const StateSet& truth)
{
    Rational p = probability(prior, truth);
    if (p.is_zero()) {
        throw UndefinedError(UndefinedError::Kind::Conditioning,
                             "the evidence is true only on states of probability zero");
    }
    return p;
}

} // namespace

Rational bel(const Model& model, const ProbabilityMeasure& prior, const Formula& evidence, const StateSet& event,
             Mode mode)
{
    const VariableValuation v = evidence_valuation(model, evidence, mode);
    const StateSet truth = v.truth_set();
    const Rational norm = evidence_probability(prior, truth);

    StateSet entails = model.space().none();
    for (std::size_t x = 0; x < v.size(); ++x) {
        if (v.at(x).subset_of(event)) {
            entails.insert(x);
        }
    }
    return probability(prior, entails & truth) / norm;
}

MassFunction mass_from_evidence(const Model& model, const ProbabilityMeasure& prior, const Formula& evidence,
                                Mode mode)
{
    const VariableValuation v = evidence_valuation(model, evidence, mode);
    const StateSet truth = v.truth_set();
    const Rational norm = evidence_probability(prior, truth);

    MassFunction::Entries entries;
    for (std::size_t x : truth.members()) {
        if (!prior.weight(x).is_zero()) {
            entries[v.at(x)] += prior.weight(x) / norm;
        }
    }
    return MassFunction(model.space().size(), std::move(entries));
}

Rational bel_from_mass(const MassFunction& m, const StateSet& event)
{
    Rational total;
    for (const auto& [set, mass] : m.entries()) {
        if (set.subset_of(event)) {
            total += mass;
        }
    }
    return total;
}

MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2)
{
    if (m1.universe() != m2.universe()) {
        throw ValidationError(ValidationError::Kind::BadMass, "mass functions over different state spaces");
    }
    MassFunction::Entries pooled;
    Rational agreement;
    for (const auto& [a, ma] : m1.entries()) {
        for (const auto& [b, mb] : m2.entries()) {
            StateSet meet = a & b;
            if (meet.empty()) {
                continue;
            }
            Rational product = ma * mb;
            agreement += product;
            pooled[std::move(meet)] += product;
        }
    }
    if (agreement.is_zero()) {
        throw UndefinedError(UndefinedError::Kind::TotalConflict,
                             "Dempster combination is undefined: the mass functions are in total conflict");
    }
    for (auto& [set, mass] : pooled) {
        mass /= agreement;
    }
    return MassFunction(m1.universe(), std::move(pooled));
}

MassFunction pointwise_combine(const Model& model, const ProbabilityMeasure& prior, const Formula& first,
                               const Formula& second, Mode mode)
{
    return mass_from_evidence(model, prior, Formula::conjunction(first, second), mode);
}

PointwiseConditioning pointwise_condition_terms(const Model& model, const ProbabilityMeasure& prior,
                                                const Formula& of, const Formula& evidence, Mode mode)
{
    const VariableValuation v = evidence_valuation(model, evidence, mode);
    const StateSet target = truth_set(model, of, mode);

    std::map<StateSet, Rational> weights;
    for (std::size_t x = 0; x < v.size(); ++x) {
        weights[v.at(x)] += prior.weight(x);
    }

    PointwiseConditioning out;
    bool survived = false;
    for (auto& [interp, weight] : weights) {
        PointwiseTerm term{interp, weight, std::nullopt};
        const Rational p = probability(prior, interp);
        if (!interp.empty() && !p.is_zero()) {
            term.conditional = probability(prior, target & interp) / p;
            out.value += *term.conditional * weight;
            out.surviving_weight += weight;
            survived = true;
        }
        out.terms.push_back(std::move(term));
    }
    if (!survived) {
        throw UndefinedError(UndefinedError::Kind::NoSurvivingTerm,
                             "pointwise conditioning is undefined: every interpretation of the evidence has "
                             "probability zero");
    }
    return out;
}

Rational pointwise_condition(const Model& model, const ProbabilityMeasure& prior, const Formula& of,
                             const Formula& evidence, Mode mode)
{
    return pointwise_condition_terms(model, prior, of, evidence, mode).value;
}

} // namespace vval
