#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vval/formula.hpp"
#include "vval/model.hpp"
#include "vval/probability.hpp"
#include "vval/rational.hpp"

namespace vval {

/// Sparse mass function over the subsets of a state space. Only nonzero
/// masses are stored, never on the empty set, and they sum to exactly one.
/// Entries iterate in increasing encoded-key order.
class MassFunction {
public:
    using Entries = std::map<StateSet, Rational>;

    /// Zero entries are dropped. Throws ValidationError (BadMass) for a mass
    /// on the empty set, a negative mass, mixed universes, or a total other
    /// than one.
    MassFunction(std::size_t universe, Entries entries);

    /// All mass on the whole space.
    static MassFunction vacuous(std::size_t universe);

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] const Entries& entries() const noexcept { return entries_; }
    /// Mass of exactly `set`; zero when not a focal set.
    [[nodiscard]] Rational mass(const StateSet& set) const;

    friend bool operator==(const MassFunction&, const MassFunction&) = default;

private:
    std::size_t universe_;
    Entries entries_;
};

/// Evidentially supported belief in `event` given evidence `evidence`: the
/// probability, conditional on the evidence being true, that its
/// interpretation entails `event`:
///
///     prior({x : evidence(x) <= event} | truth_set(evidence))
///
/// Throws UndefinedError when the evidence has probability zero and
/// ModeError when `evidence` contains `=>` in strict mode.
[[nodiscard]] Rational bel(const Model& model, const ProbabilityMeasure& prior, const Formula& evidence,
                           const StateSet& event, Mode mode = Mode::Strict);

/// Mass of each set A is the conditional probability, given the evidence is
/// true, that A is its interpretation.
[[nodiscard]] MassFunction mass_from_evidence(const Model& model, const ProbabilityMeasure& prior,
                                              const Formula& evidence, Mode mode = Mode::Strict);

/// Total mass of the focal sets contained in `event`.
[[nodiscard]] Rational bel_from_mass(const MassFunction& m, const StateSet& event);

/// Dempster's rule: products of masses of every intersecting pair, pooled
/// on the intersection and renormalized by the non-conflicting total.
/// Throws UndefinedError (TotalConflict) when every pair is disjoint.
[[nodiscard]] MassFunction dempster_combine(const MassFunction& m1, const MassFunction& m2);

/// Combination that only intersects interpretations indexed by the same
/// state: the mass function of `first & second`.
[[nodiscard]] MassFunction pointwise_combine(const Model& model, const ProbabilityMeasure& prior,
                                             const Formula& first, const Formula& second,
                                             Mode mode = Mode::Strict);

/// One term of the pointwise conditioning sum.
struct PointwiseTerm {
    StateSet interpretation;
    /// prior(evidence^-1(interpretation)).
    Rational weight;
    /// prior(truth_set(of) | interpretation); empty when skipped.
    std::optional<Rational> conditional;
};

struct PointwiseConditioning {
    Rational value;
    /// Sum of the weights of the terms that were not skipped; may be < 1.
    Rational surviving_weight;
    std::vector<PointwiseTerm> terms;
};

/// EXPLORATORY. Averages prior(truth_set(of) | E) over the possible
/// interpretations E of `evidence`, weighted by prior(evidence^-1(E)).
/// Terms whose E is empty or has prior probability zero are skipped (they
/// contribute zero); no renormalization is applied. Throws UndefinedError
/// (NoSurvivingTerm) when every term is skipped.
[[nodiscard]] PointwiseConditioning pointwise_condition_terms(const Model& model, const ProbabilityMeasure& prior,
                                                              const Formula& of, const Formula& evidence,
                                                              Mode mode = Mode::Strict);

[[nodiscard]] Rational pointwise_condition(const Model& model, const ProbabilityMeasure& prior, const Formula& of,
                                           const Formula& evidence, Mode mode = Mode::Strict);

} // namespace vval
