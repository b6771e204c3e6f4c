#pragma once

// Random inputs for the property suites. Every generator takes the engine
// by reference so a suite is reproducible from its seed.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "vval/belief.hpp"
#include "vval/formula.hpp"
#include "vval/model.hpp"
#include "vval/probability.hpp"

namespace vval::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi)
{
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline bool coin(Rng& rng, double p = 0.5)
{
    return std::bernoulli_distribution(p)(rng);
}

inline StateSpace random_space(std::size_t n)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back("s" + std::to_string(i));
    }
    return StateSpace(std::move(names));
}

inline StateSet random_set(Rng& rng, std::size_t n)
{
    return StateSet::from_bits(n, rng());
}

inline StateSet random_nonempty_set(Rng& rng, std::size_t n)
{
    StateSet s = random_set(rng, n);
    while (s.empty()) {
        s = random_set(rng, n);
    }
    return s;
}

inline VariableValuation random_valuation(Rng& rng, std::size_t n)
{
    std::vector<StateSet> images;
    for (std::size_t x = 0; x < n; ++x) {
        images.push_back(random_set(rng, n));
    }
    return VariableValuation(std::move(images));
}

inline const std::vector<std::string>& atom_names()
{
    static const std::vector<std::string> names{"p", "q", "r"};
    return names;
}

/// Model over `n` states with atoms p, q, r (first `atoms` of them). When
/// `constant` is set every atom gets a constant valuation.
inline Model random_model(Rng& rng, std::size_t n, std::size_t atoms, bool constant = false)
{
    std::map<std::string, VariableValuation> bound;
    for (std::size_t i = 0; i < atoms; ++i) {
        bound.emplace(atom_names()[i], constant ? VariableValuation::constant(n, random_set(rng, n))
                                                : random_valuation(rng, n));
    }
    return Model(random_space(n), std::move(bound));
}

/// Like random_model, but every atom is replaced by its coherence closure.
inline Model random_coherent_model(Rng& rng, std::size_t n, std::size_t atoms)
{
    Model m = random_model(rng, n, atoms);
    for (std::size_t i = 0; i < atoms; ++i) {
        m = m.with_atom(atom_names()[i], m.valuation(atom_names()[i]).closure());
    }
    return m;
}

/// A `=>`-free formula over the first `atoms` atom names with depth at most
/// `max_depth`.
inline Formula random_plain_formula(Rng& rng, std::size_t atoms, std::size_t max_depth)
{
    if (max_depth == 0 || coin(rng, 0.25)) {
        return Formula::atom(atom_names()[uniform(rng, 0, atoms - 1)]);
    }
    switch (uniform(rng, 0, 3)) {
    case 0:
        return Formula::negation(random_plain_formula(rng, atoms, max_depth - 1));
    case 1:
        return Formula::conjunction(random_plain_formula(rng, atoms, max_depth - 1),
                                    random_plain_formula(rng, atoms, max_depth - 1));
    case 2:
        return Formula::disjunction(random_plain_formula(rng, atoms, max_depth - 1),
                                    random_plain_formula(rng, atoms, max_depth - 1));
    default:
        return Formula::material(random_plain_formula(rng, atoms, max_depth - 1),
                                 random_plain_formula(rng, atoms, max_depth - 1));
    }
}

/// Any formula, `=>` allowed at every level.
inline Formula random_extended_formula(Rng& rng, std::size_t atoms, std::size_t max_depth)
{
    if (max_depth == 0 || coin(rng, 0.2)) {
        return Formula::atom(atom_names()[uniform(rng, 0, atoms - 1)]);
    }
    auto sub = [&] { return random_extended_formula(rng, atoms, max_depth - 1); };
    switch (uniform(rng, 0, 4)) {
    case 0:
        return Formula::negation(sub());
    case 1:
        return Formula::conjunction(sub(), sub());
    case 2:
        return Formula::disjunction(sub(), sub());
    case 3:
        return Formula::material(sub(), sub());
    default:
        return Formula::meaning(sub(), sub());
    }
}

/// A formula admissible in strict mode: `=>`-free, or a single outermost `=>`.
inline Formula random_strict_formula(Rng& rng, std::size_t atoms, std::size_t max_depth)
{
    if (max_depth > 0 && coin(rng, 0.3)) {
        return Formula::meaning(random_plain_formula(rng, atoms, max_depth - 1),
                                random_plain_formula(rng, atoms, max_depth - 1));
    }
    return random_plain_formula(rng, atoms, max_depth);
}

/// Small-integer weights, some of them zero, normalized to sum to one.
inline ProbabilityMeasure random_measure(Rng& rng, std::size_t n)
{
    std::vector<std::int64_t> raw(n);
    std::int64_t total = 0;
    while (total == 0) {
        total = 0;
        for (auto& w : raw) {
            w = coin(rng, 0.2) ? 0 : static_cast<std::int64_t>(uniform(rng, 1, 9));
            total += w;
        }
    }
    std::vector<Rational> weights;
    for (auto w : raw) {
        weights.emplace_back(w, total);
    }
    return ProbabilityMeasure(std::move(weights));
}

inline MassFunction random_mass(Rng& rng, std::size_t n, std::size_t max_focal = 4)
{
    const std::size_t k = uniform(rng, 1, max_focal);
    std::vector<std::pair<StateSet, std::int64_t>> raw;
    std::int64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const auto w = static_cast<std::int64_t>(uniform(rng, 1, 9));
        raw.emplace_back(random_nonempty_set(rng, n), w);
        total += w;
    }
    MassFunction::Entries entries;
    for (auto& [set, w] : raw) {
        entries[set] += Rational(w, total);
    }
    return MassFunction(n, std::move(entries));
}

} // namespace vval::testing
