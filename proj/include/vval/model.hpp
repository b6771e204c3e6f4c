#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "vval/state_set.hpp"

namespace vval {

/// Finite, nonempty, ordered set of named states. Declaration order is the
/// canonical order used for indices, printing and serialization.
class StateSpace {
public:
    explicit StateSpace(std::vector<std::string> names);

    [[nodiscard]] std::size_t size() const noexcept { return names_.size(); }
    [[nodiscard]] const std::string& name(std::size_t index) const { return names_.at(index); }
    [[nodiscard]] const std::vector<std::string>& names() const noexcept { return names_; }

    [[nodiscard]] std::optional<std::size_t> find(const std::string& name) const;
    /// Throws LookupError for an undeclared name.
    [[nodiscard]] std::size_t index_of(const std::string& name) const;

    [[nodiscard]] StateSet none() const { return StateSet(size()); }
    [[nodiscard]] StateSet all() const { return StateSet::full(size()); }
    [[nodiscard]] StateSet set_of(std::span<const std::string> names) const;
    [[nodiscard]] StateSet set_of(std::initializer_list<std::string> names) const;

    friend bool operator==(const StateSpace& lhs, const StateSpace& rhs) { return lhs.names_ == rhs.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, std::size_t> index_;
};

/// The interpretation function of a proposition: one state-set per state,
/// the proposition's correct interpretation at that state.
class VariableValuation {
public:
    /// `images[i]` is the interpretation at state i; every image must be over
    /// a universe of images.size() states.
    explicit VariableValuation(std::vector<StateSet> images);

    static VariableValuation constant(std::size_t universe, const StateSet& value);

    [[nodiscard]] std::size_t size() const noexcept { return images_.size(); }
    [[nodiscard]] const StateSet& at(std::size_t state) const { return images_.at(state); }
    [[nodiscard]] const std::vector<StateSet>& images() const noexcept { return images_; }

    /// States x with x in v(x).
    [[nodiscard]] StateSet truth_set() const;
    /// v(x) is a subset of the truth set at every x.
    [[nodiscard]] bool is_coherent() const;
    /// x -> v(x) & truth_set(); coherent, same truth set.
    [[nodiscard]] VariableValuation closure() const;
    [[nodiscard]] bool is_constant() const;

    friend bool operator==(const VariableValuation&, const VariableValuation&) = default;

private:
    std::vector<StateSet> images_;
};

/// A state space together with a valuation for each named atom.
class Model {
public:
    explicit Model(StateSpace space, std::map<std::string, VariableValuation> atoms = {});

    [[nodiscard]] const StateSpace& space() const noexcept { return space_; }
    [[nodiscard]] const std::map<std::string, VariableValuation>& atoms() const noexcept { return atoms_; }
    [[nodiscard]] bool has_atom(const std::string& name) const { return atoms_.contains(name); }
    /// Throws LookupError for an unknown atom.
    [[nodiscard]] const VariableValuation& valuation(const std::string& atom) const;

    /// Copy of this model with `atom` bound (or rebound) to `v`.
    [[nodiscard]] Model with_atom(const std::string& atom, VariableValuation v) const;

    friend bool operator==(const Model&, const Model&) = default;

private:
    StateSpace space_;
    std::map<std::string, VariableValuation> atoms_;
};

[[nodiscard]] StateSet truth_set_atom(const Model& model, const std::string& atom);
[[nodiscard]] bool is_coherent(const Model& model, const std::string& atom);
[[nodiscard]] VariableValuation coherence_closure(const Model& model, const std::string& atom);
/// The constant valuation x -> event.
[[nodiscard]] VariableValuation lift_event(const StateSpace& space, const StateSet& event);

} // namespace vval
