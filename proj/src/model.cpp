#include "vval/model.hpp"

#include <algorithm>

#include "vval/errors.hpp"

namespace vval {

StateSpace::StateSpace(std::vector<std::string> names) : names_(std::move(names))
{
    if (names_.empty()) {
        throw ValidationError(ValidationError::Kind::Malformed, "state space must contain at least one state");
    }
    index_.reserve(names_.size());
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) {
            throw ValidationError(ValidationError::Kind::Malformed, "state names must be nonempty");
        }
        if (!index_.emplace(names_[i], i).second) {
            throw ValidationError(ValidationError::Kind::Malformed, "duplicate state '" + names_[i] + "'");
        }
    }
}

std::optional<std::size_t> StateSpace::find(const std::string& name) const
{
    if (auto it = index_.find(name); it != index_.end()) {
        return it->second;
    }
    return std::nullopt;
}

std::size_t StateSpace::index_of(const std::string& name) const
{
    if (auto i = find(name)) {
        return *i;
    }
    throw LookupError("unknown state '" + name + "'");
}

StateSet StateSpace::set_of(std::span<const std::string> names) const
{
    StateSet s = none();
    for (const auto& n : names) {
        s.insert(index_of(n));
    }
    return s;
}

StateSet StateSpace::set_of(std::initializer_list<std::string> names) const
{
    return set_of(std::span<const std::string>(names.begin(), names.size()));
}

VariableValuation::VariableValuation(std::vector<StateSet> images) : images_(std::move(images))
{
    for (const auto& img : images_) {
        if (img.universe() != images_.size()) {
            throw ValidationError(ValidationError::Kind::Malformed,
                                  "valuation image over a universe of " + std::to_string(img.universe())
                                      + " states, expected " + std::to_string(images_.size()));
        }
    }
}

VariableValuation VariableValuation::constant(std::size_t universe, const StateSet& value)
{
    return VariableValuation(std::vector<StateSet>(universe, value));
}

StateSet VariableValuation::truth_set() const
{
    StateSet out(images_.size());
    for (std::size_t x = 0; x < images_.size(); ++x) {
        if (images_[x].contains(x)) {
            out.insert(x);
        }
    }
    return out;
}

bool VariableValuation::is_coherent() const
{
    const StateSet truth = truth_set();
    return std::all_of(images_.begin(), images_.end(), [&](const StateSet& img) { return img.subset_of(truth); });
}

VariableValuation VariableValuation::closure() const
{
    const StateSet truth = truth_set();
    std::vector<StateSet> out;
    out.reserve(images_.size());
    for (const auto& img : images_) {
        out.push_back(img & truth);
    }
    return VariableValuation(std::move(out));
}

bool VariableValuation::is_constant() const
{
    return std::adjacent_find(images_.begin(), images_.end(), std::not_equal_to<>{}) == images_.end();
}

Model::Model(StateSpace space, std::map<std::string, VariableValuation> atoms)
    : space_(std::move(space)), atoms_(std::move(atoms))
{
    for (const auto& [name, v] : atoms_) {
        if (name.empty()) {
            throw ValidationError(ValidationError::Kind::Malformed, "atom names must be nonempty");
        }
        if (v.size() != space_.size()) {
            throw ValidationError(ValidationError::Kind::Malformed,
                                  "atom '" + name + "' is not a valuation over this state space");
        }
    }
}

const VariableValuation& Model::valuation(const std::string& atom) const
{
    if (auto it = atoms_.find(atom); it != atoms_.end()) {
        return it->second;
    }
    throw LookupError("unknown atom '" + atom + "'");
}

Model Model::with_atom(const std::string& atom, VariableValuation v) const
{
    auto atoms = atoms_;
    atoms.insert_or_assign(atom, std::move(v));
    return Model(space_, std::move(atoms));
}

StateSet truth_set_atom(const Model& model, const std::string& atom)
{
    return model.valuation(atom).truth_set();
}

bool is_coherent(const Model& model, const std::string& atom)
{
    return model.valuation(atom).is_coherent();
}

VariableValuation coherence_closure(const Model& model, const std::string& atom)
{
    return model.valuation(atom).closure();
}

VariableValuation lift_event(const StateSpace& space, const StateSet& event)
{
    if (event.universe() != space.size()) {
        throw ValidationError(ValidationError::Kind::Malformed, "event is not over this state space");
    }
    return VariableValuation::constant(space.size(), event);
}

} // namespace vval
