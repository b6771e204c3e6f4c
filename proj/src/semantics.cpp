#include "vval/semantics.hpp"

#include "vval/errors.hpp"

namespace vval {

namespace {

StateSet eval(const Model& model, const Formula& f, std::size_t x, Mode mode);

StateSet entailment_set(const Model& model, const Formula& lhs, const Formula& rhs, Mode mode)
{
    StateSet out = model.space().none();
    for (std::size_t y = 0; y < model.space().size(); ++y) {
        if (eval(model, lhs, y, mode).subset_of(eval(model, rhs, y, mode))) {
            out.insert(y);
        }
    }
    return out;
}

StateSet eval(const Model& model, const Formula& f, std::size_t x, Mode mode)
{
    switch (f.kind()) {
    case Formula::Kind::Atom:
        return model.valuation(f.name()).at(x);
    case Formula::Kind::Not:
        return eval(model, f.operand(), x, mode).complement();
    case Formula::Kind::And:
        return eval(model, f.lhs(), x, mode) & eval(model, f.rhs(), x, mode);
    case Formula::Kind::Or:
        // X \ ((X \ phi(x)) & (X \ psi(x)))
        return eval(model, f.lhs(), x, mode) | eval(model, f.rhs(), x, mode);
    case Formula::Kind::MaterialImp:
        return eval(model, f.lhs(), x, mode).complement() | eval(model, f.rhs(), x, mode);
    case Formula::Kind::MeaningImp:
        if (mode == Mode::Strict) {
            throw ModeError("'" + format(f) + "' has no pointwise interpretation in strict mode");
        }
        return entailment_set(model, f.lhs(), f.rhs(), mode);
    }
    throw std::logic_error("unhandled formula kind");
}

void require_admissible(const Formula& f, Mode mode)
{
    if (!admissible(f, mode)) {
        throw ModeError("'" + format(f) + "' nests '=>', which strict mode forbids");
    }
}

} // namespace

StateSet interpret(const Model& model, const Formula& f, std::size_t state, Mode mode)
{
    if (state >= model.space().size()) {
        throw LookupError("state index " + std::to_string(state) + " outside the state space");
    }
    return eval(model, f, state, mode);
}

VariableValuation interpret_all(const Model& model, const Formula& f, Mode mode)
{
    std::vector<StateSet> images;
    images.reserve(model.space().size());
    for (std::size_t x = 0; x < model.space().size(); ++x) {
        images.push_back(eval(model, f, x, mode));
    }
    return VariableValuation(std::move(images));
}

StateSet truth_set(const Model& model, const Formula& f, Mode mode)
{
    require_admissible(f, mode);
    if (f.kind() == Formula::Kind::MeaningImp) {
        return entailment_set(model, f.lhs(), f.rhs(), mode);
    }
    StateSet out = model.space().none();
    for (std::size_t x = 0; x < model.space().size(); ++x) {
        if (eval(model, f, x, mode).contains(x)) {
            out.insert(x);
        }
    }
    return out;
}

} // namespace vval
