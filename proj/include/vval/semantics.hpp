#pragma once

#include <cstddef>

#include "vval/formula.hpp"
#include "vval/model.hpp"

namespace vval {

/// The correct interpretation of `f` at state index `state`, extending atom
/// valuations pointwise: complement for `~`, intersection for `&`, union for
/// `|`, and `(X \ phi(x)) | psi(x)` for `->`. In extended mode a nested
/// `phi => psi` is the constant set `truth_set(phi => psi)`.
///
/// Throws LookupError for unknown atoms and ModeError for any `=>` in strict
/// mode.
[[nodiscard]] StateSet interpret(const Model& model, const Formula& f, std::size_t state, Mode mode = Mode::Strict);

/// `interpret` at every state, as a valuation.
[[nodiscard]] VariableValuation interpret_all(const Model& model, const Formula& f, Mode mode = Mode::Strict);

/// States where `f` is true. For an outermost `phi => psi` these are the
/// states x with phi(x) a subset of psi(x); otherwise the states x with x in
/// f(x). Throws ModeError when `f` breaks the strict placement rule.
[[nodiscard]] StateSet truth_set(const Model& model, const Formula& f, Mode mode = Mode::Strict);

} // namespace vval
