#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "vval/model.hpp"
#include "vval/probability.hpp"

namespace vval {

/// A model file: states, atom valuations and named priors.
///
///     {
///       "states":   ["s0", "s1", ...],
///       "atoms":    { "p": { "s0": ["s1"], "s1": [] },   // one list per state
///                     "q": { "*": ["s0"] } },            // constant valuation
///       "measures": { "pi": { "s0": "1/3", "s1": "2/3" } }
///     }
///
/// Interpretations must be given for every state (no defaults); `"*"` may
/// not be mixed with per-state entries. Weights are canonical rational
/// strings. `measures` is optional.
struct ModelDocument {
    Model model;
    std::map<std::string, ProbabilityMeasure> measures;

    /// Throws LookupError for an unknown measure name.
    [[nodiscard]] const ProbabilityMeasure& measure(const std::string& name) const;
};

/// Throws ValidationError naming the offending atom, state or measure.
[[nodiscard]] ModelDocument parse_document(std::string_view json_text);
[[nodiscard]] ModelDocument load_document(const std::string& path);
/// Serializes with states, atoms and measures in canonical order; constant
/// valuations are written with `"*"`.
[[nodiscard]] std::string dump_document(const ModelDocument& doc);

/// JSON text of a built-in model ("coinflip"), if `name` is one.
[[nodiscard]] std::optional<std::string_view> builtin_document(std::string_view name);

/// `{a,b,c}` in canonical state order; `{}` for the empty set.
[[nodiscard]] std::string format_set(const StateSpace& space, const StateSet& set);
/// Inverse of format_set; whitespace around names is ignored. Throws
/// LookupError for an undeclared state and ValidationError when malformed.
[[nodiscard]] StateSet parse_state_set(const StateSpace& space, std::string_view text);

/// True for names usable as atoms in formulas: [A-Za-z_][A-Za-z0-9_]*.
[[nodiscard]] bool is_identifier(std::string_view name);

} // namespace vval
