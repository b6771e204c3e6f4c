#pragma once

#include <string>
#include <vector>

namespace vval::testing {

/// Formulas with a `=>` below the root; strict mode must refuse each one.
inline const std::vector<std::string>& nested_meaning_corpus()
{
    static const std::vector<std::string> corpus{
        "(p => q) & r", "p => q => r",   "~(p => q)",        "(p => q) => r",     "p | (q => r)",
        "p -> (q => r)", "p => (q => r)", "(p => q) -> r",    "~p & (q => ~r)",    "((p => q) | r) => s",
        "p => ~(q => r)", "(a => b) & (c => d)",
    };
    return corpus;
}

} // namespace vval::testing
