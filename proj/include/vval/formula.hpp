#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace vval {

/// Where `=>` may appear. Strict: only as the single outermost connective,
/// with `=>`-free operands. Extended: anywhere; a nested `phi => psi`
/// denotes the constant valuation returning its truth set.
enum class Mode { Strict, Extended };

namespace detail {
class FormulaParser;
}

/// Immutable formula AST with structural equality. Copies share nodes.
class Formula {
public:
    enum class Kind { Atom, Not, And, Or, MaterialImp, MeaningImp };

    static Formula atom(std::string name);
    static Formula negation(Formula operand);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    /// `lhs -> rhs`, interpreted as `~lhs | rhs`.
    static Formula material(Formula lhs, Formula rhs);
    /// `lhs => rhs`, meaning entailment.
    static Formula meaning(Formula lhs, Formula rhs);

    [[nodiscard]] Kind kind() const noexcept;
    /// Atom name; empty for non-atoms.
    [[nodiscard]] const std::string& name() const noexcept;
    /// Operand of Not.
    [[nodiscard]] const Formula& operand() const;
    [[nodiscard]] const Formula& lhs() const;
    [[nodiscard]] const Formula& rhs() const;

    [[nodiscard]] bool contains_meaning_imp() const noexcept;
    [[nodiscard]] std::size_t depth() const noexcept;

    friend bool operator==(const Formula& lhs, const Formula& rhs) noexcept;

private:
    struct Node;
    friend class detail::FormulaParser;

    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// True when `f` respects the `=>` placement rule of `mode`.
[[nodiscard]] bool admissible(const Formula& f, Mode mode) noexcept;

/// Parses the formula DSL. Throws ParseError; strict-mode placement
/// violations use ParseError::Kind::NestedMeaningImp.
///
/// Operators, tightest first: `~` (also U+00AC), `&` (U+2227), `|` (U+2228),
/// `->` (U+2192), `=>` (U+21D2). `&` and `|` associate to the left, `->` and
/// `=>` to the right.
[[nodiscard]] Formula parse(std::string_view text, Mode mode = Mode::Strict);

/// ASCII rendering with the fewest parentheses that reparse to the same tree.
[[nodiscard]] std::string format(const Formula& f);

} // namespace vval
