#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace vval {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An atom, state or measure name that the model does not declare.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Malformed input: documents, weights, mass functions, state lists.
class ValidationError : public Error {
public:
    enum class Kind {
        Malformed,
        MissingState,
        UndeclaredState,
        NegativeWeight,
        BadSum,
        NonCanonicalRational,
        BadMass,
    };

    ValidationError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

class ParseError : public Error {
public:
    enum class Kind {
        Syntax,
        /// `=>` somewhere other than the single outermost connective (strict mode).
        NestedMeaningImp,
    };

    ParseError(Kind kind, std::size_t position, const std::string& message)
        : Error(message + " at column " + std::to_string(position + 1)), kind_(kind), position_(position)
    {
    }

    [[nodiscard]] Kind kind() const noexcept { return kind_; }
    /// Zero-based byte offset into the parsed text.
    [[nodiscard]] std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

/// A formula used in a position its evaluation mode does not allow.
class ModeError : public Error {
public:
    using Error::Error;
};

/// An operation whose value does not exist for the given inputs.
class UndefinedError : public Error {
public:
    enum class Kind {
        /// Conditioning on an event of probability zero.
        Conditioning,
        /// Dempster normalizer is zero.
        TotalConflict,
        /// Every term of the pointwise conditioning sum was skipped.
        NoSurvivingTerm,
    };

    UndefinedError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

    [[nodiscard]] Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

} // namespace vval
