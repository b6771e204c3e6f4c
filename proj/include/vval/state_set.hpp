#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace vval {

/// A subset of a finite state space, stored as a bit vector indexed by
/// state position. Bit i of the encoded key is state i, so ordering sets by
/// their key is ordering them as unsigned integers.
class StateSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t bits_per_word = 64;

    StateSet() = default;
    /// The empty set over a universe of `universe` states.
    explicit StateSet(std::size_t universe);

    static StateSet full(std::size_t universe);
    /// Low `universe` bits of `bits`; universe must be at most 64.
    static StateSet from_bits(std::size_t universe, Word bits);

    [[nodiscard]] std::size_t universe() const noexcept { return universe_; }
    [[nodiscard]] bool contains(std::size_t index) const;
    [[nodiscard]] bool empty() const noexcept;
    [[nodiscard]] std::size_t count() const noexcept;
    /// Member indices in increasing order.
    [[nodiscard]] std::vector<std::size_t> members() const;

    StateSet& insert(std::size_t index);
    StateSet& erase(std::size_t index);

    [[nodiscard]] StateSet complement() const;
    [[nodiscard]] bool subset_of(const StateSet& other) const;
    [[nodiscard]] bool disjoint_from(const StateSet& other) const;

    StateSet& operator&=(const StateSet& other);
    StateSet& operator|=(const StateSet& other);
    StateSet& operator-=(const StateSet& other);

    friend StateSet operator&(StateSet lhs, const StateSet& rhs) { return lhs &= rhs; }
    friend StateSet operator|(StateSet lhs, const StateSet& rhs) { return lhs |= rhs; }
    friend StateSet operator-(StateSet lhs, const StateSet& rhs) { return lhs -= rhs; }

    friend bool operator==(const StateSet& lhs, const StateSet& rhs) noexcept = default;
    /// Universe size first, then the encoded key as an unsigned integer.
    friend std::strong_ordering operator<=>(const StateSet& lhs, const StateSet& rhs) noexcept;

private:
    void check_same_universe(const StateSet& other) const;
    void clear_padding() noexcept;

    std::size_t universe_ = 0;
    std::vector<Word> words_;
};

} // namespace vval
